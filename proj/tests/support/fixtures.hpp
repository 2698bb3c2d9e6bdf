#pragma once

#include <string>
#include <string_view>

#include "resgame/game.hpp"
#include "resgame/syntax.hpp"

namespace resgame::testing {

std::string games_dir();

// games/<name>.rg
Game fixture(std::string_view name);

inline Formula F(std::string_view text) { return parse_formula(text); }

// "A, B, A" -> {A, A, B}
ResourceBag bag(std::string_view list);

inline Sequent seq(std::string_view text) { return parse_sequent(text); }

// "1: A; 2: A, A"
Profile profile(const Game& g, std::string_view literal);

}  // namespace resgame::testing
