#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "resgame/game.hpp"

namespace resgame {

// Line-oriented game description:
//
//   logic: affine mall          # weakening and/or fragment, any order
//   player ann  goal: bread     endow: aclock
//   player bob  goal: aclock    endow: flour, flour, flour -o bread
//
// `#` starts a comment. A missing `endow:` means an empty endowment.
// Switches given on the logic line override `defaults`.
Game parse_game(std::string_view text, LogicMode defaults = {});
Game load_game(const std::filesystem::path& path, LogicMode defaults = {});
std::string write_game(const Game& g);

// "ann: aclock; bob:" (braces around a contribution are optional).
// Players not mentioned contribute nothing.
Profile parse_profile(std::string_view literal, const Game& g);
// "ann: {aclock}; bob: {}"
std::string format_profile(const Game& g, const Profile& p);
std::string format_endowment(const Game& g, const Endowment& e);

}  // namespace resgame
