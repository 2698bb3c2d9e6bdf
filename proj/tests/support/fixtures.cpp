#include "fixtures.hpp"

#include "resgame/game_io.hpp"

namespace resgame::testing {

std::string games_dir() { return RESGAME_GAMES_DIR; }

Game fixture(std::string_view name) {
  return load_game(games_dir() + "/" + std::string(name) + ".rg");
}

ResourceBag bag(std::string_view list) { return ResourceBag(parse_formula_list(list)); }

Profile profile(const Game& g, std::string_view literal) { return parse_profile(literal, g); }

}  // namespace resgame::testing
