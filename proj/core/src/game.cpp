#include "resgame/game.hpp"

#include <set>

#include "resgame/error.hpp"

namespace resgame {

Game::Game(std::vector<Player> players, LogicMode mode) : players_(std::move(players)), mode_(mode) {
  if (players_.empty()) throw InvalidInput("a game needs at least one player");
  std::set<std::string> seen;
  for (const auto& p : players_) {
    if (p.id.empty()) throw InvalidInput("player id must be nonempty");
    if (!seen.insert(p.id).second) throw InvalidInput("duplicate player id '" + p.id + "'");
    check_fragment(p.goal, mode_.fragment);
    check_fragment(p.endowment, mode_.fragment);
  }
}

Endowment Game::endowments() const {
  Endowment e;
  e.reserve(players_.size());
  for (const auto& p : players_) e.push_back(p.endowment);
  return e;
}

ResourceBag Game::pool() const {
  ResourceBag out;
  for (const auto& p : players_) out += p.endowment;
  return out;
}

std::optional<PlayerIndex> Game::index_of(std::string_view id) const {
  for (PlayerIndex i = 0; i < players_.size(); ++i)
    if (players_[i].id == id) return i;
  return std::nullopt;
}

Game Game::redistributed(const Endowment& e) const {
  if (!is_redistribution_of(e, endowments()))
    throw InvalidInput("endowment is not a redistribution of the game's pool");
  std::vector<Player> players = players_;
  for (PlayerIndex i = 0; i < players.size(); ++i) players[i].endowment = e[i];
  return Game(std::move(players), mode_);
}

Profile Profile::replaced(PlayerIndex i, ResourceBag c) const {
  Profile out = *this;
  out.bags_.at(i) = std::move(c);
  return out;
}

std::strong_ordering operator<=>(const Profile& a, const Profile& b) {
  const std::size_t n = std::min(a.bags_.size(), b.bags_.size());
  for (std::size_t k = 0; k < n; ++k)
    if (auto c = a.bags_[k] <=> b.bags_[k]; c != 0) return c;
  return a.bags_.size() <=> b.bags_.size();
}

bool is_valid_profile(const Game& g, const Profile& p) {
  if (p.size() != g.size()) return false;
  for (PlayerIndex i = 0; i < g.size(); ++i)
    if (!subbag(p[i], g.endowment(i))) return false;
  return true;
}

void validate_profile(const Game& g, const Profile& p) {
  if (p.size() != g.size())
    throw InvalidInput("profile has " + std::to_string(p.size()) + " contributions for " +
                       std::to_string(g.size()) + " players");
  for (PlayerIndex i = 0; i < g.size(); ++i)
    if (!subbag(p[i], g.endowment(i)))
      throw InvalidInput("contribution " + p[i].to_string() + " of player " + g.player(i).id +
                         " is not within endowment " + g.endowment(i).to_string());
}

ResourceBag outcome(const Profile& p) {
  ResourceBag out;
  for (const auto& c : p.contributions()) out += c;
  return out;
}

Profile full_profile(const Game& g) { return Profile(g.endowments()); }

bool is_redistribution_of(const Endowment& candidate, const Endowment& original) {
  if (candidate.size() != original.size()) return false;
  ResourceBag a, b;
  for (const auto& x : candidate) a += x;
  for (const auto& x : original) b += x;
  return a == b;
}

}  // namespace resgame
