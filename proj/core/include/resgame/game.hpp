#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resgame/bag.hpp"
#include "resgame/sequent.hpp"

namespace resgame {

using PlayerIndex = std::size_t;

// One bag per player, in declaration order. Used both for endowments and
// for redistributions of them.
using Endowment = std::vector<ResourceBag>;

struct Player {
  std::string id;
  Formula goal;
  ResourceBag endowment;

  friend bool operator==(const Player&, const Player&) = default;
};

class Game {
 public:
  Game(std::vector<Player> players, LogicMode mode);

  std::size_t size() const noexcept { return players_.size(); }
  const std::vector<Player>& players() const noexcept { return players_; }
  const Player& player(PlayerIndex i) const { return players_.at(i); }
  const Formula& goal(PlayerIndex i) const { return players_.at(i).goal; }
  const ResourceBag& endowment(PlayerIndex i) const { return players_.at(i).endowment; }
  LogicMode mode() const noexcept { return mode_; }

  Endowment endowments() const;
  ResourceBag pool() const;
  std::optional<PlayerIndex> index_of(std::string_view id) const;

  // G^{ε'}: same players and goals, endowments replaced. ε' must
  // redistribute the same pool.
  Game redistributed(const Endowment& e) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::vector<Player> players_;
  LogicMode mode_;
};

class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<ResourceBag> contributions) : bags_(std::move(contributions)) {}
  static Profile empty(std::size_t players) { return Profile(std::vector<ResourceBag>(players)); }

  std::size_t size() const noexcept { return bags_.size(); }
  const ResourceBag& operator[](PlayerIndex i) const { return bags_.at(i); }
  const std::vector<ResourceBag>& contributions() const noexcept { return bags_; }

  // (P_{-i}, c)
  Profile replaced(PlayerIndex i, ResourceBag c) const;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend std::strong_ordering operator<=>(const Profile& a, const Profile& b);

 private:
  std::vector<ResourceBag> bags_;
};

bool is_valid_profile(const Game& g, const Profile& p);
// Throws InvalidInput naming the offending player.
void validate_profile(const Game& g, const Profile& p);

ResourceBag outcome(const Profile& p);

// (ε_1, ..., ε_n)
Profile full_profile(const Game& g);

bool is_redistribution_of(const Endowment& candidate, const Endowment& original);

}  // namespace resgame
