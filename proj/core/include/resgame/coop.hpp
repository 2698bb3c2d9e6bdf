#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "resgame/game.hpp"
#include "resgame/session.hpp"

namespace resgame {

// A set of players of one game, as a bitmask over declaration order.
class Coalition {
 public:
  static constexpr std::size_t kMaxPlayers = 32;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}
  static Coalition of(std::initializer_list<PlayerIndex> members);
  static Coalition grand(std::size_t players);

  std::uint32_t mask() const noexcept { return mask_; }
  bool contains(PlayerIndex i) const noexcept { return i < kMaxPlayers && ((mask_ >> i) & 1u); }
  bool empty() const noexcept { return mask_ == 0; }
  std::size_t size() const noexcept;
  std::vector<PlayerIndex> members() const;

  Coalition with(PlayerIndex i) const { return Coalition(mask_ | (1u << i)); }
  Coalition without(PlayerIndex i) const { return Coalition(mask_ & ~(1u << i)); }
  bool subset_of(Coalition other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  bool disjoint(Coalition other) const noexcept { return (mask_ & other.mask_) == 0; }
  friend Coalition operator|(Coalition a, Coalition b) { return Coalition(a.mask_ | b.mask_); }

  friend bool operator==(Coalition, Coalition) = default;
  friend auto operator<=>(Coalition, Coalition) = default;

 private:
  std::uint32_t mask_ = 0;
};

std::string format_coalition(const Game& g, Coalition c);  // "{1, 3}" by player id

enum class CoalitionModel { aigcrg, mnigcrg };
std::string_view to_string(CoalitionModel m);

struct CoalitionGame {
  Game base;
  CoalitionModel model = CoalitionModel::aigcrg;
};

using PayoffVector = std::vector<double>;

inline constexpr double kPayoffTolerance = 1e-9;

// γ_C as a multiset: identical goals of different members count twice.
ResourceBag coalition_goals(const Game& g, Coalition c);
ResourceBag coalition_endowment(const Game& g, Coalition c);

// Some E_i ⊆ ε_i (i ∈ C) jointly prove tensor_fold(P).
bool canperform(Session& s, const CoalitionGame& cg, Coalition c, const ResourceBag& goals);

// Γ(C): every sub-bag of γ_C the coalition can perform, ordered by size then canonically.
std::vector<ResourceBag> goal_sets(Session& s, const CoalitionGame& cg, Coalition c);

std::size_t value(Session& s, const CoalitionGame& cg, Coalition c);
// Indexed by coalition mask.
std::vector<std::size_t> value_table(Session& s, const CoalitionGame& cg);

// aigcrg only; ModelMismatch otherwise.
std::vector<PlayerIndex> veto_players(Session& s, const CoalitionGame& cg);
std::vector<PlayerIndex> dummy_players(Session& s, const CoalitionGame& cg);
// aigcrg only; ModelMismatch otherwise.
bool in_core(Session& s, const CoalitionGame& cg, const PayoffVector& p);

}  // namespace resgame
