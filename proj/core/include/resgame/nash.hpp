#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "resgame/game.hpp"
#include "resgame/session.hpp"

namespace resgame {

enum class PrefKind { dichotomous, parsimonious };
std::string_view to_string(PrefKind k);

// True iff player i strictly prefers p over q.
bool prefers(Session& s, const Game& g, PlayerIndex i, const Profile& p, const Profile& q, PrefKind kind);

// The preference relation on already-decided goal checks: sat_p / sat_q say
// whether the goal holds at p / q, own_p / own_q are player i's contributions.
bool prefers_given(PrefKind kind, bool sat_p, bool sat_q, const ResourceBag& own_p, const ResourceBag& own_q);

struct Deviation {
  PlayerIndex player;
  ResourceBag contribution;
};

// Affine games use the lemma-based shortcut; linear games the full sweep.
bool is_nash(Session& s, const Game& g, const Profile& p, PrefKind kind);
// Full deviation sweep, any mode.
bool is_nash_generic(Session& s, const Game& g, const Profile& p, PrefKind kind);
// First profitable deviation in declaration/canonical order, if any.
std::optional<Deviation> find_deviation(Session& s, const Game& g, const Profile& p, PrefKind kind);

std::uint64_t profile_count(const Game& g);
// ch(G) in a fixed order: the first player varies slowest.
std::vector<Profile> all_profiles(const Game& g, const EnumerationCaps& caps);

std::vector<Profile> all_equilibria(Session& s, const Game& g, PrefKind kind);

// Which goals hold at the given outcome, per player.
std::vector<bool> satisfied_goals(Session& s, const Game& g, const ResourceBag& out);

}  // namespace resgame
