#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "resgame/game.hpp"
#include "resgame/nash.hpp"
#include "resgame/session.hpp"

namespace resgame {

// Every way to hand the bag out to n players: prod_k C(m_k + n - 1, n - 1) of them.
std::uint64_t distribution_count(const ResourceBag& bag, std::size_t players);
std::vector<Endowment> distributions(const ResourceBag& bag, std::size_t players);

std::uint64_t redistribution_count(const Endowment& e);
// All redistributions of e's pool, deterministic order. Throws CapExceeded
// when the pool is larger than caps.max_pool.
std::vector<Endowment> redistributions(const Endowment& e, const EnumerationCaps& caps = {});

// [ε▷i]
Endowment concentrate(const Endowment& e, PlayerIndex i);

struct Elimination {
  bool eliminable = false;
  // When eliminable: the player whose concentration [ε▷i] eliminates p and
  // the deviation that beats (out(p)) in G^{[ε▷i]}.
  std::optional<PlayerIndex> player;
  std::optional<ResourceBag> deviation;
};

Elimination eliminate(Session& s, const Game& g, const Profile& p, PrefKind kind);
bool rationally_eliminable(Session& s, const Game& g, const Profile& p, PrefKind kind);

struct Construction {
  bool constructible = false;
  std::optional<Endowment> redistribution;
  std::optional<Profile> profile;
};

Construction rationally_constructible(Session& s, const Game& g, const Profile& p, PrefKind kind);

}  // namespace resgame
