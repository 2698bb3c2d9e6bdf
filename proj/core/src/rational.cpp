#include "resgame/rational.hpp"

#include <algorithm>
#include <limits>

#include "resgame/error.hpp"

namespace resgame {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    // r * (n - k + j) / j stays integral at every step
    const std::uint64_t num = n - k + j;
    if (r > kSaturated / num) return kSaturated;
    r = r * num / j;
  }
  return r;
}

// All ways to write m as an ordered sum of n non-negative parts.
std::vector<std::vector<std::size_t>> compositions(std::size_t m, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> parts(n, 0);
  auto rec = [&](auto&& self, std::size_t k, std::size_t left) -> void {
    if (k + 1 == n) {
      parts[k] = left;
      out.push_back(parts);
      return;
    }
    // Earlier players take the most first, so the first composition gives everything to player 0.
    for (std::size_t take = left + 1; take-- > 0;) {
      parts[k] = take;
      self(self, k + 1, left - take);
    }
  };
  if (n > 0) rec(rec, 0, m);
  return out;
}

ResourceBag pool_of(const Endowment& e) {
  ResourceBag pool;
  for (const auto& b : e) pool += b;
  return pool;
}

}  // namespace

std::uint64_t distribution_count(const ResourceBag& bag, std::size_t players) {
  if (players == 0) return bag.empty() ? 1 : 0;
  std::uint64_t n = 1;
  for (const auto& [f, m] : bag) n = saturating_mul(n, binomial(m + players - 1, players - 1));
  return n;
}

std::vector<Endowment> distributions(const ResourceBag& bag, std::size_t players) {
  std::vector<std::pair<Formula, std::vector<std::vector<std::size_t>>>> per_formula;
  for (const auto& [f, m] : bag) per_formula.emplace_back(f, compositions(m, players));
  std::vector<Endowment> out;
  std::vector<std::size_t> pick(per_formula.size(), 0);
  while (true) {
    Endowment e(players);
    for (std::size_t k = 0; k < per_formula.size(); ++k) {
      const auto& parts = per_formula[k].second[pick[k]];
      for (std::size_t i = 0; i < players; ++i) e[i].add(per_formula[k].first, parts[i]);
    }
    out.push_back(std::move(e));
    std::size_t k = 0;
    while (k < per_formula.size() && pick[k] + 1 == per_formula[k].second.size()) pick[k++] = 0;
    if (k == per_formula.size()) break;
    ++pick[k];
  }
  return out;
}

std::uint64_t redistribution_count(const Endowment& e) { return distribution_count(pool_of(e), e.size()); }

std::vector<Endowment> redistributions(const Endowment& e, const EnumerationCaps& caps) {
  const ResourceBag pool = pool_of(e);
  if (pool.size() > caps.max_pool) throw CapExceeded("pool size", pool.size(), caps.max_pool);
  return distributions(pool, e.size());
}

Endowment concentrate(const Endowment& e, PlayerIndex i) {
  if (i >= e.size()) throw InvalidInput("no such player index " + std::to_string(i));
  Endowment out(e.size());
  out[i] = pool_of(e);
  return out;
}

Elimination eliminate(Session& s, const Game& g, const Profile& p, PrefKind kind) {
  validate_profile(g, p);
  const ResourceBag out = outcome(p);
  const ResourceBag pool = g.pool();
  const LogicMode mode = g.mode();
  // By the one-active-player lemma, p is eliminable iff for some i the
  // profile (out(p)) is not an equilibrium of G^{[ε▷i]}. Only i can deviate there.
  std::vector<ResourceBag> candidates;
  if (mode.affine()) {
    candidates.push_back(pool);
    if (kind == PrefKind::parsimonious) {
      for (const auto& a : out.support()) {
        ResourceBag less = out;
        less.remove(a);
        candidates.push_back(std::move(less));
      }
    }
  } else {
    if (pool.size() > s.caps().max_pool) throw CapExceeded("pool size", pool.size(), s.caps().max_pool);
    candidates = multisubsets(pool);
  }
  for (PlayerIndex i = 0; i < g.size(); ++i) {
    const bool sat_out = s.entails(out, g.goal(i), mode);
    if (kind == PrefKind::dichotomous && sat_out) continue;
    for (const auto& c : candidates) {
      if (c == out) continue;
      const bool sat_c = s.entails(c, g.goal(i), mode);
      if (prefers_given(kind, sat_c, sat_out, c, out)) return {true, i, c};
    }
  }
  return {};
}

bool rationally_eliminable(Session& s, const Game& g, const Profile& p, PrefKind kind) {
  return eliminate(s, g, p, kind).eliminable;
}

namespace {

std::size_t moved(const Endowment& from, const Endowment& to) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < from.size(); ++i) n += (to[i] - from[i]).size();
  return n;
}

}  // namespace

Construction rationally_constructible(Session& s, const Game& g, const Profile& p, PrefKind kind) {
  validate_profile(g, p);
  const Endowment eps = g.endowments();
  if (is_nash(s, g, p, kind)) return {true, eps, p};

  const ResourceBag out = outcome(p);
  const ResourceBag pool = g.pool();
  if (kind == PrefKind::dichotomous) {
    // Concentrating everything on i leaves i the only player able to move.
    auto concentrated = [&](PlayerIndex i) {
      Profile q = Profile::empty(g.size()).replaced(i, out);
      return Construction{true, concentrate(eps, i), q};
    };
    for (PlayerIndex i = 0; i < g.size(); ++i)
      if (s.entails(out, g.goal(i), g.mode())) return concentrated(i);
    LogicMode with_top = g.mode();
    with_top.fragment = Fragment::mall;
    for (PlayerIndex i = 0; i < g.size(); ++i)
      if (!s.entails(pool, Formula::tensor(g.goal(i), Formula::top()), with_top)) return concentrated(i);
  }

  if (pool.size() > s.caps().max_pool) throw CapExceeded("pool size", pool.size(), s.caps().max_pool);
  const ResourceBag rest = pool - out;
  const std::uint64_t total =
      saturating_mul(distribution_count(out, g.size()), distribution_count(rest, g.size()));
  if (total > s.caps().max_profiles) throw CapExceeded("construction candidates", total, s.caps().max_profiles);

  struct Candidate {
    std::size_t distance;
    Endowment redistribution;
    Profile profile;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(total);
  const auto reserves = distributions(rest, g.size());
  for (const auto& contrib : distributions(out, g.size())) {
    for (const auto& reserve : reserves) {
      Endowment e(g.size());
      for (PlayerIndex i = 0; i < g.size(); ++i) e[i] = contrib[i] + reserve[i];
      candidates.push_back({moved(eps, e), std::move(e), Profile(contrib)});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });
  for (const auto& c : candidates) {
    if (is_nash(s, g.redistributed(c.redistribution), c.profile, kind))
      return {true, c.redistribution, c.profile};
  }
  return {};
}

}  // namespace resgame
