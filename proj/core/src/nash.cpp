#include "resgame/nash.hpp"

#include <limits>

#include "parallel.hpp"
#include "resgame/error.hpp"

namespace resgame {

std::string_view to_string(PrefKind k) {
  return k == PrefKind::dichotomous ? "dichotomous" : "parsimonious";
}

bool prefers_given(PrefKind kind, bool sat_p, bool sat_q, const ResourceBag& own_p, const ResourceBag& own_q) {
  if (sat_p && !sat_q) return true;
  if (kind == PrefKind::dichotomous) return false;
  return sat_p == sat_q && strict_subbag(own_p, own_q);
}

bool prefers(Session& s, const Game& g, PlayerIndex i, const Profile& p, const Profile& q, PrefKind kind) {
  if (p == q) return false;
  const bool sat_p = s.entails(outcome(p), g.goal(i), g.mode());
  const bool sat_q = s.entails(outcome(q), g.goal(i), g.mode());
  return prefers_given(kind, sat_p, sat_q, p[i], q[i]);
}

std::optional<Deviation> find_deviation(Session& s, const Game& g, const Profile& p, PrefKind kind) {
  validate_profile(g, p);
  for (PlayerIndex i = 0; i < g.size(); ++i) {
    const bool sat_p = s.entails(outcome(p), g.goal(i), g.mode());
    // A dichotomous deviation only wins against an unsatisfied goal.
    if (kind == PrefKind::dichotomous && sat_p) continue;
    for (const auto& c : multisubsets(g.endowment(i))) {
      if (c == p[i]) continue;
      const bool sat_c = s.entails(outcome(p.replaced(i, c)), g.goal(i), g.mode());
      if (prefers_given(kind, sat_c, sat_p, c, p[i])) return Deviation{i, c};
    }
  }
  return std::nullopt;
}

bool is_nash_generic(Session& s, const Game& g, const Profile& p, PrefKind kind) {
  return !find_deviation(s, g, p, kind).has_value();
}

namespace {

bool nash_affine_dichotomous(Session& s, const Game& g, const Profile& p) {
  const ResourceBag out = outcome(p);
  for (PlayerIndex i = 0; i < g.size(); ++i) {
    if (s.entails(out, g.goal(i), g.mode())) continue;
    if (s.entails(outcome(p.replaced(i, g.endowment(i))), g.goal(i), g.mode())) return false;
  }
  return true;
}

bool nash_affine_parsimonious(Session& s, const Game& g, const Profile& p) {
  const ResourceBag out = outcome(p);
  for (PlayerIndex i = 0; i < g.size(); ++i) {
    if (s.entails(out, g.goal(i), g.mode())) {
      for (const auto& a : p[i].support()) {
        ResourceBag less = p[i];
        less.remove(a);
        if (s.entails(outcome(p.replaced(i, less)), g.goal(i), g.mode())) return false;
      }
    } else {
      if (!p[i].empty()) return false;
      if (s.entails(outcome(p.replaced(i, g.endowment(i))), g.goal(i), g.mode())) return false;
    }
  }
  return true;
}

}  // namespace

bool is_nash(Session& s, const Game& g, const Profile& p, PrefKind kind) {
  validate_profile(g, p);
  if (!g.mode().affine()) return is_nash_generic(s, g, p, kind);
  return kind == PrefKind::dichotomous ? nash_affine_dichotomous(s, g, p) : nash_affine_parsimonious(s, g, p);
}

std::uint64_t profile_count(const Game& g) {
  std::uint64_t n = 1;
  for (const auto& pl : g.players()) {
    const std::uint64_t m = multisubset_count(pl.endowment);
    if (n > std::numeric_limits<std::uint64_t>::max() / m) return std::numeric_limits<std::uint64_t>::max();
    n *= m;
  }
  return n;
}

std::vector<Profile> all_profiles(const Game& g, const EnumerationCaps& caps) {
  const std::uint64_t count = profile_count(g);
  if (count > caps.max_profiles) throw CapExceeded("profile space", count, caps.max_profiles);
  std::vector<std::vector<ResourceBag>> choices;
  for (const auto& pl : g.players()) choices.push_back(multisubsets(pl.endowment));
  std::vector<Profile> out;
  out.reserve(count);
  std::vector<std::size_t> pick(g.size(), 0);
  while (true) {
    std::vector<ResourceBag> bags;
    bags.reserve(g.size());
    for (PlayerIndex i = 0; i < g.size(); ++i) bags.push_back(choices[i][pick[i]]);
    out.emplace_back(std::move(bags));
    std::size_t k = g.size();
    while (k > 0 && pick[k - 1] + 1 == choices[k - 1].size()) pick[--k] = 0;
    if (k == 0) break;
    ++pick[k - 1];
  }
  return out;
}

std::vector<Profile> all_equilibria(Session& s, const Game& g, PrefKind kind) {
  const auto profiles = all_profiles(g, s.caps());
  std::vector<char> nash(profiles.size(), 0);
  detail::parallel_for(profiles.size(), s.jobs(),
                       [&](std::size_t k) { nash[k] = is_nash(s, g, profiles[k], kind) ? 1 : 0; });
  std::vector<Profile> out;
  for (std::size_t k = 0; k < profiles.size(); ++k)
    if (nash[k]) out.push_back(profiles[k]);
  return out;
}

std::vector<bool> satisfied_goals(Session& s, const Game& g, const ResourceBag& out) {
  std::vector<bool> sat(g.size());
  for (PlayerIndex i = 0; i < g.size(); ++i) sat[i] = s.entails(out, g.goal(i), g.mode());
  return sat;
}

}  // namespace resgame
