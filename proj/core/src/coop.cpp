#include "resgame/coop.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "parallel.hpp"
#include "resgame/error.hpp"

namespace resgame {

Coalition Coalition::of(std::initializer_list<PlayerIndex> members) {
  std::uint32_t mask = 0;
  for (auto i : members) {
    if (i >= kMaxPlayers) throw InvalidInput("player index out of range");
    mask |= 1u << i;
  }
  return Coalition(mask);
}

Coalition Coalition::grand(std::size_t players) {
  if (players > kMaxPlayers) throw InvalidInput("too many players for a coalition");
  return Coalition(players == kMaxPlayers ? ~0u : ((1u << players) - 1));
}

std::size_t Coalition::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<PlayerIndex> Coalition::members() const {
  std::vector<PlayerIndex> out;
  for (PlayerIndex i = 0; i < kMaxPlayers; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string format_coalition(const Game& g, Coalition c) {
  std::string out = "{";
  bool first = true;
  for (auto i : c.members()) {
    if (!first) out += ", ";
    out += i < g.size() ? g.player(i).id : std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string_view to_string(CoalitionModel m) { return m == CoalitionModel::aigcrg ? "aigcrg" : "mnigcrg"; }

namespace {

void check_members(const Game& g, Coalition c) {
  if (!c.subset_of(Coalition::grand(std::min(g.size(), Coalition::kMaxPlayers))))
    throw InvalidInput("coalition mentions a player outside the game");
}

void require_simple(const CoalitionGame& cg, const char* what) {
  if (cg.model != CoalitionModel::aigcrg)
    throw ModelMismatch(std::string(what) + " is only defined for aigcrg (simple) games");
}

std::size_t table_size(Session& s, const Game& g) {
  const std::uint64_t count = g.size() >= 64 ? std::numeric_limits<std::uint64_t>::max()
                                             : std::uint64_t{1} << g.size();
  if (g.size() >= Coalition::kMaxPlayers || count > s.caps().max_profiles)
    throw CapExceeded("coalition count", count, s.caps().max_profiles);
  return static_cast<std::size_t>(count);
}

}  // namespace

ResourceBag coalition_goals(const Game& g, Coalition c) {
  check_members(g, c);
  ResourceBag out;
  for (auto i : c.members()) out.add(g.goal(i));
  return out;
}

ResourceBag coalition_endowment(const Game& g, Coalition c) {
  check_members(g, c);
  ResourceBag out;
  for (auto i : c.members()) out += g.endowment(i);
  return out;
}

bool canperform(Session& s, const CoalitionGame& cg, Coalition c, const ResourceBag& goals) {
  const Game& g = cg.base;
  const ResourceBag joined = coalition_endowment(g, c);
  const Formula target = tensor_fold(goals);
  if (g.mode().affine()) return s.entails(joined, target, g.mode());

  std::uint64_t choices = 1;
  for (auto i : c.members()) {
    const std::uint64_t m = multisubset_count(g.endowment(i));
    choices = choices > s.caps().max_profiles / m ? s.caps().max_profiles + 1 : choices * m;
  }
  if (choices > s.caps().max_profiles) throw CapExceeded("coalition choice space", choices, s.caps().max_profiles);

  // Any sub-bag of the joined endowment splits back into per-member sub-bags.
  auto subs = multisubsets(joined);
  std::stable_sort(subs.begin(), subs.end(),
                   [](const ResourceBag& a, const ResourceBag& b) { return a.size() < b.size(); });
  for (const auto& e : subs)
    if (s.entails(e, target, g.mode())) return true;
  return false;
}

std::vector<ResourceBag> goal_sets(Session& s, const CoalitionGame& cg, Coalition c) {
  std::vector<ResourceBag> out;
  for (auto& gamma : multisubsets(coalition_goals(cg.base, c)))
    if (canperform(s, cg, c, gamma)) out.push_back(std::move(gamma));
  std::sort(out.begin(), out.end(), [](const ResourceBag& a, const ResourceBag& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::size_t value(Session& s, const CoalitionGame& cg, Coalition c) {
  if (c.empty()) return 0;
  const ResourceBag goals = coalition_goals(cg.base, c);
  if (cg.model == CoalitionModel::aigcrg) return canperform(s, cg, c, goals) ? 1 : 0;
  // Largest performable sub-bag first; stop at the first hit.
  auto subs = multisubsets(goals);
  std::stable_sort(subs.begin(), subs.end(),
                   [](const ResourceBag& a, const ResourceBag& b) { return a.size() > b.size(); });
  for (const auto& gamma : subs)
    if (canperform(s, cg, c, gamma)) return gamma.size();
  return 0;
}

std::vector<std::size_t> value_table(Session& s, const CoalitionGame& cg) {
  const std::size_t n = table_size(s, cg.base);
  std::vector<std::size_t> table(n, 0);
  detail::parallel_for(n, s.jobs(), [&](std::size_t mask) {
    table[mask] = value(s, cg, Coalition(static_cast<std::uint32_t>(mask)));
  });
  return table;
}

std::vector<PlayerIndex> veto_players(Session& s, const CoalitionGame& cg) {
  require_simple(cg, "veto_players");
  const auto table = value_table(s, cg);
  std::vector<PlayerIndex> out;
  for (PlayerIndex i = 0; i < cg.base.size(); ++i) {
    bool veto = true;
    for (std::size_t mask = 0; mask < table.size() && veto; ++mask)
      if (table[mask] == 1 && !Coalition(static_cast<std::uint32_t>(mask)).contains(i)) veto = false;
    if (veto) out.push_back(i);
  }
  return out;
}

std::vector<PlayerIndex> dummy_players(Session& s, const CoalitionGame& cg) {
  const auto table = value_table(s, cg);
  std::vector<PlayerIndex> out;
  for (PlayerIndex i = 0; i < cg.base.size(); ++i) {
    bool dummy = true;
    for (std::size_t mask = 0; mask < table.size() && dummy; ++mask) {
      const Coalition c(static_cast<std::uint32_t>(mask));
      if (c.contains(i)) continue;
      if (table[c.with(i).mask()] != table[mask]) dummy = false;
    }
    if (dummy) out.push_back(i);
  }
  return out;
}

bool in_core(Session& s, const CoalitionGame& cg, const PayoffVector& p) {
  require_simple(cg, "in_core");
  const Game& g = cg.base;
  if (p.size() != g.size())
    throw InvalidInput("payoff vector has " + std::to_string(p.size()) + " entries for " +
                       std::to_string(g.size()) + " players");
  const auto table = value_table(s, cg);
  double total = 0;
  for (double x : p) {
    if (!std::isfinite(x)) throw InvalidInput("payoff entries must be finite");
    if (x < -kPayoffTolerance) return false;
    total += x;
  }
  if (std::abs(total - static_cast<double>(table.back())) > kPayoffTolerance) return false;
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    double share = 0;
    for (auto i : Coalition(static_cast<std::uint32_t>(mask)).members()) share += p[i];
    if (share < static_cast<double>(table[mask]) - kPayoffTolerance) return false;
  }
  return true;
}

}  // namespace resgame
