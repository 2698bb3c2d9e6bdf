#include "resgame/prover.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "resgame/error.hpp"

namespace resgame {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::axiom: return "ax";
    case Rule::one_left: return "1L";
    case Rule::one_right: return "1R";
    case Rule::top_right: return "topR";
    case Rule::neg_left: return "~L";
    case Rule::neg_right: return "~R";
    case Rule::tensor_left: return "*L";
    case Rule::tensor_right: return "*R";
    case Rule::with_left_1: return "&L1";
    case Rule::with_left_2: return "&L2";
    case Rule::with_right: return "&R";
    case Rule::plus_left: return "+L";
    case Rule::plus_right_1: return "+R1";
    case Rule::plus_right_2: return "+R2";
    case Rule::lollipop_left: return "-oL";
    case Rule::lollipop_right: return "-oR";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::provable: return "provable";
    case Verdict::unprovable: return "unprovable";
    case Verdict::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

namespace {

// Sorted vectors are cheaper to split than std::map-backed bags.
using Side = std::vector<Formula>;

struct Seq {
  Side left;
  Side right;
};

struct Step {
  Rule rule;
  Formula principal;
  std::vector<Seq> premises;
};

Side to_side(const ResourceBag& bag) { return bag.elements(); }

ResourceBag to_bag(const Side& side) { return ResourceBag(side); }

Sequent to_sequent(const Seq& s) { return {to_bag(s.left), to_bag(s.right)}; }

Side without(const Side& s, std::size_t idx) {
  Side out;
  out.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k)
    if (k != idx) out.push_back(s[k]);
  return out;
}

Side plus(Side s, const Formula& f) {
  s.insert(std::upper_bound(s.begin(), s.end(), f), f);
  return s;
}

Side plus(Side s, const Formula& f, const Formula& g) { return plus(plus(std::move(s), f), g); }

// Calls fn(first, second) for every multiplicity-respecting split of s.
template <class Fn>
void for_each_split(const Side& s, Fn&& fn) {
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // start, count
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0 && s[k] == s[k - 1])
      ++groups.back().second;
    else
      groups.emplace_back(k, 1);
  }
  std::vector<std::size_t> take(groups.size(), 0);
  while (true) {
    Side a, b;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto [start, count] = groups[g];
      a.insert(a.end(), s.begin() + start, s.begin() + start + take[g]);
      b.insert(b.end(), s.begin() + start + take[g], s.begin() + start + count);
    }
    fn(std::move(a), std::move(b));
    std::size_t g = 0;
    while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
    if (g == groups.size()) return;
    ++take[g];
  }
}

std::optional<Formula> common_formula(const Side& a, const Side& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return a[i];
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return std::nullopt;
}

std::vector<Step> expand(const Seq& s, bool affine) {
  // Leaves. In affine mode they absorb any surplus context.
  for (const auto& f : s.right)
    if (f.is(Connective::top)) return {{Rule::top_right, f, {}}};
  if (affine) {
    if (auto f = common_formula(s.left, s.right)) return {{Rule::axiom, *f, {}}};
    for (const auto& f : s.right)
      if (f.is(Connective::one)) return {{Rule::one_right, f, {}}};
  } else {
    if (s.left.size() == 1 && s.right.size() == 1 && s.left[0] == s.right[0])
      return {{Rule::axiom, s.left[0], {}}};
    if (s.left.empty() && s.right.size() == 1 && s.right[0].is(Connective::one))
      return {{Rule::one_right, s.right[0], {}}};
  }

  // Invertible rules, applied one at a time.
  for (std::size_t k = 0; k < s.left.size(); ++k) {
    const Formula& f = s.left[k];
    switch (f.kind()) {
      case Connective::one: return {{Rule::one_left, f, {{without(s.left, k), s.right}}}};
      case Connective::tensor:
        return {{Rule::tensor_left, f, {{plus(without(s.left, k), f.left(), f.right()), s.right}}}};
      case Connective::plus: {
        Side rest = without(s.left, k);
        return {{Rule::plus_left, f, {{plus(rest, f.left()), s.right}, {plus(rest, f.right()), s.right}}}};
      }
      case Connective::neg:
        return {{Rule::neg_left, f, {{without(s.left, k), plus(s.right, f.operand())}}}};
      default: break;
    }
  }
  for (std::size_t k = 0; k < s.right.size(); ++k) {
    const Formula& f = s.right[k];
    switch (f.kind()) {
      case Connective::lollipop:
        return {{Rule::lollipop_right, f,
                 {{plus(s.left, f.left()), plus(without(s.right, k), f.right())}}}};
      case Connective::with: {
        Side rest = without(s.right, k);
        return {{Rule::with_right, f, {{s.left, plus(rest, f.left())}, {s.left, plus(rest, f.right())}}}};
      }
      case Connective::neg:
        return {{Rule::neg_right, f, {{plus(s.left, f.operand()), without(s.right, k)}}}};
      default: break;
    }
  }

  // Non-invertible rules: every choice and every context split.
  std::vector<Step> steps;
  for (std::size_t k = 0; k < s.right.size(); ++k) {
    if (k > 0 && s.right[k] == s.right[k - 1]) continue;
    const Formula& f = s.right[k];
    if (f.is(Connective::tensor)) {
      Side rest = without(s.right, k);
      for_each_split(s.left, [&](Side l1, Side l2) {
        for_each_split(rest, [&](Side r1, Side r2) {
          steps.push_back({Rule::tensor_right, f,
                           {{l1, plus(std::move(r1), f.left())}, {l2, plus(std::move(r2), f.right())}}});
        });
      });
    } else if (f.is(Connective::plus)) {
      Side rest = without(s.right, k);
      steps.push_back({Rule::plus_right_1, f, {{s.left, plus(rest, f.left())}}});
      steps.push_back({Rule::plus_right_2, f, {{s.left, plus(rest, f.right())}}});
    }
  }
  for (std::size_t k = 0; k < s.left.size(); ++k) {
    if (k > 0 && s.left[k] == s.left[k - 1]) continue;
    const Formula& f = s.left[k];
    if (f.is(Connective::lollipop)) {
      Side rest = without(s.left, k);
      for_each_split(rest, [&](Side l1, Side l2) {
        for_each_split(s.right, [&](Side r1, Side r2) {
          steps.push_back({Rule::lollipop_left, f,
                           {{l1, plus(std::move(r1), f.left())}, {plus(l2, f.right()), r2}}});
        });
      });
    } else if (f.is(Connective::with)) {
      Side rest = without(s.left, k);
      steps.push_back({Rule::with_left_1, f, {{plus(rest, f.left()), s.right}}});
      steps.push_back({Rule::with_left_2, f, {{plus(rest, f.right()), s.right}}});
    }
  }
  return steps;
}

std::string cache_key(const Seq& s, bool affine) {
  std::string key(1, affine ? 'a' : 'l');
  for (const auto& f : s.left) {
    key += '\x1f';
    key += f.text();
  }
  key += '\x1e';
  for (const auto& f : s.right) {
    key += '\x1f';
    key += f.text();
  }
  return key;
}

struct Abort {};

}  // namespace

struct Prover::Impl {
  mutable std::shared_mutex mu;
  std::unordered_map<std::string, bool> memo;

  std::optional<bool> find(const std::string& key) const {
    std::shared_lock lock(mu);
    auto it = memo.find(key);
    if (it == memo.end()) return std::nullopt;
    return it->second;
  }

  void insert(std::string key, bool value, std::size_t cap) {
    std::unique_lock lock(mu);
    if (memo.size() < cap) memo.emplace(std::move(key), value);
  }
};

namespace {

struct Run {
  Prover::Impl& cache;
  const ProverLimits& limits;
  bool affine;
  std::chrono::steady_clock::time_point deadline;
  std::uint64_t ticks = 0;
  ProofStats stats;

  bool search(const Seq& s, std::size_t depth) {
    if (limits.max_depth && depth > *limits.max_depth) throw Abort{};
    if (limits.time_budget && (ticks++ & 63) == 0 && std::chrono::steady_clock::now() >= deadline)
      throw Abort{};
    std::string key = cache_key(s, affine);
    if (auto hit = cache.find(key)) {
      ++stats.cache_hits;
      return *hit;
    }
    ++stats.nodes_expanded;
    bool result = false;
    for (const auto& step : expand(s, affine)) {
      bool all = true;
      for (const auto& p : step.premises) {
        if (!search(p, depth + 1)) {
          all = false;
          break;
        }
      }
      if (all) {
        result = true;
        break;
      }
    }
    cache.insert(std::move(key), result, limits.max_cache_entries);
    return result;
  }

  // Replays the search on a provable sequent, picking the first step whose
  // premises all hold.
  ProofNode rebuild(const Seq& s, std::size_t depth) {
    for (const auto& step : expand(s, affine)) {
      bool all = true;
      for (const auto& p : step.premises) {
        if (!search(p, depth + 1)) {
          all = false;
          break;
        }
      }
      if (!all) continue;
      ProofNode node{step.rule, to_sequent(s), {}};
      for (const auto& p : step.premises) node.premises.push_back(rebuild(p, depth + 1));
      return node;
    }
    throw std::logic_error("trace requested for an unprovable sequent");
  }
};

}  // namespace

std::vector<RuleApplication> backward_rules(const Sequent& s, Weakening weakening) {
  std::vector<RuleApplication> out;
  for (auto& step : expand({to_side(s.left), to_side(s.right)}, weakening == Weakening::affine)) {
    RuleApplication app{step.rule, step.principal, {}};
    for (const auto& p : step.premises) app.premises.push_back(to_sequent(p));
    out.push_back(std::move(app));
  }
  return out;
}

static void format_node(const ProofNode& n, std::size_t indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += rule_name(n.rule);
  out += "  ";
  out += n.conclusion.to_string();
  out += '\n';
  for (const auto& p : n.premises) format_node(p, indent + 1, out);
}

std::string format_trace(const ProofNode& root) {
  std::string out;
  format_node(root, 0, out);
  return out;
}

Prover::Prover(ProverLimits limits) : impl_(std::make_unique<Impl>()), limits_(std::move(limits)) {}

Prover::~Prover() = default;

ProofResult Prover::prove(const Sequent& s, LogicMode mode, bool want_trace) {
  return prove(s, mode, limits_, want_trace);
}

ProofResult Prover::prove(const Sequent& s, LogicMode mode, const ProverLimits& limits, bool want_trace) {
  check_fragment(s, mode.fragment);
  ++queries_;
  Run run{*impl_, limits, mode.affine(), {}, 0, {}};
  if (limits.time_budget) run.deadline = std::chrono::steady_clock::now() + *limits.time_budget;
  Seq root{to_side(s.left), to_side(s.right)};
  ProofResult result;
  try {
    result.verdict = run.search(root, 0) ? Verdict::provable : Verdict::unprovable;
    if (want_trace && result.provable()) result.trace = run.rebuild(root, 0);
  } catch (const Abort&) {
    result.verdict = Verdict::budget_exhausted;
    result.trace.reset();
  }
  result.stats = run.stats;
  nodes_ += run.stats.nodes_expanded;
  hits_ += run.stats.cache_hits;
  return result;
}

bool Prover::entails_goal(const ResourceBag& context, const Formula& goal, LogicMode mode) {
  Sequent s{context, ResourceBag{goal}};
  ProofResult r = prove(s, mode, limits_, false);
  if (r.verdict == Verdict::budget_exhausted)
    throw BudgetExhausted("prover budget exhausted on " + s.to_string());
  return r.provable();
}

std::size_t Prover::cache_size() const {
  std::shared_lock lock(impl_->mu);
  return impl_->memo.size();
}

void Prover::clear_cache() {
  std::unique_lock lock(impl_->mu);
  impl_->memo.clear();
}

ProofResult prove(const Sequent& s, LogicMode mode, const ProverLimits& limits, bool want_trace) {
  Prover p(limits);
  return p.prove(s, mode, limits, want_trace);
}

}  // namespace resgame
