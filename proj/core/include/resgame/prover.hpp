#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resgame/sequent.hpp"

namespace resgame {

enum class Rule : std::uint8_t {
  axiom,
  one_left,
  one_right,
  top_right,
  neg_left,
  neg_right,
  tensor_left,
  tensor_right,
  with_left_1,
  with_left_2,
  with_right,
  plus_left,
  plus_right_1,
  plus_right_2,
  lollipop_left,
  lollipop_right,
};

std::string_view rule_name(Rule r);  // "ax", "*R", "-oL", ...

// One backward step: the conclusion is derivable if every premise is.
struct RuleApplication {
  Rule rule;
  Formula principal;  // the decomposed formula (leaves: the matched one)
  std::vector<Sequent> premises;
};

// The prover's rule table. Leaves come back alone; otherwise the first
// applicable invertible rule comes back alone; otherwise every
// non-invertible application (all context splits). Each premise is
// strictly lighter than the conclusion under Sequent::weight().
std::vector<RuleApplication> backward_rules(const Sequent& s, Weakening weakening);

struct ProverLimits {
  std::optional<std::size_t> max_depth;  // unset: structural termination only
  std::size_t max_cache_entries = std::size_t{1} << 22;
  std::optional<std::chrono::milliseconds> time_budget;
};

enum class Verdict { provable, unprovable, budget_exhausted };
std::string_view to_string(Verdict v);

struct ProofNode {
  Rule rule;
  Sequent conclusion;
  std::vector<ProofNode> premises;
};

// Indented tree, one rule per line: "<rule>  <sequent>".
std::string format_trace(const ProofNode& root);

struct ProofStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t cache_hits = 0;
};

struct ProofResult {
  Verdict verdict = Verdict::unprovable;
  std::optional<ProofNode> trace;
  ProofStats stats;

  bool provable() const noexcept { return verdict == Verdict::provable; }
};

// Cut-free backward proof search with a memo table shared by all calls on
// the same Prover. Safe to call from several threads at once.
class Prover {
 public:
  explicit Prover(ProverLimits limits = {});
  ~Prover();
  Prover(const Prover&) = delete;
  Prover& operator=(const Prover&) = delete;

  ProofResult prove(const Sequent& s, LogicMode mode, bool want_trace = false);
  ProofResult prove(const Sequent& s, LogicMode mode, const ProverLimits& limits, bool want_trace);

  // context ⊢ goal. Throws BudgetExhausted instead of returning a third value.
  bool entails_goal(const ResourceBag& context, const Formula& goal, LogicMode mode);

  const ProverLimits& limits() const noexcept { return limits_; }
  void set_limits(ProverLimits limits) { limits_ = std::move(limits); }

  std::uint64_t queries() const noexcept { return queries_.load(); }
  std::uint64_t nodes_expanded() const noexcept { return nodes_.load(); }
  std::uint64_t cache_hits() const noexcept { return hits_.load(); }
  std::size_t cache_size() const;
  void clear_cache();

  struct Impl;  // opaque

 private:
  std::unique_ptr<Impl> impl_;
  ProverLimits limits_;
  std::atomic<std::uint64_t> queries_{0};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> hits_{0};
};

// One-shot search with a private cache.
ProofResult prove(const Sequent& s, LogicMode mode, const ProverLimits& limits = {},
                  bool want_trace = false);

}  // namespace resgame
