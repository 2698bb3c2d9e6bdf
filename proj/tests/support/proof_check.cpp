#include "proof_check.hpp"

#include <functional>

namespace resgame::testing {

namespace {

ResourceBag minus(ResourceBag b, const Formula& f) {
  b.remove(f);
  return b;
}

ResourceBag with(ResourceBag b, const Formula& f) {
  b.add(f);
  return b;
}

// Tries every principal candidate of connective `c` on one side.
bool any_principal(const ResourceBag& side, Connective c, const std::function<bool(const Formula&)>& fits) {
  for (const auto& [f, m] : side)
    if (f.kind() == c && fits(f)) return true;
  return false;
}

bool leaf_ok(const ProofNode& n, bool affine) {
  const Sequent& s = n.conclusion;
  switch (n.rule) {
    case Rule::axiom:
      if (!affine) return s.left.size() == 1 && s.right.size() == 1 && s.left == s.right;
      for (const auto& [f, m] : s.left)
        if (s.right.contains(f)) return true;
      return false;
    case Rule::one_right:
      if (!affine) return s.left.empty() && s.right == ResourceBag{Formula::one()};
      return s.right.contains(Formula::one());
    case Rule::top_right: return s.right.contains(Formula::top());
    default: return false;
  }
}

bool step_ok(const ProofNode& n) {
  const Sequent& s = n.conclusion;
  const auto& ps = n.premises;
  auto prem = [&](std::size_t k) -> const Sequent& { return ps[k].conclusion; };
  switch (n.rule) {
    case Rule::one_left:
      return ps.size() == 1 && s.left.contains(Formula::one()) &&
             prem(0) == Sequent{minus(s.left, Formula::one()), s.right};
    case Rule::neg_left:
      return ps.size() == 1 && any_principal(s.left, Connective::neg, [&](const Formula& f) {
               return prem(0) == Sequent{minus(s.left, f), with(s.right, f.operand())};
             });
    case Rule::neg_right:
      return ps.size() == 1 && any_principal(s.right, Connective::neg, [&](const Formula& f) {
               return prem(0) == Sequent{with(s.left, f.operand()), minus(s.right, f)};
             });
    case Rule::tensor_left:
      return ps.size() == 1 && any_principal(s.left, Connective::tensor, [&](const Formula& f) {
               return prem(0) == Sequent{with(with(minus(s.left, f), f.left()), f.right()), s.right};
             });
    case Rule::lollipop_right:
      return ps.size() == 1 && any_principal(s.right, Connective::lollipop, [&](const Formula& f) {
               return prem(0) == Sequent{with(s.left, f.left()), with(minus(s.right, f), f.right())};
             });
    case Rule::with_left_1:
    case Rule::with_left_2:
      return ps.size() == 1 && any_principal(s.left, Connective::with, [&](const Formula& f) {
               const Formula& pick = n.rule == Rule::with_left_1 ? f.left() : f.right();
               return prem(0) == Sequent{with(minus(s.left, f), pick), s.right};
             });
    case Rule::plus_right_1:
    case Rule::plus_right_2:
      return ps.size() == 1 && any_principal(s.right, Connective::plus, [&](const Formula& f) {
               const Formula& pick = n.rule == Rule::plus_right_1 ? f.left() : f.right();
               return prem(0) == Sequent{s.left, with(minus(s.right, f), pick)};
             });
    case Rule::with_right:
      return ps.size() == 2 && any_principal(s.right, Connective::with, [&](const Formula& f) {
               ResourceBag rest = minus(s.right, f);
               return prem(0) == Sequent{s.left, with(rest, f.left())} &&
                      prem(1) == Sequent{s.left, with(rest, f.right())};
             });
    case Rule::plus_left:
      return ps.size() == 2 && any_principal(s.left, Connective::plus, [&](const Formula& f) {
               ResourceBag rest = minus(s.left, f);
               return prem(0) == Sequent{with(rest, f.left()), s.right} &&
                      prem(1) == Sequent{with(rest, f.right()), s.right};
             });
    case Rule::tensor_right:
      // Γ1 ⊢ A, Δ1 and Γ2 ⊢ B, Δ2 give Γ1, Γ2 ⊢ A ⊗ B, Δ1, Δ2.
      return ps.size() == 2 && any_principal(s.right, Connective::tensor, [&](const Formula& f) {
               const Sequent& a = prem(0);
               const Sequent& b = prem(1);
               if (!a.right.contains(f.left()) || !b.right.contains(f.right())) return false;
               return a.left + b.left == s.left &&
                      minus(a.right, f.left()) + minus(b.right, f.right()) == minus(s.right, f);
             });
    case Rule::lollipop_left:
      // Γ1 ⊢ A, Δ1 and Γ2, B ⊢ Δ2 give Γ1, Γ2, A ⊸ B ⊢ Δ1, Δ2.
      return ps.size() == 2 && any_principal(s.left, Connective::lollipop, [&](const Formula& f) {
               const Sequent& a = prem(0);
               const Sequent& b = prem(1);
               if (!a.right.contains(f.left()) || !b.left.contains(f.right())) return false;
               return a.left + minus(b.left, f.right()) == minus(s.left, f) &&
                      minus(a.right, f.left()) + b.right == s.right;
             });
    default: return false;
  }
}

std::optional<std::string> check(const ProofNode& n, bool affine) {
  const bool leaf = n.premises.empty();
  const bool ok = leaf ? leaf_ok(n, affine) : step_ok(n);
  if (!ok)
    return std::string("bad ") + std::string(rule_name(n.rule)) + " at " + n.conclusion.to_string();
  for (const auto& p : n.premises)
    if (auto err = check(p, affine)) return err;
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_proof(const ProofNode& root, Weakening weakening) {
  return check(root, weakening == Weakening::affine);
}

}  // namespace resgame::testing
