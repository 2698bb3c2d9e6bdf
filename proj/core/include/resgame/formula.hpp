#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>

namespace resgame {

enum class Connective : std::uint8_t { atom, one, top, neg, tensor, with, plus, lollipop };

// Immutable formula over the reduced MALL grammar. Derived connectives
// (bot, 0, par) are built through the factory functions below and never
// stored as such.
//
// Every node caches its canonical printed text; equality and ordering
// are defined on that text, which is injective because printing is
// minimal-parenthesis and round-trips through the parser.
class Formula {
 public:
  struct Node;  // opaque

  Formula();  // the unit 1

  static Formula atom(std::string name);
  static Formula one();
  static Formula top();
  static Formula neg(Formula f);
  static Formula tensor(Formula a, Formula b);
  static Formula with(Formula a, Formula b);
  static Formula plus(Formula a, Formula b);
  static Formula lollipop(Formula a, Formula b);

  static Formula bot() { return neg(one()); }
  static Formula zero() { return neg(top()); }
  static Formula par(Formula a, Formula b) { return lollipop(neg(std::move(a)), std::move(b)); }

  Connective kind() const noexcept;
  bool is(Connective c) const noexcept { return kind() == c; }
  bool is_binary() const noexcept;
  bool is_additive() const noexcept;  // with, plus or top anywhere at this node

  const std::string& name() const;     // atoms only
  const Formula& operand() const;      // neg only
  const Formula& left() const;         // binary only
  const Formula& right() const;        // binary only

  std::size_t size() const noexcept;   // node count
  std::size_t depth() const noexcept;
  bool mentions_additives() const noexcept;  // anywhere in the tree

  const std::string& text() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;
  friend Formula make_node(std::shared_ptr<Node> n);

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string print_formula(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

}  // namespace resgame

template <>
struct std::hash<resgame::Formula> {
  std::size_t operator()(const resgame::Formula& f) const noexcept { return f.hash(); }
};
