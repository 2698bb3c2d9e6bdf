#include "resgame/formula.hpp"

#include <algorithm>
#include <vector>
#include <ostream>
#include <stdexcept>

namespace resgame {

struct Formula::Node {
  Connective kind;
  std::string name;
  std::vector<Formula> children;
  std::size_t size = 1;
  std::size_t depth = 1;
  bool additives = false;
  std::string text;
  std::size_t hash = 0;
};

namespace {

// Binding strength used by the printer. Higher binds tighter.
int level(Connective c) {
  switch (c) {
    case Connective::lollipop: return 0;
    case Connective::plus: return 2;
    case Connective::with: return 3;
    case Connective::tensor: return 4;
    default: return 5;
  }
}

const char* op_text(Connective c) {
  switch (c) {
    case Connective::lollipop: return " -o ";
    case Connective::plus: return " + ";
    case Connective::with: return " & ";
    case Connective::tensor: return " * ";
    default: return "";
  }
}

std::string wrap(const std::string& s, bool parens) { return parens ? "(" + s + ")" : s; }

}  // namespace

Formula::Formula() : Formula(one()) {}

Formula make_node(std::shared_ptr<Formula::Node> n) {
  n->hash = std::hash<std::string>{}(n->text);
  return Formula(std::move(n));
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  auto n = std::make_shared<Node>();
  n->kind = Connective::atom;
  n->text = name;
  n->name = std::move(name);
  return make_node(std::move(n));
}

Formula Formula::one() {
  static const Formula unit = [] {
    auto n = std::make_shared<Node>();
    n->kind = Connective::one;
    n->text = "1";
    return make_node(std::move(n));
  }();
  return unit;
}

Formula Formula::top() {
  static const Formula unit = [] {
    auto n = std::make_shared<Node>();
    n->kind = Connective::top;
    n->text = "top";
    n->additives = true;
    return make_node(std::move(n));
  }();
  return unit;
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::neg;
  n->size = f.size() + 1;
  n->depth = f.depth() + 1;
  n->additives = f.mentions_additives();
  n->text = "~" + wrap(f.text(), level(f.kind()) < 5);
  n->children.push_back(std::move(f));
  return make_node(std::move(n));
}

static Formula make_binary(Connective c, Formula a, Formula b) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = c;
  n->size = a.size() + b.size() + 1;
  n->depth = std::max(a.depth(), b.depth()) + 1;
  n->additives = c == Connective::with || c == Connective::plus || a.mentions_additives() ||
                 b.mentions_additives();
  const int l = level(c);
  if (c == Connective::lollipop) {
    // right-associative
    n->text = wrap(a.text(), level(a.kind()) <= l) + op_text(c) + wrap(b.text(), level(b.kind()) < l);
  } else {
    n->text = wrap(a.text(), level(a.kind()) < l) + op_text(c) + wrap(b.text(), level(b.kind()) <= l);
  }
  n->children.push_back(std::move(a));
  n->children.push_back(std::move(b));
  return make_node(std::move(n));
}

Formula Formula::tensor(Formula a, Formula b) {
  return make_binary(Connective::tensor, std::move(a), std::move(b));
}
Formula Formula::with(Formula a, Formula b) {
  return make_binary(Connective::with, std::move(a), std::move(b));
}
Formula Formula::plus(Formula a, Formula b) {
  return make_binary(Connective::plus, std::move(a), std::move(b));
}
Formula Formula::lollipop(Formula a, Formula b) {
  return make_binary(Connective::lollipop, std::move(a), std::move(b));
}

Connective Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_binary() const noexcept {
  switch (kind()) {
    case Connective::tensor:
    case Connective::with:
    case Connective::plus:
    case Connective::lollipop: return true;
    default: return false;
  }
}

bool Formula::is_additive() const noexcept {
  return kind() == Connective::with || kind() == Connective::plus || kind() == Connective::top;
}

const std::string& Formula::name() const {
  if (kind() != Connective::atom) throw std::logic_error("name() on a non-atom");
  return node_->name;
}

const Formula& Formula::operand() const {
  if (kind() != Connective::neg) throw std::logic_error("operand() on a non-negation");
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (!is_binary()) throw std::logic_error("left() on a non-binary formula");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (!is_binary()) throw std::logic_error("right() on a non-binary formula");
  return node_->children[1];
}

std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::depth() const noexcept { return node_->depth; }
bool Formula::mentions_additives() const noexcept { return node_->additives; }
const std::string& Formula::text() const noexcept { return node_->text; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  return a.node_ == b.node_ || a.node_->text == b.node_->text;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  return a.node_->text.compare(b.node_->text) <=> 0;
}

std::string print_formula(const Formula& f) { return f.text(); }

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << f.text(); }

}  // namespace resgame
