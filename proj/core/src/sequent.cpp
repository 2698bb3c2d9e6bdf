#include "resgame/sequent.hpp"

#include <ostream>

#include "resgame/error.hpp"

namespace resgame {

std::string_view to_string(Weakening w) { return w == Weakening::affine ? "affine" : "linear"; }
std::string_view to_string(Fragment f) { return f == Fragment::mall ? "mall" : "mll"; }

std::string to_string(const LogicMode& m) {
  return std::string(to_string(m.weakening)) + " " + std::string(to_string(m.fragment));
}

std::size_t Sequent::weight() const noexcept {
  std::size_t n = 0;
  for (const auto& [f, m] : left) n += m * (2 * f.size() - 1);
  for (const auto& [f, m] : right) n += m * (2 * f.size() - 1);
  return n;
}

static std::string join(const ResourceBag& bag) {
  std::string out;
  for (const auto& f : bag.elements()) {
    if (!out.empty()) out += ", ";
    out += f.text();
  }
  return out;
}

std::string Sequent::to_string() const {
  std::string l = join(left);
  std::string r = join(right);
  return (l.empty() ? "" : l + " ") + "|-" + (r.empty() ? "" : " " + r);
}

std::ostream& operator<<(std::ostream& os, const Sequent& s) { return os << s.to_string(); }

void check_fragment(const Formula& f, Fragment fragment) {
  if (fragment == Fragment::mll && f.mentions_additives())
    throw FragmentError("formula '" + f.text() + "' uses an additive connective outside MLL");
}

void check_fragment(const ResourceBag& bag, Fragment fragment) {
  for (const auto& [f, m] : bag) check_fragment(f, fragment);
}

void check_fragment(const Sequent& s, Fragment fragment) {
  check_fragment(s.left, fragment);
  check_fragment(s.right, fragment);
}

}  // namespace resgame
