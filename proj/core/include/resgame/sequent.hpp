#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "resgame/bag.hpp"

namespace resgame {

enum class Weakening { linear, affine };
enum class Fragment { mll, mall };

struct LogicMode {
  Weakening weakening = Weakening::linear;
  Fragment fragment = Fragment::mall;

  bool affine() const noexcept { return weakening == Weakening::affine; }
  friend bool operator==(const LogicMode&, const LogicMode&) = default;
};

std::string_view to_string(Weakening w);
std::string_view to_string(Fragment f);
std::string to_string(const LogicMode& m);  // "affine mall"

struct Sequent {
  ResourceBag left;
  ResourceBag right;

  bool intuitionistic() const noexcept { return right.size() == 1; }
  // Termination measure: every formula weighs 2*nodes - 1. Each backward
  // rule strictly decreases it.
  std::size_t weight() const noexcept;
  std::string to_string() const;      // "A, B |- C"
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::ostream& operator<<(std::ostream& os, const Sequent& s);

// Throws FragmentError when `f` uses with/plus/top under fragment mll.
void check_fragment(const Formula& f, Fragment fragment);
void check_fragment(const ResourceBag& bag, Fragment fragment);
void check_fragment(const Sequent& s, Fragment fragment);

}  // namespace resgame
