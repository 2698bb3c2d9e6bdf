#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "resgame/formula.hpp"
#include "resgame/sequent.hpp"

namespace resgame {

// Concrete syntax:
//   formula := lolli ; lolli := par ("-o" lolli)? ; par := plus ("|" plus)* ;
//   plus := with ("+" with)* ; with := tensor ("&" tensor)* ; tensor := unary ("*" unary)* ;
//   unary := "~" unary | atom | "1" | "top" | "0" | "bot" | "(" formula ")"
// Par, bot and 0 are rewritten to core form while parsing.
//
// Errors are ParseError (with 1-based line/column and expected tokens) or
// FragmentError when `fragment` is mll and an additive appears.

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

Formula parse_formula(std::string_view text, Fragment fragment = Fragment::mall);
Formula parse_formula(std::string_view text, Fragment fragment, SourcePos origin);

// Comma-separated, possibly empty list of formulas.
std::vector<Formula> parse_formula_list(std::string_view text, Fragment fragment = Fragment::mall,
                                        SourcePos origin = {});

// "F1, F2 |- G1, G2"; either side may be empty.
Sequent parse_sequent(std::string_view text, Fragment fragment = Fragment::mall);

bool is_identifier(std::string_view s);

}  // namespace resgame
