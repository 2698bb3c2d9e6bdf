#include "resgame/syntax.hpp"

#include <cctype>
#include <string>

#include "resgame/error.hpp"

namespace resgame {

namespace {

enum class Tok { ident, one, zero, top, bot, tilde, star, amp, plus, lolli, bar, lparen, rparen, comma, turnstile, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

const std::vector<std::string> kUnaryStart = {"'~'", "atom", "'1'", "'top'", "'0'", "'bot'", "'('"};
const std::vector<std::string> kBinaryOps = {"'*'", "'&'", "'+'", "'|'", "'-o'"};

class Parser {
 public:
  Parser(std::string_view text, Fragment fragment, SourcePos origin)
      : text_(text), fragment_(fragment), line_(origin.line), col_(origin.column) {
    advance();
  }

  Formula formula() { return lolli(); }

  bool at(Tok k) const { return tok_.kind == k; }
  const Token& current() const { return tok_; }

  void expect_end(std::vector<std::string> expected) {
    if (!at(Tok::end)) fail(expected);
  }

  void advance() { tok_ = lex(); }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "expected ";
    if (expected.size() > 1) msg += "one of ";
    for (std::size_t k = 0; k < expected.size(); ++k) msg += (k ? ", " : "") + expected[k];
    msg += " but found " + describe(tok_);
    throw ParseError(msg, tok_.pos.line, tok_.pos.column, std::move(expected));
  }

 private:
  Token lex() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) bump();
    SourcePos pos{line_, col_};
    if (i_ >= text_.size()) return {Tok::end, "", pos};
    const char c = text_[i_];
    auto single = [&](Tok k) {
      bump();
      return Token{k, std::string(1, c), pos};
    };
    switch (c) {
      case '~': return single(Tok::tilde);
      case '*': return single(Tok::star);
      case '&': return single(Tok::amp);
      case '+': return single(Tok::plus);
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      case ',': return single(Tok::comma);
      case '|':
        if (i_ + 1 < text_.size() && text_[i_ + 1] == '-') {
          bump();
          bump();
          return {Tok::turnstile, "|-", pos};
        }
        return single(Tok::bar);
      case '-':
        if (i_ + 1 < text_.size() && text_[i_ + 1] == 'o') {
          bump();
          bump();
          return {Tok::lolli, "-o", pos};
        }
        break;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i_ < text_.size() && ident_char(text_[i_])) {
        num += text_[i_];
        bump();
      }
      if (num == "1") return {Tok::one, num, pos};
      if (num == "0") return {Tok::zero, num, pos};
      throw ParseError("invalid token '" + num + "'", pos.line, pos.column, kUnaryStart);
    }
    if (ident_start(c)) {
      std::string id;
      while (i_ < text_.size() && ident_char(text_[i_])) {
        id += text_[i_];
        bump();
      }
      if (id == "top") return {Tok::top, id, pos};
      if (id == "bot") return {Tok::bot, id, pos};
      return {Tok::ident, id, pos};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos.line, pos.column);
  }

  void bump() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void additive(const Token& t) const {
    if (fragment_ == Fragment::mll)
      throw FragmentError(std::to_string(t.pos.line) + ":" + std::to_string(t.pos.column) + ": '" +
                              t.text + "' is not part of MLL",
                          t.pos.line);
  }

  Formula lolli() {
    Formula a = par();
    if (at(Tok::lolli)) {
      advance();
      Formula b = lolli();
      return Formula::lollipop(std::move(a), std::move(b));
    }
    return a;
  }

  Formula par() {
    Formula a = plus();
    while (at(Tok::bar)) {
      advance();
      a = Formula::par(std::move(a), plus());
    }
    return a;
  }

  Formula plus() {
    Formula a = with();
    while (at(Tok::plus)) {
      additive(tok_);
      advance();
      a = Formula::plus(std::move(a), with());
    }
    return a;
  }

  Formula with() {
    Formula a = tensor();
    while (at(Tok::amp)) {
      additive(tok_);
      advance();
      a = Formula::with(std::move(a), tensor());
    }
    return a;
  }

  Formula tensor() {
    Formula a = unary();
    while (at(Tok::star)) {
      advance();
      a = Formula::tensor(std::move(a), unary());
    }
    return a;
  }

  Formula unary() {
    const Token t = tok_;
    switch (t.kind) {
      case Tok::tilde: advance(); return Formula::neg(unary());
      case Tok::ident: advance(); return Formula::atom(t.text);
      case Tok::one: advance(); return Formula::one();
      case Tok::bot: advance(); return Formula::bot();
      case Tok::top: additive(t); advance(); return Formula::top();
      case Tok::zero: additive(t); advance(); return Formula::zero();
      case Tok::lparen: {
        advance();
        Formula f = formula();
        if (!at(Tok::rparen)) {
          auto expected = kBinaryOps;
          expected.insert(expected.begin(), "')'");
          fail(expected);
        }
        advance();
        return f;
      }
      default: fail(kUnaryStart);
    }
  }

  std::string_view text_;
  Fragment fragment_;
  std::size_t i_ = 0;
  std::size_t line_;
  std::size_t col_;
  Token tok_{Tok::end, "", {}};
};

std::vector<std::string> with_ops(std::vector<std::string> extra) {
  auto out = kBinaryOps;
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::vector<Formula> list(Parser& p, Tok stop, const std::vector<std::string>& followers) {
  std::vector<Formula> out;
  if (p.at(stop)) return out;
  while (true) {
    out.push_back(p.formula());
    if (p.at(Tok::comma)) {
      p.advance();
      continue;
    }
    if (!p.at(stop)) {
      auto expected = with_ops({"','"});
      expected.insert(expected.end(), followers.begin(), followers.end());
      p.fail(expected);
    }
    return out;
  }
}

}  // namespace

Formula parse_formula(std::string_view text, Fragment fragment) {
  return parse_formula(text, fragment, SourcePos{});
}

Formula parse_formula(std::string_view text, Fragment fragment, SourcePos origin) {
  Parser p(text, fragment, origin);
  Formula f = p.formula();
  p.expect_end(with_ops({"end of input"}));
  return f;
}

std::vector<Formula> parse_formula_list(std::string_view text, Fragment fragment, SourcePos origin) {
  Parser p(text, fragment, origin);
  return list(p, Tok::end, {"end of input"});
}

Sequent parse_sequent(std::string_view text, Fragment fragment) {
  Parser p(text, fragment, SourcePos{});
  Sequent s;
  for (auto& f : list(p, Tok::turnstile, {"'|-'"})) s.left.add(f);
  p.advance();  // past |-
  for (auto& f : list(p, Tok::end, {"end of input"})) s.right.add(f);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return s != "top" && s != "bot";
}

}  // namespace resgame
