#include "resgame/game_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "resgame/error.hpp"
#include "resgame/syntax.hpp"

namespace resgame {

namespace {

bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Trimmed view into `line`, remembering where it started (0-based).
struct Span {
  std::string_view text;
  std::size_t offset = 0;
};

Span trim(std::string_view s, std::size_t offset) {
  std::size_t b = 0, e = s.size();
  while (b < e && space(s[b])) ++b;
  while (e > b && space(s[e - 1])) --e;
  return {s.substr(b, e - b), offset + b};
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct PlayerLine {
  std::size_t line;
  std::string id;
  Span goal;
  std::optional<Span> endow;
};

}  // namespace

Game parse_game(std::string_view text, LogicMode defaults) {
  LogicMode mode = defaults;
  bool seen_logic = false;
  std::vector<PlayerLine> lines;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Span line = trim(raw, 0);
    if (line.text.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (line.text.starts_with("logic:")) {
      if (seen_logic) throw ParseError("duplicate logic line", line_no, line.offset + 1);
      seen_logic = true;
      Span rest = trim(line.text.substr(6), line.offset + 6);
      if (rest.text.empty()) throw ParseError("empty logic line", line_no, rest.offset + 1, {"linear", "affine", "mll", "mall"});
      for (auto w : words(rest.text)) {
        if (w == "linear") mode.weakening = Weakening::linear;
        else if (w == "affine") mode.weakening = Weakening::affine;
        else if (w == "mll") mode.fragment = Fragment::mll;
        else if (w == "mall") mode.fragment = Fragment::mall;
        else
          throw ParseError("unknown logic switch '" + std::string(w) + "'", line_no,
                           rest.offset + static_cast<std::size_t>(w.data() - rest.text.data()) + 1,
                           {"linear", "affine", "mll", "mall"});
      }
    } else if (line.text.starts_with("player") && line.text.size() > 6 && space(line.text[6])) {
      Span rest = trim(line.text.substr(6), line.offset + 6);
      std::size_t id_end = 0;
      while (id_end < rest.text.size() && !space(rest.text[id_end]) && rest.text[id_end] != ':') ++id_end;
      std::string id(rest.text.substr(0, id_end));
      if (id.empty() || id == "goal")
        throw ParseError("missing player id", line_no, rest.offset + 1, {"player id"});
      for (char c : id)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
          throw ParseError("invalid player id '" + id + "'", line_no, rest.offset + 1, {"player id"});
      Span after = trim(rest.text.substr(id_end), rest.offset + id_end);
      if (!after.text.starts_with("goal:"))
        throw ParseError("expected 'goal:' after player id", line_no, after.offset + 1, {"'goal:'"});
      std::string_view body = after.text.substr(5);
      const std::size_t body_offset = after.offset + 5;
      PlayerLine pl{line_no, id, {}, std::nullopt};
      if (auto e = body.find("endow:"); e != std::string_view::npos) {
        pl.goal = trim(body.substr(0, e), body_offset);
        pl.endow = trim(body.substr(e + 6), body_offset + e + 6);
      } else {
        pl.goal = trim(body, body_offset);
      }
      if (pl.goal.text.empty()) throw ParseError("missing goal formula", line_no, pl.goal.offset + 1, {"formula"});
      lines.push_back(std::move(pl));
    } else {
      throw ParseError("unrecognized line", line_no, line.offset + 1, {"'logic:'", "'player'"});
    }
    if (end == text.size()) break;
  }

  if (lines.empty()) throw ParseError("game declares no players", line_no, 1, {"'player'"});
  std::vector<Player> players;
  for (const auto& pl : lines) {
    for (const auto& other : players)
      if (other.id == pl.id) throw ParseError("duplicate player '" + pl.id + "'", pl.line, 1);
    Formula goal = parse_formula(pl.goal.text, mode.fragment, SourcePos{pl.line, pl.goal.offset + 1});
    ResourceBag endow;
    if (pl.endow)
      for (auto& f : parse_formula_list(pl.endow->text, mode.fragment, SourcePos{pl.line, pl.endow->offset + 1}))
        endow.add(f);
    players.push_back({pl.id, std::move(goal), std::move(endow)});
  }
  return Game(std::move(players), mode);
}

Game load_game(const std::filesystem::path& path, LogicMode defaults) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open game file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_game(buf.str(), defaults);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                         e.message(),
                     e.line(), e.column(), e.expected());
  }
}

static std::string join(const ResourceBag& bag) {
  std::string out;
  for (const auto& f : bag.elements()) {
    if (!out.empty()) out += ", ";
    out += f.text();
  }
  return out;
}

std::string write_game(const Game& g) {
  std::string out = "logic: " + to_string(g.mode()) + "\n";
  for (const auto& p : g.players()) {
    out += "player " + p.id + "  goal: " + p.goal.text();
    if (!p.endowment.empty()) out += "  endow: " + join(p.endowment);
    out += "\n";
  }
  return out;
}

Profile parse_profile(std::string_view literal, const Game& g) {
  std::vector<ResourceBag> bags(g.size());
  std::vector<bool> seen(g.size(), false);
  std::size_t start = 0;
  while (start <= literal.size()) {
    std::size_t end = literal.find(';', start);
    if (end == std::string_view::npos) end = literal.size();
    Span part = trim(literal.substr(start, end - start), start);
    if (!part.text.empty()) {
      const std::size_t colon = part.text.find(':');
      if (colon == std::string_view::npos)
        throw ParseError("expected 'player: resources'", 1, part.offset + 1, {"':'"});
      const std::string id(trim(part.text.substr(0, colon), 0).text);
      auto idx = g.index_of(id);
      if (!idx) throw ParseError("unknown player '" + id + "'", 1, part.offset + 1, {"player id"});
      if (seen[*idx]) throw ParseError("player '" + id + "' given twice", 1, part.offset + 1);
      seen[*idx] = true;
      Span items = trim(part.text.substr(colon + 1), part.offset + colon + 1);
      if (items.text.starts_with("{")) {
        if (!items.text.ends_with("}"))
          throw ParseError("unbalanced '{'", 1, items.offset + 1, {"'}'"});
        items = trim(items.text.substr(1, items.text.size() - 2), items.offset + 1);
      }
      for (auto& f : parse_formula_list(items.text, g.mode().fragment, SourcePos{1, items.offset + 1}))
        bags[*idx].add(f);
    }
    if (end == literal.size()) break;
    start = end + 1;
  }
  Profile p(std::move(bags));
  validate_profile(g, p);
  return p;
}

std::string format_profile(const Game& g, const Profile& p) {
  std::string out;
  for (PlayerIndex i = 0; i < p.size(); ++i) {
    if (i) out += "; ";
    out += (i < g.size() ? g.player(i).id : std::to_string(i)) + ": " + p[i].to_string();
  }
  return out;
}

std::string format_endowment(const Game& g, const Endowment& e) { return format_profile(g, Profile(e)); }

}  // namespace resgame
