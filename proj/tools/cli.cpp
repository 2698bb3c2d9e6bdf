#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "resgame/resgame.hpp"

namespace resgame::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string mode;
  std::string fragment;
  std::string pref = "dichotomous";
  std::string profile;
  std::string path;
  std::string sequent;
  bool json = false;
  bool trace = false;
  unsigned jobs = 1;
  std::size_t limit_pool = EnumerationCaps{}.max_pool;
  std::uint64_t limit_profiles = EnumerationCaps{}.max_profiles;
  std::optional<long> budget_ms;

  std::string model = "aigcrg";
  std::string coalition;
  std::string core;
  bool table = false;
  bool veto = false;
  bool dummy = false;
};

LogicMode flag_mode(const Options& o) {
  LogicMode m;
  if (o.mode == "affine") m.weakening = Weakening::affine;
  if (o.fragment == "mll") m.fragment = Fragment::mll;
  return m;
}

PrefKind pref_kind(const Options& o) {
  return o.pref == "parsimonious" ? PrefKind::parsimonious : PrefKind::dichotomous;
}

SessionOptions session_options(const Options& o) {
  SessionOptions s;
  s.caps.max_pool = o.limit_pool;
  s.caps.max_profiles = o.limit_profiles;
  s.jobs = std::max(1u, o.jobs);
  if (o.budget_ms) s.prover.time_budget = std::chrono::milliseconds(*o.budget_ms);
  return s;
}

Json bag_json(const ResourceBag& b) {
  Json arr = Json::array();
  for (const auto& f : b.elements()) arr.push_back(f.text());
  return arr;
}

Json profile_json(const Game& g, const Profile& p) {
  Json obj = Json::object();
  for (PlayerIndex i = 0; i < g.size(); ++i) obj[g.player(i).id] = bag_json(p[i]);
  return obj;
}

std::vector<std::string> satisfied_ids(Session& s, const Game& g, const ResourceBag& out) {
  std::vector<std::string> ids;
  const auto sat = satisfied_goals(s, g, out);
  for (PlayerIndex i = 0; i < g.size(); ++i)
    if (sat[i]) ids.push_back(g.player(i).id);
  return ids;
}

std::string join_ids(const std::vector<std::string>& ids) {
  if (ids.empty()) return "-";
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
  return out;
}

// Builds the output of one command.
class Command {
 public:
  Command(std::string name, const Options& o) : name_(std::move(name)), opts_(o), session_(session_options(o)) {
    doc_["command"] = name_;
    doc_["inputs"] = Json::object();
    start_ = std::chrono::steady_clock::now();
  }

  Session& session() { return session_; }
  Json& inputs() { return doc_["inputs"]; }
  std::ostringstream& text() { return text_; }

  Game load() {
    Game g = load_game(opts_.path, flag_mode(opts_));
    inputs()["game"] = opts_.path;
    inputs()["mode"] = to_string(g.mode().weakening);
    inputs()["fragment"] = to_string(g.mode().fragment);
    text_ << "game: " << opts_.path << " (" << to_string(g.mode()) << ", " << g.size() << " players)\n";
    return g;
  }

  void annotate(const Game& g, const ResourceBag& out) {
    text_ << "outcome: " << out.to_string() << "  satisfied: " << join_ids(satisfied_ids(session_, g, out)) << "\n";
  }

  Report finish(Json verdict, int code, std::optional<Json> witness = std::nullopt) {
    doc_["verdict"] = std::move(verdict);
    if (witness) doc_["witness"] = std::move(*witness);
    const auto ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    Prover& p = session_.prover();
    doc_["stats"] = {{"prover_queries", p.queries()},
                     {"nodes_expanded", p.nodes_expanded()},
                     {"cache_hits", p.cache_hits()},
                     {"wall_ms", ms}};
    doc_["version"] = kVersion;
    Report r;
    r.exit_code = code;
    r.json = doc_;
    if (opts_.json) {
      r.out = doc_.dump(2) + "\n";
    } else {
      text_ << "stats: queries=" << p.queries() << " nodes=" << p.nodes_expanded() << " cache_hits=" << p.cache_hits()
            << "\n";
      r.out = text_.str();
    }
    return r;
  }

 private:
  std::string name_;
  const Options& opts_;
  Session session_;
  Json doc_;
  std::ostringstream text_;
  std::chrono::steady_clock::time_point start_;
};

Report do_prove(const Options& o) {
  Command c("prove", o);
  const LogicMode mode = flag_mode(o);
  c.inputs()["sequent"] = o.sequent;
  c.inputs()["mode"] = to_string(mode.weakening);
  c.inputs()["fragment"] = to_string(mode.fragment);
  const Sequent s = parse_sequent(o.sequent, mode.fragment);
  const ProofResult r = c.session().prover().prove(s, mode, o.trace);
  c.text() << "sequent: " << s.to_string() << "\n";
  c.text() << "mode: " << to_string(mode) << "\n";
  c.text() << "verdict: " << to_string(r.verdict) << "\n";
  std::optional<Json> witness;
  if (r.trace) {
    const std::string trace = format_trace(*r.trace);
    c.text() << "proof:\n" << trace;
    Json lines = Json::array();
    std::istringstream in(trace);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    witness = Json{{"trace", lines}};
  }
  if (r.verdict == Verdict::budget_exhausted) {
    return c.finish(nullptr, kExhausted);
  }
  return c.finish(r.provable(), r.provable() ? kYes : kNo, witness);
}

Report do_nash(const Options& o) {
  Command c("nash", o);
  const Game g = c.load();
  const PrefKind kind = pref_kind(o);
  const Profile p = parse_profile(o.profile, g);
  c.inputs()["profile"] = profile_json(g, p);
  c.inputs()["pref"] = to_string(kind);
  c.text() << "profile: " << format_profile(g, p) << "\n";
  c.annotate(g, outcome(p));
  const bool nash = is_nash(c.session(), g, p, kind);
  c.text() << "verdict: " << (nash ? "Nash equilibrium" : "not a Nash equilibrium") << " (" << to_string(kind)
           << ")\n";
  std::optional<Json> witness;
  if (!nash) {
    if (auto d = find_deviation(c.session(), g, p, kind)) {
      const std::string& id = g.player(d->player).id;
      c.text() << "deviation: player " << id << " plays " << d->contribution.to_string() << "\n";
      witness = Json{{"player", id}, {"contribution", bag_json(d->contribution)}};
    }
  }
  return c.finish(nash, nash ? kYes : kNo, witness);
}

Report do_equilibria(const Options& o) {
  Command c("equilibria", o);
  const Game g = c.load();
  const PrefKind kind = pref_kind(o);
  c.inputs()["pref"] = to_string(kind);
  const auto profiles = all_profiles(g, c.session().caps());
  const auto equilibria = all_equilibria(c.session(), g, kind);
  Json table = Json::array();
  for (const auto& p : profiles) {
    const bool nash = std::find(equilibria.begin(), equilibria.end(), p) != equilibria.end();
    const ResourceBag out = outcome(p);
    const auto sat = satisfied_ids(c.session(), g, out);
    c.text() << (nash ? "[NE] " : "[  ] ") << format_profile(g, p) << "  => " << out.to_string()
             << "  satisfied: " << join_ids(sat) << "\n";
    table.push_back({{"profile", profile_json(g, p)}, {"outcome", bag_json(out)}, {"satisfied", sat}, {"nash", nash}});
  }
  c.text() << equilibria.size() << " of " << profiles.size() << " profiles are Nash equilibria (" << to_string(kind)
           << ")\n";
  return c.finish(table, equilibria.empty() ? kNo : kYes);
}

Report do_eliminate(const Options& o) {
  Command c("eliminate", o);
  const Game g = c.load();
  const PrefKind kind = pref_kind(o);
  const Profile p = parse_profile(o.profile, g);
  c.inputs()["profile"] = profile_json(g, p);
  c.inputs()["pref"] = to_string(kind);
  c.text() << "profile: " << format_profile(g, p) << "\n";
  c.annotate(g, outcome(p));
  const Elimination e = eliminate(c.session(), g, p, kind);
  c.text() << "verdict: " << (e.eliminable ? "rationally eliminable" : "not rationally eliminable") << " ("
           << to_string(kind) << ")\n";
  std::optional<Json> witness;
  if (e.eliminable) {
    const Endowment red = concentrate(g.endowments(), *e.player);
    const std::string& id = g.player(*e.player).id;
    c.text() << "redistribution: everything to " << id << ": " << format_endowment(g, red) << "\n";
    c.text() << "deviation: player " << id << " plays " << e.deviation->to_string() << "\n";
    witness = Json{{"redistribution", profile_json(g, Profile(red))},
                   {"player", id},
                   {"deviation", bag_json(*e.deviation)}};
  }
  return c.finish(e.eliminable, e.eliminable ? kYes : kNo, witness);
}

Report do_construct(const Options& o) {
  Command c("construct", o);
  const Game g = c.load();
  const PrefKind kind = pref_kind(o);
  const Profile p = parse_profile(o.profile, g);
  c.inputs()["profile"] = profile_json(g, p);
  c.inputs()["pref"] = to_string(kind);
  c.text() << "profile: " << format_profile(g, p) << "\n";
  c.annotate(g, outcome(p));
  const Construction r = rationally_constructible(c.session(), g, p, kind);
  c.text() << "verdict: " << (r.constructible ? "rationally constructible" : "not rationally constructible") << " ("
           << to_string(kind) << ")\n";
  std::optional<Json> witness;
  if (r.constructible) {
    c.text() << "redistribution: " << format_endowment(g, *r.redistribution) << "\n";
    c.text() << "equilibrium: " << format_profile(g, *r.profile) << "\n";
    witness = Json{{"redistribution", profile_json(g, Profile(*r.redistribution))},
                   {"profile", profile_json(g, *r.profile)}};
  }
  return c.finish(r.constructible, r.constructible ? kYes : kNo, witness);
}

Coalition parse_coalition(const Game& g, const std::string& text) {
  Coalition c;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    auto idx = g.index_of(item);
    if (!idx) throw InvalidInput("unknown player '" + item + "' in coalition");
    c = c.with(*idx);
  }
  return c;
}

PayoffVector parse_payoffs(const std::string& text) {
  PayoffVector p;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      p.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("invalid payoff '" + item + "'");
    }
  }
  return p;
}

Json ids_json(const Game& g, const std::vector<PlayerIndex>& players) {
  Json arr = Json::array();
  for (auto i : players) arr.push_back(g.player(i).id);
  return arr;
}

std::string ids_text(const Game& g, const std::vector<PlayerIndex>& players) {
  std::vector<std::string> ids;
  for (auto i : players) ids.push_back(g.player(i).id);
  return ids.empty() ? "none" : join_ids(ids);
}

Report do_coop(const Options& o) {
  Command c("coop", o);
  const Game g = c.load();
  const CoalitionGame cg{g, o.model == "mnigcrg" ? CoalitionModel::mnigcrg : CoalitionModel::aigcrg};
  c.inputs()["model"] = to_string(cg.model);
  c.text() << "model: " << to_string(cg.model) << "\n";
  Session& s = c.session();

  if (!o.coalition.empty()) {
    const Coalition coal = parse_coalition(g, o.coalition);
    c.inputs()["coalition"] = o.coalition;
    const std::size_t v = value(s, cg, coal);
    Json sets = Json::array();
    c.text() << "coalition: " << format_coalition(g, coal) << "\n";
    c.text() << "value: " << v << "\n";
    c.text() << "performable goal sets:\n";
    for (const auto& gs : goal_sets(s, cg, coal)) {
      c.text() << "  " << gs.to_string() << "\n";
      sets.push_back(bag_json(gs));
    }
    return c.finish(v, v > 0 ? kYes : kNo, Json{{"goal_sets", sets}});
  }
  if (o.veto) {
    const auto veto = veto_players(s, cg);
    c.text() << "veto players: " << ids_text(g, veto) << "\n";
    return c.finish(ids_json(g, veto), veto.empty() ? kNo : kYes);
  }
  if (o.dummy) {
    const auto dummy = dummy_players(s, cg);
    c.text() << "dummy players: " << ids_text(g, dummy) << "\n";
    return c.finish(ids_json(g, dummy), dummy.empty() ? kNo : kYes);
  }
  if (!o.core.empty()) {
    const PayoffVector p = parse_payoffs(o.core);
    c.inputs()["payoffs"] = p;
    const bool core = in_core(s, cg, p);
    c.text() << "payoffs: " << o.core << "\n";
    c.text() << "verdict: " << (core ? "in the core" : "not in the core") << "\n";
    return c.finish(core, core ? kYes : kNo);
  }
  const auto table = value_table(s, cg);
  Json rows = Json::array();
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    const Coalition coal(static_cast<std::uint32_t>(mask));
    c.text() << format_coalition(g, coal) << "  " << table[mask] << "\n";
    Json members = Json::array();
    for (auto i : coal.members()) members.push_back(g.player(i).id);
    rows.push_back({{"coalition", members}, {"value", table[mask]}});
  }
  return c.finish(rows, kYes);
}

Report do_validate(const Options& o) {
  Command c("validate", o);
  const Game g = c.load();
  for (const auto& p : g.players())
    c.text() << "player " << p.id << "  goal: " << p.goal.text() << "  endow: " << p.endowment.to_string() << "\n";
  const ResourceBag pool = g.pool();
  const std::uint64_t profiles = profile_count(g);
  const std::uint64_t redistributions = redistribution_count(g.endowments());
  c.text() << "pool: " << pool.to_string() << " (size " << pool.size() << ")\n";
  c.text() << "profiles: " << profiles << "\n";
  c.text() << "redistributions: " << redistributions << "\n";
  Json players = Json::array();
  for (const auto& p : g.players())
    players.push_back({{"id", p.id}, {"goal", p.goal.text()}, {"endowment", bag_json(p.endowment)}});
  return c.finish(true, kYes,
                  Json{{"players", players},
                       {"pool", bag_json(pool)},
                       {"pool_size", pool.size()},
                       {"profiles", profiles},
                       {"redistributions", redistributions}});
}

void add_common(CLI::App* sub, Options& o, bool game_command) {
  sub->add_option("--mode", o.mode, "linear or affine (default linear)")->check(CLI::IsMember({"linear", "affine"}));
  sub->add_option("--fragment", o.fragment, "mll or mall (default mall)")->check(CLI::IsMember({"mll", "mall"}));
  sub->add_flag("--json", o.json, "print one JSON document");
  sub->add_flag("--trace", o.trace, "print the proof tree (prove)");
  sub->add_option("--prover-budget-ms", o.budget_ms, "wall-clock budget per proof search")
      ->check(CLI::NonNegativeNumber);
  if (!game_command) return;
  sub->add_option("--pref", o.pref, "dichotomous or parsimonious")
      ->check(CLI::IsMember({"dichotomous", "parsimonious"}));
  sub->add_option("--jobs", o.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
  sub->add_option("--limit-pool", o.limit_pool, "largest pool to enumerate")->capture_default_str();
  sub->add_option("--limit-profiles", o.limit_profiles, "largest profile space to enumerate")
      ->capture_default_str();
}

}  // namespace

Report run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Decide provability, equilibria, elimination, construction and coalition values for resource games.",
               "resgame"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);

  auto* prove = app.add_subcommand("prove", "decide a sequent \"A, B |- C\"");
  prove->add_option("sequent", o.sequent, "sequent to decide")->required();
  add_common(prove, o, false);

  struct GameCmd {
    const char* name;
    const char* help;
    bool profile;
  };
  const GameCmd game_cmds[] = {
      {"nash", "is the profile a Nash equilibrium", true},
      {"equilibria", "list every profile, marking the equilibria", false},
      {"eliminate", "is the profile rationally eliminable", true},
      {"construct", "is the profile's outcome rationally constructible", true},
      {"coop", "coalition values, veto and dummy players, core membership", false},
      {"validate", "load a game file and summarize it", false},
  };
  for (const auto& gc : game_cmds) {
    auto* sub = app.add_subcommand(gc.name, gc.help);
    sub->add_option("game", o.path, "game file")->required();
    if (gc.profile) sub->add_option("--profile", o.profile, "profile literal, e.g. \"ann: aclock; bob:\"")->required();
    add_common(sub, o, true);
    if (std::string(gc.name) == "coop") {
      sub->add_option("--model", o.model, "aigcrg or mnigcrg")->check(CLI::IsMember({"aigcrg", "mnigcrg"}));
      auto* coal = sub->add_option("--coalition", o.coalition, "comma-separated player ids");
      auto* table = sub->add_flag("--table", o.table, "value of every coalition (default)");
      auto* veto = sub->add_flag("--veto", o.veto, "veto players (aigcrg)");
      auto* dummy = sub->add_flag("--dummy", o.dummy, "dummy players");
      auto* core = sub->add_option("--core", o.core, "payoff vector \"0,1,0\" to test for the core (aigcrg)");
      for (auto* a : {coal, table, veto, dummy, core})
        for (auto* b : {coal, table, veto, dummy, core})
          if (a != b) a->excludes(b);
    }
  }

  Report r;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    r.out = out.str();
    r.err = err.str();
    r.exit_code = code == 0 ? kYes : kUsage;
    return r;
  }

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "prove") return do_prove(o);
    if (cmd == "nash") return do_nash(o);
    if (cmd == "equilibria") return do_equilibria(o);
    if (cmd == "eliminate") return do_eliminate(o);
    if (cmd == "construct") return do_construct(o);
    if (cmd == "coop") return do_coop(o);
    return do_validate(o);
  } catch (const CapExceeded& e) {
    r.err = std::string("error: ") + e.what() + "\n";
    r.exit_code = kExhausted;
  } catch (const BudgetExhausted& e) {
    r.err = std::string("error: ") + e.what() + "\n";
    r.exit_code = kExhausted;
  } catch (const Error& e) {
    r.err = std::string("error: ") + e.what() + "\n";
    r.exit_code = kUsage;
  }
  return r;
}

}  // namespace resgame::cli
