#include "oracles.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace resgame::oracle {

namespace {

std::size_t nodes(const ResourceBag& b) {
  std::size_t n = 0;
  for (const auto& [f, m] : b) n += m * f.size();
  return n;
}

ResourceBag with(ResourceBag b, const Formula& f) {
  b.add(f);
  return b;
}

ResourceBag minus(ResourceBag b, const Formula& f) {
  b.remove(f);
  return b;
}

class Smallcheck {
 public:
  explicit Smallcheck(bool affine) : affine_(affine) {}

  bool derivable(const ResourceBag& l, const ResourceBag& r) {
    const std::string key = l.to_string() + " |- " + r.to_string();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool v = search(l, r);
    memo_[key] = v;
    return v;
  }

 private:
  // Every sub-bag x of b paired with b - x.
  static std::vector<std::pair<ResourceBag, ResourceBag>> splits(const ResourceBag& b) {
    std::vector<std::pair<ResourceBag, ResourceBag>> out;
    for (auto& x : multisubsets(b)) out.emplace_back(x, b - x);
    return out;
  }

  bool search(const ResourceBag& l, const ResourceBag& r) {
    if (l.size() == 1 && r.size() == 1 && l == r) return true;
    if (l.empty() && r.size() == 1 && r.contains(Formula::one())) return true;
    if (r.contains(Formula::top())) return true;

    if (affine_) {
      for (const auto& f : l.support())
        if (derivable(minus(l, f), r)) return true;
      for (const auto& f : r.support())
        if (derivable(l, minus(r, f))) return true;
    }

    for (const auto& f : l.support()) {
      const ResourceBag rest = minus(l, f);
      switch (f.kind()) {
        case Connective::one:
          if (derivable(rest, r)) return true;
          break;
        case Connective::neg:
          if (derivable(rest, with(r, f.operand()))) return true;
          break;
        case Connective::tensor:
          if (derivable(with(with(rest, f.left()), f.right()), r)) return true;
          break;
        case Connective::with:
          if (derivable(with(rest, f.left()), r) || derivable(with(rest, f.right()), r)) return true;
          break;
        case Connective::plus:
          if (derivable(with(rest, f.left()), r) && derivable(with(rest, f.right()), r)) return true;
          break;
        case Connective::lollipop:
          for (const auto& [l1, l2] : splits(rest))
            for (const auto& [r1, r2] : splits(r))
              if (derivable(l1, with(r1, f.left())) && derivable(with(l2, f.right()), r2)) return true;
          break;
        default: break;
      }
    }
    for (const auto& f : r.support()) {
      const ResourceBag rest = minus(r, f);
      switch (f.kind()) {
        case Connective::neg:
          if (derivable(with(l, f.operand()), rest)) return true;
          break;
        case Connective::tensor:
          for (const auto& [l1, l2] : splits(l))
            for (const auto& [r1, r2] : splits(rest))
              if (derivable(l1, with(r1, f.left())) && derivable(l2, with(r2, f.right()))) return true;
          break;
        case Connective::with:
          if (derivable(l, with(rest, f.left())) && derivable(l, with(rest, f.right()))) return true;
          break;
        case Connective::plus:
          if (derivable(l, with(rest, f.left())) || derivable(l, with(rest, f.right()))) return true;
          break;
        case Connective::lollipop:
          if (derivable(with(l, f.left()), with(rest, f.right()))) return true;
          break;
        default: break;
      }
    }
    return false;
  }

  bool affine_;
  std::map<std::string, bool> memo_;
};

ResourceBag out_of(const Profile& p) {
  ResourceBag out;
  for (const auto& c : p.contributions()) out += c;
  return out;
}

bool holds(const Game& g, const ResourceBag& out, PlayerIndex i) {
  return prove_smallcheck({out, ResourceBag{g.goal(i)}}, g.mode());
}

// q ≺_i p, written out clause by clause.
bool strictly_prefers(const Game& g, PlayerIndex i, const Profile& p, const Profile& q, PrefKind kind) {
  const bool sp = holds(g, out_of(p), i);
  const bool sq = holds(g, out_of(q), i);
  if (kind == PrefKind::dichotomous) return sp && !sq;
  const bool smaller = p[i].size() < q[i].size() && subbag(p[i], q[i]);
  const bool clause1 = !sp && !sq && smaller;
  const bool clause2 = sp && !sq;
  const bool clause3 = sp && sq && smaller;
  return clause1 || clause2 || clause3;
}

void check_tiny(const Game& g) {
  if (g.size() > kMaxPlayers || g.pool().size() > kMaxPool)
    throw std::invalid_argument("instance too large for the oracle");
}

std::vector<Profile> profiles_with_outcome(const Game& g, const ResourceBag& target) {
  std::vector<Profile> out;
  std::vector<std::vector<ResourceBag>> choices;
  for (PlayerIndex i = 0; i < g.size(); ++i) choices.push_back(multisubsets(g.endowment(i)));
  std::vector<ResourceBag> cur;
  auto rec = [&](auto&& self, PlayerIndex i) -> void {
    if (i == g.size()) {
      Profile p(cur);
      if (out_of(p) == target) out.push_back(p);
      return;
    }
    for (const auto& c : choices[i]) {
      cur.push_back(c);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

bool prove_smallcheck(const Sequent& s, LogicMode mode) {
  if (nodes(s.left) + nodes(s.right) > kMaxSequentNodes)
    throw std::invalid_argument("sequent too large for the oracle: " + s.to_string());
  Smallcheck sc(mode.affine());
  return sc.derivable(s.left, s.right);
}

bool is_nash(const Game& g, const Profile& p, PrefKind kind) {
  check_tiny(g);
  for (PlayerIndex i = 0; i < g.size(); ++i)
    for (const auto& c : multisubsets(g.endowment(i)))
      if (strictly_prefers(g, i, p.replaced(i, c), p, kind)) return false;
  return true;
}

std::vector<Endowment> all_redistributions(const Endowment& e) {
  std::vector<Formula> items;
  for (const auto& b : e)
    for (const auto& f : b.elements()) items.push_back(f);
  std::set<Endowment> seen;
  std::vector<std::size_t> owner(items.size(), 0);
  while (true) {
    Endowment next(e.size());
    for (std::size_t k = 0; k < items.size(); ++k) next[owner[k]].add(items[k]);
    seen.insert(next);
    std::size_t k = 0;
    while (k < items.size() && owner[k] + 1 == e.size()) owner[k++] = 0;
    if (k == items.size()) break;
    ++owner[k];
  }
  return {seen.begin(), seen.end()};
}

bool eliminable(const Game& g, const Profile& p, PrefKind kind) {
  check_tiny(g);
  const ResourceBag target = out_of(p);
  for (const auto& e : all_redistributions(g.endowments())) {
    const Game h = g.redistributed(e);
    bool survives = false;
    for (const auto& q : profiles_with_outcome(h, target))
      if (is_nash(h, q, kind)) {
        survives = true;
        break;
      }
    if (!survives) return true;
  }
  return false;
}

bool constructible(const Game& g, const Profile& p, PrefKind kind) {
  check_tiny(g);
  const ResourceBag target = out_of(p);
  for (const auto& e : all_redistributions(g.endowments())) {
    const Game h = g.redistributed(e);
    for (const auto& q : profiles_with_outcome(h, target))
      if (is_nash(h, q, kind)) return true;
  }
  return false;
}

std::string OracleReport::describe() const {
  return instance + ": optimized=" + (optimized ? "true" : "false") + " oracle=" + (oracle ? "true" : "false");
}

}  // namespace resgame::oracle
