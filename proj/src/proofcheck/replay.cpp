#include "agmloop/proofcheck/replay.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "agmloop/errors.hpp"

namespace agmloop::proofcheck {

namespace {

// Terms are flattened in prefix order. Tags >= 0 are variables; negative tags are symbols.
using Flat = std::vector<int>;

constexpr int kStar = -1;
constexpr int kMean = -2;
constexpr int kFirstConstant = -3;
// Target variables are frozen into distinct constants below this tag for one-way matching.
constexpr int kRigidBase = -100000;

int arity(int tag) { return tag == kStar || tag == kMean ? 2 : 0; }

std::size_t end_of(const Flat& t, std::size_t i) {
  int need = 1;
  while (need > 0) {
    need += arity(t[i]) - 1;
    ++i;
  }
  return i;
}

struct Lit {
  bool positive = true;
  Flat lhs;
  Flat rhs;

  friend bool operator==(const Lit&, const Lit&) = default;
};

// An empty clause is the contradiction.
using Clause = std::vector<Lit>;

class Interner {
 public:
  int constant(const std::string& name) {
    // e and 1 both denote the identity.
    const std::string key = name == "1" ? "e" : name;
    auto [it, inserted] = tags_.emplace(key, kFirstConstant - static_cast<int>(tags_.size()));
    return it->second;
  }

 private:
  std::map<std::string, int> tags_;
};

void encode(const Term& t, std::map<std::string, int>& vars, Interner& in, Flat& out) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto [it, inserted] = vars.emplace(t.name(), static_cast<int>(vars.size()));
      out.push_back(it->second);
      return;
    }
    case Term::Kind::Constant: out.push_back(in.constant(t.name())); return;
    case Term::Kind::Apply: break;
  }
  out.push_back(t.symbol() == Symbol::Star ? kStar : kMean);
  encode(t.left(), vars, in, out);
  encode(t.right(), vars, in, out);
}

Clause encode(const ProofStep& s, Interner& in) {
  std::map<std::string, int> vars;
  Clause c;
  for (const auto& l : s.literals) {
    if (l.kind == Literal::Kind::Contradiction) continue;
    Lit lit;
    lit.positive = l.kind == Literal::Kind::Equation;
    encode(l.lhs, vars, in, lit.lhs);
    encode(l.rhs, vars, in, lit.rhs);
    c.push_back(std::move(lit));
  }
  return c;
}

int max_var(const Clause& c) {
  int m = -1;
  for (const auto& l : c) {
    for (int tag : l.lhs) m = std::max(m, tag);
    for (int tag : l.rhs) m = std::max(m, tag);
  }
  return m;
}

std::size_t size_of(const Clause& c) {
  std::size_t n = 0;
  for (const auto& l : c) n += l.lhs.size() + l.rhs.size();
  return n;
}

Clause shift(Clause c, int offset) {
  for (auto& l : c) {
    for (int& tag : l.lhs) tag += tag >= 0 ? offset : 0;
    for (int& tag : l.rhs) tag += tag >= 0 ? offset : 0;
  }
  return c;
}

// Renumbers variables by first occurrence.
Clause normalize(Clause c) {
  std::unordered_map<int, int> map;
  auto fix = [&](Flat& t) {
    for (int& tag : t) {
      if (tag < 0) continue;
      auto [it, inserted] = map.emplace(tag, static_cast<int>(map.size()));
      tag = it->second;
    }
  };
  for (auto& l : c) {
    fix(l.lhs);
    fix(l.rhs);
  }
  return c;
}

class Subst {
 public:
  explicit Subst(int vars) : bind_(static_cast<std::size_t>(std::max(vars, 0))), bound_(bind_.size(), 0) {}

  bool bound(int v) const { return bound_[static_cast<std::size_t>(v)] != 0; }
  const Flat& get(int v) const { return bind_[static_cast<std::size_t>(v)]; }

  bool unify(const Flat& a, std::size_t i, const Flat& b, std::size_t j) {
    if (a[i] >= 0 && bound(a[i])) return unify(get(a[i]), 0, b, j);
    if (b[j] >= 0 && bound(b[j])) return unify(a, i, get(b[j]), 0);
    if (a[i] >= 0) return bind_var(a[i], b, j);
    if (b[j] >= 0) return bind_var(b[j], a, i);
    if (a[i] != b[j]) return false;
    if (arity(a[i]) == 0) return true;
    const std::size_t ai = i + 1, bj = j + 1;
    if (!unify(a, ai, b, bj)) return false;
    return unify(a, end_of(a, ai), b, end_of(b, bj));
  }

  void apply(const Flat& t, std::size_t from, std::size_t to, Flat& out) const {
    for (std::size_t k = from; k < to; ++k) {
      const int tag = t[k];
      if (tag >= 0 && bound(tag)) {
        apply(get(tag), 0, get(tag).size(), out);
      } else {
        out.push_back(tag);
      }
    }
  }

  Flat apply(const Flat& t) const {
    Flat out;
    out.reserve(t.size());
    apply(t, 0, t.size(), out);
    return out;
  }

 private:
  bool occurs(int v, const Flat& t, std::size_t from, std::size_t to) const {
    for (std::size_t k = from; k < to; ++k) {
      const int tag = t[k];
      if (tag == v) return true;
      if (tag >= 0 && bound(tag) && occurs(v, get(tag), 0, get(tag).size())) return true;
    }
    return false;
  }

  bool bind_var(int v, const Flat& t, std::size_t j) {
    if (t[j] == v) return true;
    const std::size_t e = end_of(t, j);
    if (occurs(v, t, j, e)) return false;
    bind_[static_cast<std::size_t>(v)].assign(t.begin() + static_cast<std::ptrdiff_t>(j),
                                              t.begin() + static_cast<std::ptrdiff_t>(e));
    bound_[static_cast<std::size_t>(v)] = 1;
    return true;
  }

  std::vector<Flat> bind_;
  std::vector<char> bound_;
};

Clause apply_all(const Clause& c, const Subst& s, std::size_t skip = static_cast<std::size_t>(-1)) {
  Clause out;
  out.reserve(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k == skip) continue;
    out.push_back({c[k].positive, s.apply(c[k].lhs), s.apply(c[k].rhs)});
  }
  return out;
}

std::string key_of(const Clause& c) {
  std::string k;
  for (const auto& l : c) {
    k += l.positive ? '+' : '-';
    for (int tag : l.lhs) k += static_cast<char>(tag + 64);
    k += '=';
    for (int tag : l.rhs) k += static_cast<char>(tag + 64);
    k += ';';
  }
  return k;
}

bool is_unit_equation(const Clause& c) { return c.size() == 1 && c[0].positive; }

class Search {
 public:
  Search(std::vector<Clause> parents, Clause target, std::size_t budget)
      : parents_(std::move(parents)), target_(std::move(target)), budget_(budget) {
    std::size_t largest = size_of(target_);
    for (const auto& p : parents_) largest = std::max(largest, size_of(p));
    size_limit_ = 2 * largest + 4;
    // Freeze the target's variables.
    for (auto& l : target_) {
      for (int& tag : l.lhs) tag = tag >= 0 ? kRigidBase - tag : tag;
      for (int& tag : l.rhs) tag = tag >= 0 ? kRigidBase - tag : tag;
    }
  }

  ReplayResult run() {
    ReplayResult r;
    try {
      for (int depth = 0; depth <= kMaxReplayDepth; ++depth) {
        for (const auto& start : parents_) {
          if (dfs(start, depth)) {
            r.status = ReplayStatus::Verified;
            r.depth = depth;
            r.expansions = expansions_;
            return r;
          }
        }
      }
    } catch (const BudgetExhausted&) {
      r.budget_exhausted = true;
    }
    r.expansions = expansions_;
    return r;
  }

 private:
  struct BudgetExhausted {};

  bool dfs(const Clause& state, int remaining) {
    if (subsumes(state)) return true;
    if (remaining == 0) return false;
    const std::string key = key_of(state);
    auto it = seen_.find(key);
    if (it != seen_.end() && it->second >= remaining) return false;
    seen_[key] = remaining;
    if (++expansions_ > budget_) throw BudgetExhausted{};
    for (const auto& child : children(state)) {
      if (dfs(child, remaining - 1)) return true;
    }
    return false;
  }

  // --- goal test --------------------------------------------------------------------------

  bool subsumes(const Clause& s) const {
    if (s.empty()) return target_.empty();
    if (s.size() > target_.size()) return false;
    std::vector<char> used(target_.size(), 0);
    return match_literals(s, 0, used, Subst(max_var(s) + 1));
  }

  bool match_literals(const Clause& s, std::size_t k, std::vector<char>& used, const Subst& sub) const {
    if (k == s.size()) return true;
    for (std::size_t j = 0; j < target_.size(); ++j) {
      if (used[j] || target_[j].positive != s[k].positive) continue;
      for (int flip = 0; flip < 2; ++flip) {
        Subst trial = sub;
        const Flat& tl = flip ? target_[j].rhs : target_[j].lhs;
        const Flat& tr = flip ? target_[j].lhs : target_[j].rhs;
        if (trial.unify(s[k].lhs, 0, tl, 0) && trial.unify(s[k].rhs, 0, tr, 0)) {
          used[j] = 1;
          if (match_literals(s, k + 1, used, trial)) return true;
          used[j] = 0;
        }
      }
    }
    return false;
  }

  // --- inferences --------------------------------------------------------------------------

  void emit(Clause c, std::vector<Clause>& out) const {
    Clause tidy;
    for (auto& l : c) {
      if (l.positive && l.lhs == l.rhs) return;  // tautology
      const bool dup = std::any_of(tidy.begin(), tidy.end(), [&](const Lit& m) {
        return m.positive == l.positive &&
               ((m.lhs == l.lhs && m.rhs == l.rhs) || (m.lhs == l.rhs && m.rhs == l.lhs));
      });
      if (!dup) tidy.push_back(std::move(l));
    }
    if (size_of(tidy) > size_limit_) return;
    out.push_back(normalize(std::move(tidy)));
  }

  // Rewrites `into` with the unit equation `eq` (oriented lhs -> rhs and rhs -> lhs) at every
  // non-variable position, unifying the position with the rewritten side.
  void paramodulate(const Clause& eq, const Clause& into, std::vector<Clause>& out) const {
    const int offset = max_var(into) + 1;
    const Clause from = shift(eq, offset);
    const int vars = std::max(max_var(from), max_var(into)) + 1;
    for (int orient = 0; orient < 2; ++orient) {
      const Flat& l = orient ? from[0].rhs : from[0].lhs;
      const Flat& r = orient ? from[0].lhs : from[0].rhs;
      if (l[0] >= 0) continue;
      for (std::size_t li = 0; li < into.size(); ++li) {
        for (int side = 0; side < 2; ++side) {
          const Flat& t = side ? into[li].rhs : into[li].lhs;
          for (std::size_t p = 0; p < t.size(); ++p) {
            if (t[p] >= 0) continue;
            Subst s(vars);
            if (!s.unify(t, p, l, 0)) continue;
            Flat replaced(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(p));
            replaced.insert(replaced.end(), r.begin(), r.end());
            replaced.insert(replaced.end(), t.begin() + static_cast<std::ptrdiff_t>(end_of(t, p)), t.end());
            Clause c = into;
            (side ? c[li].rhs : c[li].lhs) = std::move(replaced);
            emit(apply_all(c, s), out);
          }
        }
      }
    }
  }

  // Cancels a literal of `clause` against the unit `unit` of opposite polarity.
  void resolve(const Clause& unit, const Clause& clause, std::vector<Clause>& out) const {
    const int offset = max_var(clause) + 1;
    const Clause u = shift(unit, offset);
    const int vars = std::max(max_var(u), max_var(clause)) + 1;
    for (std::size_t k = 0; k < clause.size(); ++k) {
      if (clause[k].positive == u[0].positive) continue;
      for (int flip = 0; flip < 2; ++flip) {
        Subst s(vars);
        const Flat& ul = flip ? u[0].rhs : u[0].lhs;
        const Flat& ur = flip ? u[0].lhs : u[0].rhs;
        if (s.unify(clause[k].lhs, 0, ul, 0) && s.unify(clause[k].rhs, 0, ur, 0)) {
          emit(apply_all(clause, s, k), out);
        }
      }
    }
  }

  std::vector<Clause> children(const Clause& state) const {
    std::vector<Clause> out;
    for (const auto& p : parents_) {
      if (is_unit_equation(p)) paramodulate(p, state, out);
      if (is_unit_equation(state)) paramodulate(state, p, out);
      if (p.size() == 1) resolve(p, state, out);
      if (state.size() == 1 && p.size() > 1) resolve(state, p, out);
    }
    // Equality resolution.
    for (std::size_t k = 0; k < state.size(); ++k) {
      if (state[k].positive) continue;
      Subst s(max_var(state) + 1);
      if (s.unify(state[k].lhs, 0, state[k].rhs, 0)) emit(apply_all(state, s, k), out);
    }
    return out;
  }

  std::vector<Clause> parents_;
  Clause target_;
  std::size_t budget_;
  std::size_t size_limit_ = 0;
  std::size_t expansions_ = 0;
  std::unordered_map<std::string, int> seen_;
};

}  // namespace

ReplayResult replay_step(const ProofTrace& t, int id, std::size_t budget) {
  const ProofStep* step = t.find(id);
  if (!step) throw UnknownStep("step " + std::to_string(id) + " does not exist");
  if (step->is_input()) {
    throw UnknownStep("step " + std::to_string(id) + " is an input step; only derived steps replay");
  }
  Interner in;
  std::vector<int> ids = step->parents;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Clause> parents;
  for (int p : ids) {
    const ProofStep* ps = t.find(p);
    if (!ps || ps->is_contradiction()) continue;
    parents.push_back(normalize(encode(*ps, in)));
  }
  return Search(std::move(parents), normalize(encode(*step, in)), budget).run();
}

std::string_view to_string(ReplayStatus s) {
  return s == ReplayStatus::Verified ? "Verified" : "Unverified";
}

}  // namespace agmloop::proofcheck
