#include "agmloop/finite_models.hpp"

#include <string>

#include "agmloop/errors.hpp"

namespace agmloop {

namespace {

bool row_is_permutation(const std::vector<std::uint8_t>& t, int n, int row) {
  unsigned seen = 0;
  for (int j = 0; j < n; ++j) seen |= 1u << t[static_cast<std::size_t>(row * n + j)];
  return seen == (1u << n) - 1;
}

void check_order(int order) {
  if (order < 1) throw DomainError("model order must be at least 1");
  if (order > kMaxModelOrder) {
    throw OrderTooLarge("model order " + std::to_string(order) + " exceeds the cap of " +
                        std::to_string(kMaxModelOrder));
  }
}

}  // namespace

std::vector<std::string> FiniteMagma::violations(int order, const std::vector<std::uint8_t>& t) {
  std::vector<std::string> out;
  const int n = order;
  if (n < 1 || n > kMaxModelOrder) return {"order out of range"};
  if (t.size() != static_cast<std::size_t>(n * n)) return {"table size is not order^2"};
  auto at = [&](int i, int j) { return static_cast<int>(t[static_cast<std::size_t>(i * n + j)]); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (at(i, j) >= n) return {"entry out of range"};
    }
  }
  for (int i = 0; i < n; ++i) {
    if (at(0, i) != i || at(i, 0) != i) {
      out.emplace_back("identity");
      break;
    }
  }
  bool symmetric = true;
  for (int i = 0; i < n && symmetric; ++i) {
    for (int j = 0; j < n; ++j) symmetric = symmetric && at(i, j) == at(j, i);
  }
  if (!symmetric) out.emplace_back("commutativity");
  bool latin = true;
  for (int i = 0; i < n; ++i) latin = latin && row_is_permutation(t, n, i);
  for (int j = 0; j < n && latin; ++j) {
    unsigned seen = 0;
    for (int i = 0; i < n; ++i) seen |= 1u << at(i, j);
    latin = seen == (1u << n) - 1;
  }
  if (!latin) out.emplace_back("cancellation");
  unsigned squares = 0;
  for (int i = 0; i < n; ++i) squares |= 1u << at(i, i);
  if (squares != (1u << n) - 1) out.emplace_back("squaring bijection");
  return out;
}

FiniteMagma::FiniteMagma(int order, std::vector<std::uint8_t> table)
    : order_(order), table_(std::move(table)) {
  const auto bad = violations(order_, table_);
  if (!bad.empty()) throw DomainError("invalid finite magma: violates " + bad.front());
}

FiniteMagma cyclic_group(int order) {
  check_order(order);
  std::vector<std::uint8_t> t(static_cast<std::size_t>(order * order));
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      t[static_cast<std::size_t>(i * order + j)] = static_cast<std::uint8_t>((i + j) % order);
    }
  }
  return FiniteMagma(order, std::move(t));
}

MeanTable derive_mean(const FiniteMagma& g) {
  const int n = g.order();
  std::vector<int> root(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) root[static_cast<std::size_t>(g.op(s, s))] = s;
  MeanTable m;
  m.order_ = n;
  m.table_.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m.table_[static_cast<std::size_t>(i * n + j)] =
          static_cast<std::uint8_t>(root[static_cast<std::size_t>(g.op(i, j))]);
    }
  }
  return m;
}

std::vector<std::string> MeanTable::violations(const FiniteMagma& g) const {
  std::vector<std::string> out;
  const int n = order_;
  if (n != g.order()) return {"order mismatch"};
  bool m1 = true, m2 = true, m3 = true, m4 = true;
  for (int i = 0; i < n; ++i) {
    m1 = m1 && mean(i, i) == i;
    m3 = m3 && row_is_permutation(table_, n, i);
    for (int j = 0; j < n; ++j) {
      m2 = m2 && mean(i, j) == mean(j, i);
      const int s = mean(i, j);
      m4 = m4 && g.op(s, s) == g.op(i, j);
    }
  }
  if (!m1) out.emplace_back("M1");
  if (!m2) out.emplace_back("M2");
  if (!m3) out.emplace_back("M3");
  if (!m4) out.emplace_back("M4");
  return out;
}

LawFlags law_flags(const FiniteMagma& g, const MeanTable& m) {
  const int n = g.order();
  LawFlags f{true, true, true, true};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const int xy = g.op(x, y);
        if (g.op(xy, z) != g.op(x, g.op(y, z))) f.associative = false;
        if (g.op(xy, g.op(x, z)) != g.op(g.op(x, x), g.op(y, z))) f.moufang = false;
        if (m.mean(x, m.mean(y, z)) != m.mean(m.mean(x, y), m.mean(x, z))) f.selfdist = false;
        for (int u = 0; u < n; ++u) {
          if (m.mean(m.mean(x, y), m.mean(z, u)) != m.mean(m.mean(x, z), m.mean(y, u))) {
            f.medial = false;
          }
        }
      }
    }
  }
  return f;
}

Enumeration enumerate(int order, std::size_t budget) {
  check_order(order);
  const int n = order;
  Enumeration result;
  result.order = n;

  std::vector<std::uint8_t> t(static_cast<std::size_t>(n * n), 0);
  std::vector<unsigned> used(static_cast<std::size_t>(n), 0);  // row i == column i by symmetry
  unsigned diagonal = 0;
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i * n)] = static_cast<std::uint8_t>(i);
    used[0] |= 1u << i;
    used[static_cast<std::size_t>(i)] |= 1u << i;
  }
  diagonal |= 1u;  // 0 * 0 = 0

  // Free cells of the upper triangle in row-major order.
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);
  }

  auto place = [&](auto&& self, std::size_t k) -> bool {
    if (k == cells.size()) {
      if (result.structures.size() == budget) {
        result.budget_exhausted = true;
        return false;
      }
      result.structures.emplace_back(n, t);
      return true;
    }
    const auto [i, j] = cells[k];
    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    for (int v = 0; v < n; ++v) {
      const unsigned bit = 1u << v;
      if ((used[ui] & bit) || (used[uj] & bit)) continue;
      if (i == j && (diagonal & bit)) continue;
      t[ui * n + uj] = t[uj * n + ui] = static_cast<std::uint8_t>(v);
      used[ui] |= bit;
      used[uj] |= bit;
      if (i == j) diagonal |= bit;
      const bool more = self(self, k + 1);
      used[ui] &= ~bit;
      if (i != j) used[uj] &= ~bit;
      if (i == j) diagonal &= ~bit;
      if (!more) return false;
    }
    return true;
  };
  place(place, 0);
  return result;
}

std::string to_string(const LawFlags& f) {
  auto b = [](bool v) { return v ? "1" : "0"; };
  return std::string("associative=") + b(f.associative) + ",medial=" + b(f.medial) +
         ",moufang=" + b(f.moufang) + ",selfdist=" + b(f.selfdist);
}

EquivalenceReport theorem_equivalence_check(int order, std::size_t budget) {
  const Enumeration e = enumerate(order, budget);
  EquivalenceReport r;
  r.order = order;
  r.structures = e.structures.size();
  r.budget_exhausted = e.budget_exhausted;
  const bool odd = order % 2 == 1;
  for (const auto& g : e.structures) {
    const MeanTable m = derive_mean(g);
    if (!FiniteMagma::violations(g.order(), g.table()).empty() || !m.violations(g).empty()) {
      ++r.invariant_failures;
    }
    const LawFlags f = law_flags(g, m);
    ++r.combinations[to_string(f)];
    if (f.medial != f.associative) ++r.medial_violations;
    if (f.selfdist != f.moufang) ++r.moufang_violations;
    if (odd && g == cyclic_group(order)) r.contains_cyclic_group = true;
  }
  return r;
}

}  // namespace agmloop
