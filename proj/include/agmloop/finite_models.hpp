#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace agmloop {

inline constexpr int kMaxModelOrder = 6;

/// A commutative loop on {0..n-1} with identity 0 whose squaring map is a bijection.
///
/// These are exactly the finite structures satisfying M1-M6 (commutativity being a
/// consequence of the hypotheses, it is part of the invariant).
class FiniteMagma {
 public:
  /// Validates every invariant; throws DomainError on violation.
  FiniteMagma(int order, std::vector<std::uint8_t> table);

  int order() const noexcept { return order_; }
  int identity() const noexcept { return 0; }
  int op(int i, int j) const { return table_[static_cast<std::size_t>(i * order_ + j)]; }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  /// Names of every violated invariant; empty for a valid table.
  static std::vector<std::string> violations(int order, const std::vector<std::uint8_t>& table);

  friend bool operator==(const FiniteMagma&, const FiniteMagma&) = default;

 private:
  int order_;
  std::vector<std::uint8_t> table_;
};

/// Addition mod n. Valid for odd n only (squaring is bijective exactly then).
FiniteMagma cyclic_group(int order);

/// m(i, j) = the unique s with s * s = i * j.
class MeanTable {
 public:
  int order() const noexcept { return order_; }
  int mean(int i, int j) const { return table_[static_cast<std::size_t>(i * order_ + j)]; }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  /// Checks M1, M2, M3 (rows are permutations) and M4 against the source operation.
  std::vector<std::string> violations(const FiniteMagma& source) const;

 private:
  friend MeanTable derive_mean(const FiniteMagma& g);
  int order_ = 0;
  std::vector<std::uint8_t> table_;
};

MeanTable derive_mean(const FiniteMagma& g);

struct LawFlags {
  bool associative = false;
  bool medial = false;
  bool moufang = false;
  bool selfdist = false;

  friend bool operator==(const LawFlags&, const LawFlags&) = default;
};

/// Exhaustive check over all tuples. Moufang is (x*y)*(x*z) = (x*x)*(y*z); selfdist is
/// m(x, m(y,z)) = m(m(x,y), m(x,z)).
LawFlags law_flags(const FiniteMagma& g, const MeanTable& m);

struct Enumeration {
  int order = 0;
  std::vector<FiniteMagma> structures;
  bool budget_exhausted = false;
};

/// Every valid table of the given order in row-major lexicographic order, stopping once
/// `budget` structures have been produced (budget_exhausted is set if more exist).
/// Throws OrderTooLarge for order > kMaxModelOrder and DomainError for order < 1.
Enumeration enumerate(int order, std::size_t budget = 1'000'000);

struct EquivalenceReport {
  int order = 0;
  std::size_t structures = 0;
  bool budget_exhausted = false;
  /// Flag combination rendered as "associative=1,medial=1,moufang=1,selfdist=1".
  std::map<std::string, std::size_t> combinations;
  /// Structures breaking medial <=> associative.
  std::size_t medial_violations = 0;
  /// Structures breaking selfdist <=> moufang.
  std::size_t moufang_violations = 0;
  /// Structures failing the post-hoc FiniteMagma or MeanTable invariant checks.
  std::size_t invariant_failures = 0;
  bool contains_cyclic_group = false;

  bool ok() const {
    return medial_violations == 0 && moufang_violations == 0 && invariant_failures == 0;
  }
};

EquivalenceReport theorem_equivalence_check(int order, std::size_t budget = 1'000'000);

std::string to_string(const LawFlags& flags);

}  // namespace agmloop
