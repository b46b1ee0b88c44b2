#pragma once

#include <cstddef>

namespace agmloop {

/// Largest admissible |q|.
inline constexpr double kNomeMax = 0.999;

/// A nome q with |q| <= kNomeMax. Construction throws NomeOutOfRange otherwise.
class Nome {
 public:
  explicit Nome(double q);

  double value() const noexcept { return q_; }

 private:
  double q_;
};

/// theta(q) = 1 + 2 sum_{n>=1} q^(n^2), truncated, with a bound on the neglected part.
///
/// For q >= 0 this is the partial sum through n = terms_used and tail_bound is the geometric
/// bound 2 q^((N+1)^2) / (1 - q). For q < 0 the alternating sum cancels badly, so the value
/// is the Jacobi triple product prod_{n=1..N} (1 - q^(2n)) (1 + q^(2n-1))^2 and tail_bound is
/// value * 2 |q|^(2N+1) / (1 - |q|); terms_used then counts product factors.
struct ThetaValue {
  double value = 1.0;
  double tail_bound = 0.0;
  std::size_t terms_used = 0;
};

inline constexpr std::size_t kMaxSeriesTerms = 256;
inline constexpr std::size_t kMaxProductFactors = 32768;

ThetaValue theta(Nome q);

/// Truncation at exactly `terms` terms (or factors for q < 0), ignoring the stop rule.
ThetaValue theta_truncated(Nome q, std::size_t terms);

/// d theta / dq at the same truncation as theta(q).
double theta_derivative(Nome q);

/// theta(q)^2 evaluated at +-kNomeMax; the admissible range of 1/a for inverse_nome.
double theta_squared_min();
double theta_squared_max();

/// The unique q with theta(q)^2 = 1/a.
///
/// Bisection on [-kNomeMax, kNomeMax] to width 1e-6, then at most five Newton steps on
/// log theta; falls back to bisection down to width 1e-14 if Newton leaves the bracket.
/// Throws DomainError for non-positive a and TargetOutOfRange when 1/a is not attained.
Nome inverse_nome(double a);

}  // namespace agmloop
