#include "agmloop/theta.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "agmloop/errors.hpp"

namespace agmloop {

namespace {

constexpr double kStopTerm = 0x1p-54;

// Partial sum 1 + 2 sum_{n=1..N} q^(n^2) for q >= 0. Without `fixed` the stop rule applies.
ThetaValue series(double q, std::size_t terms, bool fixed) {
  const std::size_t cap = fixed ? terms : kMaxSeriesTerms;
  double sum = 0.0;
  std::size_t n = 1;
  for (; n <= cap; ++n) {
    const double t = std::pow(q, static_cast<double>(n * n));
    if (!fixed && t < kStopTerm) break;
    sum += t;
  }
  const std::size_t used = n - 1;
  ThetaValue out;
  out.value = 1.0 + 2.0 * sum;
  out.terms_used = used;
  const double next = static_cast<double>((used + 1) * (used + 1));
  out.tail_bound = q == 0.0 ? 0.0 : 2.0 * std::pow(q, next) / (1.0 - q);
  return out;
}

// Triple product prod_{n=1..N} (1 - r^(2n)) (1 - r^(2n-1))^2 = theta(-r), r > 0.
ThetaValue product(double r, std::size_t factors, bool fixed) {
  const std::size_t cap = fixed ? factors : kMaxProductFactors;
  double value = 1.0;
  double odd = r;  // r^(2n-1)
  std::size_t n = 1;
  for (; n <= cap; ++n) {
    if (!fixed && 2.0 * odd / (1.0 - r) < kStopTerm) break;
    const double even = odd * r;
    const double f = 1.0 - odd;
    value *= (1.0 - even) * f * f;
    odd = even * r;
    if (value == 0.0) {
      ++n;
      break;
    }
  }
  ThetaValue out;
  out.value = value;
  out.terms_used = n - 1;
  out.tail_bound = value * 2.0 * odd / (1.0 - r);
  return out;
}

ThetaValue evaluate(double q, std::size_t terms, bool fixed) {
  if (q >= 0.0) return series(q, terms, fixed);
  return product(-q, terms, fixed);
}

double log_derivative_product(double q, std::size_t factors) {
  // d/dq log prod_n (1 - q^(2n)) (1 + q^(2n-1))^2
  double acc = 0.0;
  double odd = q;     // q^(2n-1)
  double odd_m1 = 1;  // q^(2n-2)
  for (std::size_t n = 1; n <= factors; ++n) {
    const double even = odd * q;
    const double dn = static_cast<double>(n);
    acc += -2.0 * dn * odd / (1.0 - even) + 2.0 * (2.0 * dn - 1.0) * odd_m1 / (1.0 + odd);
    odd_m1 = even;
    odd = even * q;
  }
  return acc;
}

}  // namespace

Nome::Nome(double q) : q_(q) {
  if (!(std::abs(q) <= kNomeMax)) {
    throw NomeOutOfRange("nome " + std::to_string(q) + " outside [-" + std::to_string(kNomeMax) +
                         ", " + std::to_string(kNomeMax) + "]");
  }
}

ThetaValue theta(Nome q) { return evaluate(q.value(), 0, false); }

ThetaValue theta_truncated(Nome q, std::size_t terms) { return evaluate(q.value(), terms, true); }

double theta_derivative(Nome q) {
  const double v = q.value();
  if (v >= 0.0) {
    // n^2 q^(n^2-1) decays more slowly than q^(n^2), so the derivative has its own stop rule.
    double acc = 0.0;
    for (std::size_t n = 1; n <= kMaxSeriesTerms; ++n) {
      const double e = static_cast<double>(n * n);
      const double t = e * std::pow(v, e - 1.0);
      if (n > 1 && t < kStopTerm * acc) break;
      acc += t;
    }
    return 2.0 * acc;
  }
  const ThetaValue th = theta(q);
  return th.value * log_derivative_product(v, th.terms_used);
}

double theta_squared_min() {
  static const double v = [] {
    const double t = theta(Nome(-kNomeMax)).value;
    return t * t;
  }();
  return v;
}

double theta_squared_max() {
  static const double v = [] {
    const double t = theta(Nome(kNomeMax)).value;
    return t * t;
  }();
  return v;
}

Nome inverse_nome(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("inverse_nome: a must be positive and finite, got " + std::to_string(a));
  }
  if (a == 1.0) return Nome(0.0);
  const double target_sq = 1.0 / a;
  if (!(target_sq >= theta_squared_min() && target_sq <= theta_squared_max())) {
    throw TargetOutOfRange("inverse_nome: 1/a = " + std::to_string(target_sq) +
                           " outside the range of theta^2 on the capped nome interval");
  }
  const double target = std::sqrt(target_sq);

  double lo = -kNomeMax;
  double hi = kNomeMax;
  auto below = [&](double q) { return theta(Nome(q)).value < target; };
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (below(mid) ? lo : hi) = mid;
  }

  const double log_target = std::log(target);
  double q = 0.5 * (lo + hi);
  bool left_bracket = false;
  for (int step = 0; step < 5; ++step) {
    const ThetaValue th = theta(Nome(q));
    const double g = std::log(th.value) - log_target;
    if (g == 0.0) return Nome(q);
    (g < 0.0 ? lo : hi) = q;
    const double slope = theta_derivative(Nome(q)) / th.value;
    const double next = q - g / slope;
    if (!(next >= lo && next <= hi)) {
      left_bracket = true;
      break;
    }
    if (std::abs(next - q) <= 2 * std::numeric_limits<double>::epsilon() * std::abs(next)) {
      return Nome(next);
    }
    q = next;
  }
  if (!left_bracket) return Nome(q);

  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    (below(mid) ? lo : hi) = mid;
  }
  return Nome(0.5 * (lo + hi));
}

}  // namespace agmloop
