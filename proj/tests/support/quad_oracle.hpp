#pragma once

// Independent reference computations at quad precision (113-bit significand). These follow
// the textbook definitions directly and share no code with the library.

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace agmloop::oracle {

using Quad = boost::multiprecision::cpp_bin_float_quad;

inline Quad agm(Quad x, Quad y) {
  for (int i = 0; i < 200; ++i) {
    if (abs(x - y) <= Quad("1e-33") * x) break;
    const Quad next_x = (x + y) / 2;
    const Quad next_y = sqrt(x * y);
    x = next_x;
    y = next_y;
  }
  return x;
}

/// Plain series 1 + 2 sum q^(n^2), summed until terms drop below 1e-40.
inline Quad theta(Quad q) {
  Quad sum = 1;
  for (long n = 1; n < 100000; ++n) {
    const Quad t = pow(q, static_cast<long>(n * n));
    if (abs(t) < Quad("1e-40")) break;
    sum += 2 * t;
  }
  return sum;
}

/// q with theta(q)^2 = target by plain bisection on [-0.99, 0.99].
inline Quad inverse_nome(Quad target) {
  Quad lo = Quad("-0.99"), hi = Quad("0.99");
  for (int i = 0; i < 240; ++i) {
    const Quad mid = (lo + hi) / 2;
    const Quad t = theta(mid);
    if (t * t < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

/// Quotient form theta(-q)^2 / theta(q)^2 with theta(q)^2 = 1/agm(x,y).
inline Quad star(Quad x, Quad y) {
  const Quad a = agm(x, y);
  const Quad q = inverse_nome(1 / a);
  const Quad num = theta(-q);
  const Quad den = theta(q);
  return (num * num) / (den * den);
}

}  // namespace agmloop::oracle
