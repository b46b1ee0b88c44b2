#include "agmloop/oploop.hpp"

#include <algorithm>
#include <cmath>

#include "agmloop/errors.hpp"
#include "agmloop/theta.hpp"

namespace agmloop {

void StarConfig::validate() const {
  if (!(law_tol > 0.0) || !std::isfinite(law_tol)) throw DomainError("law_tol must be positive");
  if (grid.empty()) throw DomainError("grid must be non-empty");
  for (double v : grid) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("grid values must be positive finite");
  }
}

double star(double x, double y) {
  const double a = agm(PositivePair(x, y)).value;
  const Nome q = inverse_nome(a);
  const double conj = theta(Nome(-q.value())).value;
  return a * conj * conj;
}

double star_inverse(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("star_inverse: x must be positive");
  return x * star(1.0 / x, 1.0 / x);
}

double recover_right_factor(double x, double z) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("recover_right_factor: x must be positive");
  return x * star(1.0 / x, z / x);
}

double associativity_defect(double x, double y, double z) {
  return star(star(x, y), z) - star(x, star(y, z));
}

double moufang_defect(double x, double y, double z) {
  return star(star(x, x), star(y, z)) - star(star(x, y), star(x, z));
}

LawReport law_suite(const StarConfig& cfg) {
  cfg.validate();
  std::vector<double> g = cfg.grid;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  const double tol = cfg.law_tol;
  // Recovery chains two star evaluations through a division, so it gets one more decade.
  const double recover_tol = 10 * tol;

  using P = Polarity;
  using C = Criterion;
  LawAccumulator law_a("A", "1 * x = x", P::ShouldHold, C::WithinTolerance, tol);
  LawAccumulator law_b("B", "x -> x * x strictly increasing", P::ShouldHold,
                       C::StrictlyIncreasing, 0.0);
  LawAccumulator law_c("C", "x * y = agm(x,y) * agm(x,y)", P::ShouldHold, C::WithinTolerance, tol);
  LawAccumulator law_d("D", "y -> a * y strictly increasing", P::ShouldHold,
                       C::StrictlyIncreasing, 0.0);
  LawAccumulator law_e("E", "(ax) * (ay) = a * (a (x * y))", P::ShouldHold, C::WithinTolerance,
                       tol);
  LawAccumulator law_f("F", "x (1/x * (z/x)) = y for z = x * y", P::ShouldHold,
                       C::WithinTolerance, recover_tol);
  LawAccumulator mean_of_product("mean_of_product", "agm(1, x * y) = agm(x,y)", P::ShouldHold,
                             C::WithinTolerance, tol);
  LawAccumulator commutative("commutative", "x * y = y * x", P::ShouldHold,
                             C::WithinTolerance, tol);
  LawAccumulator assoc("associativity", "(x * y) * z = x * (y * z)", P::ShouldFail,
                       C::WithinTolerance, tol);
  LawAccumulator moufang("moufang", "(x * x) * (y * z) = (x * y) * (x * z)", P::ShouldFail,
                         C::WithinTolerance, tol);
  LawAccumulator mean_split("mean_split", "agm(x,1) * agm(1,y) = agm(x,y)", P::ShouldFail,
                        C::WithinTolerance, tol);
  LawAccumulator transfer("medial_transfer", "agm(x,y) * agm(z,u) = agm(x,z) * agm(y,u)",
                          P::ShouldFail, C::WithinTolerance, tol);

  const std::size_t n = g.size();
  std::vector<double> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = star(g[i], g[j]);
  }
  auto st = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i) {
    const double x = g[i];
    law_a.add_residual(star(1.0, x), x, {x});
    if (i + 1 < n) law_b.add_step(st(i, i), st(i + 1, i + 1), {x, g[i + 1]});
    for (std::size_t j = 0; j < n; ++j) {
      const double y = g[j];
      const double xy = st(i, j);
      const double a = agm_value(x, y);
      law_c.add_residual(xy, star(a, a), {x, y});
      if (j + 1 < n) law_d.add_step(xy, st(i, j + 1), {x, y, g[j + 1]});
      law_f.add_residual(recover_right_factor(x, xy), y, {x, y});
      mean_of_product.add_residual(agm_value(1.0, xy), a, {x, y});
      commutative.add_residual(xy, st(j, i), {x, y});
      mean_split.add_residual(star(agm_value(x, 1.0), agm_value(1.0, y)), a, {x, y});
      for (std::size_t k = 0; k < n; ++k) {
        const double z = g[k];
        // x plays the role of the scalar a in (E).
        law_e.add_residual(star(x * y, x * z), star(x, x * st(j, k)), {x, y, z});
        assoc.add_residual(star(xy, z), star(x, st(j, k)), {x, y, z});
        moufang.add_residual(star(st(i, i), st(j, k)), star(xy, st(i, k)), {x, y, z});
        for (std::size_t l = 0; l < n; ++l) {
          const double u = g[l];
          transfer.add_residual(star(a, agm_value(z, u)), star(agm_value(x, z), agm_value(y, u)),
                                {x, y, z, u});
        }
      }
    }
  }

  LawReport report;
  for (const auto* acc : {&law_a, &law_b, &law_c, &law_d, &law_e, &law_f, &mean_of_product,
                          &commutative, &assoc, &moufang, &mean_split, &transfer}) {
    report.laws.push_back(acc->finish());
  }
  return report;
}

}  // namespace agmloop
