#pragma once

#include <vector>

#include "agmloop/law_report.hpp"
#include "agmloop/means.hpp"

namespace agmloop {

/// Settings for the loop-law sweep. The identity element is 1 throughout.
struct StarConfig {
  double law_tol = 1e-9;
  std::vector<double> grid = default_grid();

  /// Throws DomainError unless law_tol > 0 and the grid is non-empty, positive and finite.
  void validate() const;
};

/// The theta-function loop operation: with a = agm(x, y) and theta(q)^2 = 1/a,
/// x * y = theta(-q)^2 / theta(q)^2, computed as a * theta(-q)^2.
double star(double x, double y);

/// x * star(1/x, 1/x); the two-sided inverse of x.
double star_inverse(double x);

/// x * star(1/x, z/x); recovers y from z = star(x, y).
double recover_right_factor(double x, double z);

/// star(star(x,y),z) - star(x,star(y,z))
double associativity_defect(double x, double y, double z);
/// star(x*x, y*z) - star(x*y, x*z), the Moufang form used throughout.
double moufang_defect(double x, double y, double z);

/// Sweeps every law of the loop over cfg.grid.
///
/// Should hold: A, B, C, D, E, F, mean_of_product, commutative.
/// Should fail: associativity, moufang, mean_split, medial_transfer.
LawReport law_suite(const StarConfig& cfg = {});

}  // namespace agmloop
