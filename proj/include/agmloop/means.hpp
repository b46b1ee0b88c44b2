#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "agmloop/law_report.hpp"

namespace agmloop {

/// A pair of positive, finite reals. Construction validates.
class PositivePair {
 public:
  PositivePair(double x, double y);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

 private:
  double x_;
  double y_;
};

enum class MeanKind { AM, GM, HM, AGM };

std::string_view to_string(MeanKind kind);
/// Accepts "am", "gm", "hm", "agm" (case-insensitive). Throws DomainError otherwise.
MeanKind parse_mean_kind(std::string_view name);

struct PrecisionConfig {
  double rel_tol = 4 * std::numeric_limits<double>::epsilon();
  int max_iterations = 64;

  /// Throws DomainError unless 0 < rel_tol < 1 and max_iterations >= 1.
  void validate() const;
};

/// Iterates of the Gauss arithmetic-geometric iteration, each stored as (upper, lower).
struct AgmTrace {
  std::vector<std::pair<double, double>> iterates;
  double value = 0.0;
  int iterations = 0;
};

using BinaryOp = std::function<double(double, double)>;

/// (x+y)/2, sqrt(xy) or 2xy/(x+y). AGM is rejected with DomainError.
double classical_mean(MeanKind kind, const PositivePair& p);
/// The operation each classical mean is compatible with: x+y, xy, xy/(x+y).
double classical_op(MeanKind kind, const PositivePair& p);

/// Gauss iteration x' = (x+y)/2, y' = sqrt(xy) from the ordered pair (max, min), stopping once
/// x - y <= rel_tol * x. The value is the final upper iterate.
AgmTrace agm(const PositivePair& p, const PrecisionConfig& cfg = {});
double agm_value(double x, double y);

/// Checks the nesting and quadratic-contraction invariants of a recorded trace.
/// `slack_ulps` admits that many ulps of the upper iterate as rounding allowance in the
/// contraction inequality.
bool trace_contracts_quadratically(const AgmTrace& trace, double slack_ulps = 2.0);

/// The mean as a callable; AGM uses the default precision.
BinaryOp mean_function(MeanKind kind);
/// The compatible operation as a callable. DomainError for AGM (its operation lives in oploop).
BinaryOp op_function(MeanKind kind);

/// op(m, m) - op(x, y) with m = mean(x, y).
double compatibility_defect(const BinaryOp& mean, const BinaryOp& op, const PositivePair& p);

/// M1 idempotence, M2 symmetry (relative tolerance `tol`), and M3 as strict monotonicity of
/// y -> m(x, y) along the sorted grid for every x.
LawReport mean_axiom_report(const BinaryOp& mean, std::span<const double> grid, double tol = 1e-12);

/// m(m(x,y), m(z,u)) - m(m(x,z), m(y,u))
double medial_defect(const BinaryOp& mean, double x, double y, double z, double u);
/// m(m(x,y), m(x,z)) - m(x, m(y,z))
double selfdist_defect(const BinaryOp& mean, double x, double y, double z);

/// {0.5, 1, 1.5, 2, 2.5, 3, 4}
std::vector<double> default_grid();

}  // namespace agmloop
