#include "agmloop/means.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "agmloop/errors.hpp"

namespace agmloop {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be a positive finite real, got " +
                      std::to_string(v));
  }
}

double geometric(double x, double y) {
  const double prod = x * y;
  if (std::isnormal(prod)) return std::sqrt(prod);
  return std::sqrt(x) * std::sqrt(y);
}

}  // namespace

PositivePair::PositivePair(double x, double y) : x_(x), y_(y) {
  require_positive(x, "x");
  require_positive(y, "y");
}

std::string_view to_string(MeanKind kind) {
  switch (kind) {
    case MeanKind::AM: return "am";
    case MeanKind::GM: return "gm";
    case MeanKind::HM: return "hm";
    case MeanKind::AGM: return "agm";
  }
  return "?";
}

MeanKind parse_mean_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "am") return MeanKind::AM;
  if (lower == "gm") return MeanKind::GM;
  if (lower == "hm") return MeanKind::HM;
  if (lower == "agm") return MeanKind::AGM;
  throw DomainError("unknown mean kind '" + std::string(name) + "'");
}

void PrecisionConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("rel_tol must lie in (0, 1)");
  if (max_iterations < 1) throw DomainError("max_iterations must be at least 1");
}

double classical_mean(MeanKind kind, const PositivePair& p) {
  const double x = p.x(), y = p.y();
  switch (kind) {
    case MeanKind::AM: return x / 2 + y / 2;
    case MeanKind::GM: return geometric(x, y);
    case MeanKind::HM: return 2 * x * y / (x + y);
    case MeanKind::AGM: break;
  }
  throw DomainError("classical_mean: AGM is not a classical mean");
}

double classical_op(MeanKind kind, const PositivePair& p) {
  const double x = p.x(), y = p.y();
  switch (kind) {
    case MeanKind::AM: return x + y;
    case MeanKind::GM: return x * y;
    case MeanKind::HM: return x * y / (x + y);
    case MeanKind::AGM: break;
  }
  throw DomainError("classical_op: AGM has no closed-form compatible operation");
}

AgmTrace agm(const PositivePair& p, const PrecisionConfig& cfg) {
  cfg.validate();
  double hi = std::max(p.x(), p.y());
  double lo = std::min(p.x(), p.y());

  AgmTrace trace;
  trace.iterates.emplace_back(hi, lo);
  while (hi - lo > cfg.rel_tol * hi) {
    if (trace.iterations == cfg.max_iterations) {
      throw NoConvergence("agm did not converge within " + std::to_string(cfg.max_iterations) +
                          " iterations");
    }
    const double next_hi = hi / 2 + lo / 2;
    const double next_lo = geometric(hi, lo);
    hi = std::max(next_hi, next_lo);
    lo = std::min(next_hi, next_lo);
    ++trace.iterations;
    trace.iterates.emplace_back(hi, lo);
  }
  trace.value = hi;
  return trace;
}

double agm_value(double x, double y) { return agm(PositivePair(x, y)).value; }

bool trace_contracts_quadratically(const AgmTrace& trace, double slack_ulps) {
  const auto& it = trace.iterates;
  for (std::size_t n = 0; n < it.size(); ++n) {
    const auto [hi, lo] = it[n];
    if (hi < lo) return false;
    if (trace.value < lo || trace.value > hi) return false;
    if (n + 1 == it.size()) break;
    const auto [next_hi, next_lo] = it[n + 1];
    if (next_hi > hi || next_lo < lo) return false;
    const double width = hi - lo;
    const double bound = width * width / (8 * lo);
    const double ulp = std::nextafter(next_hi, INFINITY) - next_hi;
    if (next_hi - next_lo > bound + slack_ulps * ulp) return false;
  }
  return true;
}

BinaryOp mean_function(MeanKind kind) {
  if (kind == MeanKind::AGM) return [](double x, double y) { return agm_value(x, y); };
  return [kind](double x, double y) { return classical_mean(kind, PositivePair(x, y)); };
}

BinaryOp op_function(MeanKind kind) {
  if (kind == MeanKind::AGM) {
    throw DomainError("op_function: AGM has no closed-form compatible operation");
  }
  return [kind](double x, double y) { return classical_op(kind, PositivePair(x, y)); };
}

double compatibility_defect(const BinaryOp& mean, const BinaryOp& op, const PositivePair& p) {
  const double m = mean(p.x(), p.y());
  return op(m, m) - op(p.x(), p.y());
}

LawReport mean_axiom_report(const BinaryOp& mean, std::span<const double> grid, double tol) {
  if (grid.empty()) throw DomainError("mean_axiom_report: empty grid");
  std::vector<double> sorted(grid.begin(), grid.end());
  for (double v : sorted) require_positive(v, "grid value");
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  LawAccumulator m1("M1", "m(x,x) = x", Polarity::ShouldHold, Criterion::WithinTolerance, tol);
  LawAccumulator m2("M2", "m(x,y) = m(y,x)", Polarity::ShouldHold, Criterion::WithinTolerance, tol);
  LawAccumulator m3("M3", "y -> m(x,y) strictly increasing", Polarity::ShouldHold,
                    Criterion::StrictlyIncreasing, 0.0);

  for (double x : sorted) {
    m1.add_residual(mean(x, x), x, {x});
    for (double y : sorted) m2.add_residual(mean(x, y), mean(y, x), {x, y});
    for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
      m3.add_step(mean(x, sorted[k]), mean(x, sorted[k + 1]), {x, sorted[k], sorted[k + 1]});
    }
  }
  return LawReport{{m1.finish(), m2.finish(), m3.finish()}};
}

double medial_defect(const BinaryOp& mean, double x, double y, double z, double u) {
  for (double v : {x, y, z, u}) require_positive(v, "medial_defect argument");
  return mean(mean(x, y), mean(z, u)) - mean(mean(x, z), mean(y, u));
}

double selfdist_defect(const BinaryOp& mean, double x, double y, double z) {
  for (double v : {x, y, z}) require_positive(v, "selfdist_defect argument");
  return mean(mean(x, y), mean(x, z)) - mean(x, mean(y, z));
}

std::vector<double> default_grid() { return {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0}; }

}  // namespace agmloop
