#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agmloop {

/// Whether a law is predicted to hold or predicted to be violated somewhere.
enum class Polarity { ShouldHold, ShouldFail };

/// How the worst defect of a law is judged.
///
/// WithinTolerance: per-sample defect is a relative residual |lhs - rhs| / max(|lhs|, |rhs|);
/// the law holds when the worst residual is <= tolerance.
///
/// StrictlyIncreasing: per-sample defect is (f(prev) - f(next)) / max(|f(prev)|, |f(next)|)
/// along an ordered section; the law holds when every defect is < 0.
enum class Criterion { WithinTolerance, StrictlyIncreasing };

struct LawRecord {
  std::string id;
  std::string description;
  Polarity polarity = Polarity::ShouldHold;
  Criterion criterion = Criterion::WithinTolerance;
  double tolerance = 0.0;
  std::size_t samples = 0;
  double worst_defect = 0.0;
  std::vector<double> witness;
  bool holds = true;
  bool pass = true;
};

struct LawReport {
  std::vector<LawRecord> laws;

  bool all_pass() const;
  const LawRecord* find(std::string_view id) const;
};

/// Collects samples for one law and produces its record.
class LawAccumulator {
 public:
  LawAccumulator(std::string id, std::string description, Polarity polarity, Criterion criterion,
                 double tolerance);

  /// Adds a relative residual between two evaluations of the law's sides.
  void add_residual(double lhs, double rhs, std::vector<double> witness);
  /// Adds one consecutive pair of an ordered section (prev before next).
  void add_step(double prev, double next, std::vector<double> witness);

  LawRecord finish() const;

 private:
  void add(double defect, std::vector<double> witness);

  LawRecord record_;
  std::optional<double> worst_;
};

double relative_residual(double lhs, double rhs);

const char* to_string(Polarity p);
const char* to_string(Criterion c);

}  // namespace agmloop
