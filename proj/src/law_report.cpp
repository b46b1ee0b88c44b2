#include "agmloop/law_report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace agmloop {

bool LawReport::all_pass() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawRecord& r) { return r.pass; });
}

const LawRecord* LawReport::find(std::string_view id) const {
  auto it = std::find_if(laws.begin(), laws.end(), [&](const LawRecord& r) { return r.id == id; });
  return it == laws.end() ? nullptr : &*it;
}

double relative_residual(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  const double diff = std::abs(lhs - rhs);
  if (scale == 0.0) return 0.0;
  if (!std::isfinite(diff)) return std::numeric_limits<double>::infinity();
  return diff / scale;
}

LawAccumulator::LawAccumulator(std::string id, std::string description, Polarity polarity,
                               Criterion criterion, double tolerance) {
  record_.id = std::move(id);
  record_.description = std::move(description);
  record_.polarity = polarity;
  record_.criterion = criterion;
  record_.tolerance = tolerance;
}

void LawAccumulator::add_residual(double lhs, double rhs, std::vector<double> witness) {
  add(relative_residual(lhs, rhs), std::move(witness));
}

void LawAccumulator::add_step(double prev, double next, std::vector<double> witness) {
  const double scale = std::max(std::abs(prev), std::abs(next));
  const double defect = scale == 0.0 ? 0.0 : (prev - next) / scale;
  add(defect, std::move(witness));
}

void LawAccumulator::add(double defect, std::vector<double> witness) {
  ++record_.samples;
  // NaN is the worst possible outcome.
  if (!worst_ || std::isnan(defect) || defect > *worst_) {
    if (worst_ && std::isnan(*worst_)) return;
    worst_ = defect;
    record_.witness = std::move(witness);
  }
}

LawRecord LawAccumulator::finish() const {
  LawRecord r = record_;
  r.worst_defect = worst_.value_or(0.0);
  if (std::isnan(r.worst_defect)) {
    r.holds = false;
  } else if (r.criterion == Criterion::WithinTolerance) {
    r.holds = r.worst_defect <= r.tolerance;
  } else {
    r.holds = r.worst_defect < 0.0;
  }
  r.pass = r.holds == (r.polarity == Polarity::ShouldHold);
  return r;
}

const char* to_string(Polarity p) {
  return p == Polarity::ShouldHold ? "should-hold" : "should-fail";
}

const char* to_string(Criterion c) {
  return c == Criterion::WithinTolerance ? "within-tolerance" : "strictly-increasing";
}

}  // namespace agmloop
