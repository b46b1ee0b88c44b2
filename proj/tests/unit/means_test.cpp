#include "agmloop/means.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "agmloop/errors.hpp"
#include "quad_oracle.hpp"

namespace agmloop {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// agm(1, 2), frozen from the quad-precision oracle (and cross-checked with mpmath).
constexpr double kAgm12 = 1.456791031046906869186432;
// Frozen from the oracles: AGM(AGM(1,2),AGM(3,4)) - AGM(AGM(1,3),AGM(2,4)).
constexpr double kAgmMedialDefect1234 = 2.695176639965273383e-4;
// AGM(AGM(1,2),AGM(1,3)) - AGM(1,AGM(2,3)).
constexpr double kAgmSelfdistDefect123 = -2.630199691709471182e-4;

TEST(ClassicalMean, ClosedForms) {
  EXPECT_EQ(classical_mean(MeanKind::AM, {3, 5}), 4.0);
  EXPECT_EQ(classical_mean(MeanKind::GM, {4, 9}), 6.0);
  EXPECT_EQ(classical_mean(MeanKind::HM, {2, 2}), 2.0);
}

TEST(ClassicalOp, ClosedForms) {
  EXPECT_EQ(classical_op(MeanKind::AM, {3, 5}), 8.0);
  EXPECT_EQ(classical_op(MeanKind::HM, {1, 1}), 0.5);
  EXPECT_EQ(classical_op(MeanKind::GM, {4, 9}), 36.0);
}

TEST(ClassicalMean, RejectsAgmAndBadInput) {
  EXPECT_THROW(classical_mean(MeanKind::AGM, {1, 2}), DomainError);
  EXPECT_THROW(classical_op(MeanKind::AGM, {1, 2}), DomainError);
  EXPECT_THROW(PositivePair(0.0, 1.0), DomainError);
  EXPECT_THROW(PositivePair(1.0, -2.0), DomainError);
  EXPECT_THROW(PositivePair(std::numeric_limits<double>::infinity(), 1.0), DomainError);
  EXPECT_THROW(PositivePair(std::nan(""), 1.0), DomainError);
}

TEST(MeanKind, Parses) {
  EXPECT_EQ(parse_mean_kind("AGM"), MeanKind::AGM);
  EXPECT_EQ(parse_mean_kind("hm"), MeanKind::HM);
  EXPECT_THROW(parse_mean_kind("lm"), DomainError);
}

TEST(Agm, FixedPoint) {
  const AgmTrace t = agm({1, 1});
  EXPECT_EQ(t.value, 1.0);
  EXPECT_LE(t.iterations, 1);
}

TEST(Agm, MatchesOracle) {
  const double v = agm({1, 2}).value;
  const double ref = static_cast<double>(oracle::agm(1, 2));
  EXPECT_NEAR(v, kAgm12, 1e-13 * kAgm12);
  EXPECT_NEAR(v, ref, 1e-13 * ref);
  EXPECT_NEAR(agm({2, 4}).value, 2 * kAgm12, 1e-13 * kAgm12);
}

TEST(Agm, SymmetricBitExact) {
  for (double x : default_grid()) {
    for (double y : default_grid()) EXPECT_EQ(agm_value(x, y), agm_value(y, x));
  }
  EXPECT_EQ(agm_value(1e-3, 7.25), agm_value(7.25, 1e-3));
}

TEST(Agm, BetweenGeometricAndArithmetic) {
  for (double x : default_grid()) {
    for (double y : default_grid()) {
      const double g = classical_mean(MeanKind::GM, {x, y});
      const double a = classical_mean(MeanKind::AM, {x, y});
      const double m = agm_value(x, y);
      if (x == y) {
        EXPECT_NEAR(m, x, 1e-12 * x);
        EXPECT_NEAR(g, x, 1e-12 * x);
      } else {
        EXPECT_GT(m, g * (1 + 1e-12));
        EXPECT_LT(m, a * (1 - 1e-12));
      }
    }
  }
}

TEST(Agm, Homogeneous) {
  for (double c : {0.5, 2.0, 10.0}) {
    for (double x : default_grid()) {
      for (double y : default_grid()) {
        const double base = agm_value(x, y);
        EXPECT_LE(std::abs(agm_value(c * x, c * y) - c * base), 1e-12 * c * base);
      }
    }
  }
}

TEST(Agm, TracesContractQuadratically) {
  for (double x : default_grid()) {
    for (double y : default_grid()) {
      const AgmTrace t = agm({x, y});
      EXPECT_TRUE(trace_contracts_quadratically(t)) << x << " " << y;
    }
  }
  // Wide spreads take the most steps.
  for (auto [x, y] : {std::pair{1e-6, 1e6}, {1e-300, 1e300}, {1.0, 1.0 + 1e-15}}) {
    const AgmTrace t = agm({x, y});
    EXPECT_TRUE(trace_contracts_quadratically(t)) << x << " " << y;
    EXPECT_LT(t.iterations, 64);
  }
}

TEST(Agm, StopsOnRelativeWidth) {
  const PrecisionConfig loose{1e-3, 64};
  const AgmTrace t = agm({1, 100}, loose);
  const auto [hi, lo] = t.iterates.back();
  EXPECT_LE(hi - lo, 1e-3 * hi);
  EXPECT_EQ(t.value, hi);
  const auto [prev_hi, prev_lo] = t.iterates[t.iterates.size() - 2];
  EXPECT_GT(prev_hi - prev_lo, 1e-3 * prev_hi);
}

TEST(Agm, IterationBudget) {
  EXPECT_THROW(agm({1, 1e6}, PrecisionConfig{4 * kEps, 2}), NoConvergence);
  EXPECT_THROW(agm({1, 2}, PrecisionConfig{0.0, 64}), DomainError);
  EXPECT_THROW(agm({1, 2}, PrecisionConfig{1e-3, 0}), DomainError);
  EXPECT_NO_THROW(agm({1e-300, 1e300}));
}

TEST(Compatibility, ClassicalPairs) {
  const auto am = mean_function(MeanKind::AM);
  const auto plus = op_function(MeanKind::AM);
  for (double x : default_grid()) {
    for (double y : default_grid()) {
      const PositivePair p{x, y};
      EXPECT_LE(std::abs(compatibility_defect(am, plus, p)), 4 * kEps * (x + y));
      for (MeanKind k : {MeanKind::GM, MeanKind::HM}) {
        const double scale = classical_op(k, p);
        EXPECT_LE(std::abs(compatibility_defect(mean_function(k), op_function(k), p)),
                  1e-12 * scale);
      }
    }
  }
  EXPECT_LE(std::abs(compatibility_defect(mean_function(MeanKind::HM),
                                          op_function(MeanKind::HM), {2, 3})),
            1e-12 * 1.2);
  EXPECT_DOUBLE_EQ(compatibility_defect(mean_function(MeanKind::GM), op_function(MeanKind::AM),
                                        {1, 4}),
                   -1.0);
  EXPECT_THROW(op_function(MeanKind::AGM), DomainError);
}

TEST(MeanAxioms, AgmAndAmPass) {
  const auto grid = default_grid();
  for (MeanKind k : {MeanKind::AGM, MeanKind::AM, MeanKind::GM, MeanKind::HM}) {
    const LawReport r = mean_axiom_report(mean_function(k), grid);
    ASSERT_EQ(r.laws.size(), 3u);
    EXPECT_TRUE(r.all_pass()) << to_string(k);
    EXPECT_EQ(r.find("M3")->samples, 7u * 6u);
  }
}

TEST(MeanAxioms, FirstProjectionFailsSymmetry) {
  const BinaryOp first = [](double x, double) { return x; };
  const LawReport r = mean_axiom_report(first, default_grid());
  EXPECT_TRUE(r.find("M1")->pass);
  EXPECT_FALSE(r.find("M2")->pass);
  EXPECT_FALSE(r.all_pass());
  EXPECT_THROW(mean_axiom_report(first, std::vector<double>{}), DomainError);
}

TEST(MedialDefect, LinearMeanIsMedial) {
  const auto am = mean_function(MeanKind::AM);
  EXPECT_LE(std::abs(medial_defect(am, 1, 2, 3, 4)), 4 * kEps * 2.5);
  EXPECT_LE(std::abs(selfdist_defect(am, 1, 2, 3)), 4 * kEps * 2);
}

TEST(MedialDefect, AgmIsNotMedial) {
  const auto m = mean_function(MeanKind::AGM);
  const double d = medial_defect(m, 1, 2, 3, 4);
  EXPECT_GT(std::abs(d), 1e-6);
  EXPECT_NEAR(d, kAgmMedialDefect1234, 1e-12);
  EXPECT_EQ(medial_defect(m, 2.5, 2.5, 2.5, 2.5), 0.0);
  EXPECT_THROW(medial_defect(m, 1, 2, 3, 0), DomainError);
}

TEST(SelfdistDefect, AgmIsNotSelfDistributive) {
  const auto m = mean_function(MeanKind::AGM);
  const double d = selfdist_defect(m, 1, 2, 3);
  EXPECT_GT(std::abs(d), 1e-6);
  EXPECT_NEAR(d, kAgmSelfdistDefect123, 1e-12);
  // Both sides collapse to m(x, y) when y = z.
  for (double x : default_grid()) {
    for (double y : default_grid()) EXPECT_EQ(selfdist_defect(m, x, y, y), 0.0);
  }
  EXPECT_THROW(selfdist_defect(m, -1, 2, 3), DomainError);
}

TEST(MedialDefect, FrozenValuesMatchOracle) {
  using oracle::Quad;
  auto qa = [](Quad x, Quad y) { return oracle::agm(x, y); };
  const Quad med = qa(qa(1, 2), qa(3, 4)) - qa(qa(1, 3), qa(2, 4));
  const Quad sd = qa(qa(1, 2), qa(1, 3)) - qa(1, qa(2, 3));
  EXPECT_NEAR(static_cast<double>(med), kAgmMedialDefect1234, 1e-18);
  EXPECT_NEAR(static_cast<double>(sd), kAgmSelfdistDefect123, 1e-18);
}

}  // namespace
}  // namespace agmloop
