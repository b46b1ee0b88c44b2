#include "agmloop/oploop.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "agmloop/errors.hpp"
#include "quad_oracle.hpp"

namespace agmloop {
namespace {

// Frozen from the quad-precision oracle (quotient form, independent bisection).
constexpr double kStar23 = 4.636807858821866764851621;
constexpr double kAssocDefect234 = -0.06798248525699788557700971;
constexpr double kMoufangDefect234 = 0.03693196886717937601834701;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

TEST(Star, IdentityElement) {
  EXPECT_LE(rel(star(1.0, 2.5), 2.5), 1e-9);
  for (double x : default_grid()) EXPECT_LE(rel(star(1.0, x), x), 1e-9) << x;
}

TEST(Star, Commutative) {
  EXPECT_EQ(star(2, 3), star(3, 2));
  for (double x : default_grid()) {
    for (double y : default_grid()) EXPECT_EQ(star(x, y), star(y, x));
  }
}

TEST(Star, MatchesQuotientOracle) {
  EXPECT_LE(rel(star(2, 3), kStar23), 1e-10);
  for (double x : {0.5, 1.5, 3.0, 4.0}) {
    for (double y : {0.75, 2.0, 4.0}) {
      const double ref = static_cast<double>(oracle::star(x, y));
      EXPECT_LE(rel(star(x, y), ref), 1e-10) << x << " " << y;
    }
  }
}

TEST(Star, DependsOnlyOnAgm) {
  for (double x : default_grid()) {
    for (double y : default_grid()) {
      const double a = agm_value(x, y);
      EXPECT_LE(rel(star(x, y), star(a, a)), 1e-9);
      EXPECT_LE(rel(agm_value(1.0, star(x, y)), a), 1e-9);
    }
  }
}

TEST(Star, SquaringIncreasing) {
  const auto g = default_grid();
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    EXPECT_LT(star(g[k], g[k]), star(g[k + 1], g[k + 1]));
  }
}

TEST(Star, PropagatesErrors) {
  EXPECT_THROW(star(0.0, 1.0), DomainError);
  EXPECT_THROW(star(1.0, -2.0), DomainError);
  // agm far below the smallest attainable 1/theta^2 at the nome cap.
  EXPECT_THROW(star(1e-6, 1e-6), TargetOutOfRange);
}

TEST(StarInverse, Examples) {
  EXPECT_LE(std::abs(star_inverse(1.0) - 1.0), 1e-12);
  for (double x : {2.0, 0.5, 3.0, 0.75}) {
    const double v = star_inverse(x);
    EXPECT_NEAR(star(x, v), 1.0, 1e-9) << x;
  }
  EXPECT_THROW(star_inverse(0.0), DomainError);
}

TEST(RecoverRightFactor, Examples) {
  EXPECT_LE(rel(recover_right_factor(2, star(2, 3)), 3.0), 1e-8);
  for (double z : default_grid()) EXPECT_LE(rel(recover_right_factor(1, z), z), 1e-9);
  double worst = 0;
  for (double x : default_grid()) {
    for (double y : default_grid()) worst = std::max(worst, rel(recover_right_factor(x, star(x, y)), y));
  }
  EXPECT_LE(worst, 1e-8);
}

TEST(Distributive, ScalarLaw) {
  for (double a : default_grid()) {
    for (double x : {0.5, 2.0, 4.0}) {
      for (double y : {1.5, 3.0}) {
        EXPECT_LE(rel(star(a * x, a * y), star(a, a * star(x, y))), 1e-9);
      }
    }
  }
}

TEST(Defects, IdentityTripleIsTrivial) {
  // 1 is the identity, so every identity with a leading 1 collapses to y * z.
  EXPECT_LE(std::abs(associativity_defect(1, 2, 3)), 1e-12 * kStar23);
  EXPECT_LE(std::abs(moufang_defect(1, 2, 3)), 1e-12 * kStar23);
}

TEST(Defects, NonAssociativeWitness) {
  EXPECT_NEAR(associativity_defect(2, 3, 4), kAssocDefect234, 1e-9);
  EXPECT_NEAR(moufang_defect(2, 3, 4), kMoufangDefect234, 1e-9);
  EXPECT_GT(std::abs(associativity_defect(2, 3, 4)), 1e-6);
  EXPECT_GT(std::abs(moufang_defect(2, 3, 4)), 1e-6);
}

TEST(LawSuite, DefaultGrid) {
  const LawReport r = law_suite();
  for (const auto& law : r.laws) {
    EXPECT_TRUE(law.pass) << law.id << " worst " << law.worst_defect;
  }
  EXPECT_TRUE(r.all_pass());
  ASSERT_EQ(r.laws.size(), 12u);
  EXPECT_EQ(r.find("A")->samples, 7u);
  EXPECT_EQ(r.find("E")->samples, 343u);
  EXPECT_EQ(r.find("medial_transfer")->samples, 2401u);
  EXPECT_GT(r.find("associativity")->worst_defect, 1e-6);
  EXPECT_GT(r.find("moufang")->worst_defect, 1e-6);
  EXPECT_EQ(r.find("moufang")->witness.size(), 3u);
  EXPECT_LE(r.find("F")->worst_defect, 1e-8);
}

TEST(LawSuite, ShouldFailLawHoldingIsReported) {
  // On a single point every law holds trivially, so the should-fail laws flag a suite failure.
  StarConfig cfg;
  cfg.grid = {1.0};
  const LawReport r = law_suite(cfg);
  EXPECT_TRUE(r.find("A")->pass);
  EXPECT_TRUE(r.find("associativity")->holds);
  EXPECT_FALSE(r.find("associativity")->pass);
  EXPECT_FALSE(r.all_pass());
}

TEST(LawSuite, ValidatesConfig) {
  EXPECT_THROW(law_suite(StarConfig{0.0, default_grid()}), DomainError);
  EXPECT_THROW(law_suite(StarConfig{1e-9, {}}), DomainError);
  EXPECT_THROW(law_suite(StarConfig{1e-9, {1.0, -2.0}}), DomainError);
}

}  // namespace
}  // namespace agmloop
