#include "agmloop/theta.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "agmloop/errors.hpp"
#include "agmloop/means.hpp"
#include "quad_oracle.hpp"

namespace agmloop {
namespace {

std::vector<double> nome_grid() {
  std::vector<double> g;
  for (int k = -9; k <= 9; ++k) g.push_back(k / 10.0);
  return g;
}

TEST(Theta, Zero) {
  const ThetaValue t = theta(Nome(0.0));
  EXPECT_EQ(t.value, 1.0);
  EXPECT_EQ(t.tail_bound, 0.0);
}

TEST(Theta, SmallNomes) {
  // 1 + 2(0.1 + 1e-4 + 1e-9 + 1e-16) and its alternating counterpart.
  EXPECT_NEAR(theta(Nome(0.1)).value, 1.2002000020000002, 1e-15);
  EXPECT_NEAR(theta(Nome(-0.1)).value, 0.8001999980000002, 1e-15);
  EXPECT_NEAR(theta(Nome(0.1)).value, static_cast<double>(oracle::theta(oracle::Quad("0.1"))),
              1e-15);
}

TEST(Theta, MatchesOracleAcrossGrid) {
  for (double q : nome_grid()) {
    const double ref = static_cast<double>(oracle::theta(oracle::Quad(q)));
    const ThetaValue t = theta(Nome(q));
    EXPECT_NEAR(t.value, ref, 1e-14 * ref) << q;
    EXPECT_GE(t.tail_bound, 0.0);
    EXPECT_GT(t.value - t.tail_bound, 0.0);
  }
}

TEST(Theta, StrictlyIncreasing) {
  const auto g = nome_grid();
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    EXPECT_LT(theta(Nome(g[k])).value, theta(Nome(g[k + 1])).value) << g[k];
  }
}

TEST(Theta, TailBoundDominatesLongerTruncation) {
  for (double q : {-0.95, -0.9, -0.5, -0.1, 0.1, 0.5, 0.9, 0.95, 0.99}) {
    const ThetaValue t = theta(Nome(q));
    const ThetaValue longer = theta_truncated(Nome(q), t.terms_used + 10);
    EXPECT_GE(t.tail_bound, std::abs(longer.value - t.value)) << q;
    // A deliberately short truncation must also be covered by its own bound.
    const ThetaValue short_t = theta_truncated(Nome(q), 3);
    const ThetaValue short_longer = theta_truncated(Nome(q), 13);
    EXPECT_GE(short_t.tail_bound, std::abs(short_longer.value - short_t.value)) << q;
  }
}

TEST(Theta, NomeCap) {
  EXPECT_THROW(Nome(0.9995), NomeOutOfRange);
  EXPECT_THROW(Nome(-1.0), NomeOutOfRange);
  EXPECT_THROW(Nome(std::nan("")), NomeOutOfRange);
  EXPECT_NO_THROW(theta(Nome(kNomeMax)));
  const ThetaValue edge = theta(Nome(kNomeMax));
  EXPECT_LE(edge.terms_used, kMaxSeriesTerms);
  EXPECT_LT(edge.tail_bound, 1e-12 * edge.value);
}

TEST(Theta, DerivativeMatchesFiniteDifference) {
  for (double q : {-0.6, -0.3, 0.0, 0.2, 0.7}) {
    const double h = 1e-6;
    const double fd = (theta(Nome(q + h)).value - theta(Nome(q - h)).value) / (2 * h);
    EXPECT_NEAR(theta_derivative(Nome(q)), fd, 1e-6 * std::max(1.0, std::abs(fd))) << q;
  }
}

TEST(InverseNome, Identity) { EXPECT_EQ(inverse_nome(1.0).value(), 0.0); }

TEST(InverseNome, Roundtrip) {
  for (double q : nome_grid()) {
    const double t = theta(Nome(q)).value;
    const Nome back = inverse_nome(1.0 / (t * t));
    EXPECT_NEAR(back.value(), q, 1e-10) << q;
  }
  const double t3 = theta(Nome(0.3)).value;
  EXPECT_NEAR(inverse_nome(1.0 / (t3 * t3)).value(), 0.3, 1e-10);
  const double t5 = theta(Nome(-0.5)).value;
  EXPECT_NEAR(inverse_nome(1.0 / (t5 * t5)).value(), -0.5, 1e-10);
}

TEST(InverseNome, ResidualWithinTolerance) {
  for (double a : {1e-3, 0.01, 0.3, 0.5, 0.9, 1.1, 2.0, 7.0, 55.0, 1e4, 1e12, 1e100}) {
    const Nome q = inverse_nome(a);
    const double t = theta(q).value;
    EXPECT_LE(std::abs(t * t - 1.0 / a), 1e-14 * std::max(1.0, 1.0 / a)) << a;
  }
}

TEST(InverseNome, OutOfRange) {
  EXPECT_THROW(inverse_nome(0.0), DomainError);
  EXPECT_THROW(inverse_nome(-1.0), DomainError);
  EXPECT_THROW(inverse_nome(1.0 / (2 * theta_squared_max())), TargetOutOfRange);
  EXPECT_THROW(inverse_nome(1e-320), TargetOutOfRange);
}

TEST(AgmThetaLink, UnitAgm) {
  for (double q : nome_grid()) {
    if (std::abs(q) > 0.5) continue;
    const double p = theta(Nome(q)).value;
    const double m = theta(Nome(-q)).value;
    EXPECT_NEAR(agm_value(p * p, m * m), 1.0, 1e-10) << q;
  }
}

}  // namespace
}  // namespace agmloop
