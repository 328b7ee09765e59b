#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "infoscale/numkernel.hpp"
#include "infoscale/theory.hpp"

using namespace infoscale;

TEST(AngleDensity, Examples) {
  for (double t : {0.1, 1.0, 2.0, 3.0}) EXPECT_NEAR(angle_density(t, 3), std::sin(t) / 2.0, 1e-15);
  for (std::size_t n : {3u, 5u, 64u}) {
    EXPECT_GT(angle_density(std::numbers::pi / 2, n), angle_density(std::numbers::pi / 2 - 0.01, n));
    EXPECT_GT(angle_density(std::numbers::pi / 2, n), angle_density(std::numbers::pi / 2 + 0.01, n));
  }
  EXPECT_THROW(angle_density(1.0, 2), ConfigError);
  EXPECT_THROW(angle_density(-0.1, 8), ConfigError);
}

TEST(AngleDensity, IntegratesToOne) {
  for (std::size_t d : {3u, 8u, 64u, 128u, 512u}) {
    const double total =
        gauss_legendre([&](double t) { return angle_density(t, d); }, 0.0, std::numbers::pi);
    EXPECT_NEAR(total, 1.0, 1e-10) << d;
  }
}

TEST(EtaStar, TheoreticalExamples) {
  EXPECT_EQ(eta_star_theoretical(5.0, 3), 1.0);
  EXPECT_NEAR(eta_star_theoretical(8.0, 64), 0.12896625635689034, 1e-15);
  EXPECT_NEAR(eta_star_theoretical(256.0, 64), 0.8879316110016637, 1e-15);
  EXPECT_NEAR(eta_star_theoretical(1.0, 4), 0.6180339887498948482, 1e-15);
  EXPECT_THROW(eta_star_theoretical(0.0, 64), ConfigError);
}

TEST(EtaStar, Stationarity) {
  SeededRng rng(51);
  for (int rep = 0; rep < 1000; ++rep) {
    const double alpha = rng.uniform(1e-3, 1e3);
    const std::size_t d = 4 + rng.next_u64() % 1020;
    const double e = eta_star_theoretical(alpha, d);
    ASSERT_GT(e, 0.0);
    ASSERT_LT(e, 1.0);
    const double residual = alpha * (1.0 - e * e) - (static_cast<double>(d) - 3.0) * e;
    ASSERT_NEAR(residual, 0.0, 1e-10 * std::max(1.0, alpha)) << alpha << " " << d;
  }
}

TEST(EtaStar, Monotone) {
  for (std::size_t d : {8u, 32u, 64u, 128u}) {
    double prev = 0.0;
    for (double a = 0.5; a < 2000.0; a *= 1.5) {
      const double e = eta_star_theoretical(a, d);
      EXPECT_GT(e, prev);
      prev = e;
    }
  }
  for (double a : {8.0, 64.0, 256.0}) {
    double prev = 1.0;
    for (std::size_t d = 4; d < 600; d += 13) {
      const double e = eta_star_theoretical(a, d);
      EXPECT_LT(e, prev);
      prev = e;
    }
  }
  EXPECT_GT(eta_star_theoretical(1e9, 64), 1.0 - 1e-7);
}

TEST(EtaStar, NumericalAgrees) {
  EXPECT_NEAR(eta_star_numerical(8.0, 64, 1e-8), eta_star_theoretical(8.0, 64), 1e-8);
  EXPECT_NEAR(eta_star_numerical(1.0, 4, 1e-9), eta_star_theoretical(1.0, 4), 1e-8);
  // exact maximizer 0.99996950046512..., asymptote 1 - 61 / 2e6
  EXPECT_NEAR(eta_star_numerical(1e6, 64, 1e-9), 1.0 - 61.0 / 2e6, 1e-8);
  EXPECT_THROW(eta_star_numerical(8.0, 3, 1e-8), ConfigError);
}

TEST(EtaStar, GridCheck) {
  const std::vector<double> alphas{8, 16, 32, 64, 96, 128, 256};
  const std::vector<std::size_t> dims{32, 64, 128};
  const TheoremCheck c = eta_star_check(alphas, dims, 1e-9);
  ASSERT_EQ(c.parameter_grid.size(), 21u);
  EXPECT_EQ(c.parameter_grid[1], std::make_pair(8.0, std::size_t{64}));
  for (std::size_t i = 0; i < 21; ++i) {
    EXPECT_EQ(c.abs_error[i], std::abs(c.theoretical[i] - c.numerical[i]));
  }
  EXPECT_LE(c.max_abs_error, 1e-6);
}

TEST(SphereNormalizer, QuadratureMatchesGamma) {
  for (std::size_t d : {3u, 8u, 64u, 128u}) {
    EXPECT_NEAR(sphere_normalizer_quadrature(d) / sphere_normalizer_closed(d), 1.0, 1e-10) << d;
  }
  EXPECT_NEAR(sphere_normalizer_closed(3), 2.0, 1e-15);
  EXPECT_NEAR(sphere_normalizer_closed(8) / 0.98174770424681038702, 1.0, 1e-14);
  EXPECT_NEAR(sphere_normalizer_closed(64) / 0.31706111160137860007, 1.0, 1e-13);
}

TEST(ExpectationRatio, Examples) {
  EXPECT_EQ(expectation_ratio(0.0, 64), 1.0);
  EXPECT_NEAR(expectation_ratio(8.0, 64) / 1.6426067357395284817, 1.0, 1e-12);
  EXPECT_NEAR(expectation_ratio(32.0, 32) / 190295.35346554857901, 1.0, 1e-11);
  EXPECT_NEAR(expectation_ratio(1.0, 32) / 1.0157404233567121714, 1.0, 1e-12);
}

TEST(ExpectationRatio, StrictlyIncreasingInAlpha) {
  for (std::size_t d : {8u, 64u}) {
    double prev = 1.0;
    for (double a : {0.01, 0.5, 1.0, 4.0, 16.0, 64.0, 256.0}) {
      const double r = expectation_ratio(a, d);
      EXPECT_GT(r, prev) << a;
      prev = r;
    }
  }
}

TEST(ExpectationRatio, AgreesWithMonteCarlo) {
  const double quad = expectation_ratio(8.0, 64);
  const MeanEstimate mc = expectation_montecarlo(SeededRng(99), 8.0, 64, 100000);
  EXPECT_LE(std::abs(mc.mean - quad), 3.0 * mc.stderr_);
}

TEST(Laplace, SinIntegral) {
  const double exact[] = {0.6580777580029401, 0.4538484488381705, 0.3170611116013786,
                          0.2228655673209082, 0.15712511978291217};
  const double rel[] = {0.04774616519564787, 0.02365323962056603, 0.011772422211135993,
                        0.005872759859014386, 0.0029330295442979886};
  const std::size_t dims[] = {16, 32, 64, 128, 256};
  double prev = 1.0;
  for (int i = 0; i < 5; ++i) {
    const LaplaceCheck c = laplace_sin_integral_check(dims[i]);
    EXPECT_NEAR(c.exact / exact[i], 1.0, 1e-12);
    EXPECT_NEAR(c.rel_error, rel[i], 1e-11);
    EXPECT_EQ(c.rel_error, std::abs(c.approx - c.exact) / c.exact);
    EXPECT_LT(c.rel_error, prev);
    prev = c.rel_error;
  }
  EXPECT_LT(laplace_sin_integral_check(1 << 16).rel_error, 1e-4);
  EXPECT_THROW(laplace_sin_integral_check(3), ConfigError);
}

TEST(Laplace, BoltzmannIntegral) {
  const auto& f = regression_fixtures()["laplace_boltzmann_d64_lv0.1"];
  const LaplaceCheck c = laplace_boltzmann_integral_check(f["alpha"].get<double>(), 64);
  EXPECT_NEAR(c.exact / f["exact"].get<double>(), 1.0, f["rel_tol"].get<double>());
  EXPECT_NEAR(c.rel_error, f["rel_error"].get<double>(), f["rel_tol"].get<double>());

  EXPECT_LT(laplace_boltzmann_integral_check(0.05 * 128, 128).rel_error,
            laplace_boltzmann_integral_check(0.05 * 32, 32).rel_error);

  // small alpha: approaches the sin-integral check
  const LaplaceCheck tiny = laplace_boltzmann_integral_check(1e-8, 64);
  const LaplaceCheck sin = laplace_sin_integral_check(64);
  EXPECT_NEAR(tiny.approx, sin.approx, 1e-7);
  EXPECT_NEAR(tiny.exact, sin.exact, 1e-7);
}

TEST(Dominance, Examples) {
  const SeededRng rng(0);
  EXPECT_EQ(dominance_diagnostic(rng, 64, 32, 128.0, 0.0), 1.0);
  EXPECT_EQ(dominance_diagnostic(rng, 64, 32, 0.0, 0.1), 1.0);
  const double r = dominance_diagnostic(rng, 64, 32, 128.0, 0.5);
  EXPECT_GE(r, -1.0);
  EXPECT_LE(r, 1.0);
  EXPECT_THROW(dominance_diagnostic(rng, 4, 32, 128.0, 0.1), ConfigError);
  EXPECT_THROW(dominance_diagnostic(rng, 64, 31, 128.0, 0.1), ConfigError);
  EXPECT_THROW(dominance_diagnostic(rng, 64, 32, 128.0, 1.0), ConfigError);
}

TEST(Dominance, SeededRegression) {
  const auto& f = regression_fixtures()["dominance_vs_delta"];
  const SeededRng rng(f["seed"].get<std::uint64_t>());
  const auto deltas = f["deltas"].get<std::vector<double>>();
  const auto expected = f["correlation"].get<std::vector<double>>();
  double prev = -1.0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double r = dominance_diagnostic(rng, f["n"].get<std::size_t>(), f["d"].get<std::size_t>(),
                                          f["alpha"].get<double>(), deltas[i]);
    EXPECT_NEAR(r, expected[i], f["abs_tol"].get<double>());
    EXPECT_GE(r, prev);
    prev = r;
  }
}
