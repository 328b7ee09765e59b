#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "infoscale/infoscale.hpp"

using namespace infoscale;

TEST(CosHistogram, Examples) {
  const std::vector<double> ones(17, 1.0);
  const Histogram h = cos_histogram(ones, 10);
  EXPECT_EQ(h.counts.back(), 17u);
  EXPECT_EQ(h.edges.front(), -1.0);
  EXPECT_EQ(h.edges.back(), 1.0);
  EXPECT_EQ(h.edges.size(), 11u);

  const std::vector<double> edge{-1.0 - 5e-10, 1.0 + 5e-10, 0.0};
  const Histogram e = cos_histogram(edge, 4);
  EXPECT_EQ(e.counts[0], 1u);
  EXPECT_EQ(e.counts[2], 1u);
  EXPECT_EQ(e.counts[3], 1u);
  EXPECT_THROW(cos_histogram(std::vector<double>{1.1}, 4), ConfigError);
  EXPECT_THROW(cos_histogram(ones, 1), ConfigError);
}

TEST(CosHistogram, UniformCountsWithinBinomialBand) {
  SeededRng rng(61);
  const std::size_t n = 100000;
  std::vector<double> values(n);
  for (double& x : values) x = rng.uniform(-1.0, 1.0);
  const Histogram h = cos_histogram(values, 20);
  std::size_t total = 0;
  const double mean = n / 20.0;
  const double sigma = std::sqrt(n * 0.05 * 0.95);
  for (std::size_t c : h.counts) {
    total += c;
    EXPECT_LT(std::abs(static_cast<double>(c) - mean), 4.0 * sigma);
  }
  EXPECT_EQ(total, n);
}

TEST(Heatmap, DegenerateAndRange) {
  SeededRng rng(62);
  const Matrix one = sample_hypersphere(rng, 16, 1.0, 1);
  Matrix same(5, 16);
  for (std::size_t i = 0; i < 5; ++i) std::copy(one.row(0).begin(), one.row(0).end(), same.row(i).begin());
  const Heatmap h = qk_heatmap(same, same, 128.0, NoPE{});
  for (double x : h.pre_rope.data()) EXPECT_EQ(x, 0.0);

  const Matrix q = sample_hypersphere(rng, 16, 1.0, 30);
  const Matrix k = sample_hypersphere(rng, 16, 1.0, 30);
  const Heatmap r = qk_heatmap(q, k, 64.0, RoPE{});
  for (const Matrix* m : {&r.pre_rope, &r.post_rope}) {
    double lo = 1.0;
    double hi = 0.0;
    for (double x : m->data()) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    EXPECT_EQ(lo, 0.0);
    EXPECT_EQ(hi, 1.0);
  }
  EXPECT_THROW(qk_heatmap(sample_hypersphere(rng, 16, 2.0, 3), sample_hypersphere(rng, 16, 2.0, 3),
                          1.0, NoPE{}),
               ConfigError);
}

TEST(Heatmap, RopeBandingRegression) {
  const auto& f = regression_fixtures()["heatmap_banding"];
  SweepSpec spec;
  spec.kind = SweepKind::QkHeatmap;
  spec.n = f["n"].get<std::size_t>();
  spec.d = f["d"].get<std::size_t>();
  spec.alpha = f["alpha"].get<double>();
  spec.seed = f["seed"].get<std::uint64_t>();
  const SweepResult r = run_sweep(spec);
  std::vector<double> sum(spec.n, 0.0);
  std::vector<double> count(spec.n, 0.0);
  for (const auto& row : r.rows) {
    const auto k = static_cast<std::size_t>(std::abs(row[0] - row[1]));
    sum[k] += row[3];
    count[k] += 1.0;
  }
  const auto offsets = f["offsets"].get<std::vector<std::size_t>>();
  const auto expected = f["post_rope_offset_mean"].get<std::vector<double>>();
  double lo = 1.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const double mean = sum[offsets[i]] / count[offsets[i]];
    EXPECT_NEAR(mean, expected[i], f["abs_tol"].get<double>());
    lo = std::min(lo, mean);
    hi = std::max(hi, mean);
  }
  EXPECT_GT(hi - lo, 0.5);
}

TEST(Sweep, EtaStarCurveDelegates) {
  SweepSpec spec;
  spec.kind = SweepKind::EtaStarCurve;
  const SweepResult r = run_sweep(spec);
  ASSERT_EQ(r.columns.size(), 5u);
  ASSERT_EQ(r.rows.size(), 7u);
  for (const auto& row : r.rows) {
    ASSERT_EQ(row.size(), r.columns.size());
    EXPECT_EQ(row[2], eta_star_theoretical(row[0], 64));
    EXPECT_EQ(row[3], eta_star_numerical(row[0], 64, spec.tol));
  }
}

TEST(Sweep, EntropyFixedScheduleDilutes) {
  SweepSpec spec;
  spec.kind = SweepKind::EntropyVsLength;
  spec.schedule = FixedTemperature{1.0};
  spec.lengths = {64, 128, 256, 512};
  spec.trials = 100;
  spec.seed = 3;
  const SweepResult r = run_sweep(spec);
  ASSERT_EQ(r.columns, (std::vector<std::string>{"n", "lambda", "H_mc", "H_stderr", "H_closed", "H_taylor"}));
  for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_GT(r.rows[i][2], r.rows[i - 1][2]);
  // delegation: row 2 equals a direct Monte Carlo call on the length-derived stream
  const MeanEstimate direct = entropy_montecarlo(SeededRng(3).fork(256), 0.125, 1.0, 64, 256, 100);
  EXPECT_EQ(r.rows[2][2], direct.mean);
  EXPECT_EQ(r.rows[2][1], 0.125);
}

TEST(Sweep, ClosedColumnsNaNOutsideDomain) {
  SweepSpec spec;
  spec.kind = SweepKind::EntropyVsLength;
  spec.schedule = LogLength{};
  spec.lengths = {4096};
  spec.trials = 2;
  const SweepResult r = run_sweep(spec);
  EXPECT_TRUE(std::isnan(r.rows[0][4]));
  EXPECT_TRUE(std::isnan(r.rows[0][5]));
}

TEST(Sweep, MassAndDominanceMatchFixtures) {
  const auto& m = regression_fixtures()["mass_in_window_vs_alpha"];
  SweepSpec spec;
  spec.kind = SweepKind::MassInWindowVsAlpha;
  spec.alphas = m["alphas"].get<std::vector<double>>();
  spec.n = m["n"].get<std::size_t>();
  spec.d = m["d"].get<std::size_t>();
  spec.window = m["window"].get<std::size_t>();
  spec.seed = m["seed"].get<std::uint64_t>();
  const SweepResult r = run_sweep(spec);
  const auto expected = m["mass"].get<std::vector<double>>();
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(r.rows[i][1], expected[i], m["rel_tol"].get<double>() * expected[i]);
    if (i > 0) EXPECT_GE(r.rows[i][1], r.rows[i - 1][1]);
  }
}

TEST(Sweep, LaplaceAndHistogramShapes) {
  SweepSpec spec;
  spec.kind = SweepKind::LaplaceErrorCurve;
  spec.dims = {16, 32, 64};
  const SweepResult r = run_sweep(spec);
  EXPECT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[1][3], laplace_sin_integral_check(32).rel_error);

  spec.kind = SweepKind::CosHistogram;
  spec.n = 40;
  spec.bins = 10;
  const SweepResult h = run_sweep(spec);
  double total = 0.0;
  for (const auto& row : h.rows) total += row[2];
  EXPECT_EQ(h.rows.size(), 10u);
  EXPECT_EQ(total, 40.0 * 41.0 / 2.0);
}

TEST(Sweep, Errors) {
  SweepSpec spec;
  spec.kind = SweepKind::EntropyVsLength;
  spec.lengths.clear();
  EXPECT_THROW(run_sweep(spec), ConfigError);

  spec.kind = SweepKind::EtaStarCurve;
  spec.alphas = {8.0, -1.0};
  try {
    run_sweep(spec);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("eta-star grid"), std::string::npos);
  }

  spec.kind = SweepKind::DominanceVsDelta;
  spec.deltas = {0.1, 2.0};
  try {
    run_sweep(spec);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("delta=2"), std::string::npos);
  }
  EXPECT_EQ(parse_sweep_kind(sweep_kind_name(SweepKind::QkHeatmap)), SweepKind::QkHeatmap);
  EXPECT_THROW(parse_sweep_kind("nope"), ConfigError);
}

TEST(Sweep, Deterministic) {
  SweepSpec spec;
  spec.kind = SweepKind::EntropyVsLength;
  spec.lengths = {64, 300};
  spec.trials = 30;
  spec.seed = 8;
  const SweepResult a = run_sweep(spec);
  const SweepResult b = run_sweep(spec);
  EXPECT_EQ(a.rows, b.rows);
  EXPECT_EQ(a.provenance.version, INFOSCALE_VERSION);
  EXPECT_EQ(a.provenance.timestamp, "");
}
