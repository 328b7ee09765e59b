#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "infoscale/attention/temperature.hpp"
#include "infoscale/numkernel/matrix.hpp"
#include "infoscale/positional.hpp"

namespace infoscale {

enum class SweepKind {
  EntropyVsLength,
  CosHistogram,
  QkHeatmap,
  EtaStarCurve,
  LaplaceErrorCurve,
  MassInWindowVsAlpha,
  DominanceVsDelta,
};

std::string sweep_kind_name(SweepKind kind);
/// Inverse of sweep_kind_name ("entropy-vs-length", ...). Throws ConfigError.
SweepKind parse_sweep_kind(const std::string& name);

/// Parameters for one sweep. Each kind reads only the fields it needs:
///
///   EntropyVsLength      lengths, schedule, d, v, trials, seed
///   CosHistogram         n, d, bins, seed
///   QkHeatmap            n, d, alpha, positional, seed
///   EtaStarCurve         alphas x dims, tol
///   LaplaceErrorCurve    dims
///   MassInWindowVsAlpha  alphas, n, d, window, seed
///   DominanceVsDelta     deltas, n, d, alpha, seed
struct SweepSpec {
  SweepKind kind = SweepKind::EtaStarCurve;
  std::vector<std::size_t> lengths = {64, 128, 256, 512, 1024, 2048, 4096};
  std::vector<double> alphas = {8, 16, 32, 64, 96, 128, 256};
  std::vector<std::size_t> dims = {64};
  std::vector<double> deltas = {0.1, 0.01, 0.001};
  TemperatureSchedule schedule = InfoScale{};
  PositionalScheme positional = RoPE{};
  std::size_t d = 64;
  double v = 1.0;
  std::size_t n = 512;
  std::size_t window = 64;
  double alpha = 128.0;
  std::size_t bins = 100;
  std::size_t trials = 2000;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::string timestamp;  ///< copied into provenance; empty keeps output reproducible
};

struct Provenance {
  std::uint64_t seed = 0;
  std::string version;
  std::string timestamp;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  Provenance provenance;
};

/// Runs every grid point of spec in grid order. Columns by kind:
///
///   EntropyVsLength      n, lambda, H_mc, H_stderr, H_closed, H_taylor
///   CosHistogram         bin_lo, bin_hi, count
///   QkHeatmap            i, j, pre_rope, post_rope
///   EtaStarCurve         alpha, d, theoretical, numerical, abs_error
///   LaplaceErrorCurve    d, exact, approx, rel_error
///   MassInWindowVsAlpha  alpha, mass
///   DominanceVsDelta     delta, correlation
///
/// Entropy lengths use SeededRng(seed).fork(n), so two schedules swept with
/// one seed see the same samples. H_closed and H_taylor are NaN where
/// (lambda v)^2 >= 1. Errors from a grid point are rethrown with the point
/// prepended to the message.
SweepResult run_sweep(const SweepSpec& spec);

struct Histogram {
  std::vector<double> edges;  ///< bins + 1 uniform edges over [-1, 1]
  std::vector<std::size_t> counts;
};

/// Values within 1e-9 outside [-1, 1] are clamped; 1 falls in the last bin.
/// Requires bins >= 2.
Histogram cos_histogram(std::span<const double> values, std::size_t bins);

struct Heatmap {
  Matrix pre_rope;   ///< alpha cos(theta_ij), min-max normalized
  Matrix post_rope;  ///< alpha <R_i q_i, R_j k_j>, min-max normalized
};

/// Each matrix is normalized by its own global min and max; a constant
/// matrix maps to all zeros. Q and K must have unit rows (within 1e-9).
Heatmap qk_heatmap(const Matrix& q, const Matrix& k, double alpha, const PositionalScheme& scheme);

/// Entries rescaled to [0, 1] by global min and max; constant input gives zeros.
Matrix minmax_normalize(const Matrix& m);

/// Cosines of all causal pairs (j <= i) between unit Q and K rows.
std::vector<double> causal_cosines(const Matrix& q, const Matrix& k);

}  // namespace infoscale
