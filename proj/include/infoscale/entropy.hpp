#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "infoscale/numkernel/matrix.hpp"
#include "infoscale/numkernel/rng.hpp"
#include "infoscale/numkernel/stats.hpp"

namespace infoscale {

/// Natural-log entropy of each probability row, with 0 ln 0 = 0.
/// Throws ConfigError on a negative entry or a row whose sum is off by more than 1e-8.
std::vector<double> entropy_exact(const Matrix& probs);

/// Entropy of softmax(logits) computed from the logits themselves:
/// H = logsumexp(x) - sum_j p_j x_j. Uniform logits give ln(count) exactly.
double softmax_entropy(std::span<const double> logits);

struct ClosedEntropy {
  double exact_form = 0.0;  ///< ln n + (d/2) ln((sqrt(4t+1) - 1) / (2t))
  double taylor = 0.0;      ///< ln n + (d/2) ln(1 - t)
};

/// Closed-form entropy estimates with t = (lambda v)^2.
///
/// The exact form is evaluated as ln n - (d/2) log1p(2t / (sqrt(1+4t) + 1)),
/// switching to the series log1p(-t + 2t^2 - 5t^3) for t < 1e-6.
/// t = 0 gives ln n for both. Throws ConfigError for t >= 1 or n < 2.
ClosedEntropy entropy_estimate_closed(double lambda, double v, std::size_t d_k, std::size_t n);

struct EntropyReport {
  std::vector<double> per_row;
  double mean = 0.0;
  std::size_t n = 0;
  std::size_t d_k = 0;
  double lambda = 0.0;
  double estimate_exact_form = 0.0;  ///< NaN when (lambda v)^2 >= 1
  double estimate_taylor = 0.0;      ///< NaN when (lambda v)^2 >= 1
};

/// Per-row entropies of probs next to the closed-form estimates for n = probs.cols().
EntropyReport entropy_report(const Matrix& probs, double lambda, double v, std::size_t d_k);

/// Mean softmax entropy over `trials` independent draws of one query and n keys
/// on the sphere of radius sqrt(v d_k), with logits lambda <q, k_j>.
///
/// Trial t draws from rng.fork(t), so the result does not depend on the
/// thread count or on how far rng has advanced.
MeanEstimate entropy_montecarlo(const SeededRng& rng, double lambda, double v, std::size_t d_k,
                                std::size_t n, std::size_t trials);

/// Same samples, several lambdas: result[i] belongs to lambdas[i].
std::vector<MeanEstimate> entropy_montecarlo(const SeededRng& rng, std::span<const double> lambdas,
                                             double v, std::size_t d_k, std::size_t n,
                                             std::size_t trials);

/// Absolute InfoScale lambda: temperature(InfoScale{n_tr, d_k, epsilon}, n_te) / sqrt(d_k).
double info_scale_lambda(std::size_t n_te, std::size_t n_tr, std::size_t d_k, double epsilon);

/// cos(theta) at the maximum of lambda v cos(theta) + ln sin(theta):
/// (sqrt(4 x^2 + 1) - 1) / (2x) with x = lambda v, evaluated as 2x / (sqrt(4x^2 + 1) + 1).
double cos_theta_star(double lambda, double v);

}  // namespace infoscale
