#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "infoscale/numkernel/quadrature.hpp"
#include "infoscale/numkernel/rng.hpp"
#include "infoscale/numkernel/stats.hpp"

namespace infoscale {

/// Density of the angle between two independent uniform directions in R^n:
/// Gamma(n/2) / (Gamma((n-1)/2) sqrt(pi)) * sin^{n-2}(theta). Requires n_dim >= 3.
double angle_density(double theta, std::size_t n_dim);

/// Maximizer of e^{alpha eta} (1 - eta^2)^{(d-3)/2} on [-1, 1]:
/// 2 alpha / ((d - 3) + sqrt((d - 3)^2 + 4 alpha^2)). Equals 1 at d = 3.
double eta_star_theoretical(double alpha, std::size_t d_k);

/// argmax_1d of alpha eta + (d-3)/2 ln(1 - eta^2) on [-1, 1]. Requires d_k > 3.
double eta_star_numerical(double alpha, std::size_t d_k, double tol);

/// integral over [-1, 1] of (1 - eta^2)^{(d-3)/2}, by quadrature.
double sphere_normalizer_quadrature(std::size_t d_k, const QuadratureSpec& spec = {});
/// The same integral in closed form: sqrt(pi) Gamma((d-1)/2) / Gamma(d/2).
double sphere_normalizer_closed(std::size_t d_k);

/// E[e^{alpha cos theta}] for independent uniform directions in R^d, as I1 / I0.
///
/// Both integrals are taken over theta in [0, pi] with integrand
/// e^{alpha cos theta} sin^{d-2} theta, each divided by its own maximum so
/// large alpha cannot overflow. alpha = 0 gives exactly 1.
/// Throws NumericalError when quadrature does not converge.
double expectation_ratio(double alpha, std::size_t d_k, const QuadratureSpec& spec = {});

/// Monte Carlo estimate of E[e^{alpha cos theta}] over `pairs` independent
/// pairs of uniform unit vectors. Pairs are drawn in fixed blocks from
/// rng.fork(block), so the result does not depend on the thread count.
MeanEstimate expectation_montecarlo(const SeededRng& rng, double alpha, std::size_t d_k,
                                    std::size_t pairs);

struct LaplaceCheck {
  std::size_t d = 0;
  double exact = 0.0;
  double approx = 0.0;
  double rel_error = 0.0;  ///< |approx - exact| / |exact|
};

/// integral over [0, pi] of sin^{d-2} theta against its Laplace estimate sqrt(2 pi / d).
LaplaceCheck laplace_sin_integral_check(std::size_t d_k);

/// integral over [0, pi] of e^{alpha cos theta} sin^{d-2} theta against
///   sqrt(2 pi / (alpha (1/c + c))) e^{alpha c + d ln sin theta*}
/// with c = cos_theta_star(alpha / d, 1). The exact side is quadrature.
LaplaceCheck laplace_boltzmann_integral_check(double alpha, std::size_t d_k,
                                              const QuadratureSpec& spec = {});

/// Mean per-row Spearman correlation between full cosine+RoPE scores and
/// RoPE-only scores on vectors whose pairwise cosines lie in [1 - delta, 1].
///
/// A random unit direction u is drawn, then every query and key is
/// cos(phi) u + sin(phi) w with w a random unit vector orthogonal to u and
/// phi uniform on [0, acos(1 - delta) / 2]. Full scores are
/// alpha <R_i q_i, R_j k_j>, RoPE-only scores alpha <R_i u, R_j u>. Ranks are
/// ordinal (ties broken by index), so delta = 0 and alpha = 0 both give 1.
/// Requires n >= 8, even d_k, 0 <= delta < 1, alpha >= 0.
double dominance_diagnostic(const SeededRng& rng, std::size_t n, std::size_t d_k, double alpha,
                            double delta);

struct TheoremCheck {
  std::vector<std::pair<double, std::size_t>> parameter_grid;  ///< (alpha, d)
  std::vector<double> theoretical;
  std::vector<double> numerical;
  std::vector<double> abs_error;
  double max_abs_error = 0.0;
};

/// eta_star_theoretical against eta_star_numerical over alphas x dims
/// (alpha-major order).
TheoremCheck eta_star_check(std::span<const double> alphas, std::span<const std::size_t> dims,
                            double tol);

}  // namespace infoscale
