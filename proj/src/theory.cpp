#include "infoscale/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "infoscale/entropy.hpp"
#include "infoscale/error.hpp"
#include "infoscale/numkernel/matrix.hpp"
#include "infoscale/numkernel/optimize.hpp"
#include "infoscale/numkernel/special.hpp"
#include "infoscale/numkernel/sphere.hpp"
#include "infoscale/positional.hpp"

namespace infoscale {
namespace {

constexpr std::size_t kPairsPerBlock = 4096;

// ln of integral over [0, pi] of e^{alpha cos t} sin^{d-2} t, via its maximum.
double log_boltzmann_integral(double alpha, std::size_t d_k, const QuadratureSpec& spec) {
  const double m = static_cast<double>(d_k) - 2.0;
  const double c = 2.0 * alpha / (m + std::sqrt(m * m + 4.0 * alpha * alpha));
  const double peak = alpha * c + 0.5 * m * std::log1p(-c * c);
  const double integral = gauss_legendre(
      [&](double t) {
        const double s = std::sin(t);
        if (s <= 0.0) return 0.0;
        return std::exp(alpha * std::cos(t) + m * std::log(s) - peak);
      },
      0.0, std::numbers::pi, spec);
  return peak + std::log(integral);
}

double log_sphere_normalizer(std::size_t d_k) {
  const double d = static_cast<double>(d_k);
  return 0.5 * std::log(std::numbers::pi) + log_gamma(0.5 * (d - 1.0)) - log_gamma(0.5 * d);
}

void require_eta_args(double alpha, std::size_t d_k) {
  detail::require(alpha > 0.0 && std::isfinite(alpha), "eta_star: alpha must be > 0");
  detail::require(d_k >= 3, "eta_star: d_k must be >= 3");
}

}  // namespace

double angle_density(double theta, std::size_t n_dim) {
  detail::require(n_dim >= 3, "angle_density: n_dim must be >= 3");
  detail::require(theta >= 0.0 && theta <= std::numbers::pi, "angle_density: theta outside [0, pi]");
  const double n = static_cast<double>(n_dim);
  const double s = std::sin(theta);
  if (s <= 0.0) return 0.0;
  return std::exp((n - 2.0) * std::log(s) - log_sphere_normalizer(n_dim));
}

double eta_star_theoretical(double alpha, std::size_t d_k) {
  require_eta_args(alpha, d_k);
  const double a = static_cast<double>(d_k) - 3.0;
  return 2.0 * alpha / (a + std::sqrt(a * a + 4.0 * alpha * alpha));
}

double eta_star_numerical(double alpha, std::size_t d_k, double tol) {
  require_eta_args(alpha, d_k);
  detail::require(d_k > 3, "eta_star_numerical: d_k must be > 3");
  const double half = 0.5 * (static_cast<double>(d_k) - 3.0);
  return argmax_1d([&](double eta) { return alpha * eta + half * std::log1p(-eta * eta); }, -1.0,
                   1.0, tol);
}

double sphere_normalizer_quadrature(std::size_t d_k, const QuadratureSpec& spec) {
  detail::require(d_k >= 3, "sphere normalizer: d_k must be >= 3");
  const double half = 0.5 * (static_cast<double>(d_k) - 3.0);
  return gauss_legendre([&](double eta) { return std::pow(1.0 - eta * eta, half); }, -1.0, 1.0,
                        spec);
}

double sphere_normalizer_closed(std::size_t d_k) {
  detail::require(d_k >= 3, "sphere normalizer: d_k must be >= 3");
  return std::exp(log_sphere_normalizer(d_k));
}

double expectation_ratio(double alpha, std::size_t d_k, const QuadratureSpec& spec) {
  detail::require(alpha >= 0.0 && std::isfinite(alpha), "expectation_ratio: alpha must be >= 0");
  detail::require(d_k > 3, "expectation_ratio: d_k must be > 3");
  return std::exp(log_boltzmann_integral(alpha, d_k, spec) - log_boltzmann_integral(0.0, d_k, spec));
}

MeanEstimate expectation_montecarlo(const SeededRng& rng, double alpha, std::size_t d_k,
                                    std::size_t pairs) {
  detail::require(pairs >= 1, "expectation_montecarlo: pairs must be >= 1");
  detail::require(d_k >= 2, "expectation_montecarlo: d_k must be >= 2");
  detail::require(std::isfinite(alpha), "expectation_montecarlo: alpha must be finite");
  std::vector<double> samples(pairs);
  const std::size_t blocks = (pairs + kPairsPerBlock - 1) / kPairsPerBlock;
  parallel_for(blocks, [&](std::size_t b) {
    SeededRng local = rng.fork(b);
    const std::size_t begin = b * kPairsPerBlock;
    const std::size_t end = std::min(pairs, begin + kPairsPerBlock);
    for (std::size_t p = begin; p < end; ++p) {
      const Matrix x = sample_hypersphere(local, d_k, 1.0, 2);
      samples[p] = std::exp(alpha * dot(x.row(0), x.row(1)));
    }
  });
  return mean_and_stderr(samples);
}

LaplaceCheck laplace_sin_integral_check(std::size_t d_k) {
  detail::require(d_k >= 4, "laplace_sin_integral_check: d_k must be >= 4");
  LaplaceCheck check;
  check.d = d_k;
  check.exact = sphere_normalizer_closed(d_k);
  check.approx = std::sqrt(2.0 * std::numbers::pi / static_cast<double>(d_k));
  check.rel_error = std::abs(check.approx - check.exact) / check.exact;
  return check;
}

LaplaceCheck laplace_boltzmann_integral_check(double alpha, std::size_t d_k,
                                              const QuadratureSpec& spec) {
  detail::require(alpha > 0.0 && std::isfinite(alpha), "laplace_boltzmann: alpha must be > 0");
  detail::require(d_k >= 4, "laplace_boltzmann: d_k must be >= 4");
  const double d = static_cast<double>(d_k);
  const double c = cos_theta_star(alpha / d, 1.0);
  const double log_approx = 0.5 * std::log(2.0 * std::numbers::pi / (alpha * (1.0 / c + c))) +
                            alpha * c + 0.5 * d * std::log1p(-c * c);
  const double log_exact = log_boltzmann_integral(alpha, d_k, spec);
  LaplaceCheck check;
  check.d = d_k;
  check.exact = std::exp(log_exact);
  check.approx = std::exp(log_approx);
  check.rel_error = std::abs(std::expm1(log_approx - log_exact));
  return check;
}

double dominance_diagnostic(const SeededRng& rng, std::size_t n, std::size_t d_k, double alpha,
                            double delta) {
  detail::require(n >= 8, "dominance_diagnostic: n must be >= 8");
  detail::require(d_k >= 2 && d_k % 2 == 0, "dominance_diagnostic: d_k must be even");
  detail::require(alpha >= 0.0 && std::isfinite(alpha), "dominance_diagnostic: alpha must be >= 0");
  detail::require(delta >= 0.0 && delta < 1.0, "dominance_diagnostic: delta must be in [0, 1)");

  SeededRng local = rng.fork(0);
  const Matrix u = sample_hypersphere(local, d_k, 1.0, 1);
  const double max_phi = 0.5 * std::acos(1.0 - delta);

  auto converged = [&](std::size_t count) {
    Matrix out(count, d_k);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<double> w(d_k);
      double len = 0.0;
      while (len < 1e-6) {
        for (double& x : w) x = local.normal();
        const double along = dot(w, u.row(0));
        for (std::size_t c = 0; c < d_k; ++c) w[c] -= along * u(0, c);
        len = norm(w);
      }
      const double phi = local.uniform(0.0, max_phi);
      const double cp = std::cos(phi);
      const double sp = std::sin(phi);
      for (std::size_t c = 0; c < d_k; ++c) out(i, c) = cp * u(0, c) + sp * (w[c] / len);
    }
    return out;
  };
  const Matrix q = converged(n);
  const Matrix k = converged(n);
  Matrix base(n, d_k);
  for (std::size_t i = 0; i < n; ++i) std::copy(u.row(0).begin(), u.row(0).end(), base.row(i).begin());

  Matrix full = rope_score_matrix(q, k, RoPE{});
  Matrix rope_only = rope_score_matrix(base, base, RoPE{});
  for (double& x : full.data()) x *= alpha;
  for (double& x : rope_only.data()) x *= alpha;

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += spearman_ordinal(full.row(i), rope_only.row(i));
  return total / static_cast<double>(n);
}

TheoremCheck eta_star_check(std::span<const double> alphas, std::span<const std::size_t> dims,
                            double tol) {
  detail::require(!alphas.empty() && !dims.empty(), "eta_star_check: empty grid");
  TheoremCheck check;
  for (double a : alphas) {
    for (std::size_t d : dims) check.parameter_grid.emplace_back(a, d);
  }
  const std::size_t count = check.parameter_grid.size();
  check.theoretical.resize(count);
  check.numerical.resize(count);
  check.abs_error.resize(count);
  for (const auto& [a, d] : check.parameter_grid) {
    require_eta_args(a, d);
    detail::require(d > 3, "eta_star_check: d must be > 3");
  }
  parallel_for(count, [&](std::size_t i) {
    const auto [a, d] = check.parameter_grid[i];
    check.theoretical[i] = eta_star_theoretical(a, d);
    check.numerical[i] = eta_star_numerical(a, d, tol);
    check.abs_error[i] = std::abs(check.theoretical[i] - check.numerical[i]);
  });
  for (double e : check.abs_error) check.max_abs_error = std::max(check.max_abs_error, e);
  return check;
}

}  // namespace infoscale
