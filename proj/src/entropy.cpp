#include "infoscale/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "infoscale/attention/temperature.hpp"
#include "infoscale/error.hpp"
#include "infoscale/numkernel/softmax.hpp"
#include "infoscale/numkernel/sphere.hpp"

namespace infoscale {
namespace {

constexpr double kSeriesThreshold = 1e-6;

void require_lambdas(std::span<const double> lambdas) {
  detail::require(!lambdas.empty(), "entropy_montecarlo: no lambda values");
  for (double l : lambdas) {
    detail::require(std::isfinite(l), "entropy_montecarlo: lambda must be finite");
  }
}

}  // namespace

std::vector<double> entropy_exact(const Matrix& probs) {
  std::vector<double> out(probs.rows());
  for (std::size_t i = 0; i < probs.rows(); ++i) {
    double sum = 0.0;
    double h = 0.0;
    for (double p : probs.row(i)) {
      detail::require(p >= 0.0 && std::isfinite(p), "entropy_exact: negative or non-finite probability");
      sum += p;
      if (p > 0.0) h -= p * std::log(p);
    }
    detail::require(std::abs(sum - 1.0) <= 1e-8,
                    "entropy_exact: row " + std::to_string(i) + " does not sum to 1");
    out[i] = h;
  }
  return out;
}

double softmax_entropy(std::span<const double> logits) {
  const std::vector<double> p = softmax_row(logits);
  double peak = -std::numeric_limits<double>::infinity();
  for (double x : logits) peak = std::max(peak, x);
  double total = 0.0;
  double weighted = 0.0;
  for (std::size_t j = 0; j < logits.size(); ++j) {
    if (p[j] == 0.0) continue;
    total += std::exp(logits[j] - peak);
    weighted += p[j] * (logits[j] - peak);
  }
  return std::log(total) - weighted;
}

ClosedEntropy entropy_estimate_closed(double lambda, double v, std::size_t d_k, std::size_t n) {
  detail::require(n >= 2, "entropy_estimate_closed: n must be >= 2");
  detail::require(d_k >= 1, "entropy_estimate_closed: d_k must be >= 1");
  const double t = lambda * lambda * v * v;
  detail::require(std::isfinite(t) && t < 1.0, "entropy_estimate_closed: (lambda v)^2 must be < 1");
  const double half_d = 0.5 * static_cast<double>(d_k);
  const double log_n = std::log(static_cast<double>(n));
  double log_ratio = 0.0;
  if (t < kSeriesThreshold) {
    log_ratio = std::log1p(-t + 2.0 * t * t - 5.0 * t * t * t);
  } else {
    log_ratio = -std::log1p(2.0 * t / (std::sqrt(1.0 + 4.0 * t) + 1.0));
  }
  return {log_n + half_d * log_ratio, log_n + half_d * std::log1p(-t)};
}

EntropyReport entropy_report(const Matrix& probs, double lambda, double v, std::size_t d_k) {
  EntropyReport report;
  report.per_row = entropy_exact(probs);
  report.mean = mean_and_stderr(report.per_row).mean;
  report.n = probs.cols();
  report.d_k = d_k;
  report.lambda = lambda;
  const double t = lambda * lambda * v * v;
  if (report.n >= 2 && t < 1.0) {
    const ClosedEntropy closed = entropy_estimate_closed(lambda, v, d_k, report.n);
    report.estimate_exact_form = closed.exact_form;
    report.estimate_taylor = closed.taylor;
  } else {
    report.estimate_exact_form = std::numeric_limits<double>::quiet_NaN();
    report.estimate_taylor = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

std::vector<MeanEstimate> entropy_montecarlo(const SeededRng& rng, std::span<const double> lambdas,
                                             double v, std::size_t d_k, std::size_t n,
                                             std::size_t trials) {
  require_lambdas(lambdas);
  detail::require(trials >= 1, "entropy_montecarlo: trials must be >= 1");
  detail::require(n >= 1, "entropy_montecarlo: n must be >= 1");
  const double radius = embedding_radius(v, d_k);
  detail::require(d_k >= 2, "entropy_montecarlo: d_k must be >= 2");

  // samples[l * trials + t]
  std::vector<double> samples(lambdas.size() * trials);
  parallel_for(trials, [&](std::size_t trial) {
    SeededRng local = rng.fork(trial);
    const Matrix q = sample_hypersphere(local, d_k, radius, 1);
    const Matrix keys = sample_hypersphere(local, d_k, radius, n);
    std::vector<double> raw(n);
    for (std::size_t j = 0; j < n; ++j) raw[j] = dot(q.row(0), keys.row(j));
    std::vector<double> logits(n);
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
      for (std::size_t j = 0; j < n; ++j) logits[j] = lambdas[l] * raw[j];
      samples[l * trials + trial] = softmax_entropy(logits);
    }
  });

  std::vector<MeanEstimate> out;
  out.reserve(lambdas.size());
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    out.push_back(mean_and_stderr(std::span<const double>(samples).subspan(l * trials, trials)));
  }
  return out;
}

MeanEstimate entropy_montecarlo(const SeededRng& rng, double lambda, double v, std::size_t d_k,
                                std::size_t n, std::size_t trials) {
  const double lambdas[] = {lambda};
  return entropy_montecarlo(rng, lambdas, v, d_k, n, trials).front();
}

double info_scale_lambda(std::size_t n_te, std::size_t n_tr, std::size_t d_k, double epsilon) {
  detail::require(d_k >= 2, "info_scale_lambda: d_k must be >= 2");
  return temperature(InfoScale{n_tr, d_k, epsilon}, n_te, d_k) /
         std::sqrt(static_cast<double>(d_k));
}

double cos_theta_star(double lambda, double v) {
  detail::require(lambda > 0.0 && v > 0.0, "cos_theta_star: lambda and v must be > 0");
  const double x = lambda * v;
  detail::require(std::isfinite(x), "cos_theta_star: lambda v must be finite");
  return 2.0 * x / (std::sqrt(4.0 * x * x + 1.0) + 1.0);
}

}  // namespace infoscale
