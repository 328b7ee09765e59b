#include "infoscale/numkernel/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "infoscale/error.hpp"

namespace infoscale {

GaussLegendreRule gauss_legendre_rule(std::size_t n) {
  detail::require(n >= 1, "gauss_legendre_rule: n must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kd = static_cast<double>(k);
      const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

namespace {

double composite(const std::function<double(double)>& f, double a, double b, std::size_t panels,
                 const GaussLegendreRule& rule) {
  const double width = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    double panel = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double y = f(mid + 0.5 * width * rule.nodes[k]);
      if (!std::isfinite(y)) throw NumericalError("quadrature: integrand is not finite");
      panel += rule.weights[k] * y;
    }
    total += 0.5 * width * panel;
  }
  return total;
}

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      const QuadratureSpec& spec) {
  detail::require(spec.node_count >= 16, "quadrature: node_count must be >= 16");
  detail::require(spec.abs_tolerance > 0.0, "quadrature: abs_tolerance must be > 0");
  detail::require(std::isfinite(a) && std::isfinite(b) && a < b, "quadrature: need a < b");

  const GaussLegendreRule rule = gauss_legendre_rule(spec.node_count);
  std::size_t panels = 1;
  std::size_t evaluations = spec.node_count;
  double previous = composite(f, a, b, panels, rule);
  while (true) {
    panels *= 2;
    evaluations += panels * spec.node_count;
    if (evaluations > kQuadratureEvaluationCap) {
      throw NumericalError("quadrature did not converge");
    }
    const double current = composite(f, a, b, panels, rule);
    if (std::abs(current - previous) < spec.abs_tolerance) return current;
    previous = current;
  }
}

}  // namespace infoscale
