#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace infoscale {

struct QuadratureSpec {
  std::size_t node_count = 64;  ///< Gauss-Legendre nodes per panel, >= 16
  double abs_tolerance = 1e-12;  ///< > 0
};

/// Evaluation budget for gauss_legendre; exceeding it raises NumericalError.
inline constexpr std::size_t kQuadratureEvaluationCap = std::size_t{1} << 20;

struct GaussLegendreRule {
  std::vector<double> nodes;    ///< ascending, in (-1, 1)
  std::vector<double> weights;
};

/// Nodes and weights of the n-point rule on [-1, 1] by Newton iteration on P_n.
GaussLegendreRule gauss_legendre_rule(std::size_t n);

/// Integral of f over [a, b].
///
/// Composite rule: level k splits [a, b] into 2^k equal panels, each
/// integrated with spec.node_count nodes. Levels are refined until two
/// successive estimates differ by less than spec.abs_tolerance. Throws
/// NumericalError("quadrature did not converge") once the total number of
/// evaluations would exceed kQuadratureEvaluationCap.
double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      const QuadratureSpec& spec = {});

}  // namespace infoscale
