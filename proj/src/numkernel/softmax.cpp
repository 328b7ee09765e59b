#include "infoscale/numkernel/softmax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "infoscale/error.hpp"

namespace infoscale {

std::vector<double> softmax_row(std::span<const double> logits) {
  double max_logit = -std::numeric_limits<double>::infinity();
  for (double x : logits) {
    if (std::isnan(x) || x == std::numeric_limits<double>::infinity()) {
      throw ConfigError("softmax_row: logits must be finite or -inf");
    }
    if (x > max_logit) max_logit = x;
  }
  if (!std::isfinite(max_logit)) throw NumericalError("fully masked row");

  std::vector<double> out(logits.size(), 0.0);
  double total = 0.0;
  for (std::size_t j = 0; j < logits.size(); ++j) {
    if (std::isinf(logits[j])) continue;
    out[j] = std::exp(logits[j] - max_logit);
    total += out[j];
  }
  for (double& p : out) p /= total;
  return out;
}

Matrix softmax_rows(const Matrix& logits) {
  Matrix probs(logits.rows(), logits.cols());
  for (std::size_t i = 0; i < logits.rows(); ++i) {
    const auto row = softmax_row(logits.row(i));
    std::copy(row.begin(), row.end(), probs.row(i).begin());
  }
  return probs;
}

}  // namespace infoscale
