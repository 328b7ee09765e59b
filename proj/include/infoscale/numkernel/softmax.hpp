#pragma once

#include <span>
#include <vector>

#include "infoscale/numkernel/matrix.hpp"

namespace infoscale {

/// Numerically stable softmax of one logits row.
///
/// -inf entries are masked and map to exactly 0. The maximum finite logit
/// is subtracted before exponentiation and the normalizer is accumulated
/// left to right, so the result does not depend on threading.
/// Throws NumericalError("fully masked row") when no entry is finite.
std::vector<double> softmax_row(std::span<const double> logits);

/// Row-wise softmax of a logits matrix.
Matrix softmax_rows(const Matrix& logits);

}  // namespace infoscale
