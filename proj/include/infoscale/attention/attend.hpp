#pragma once

#include <cstddef>

#include "infoscale/attention/mask.hpp"
#include "infoscale/attention/temperature.hpp"
#include "infoscale/numkernel/matrix.hpp"
#include "infoscale/positional.hpp"

namespace infoscale {

/// Recipe for one single-head attention forward pass.
struct AttentionSpec {
  std::size_t n = 0;    ///< sequence length (also the test length n_te)
  std::size_t d_k = 0;  ///< query/key head dimension
  TemperatureSchedule schedule = Vanilla{};
  MaskSpec mask = CausalMask{};
  PositionalScheme positional = NoPE{};
  bool cosine = false;
  double cos_scale = 128.0;  ///< CosScale alpha; used only when cosine is set
};

/// Throws ConfigError on a spec that violates its invariants.
void validate(const AttentionSpec& spec);

struct AttentionResult {
  Matrix output;  ///< n x d_v
  Matrix probs;   ///< n x n, rows sum to 1, masked cells exactly 0
};

/// Pre-softmax logits for Q, K under spec (mask and ALiBi bias included).
///
/// Dot-product path:
///   temperature(schedule, n, d_k) / sqrt(d_k) * scores + bias + mask
/// Cosine path: rows of Q and K are normalized first, then rotated, and
///   temperature(schedule, n, d_k) * cos_scale * cos + bias + mask
/// where scores / cos come from rope_score_matrix.
Matrix attention_logits(const Matrix& q, const Matrix& k, const AttentionSpec& spec);

/// Full forward pass. Throws ConfigError on shape or spec errors and
/// NumericalError("fully masked row") if a row has no allowed key.
AttentionResult attend(const Matrix& q, const Matrix& k, const Matrix& v,
                       const AttentionSpec& spec);

/// Mean over rows of the probability mass on keys with 0 <= i - j < w.
double mass_in_window(const Matrix& probs, std::size_t w);

}  // namespace infoscale
