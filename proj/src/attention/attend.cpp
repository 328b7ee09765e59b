#include "infoscale/attention/attend.hpp"

#include <cmath>

#include "infoscale/error.hpp"
#include "infoscale/numkernel/softmax.hpp"

namespace infoscale {

void validate(const AttentionSpec& spec) {
  detail::require(spec.n >= 1, "attention: n must be >= 1");
  detail::require(spec.d_k >= 1, "attention: d_k must be >= 1");
  validate(spec.schedule);
  validate(spec.mask, spec.n);
  validate(spec.positional);
  if (is_rotary(spec.positional)) {
    detail::require(spec.d_k % 2 == 0, "attention: rotary schemes need an even d_k");
  }
  if (spec.cosine) {
    detail::require(spec.cos_scale > 0.0 && std::isfinite(spec.cos_scale),
                    "attention: cos_scale must be > 0");
  }
}

Matrix attention_logits(const Matrix& q, const Matrix& k, const AttentionSpec& spec) {
  validate(spec);
  detail::require(q.rows() == spec.n && k.rows() == spec.n, "attention: Q/K must have n rows");
  detail::require(q.cols() == spec.d_k && k.cols() == spec.d_k,
                  "attention: Q/K must have d_k columns");

  // temperature() needs n_te >= 2; a single token attends to itself regardless
  const double temp = spec.n >= 2 ? temperature(spec.schedule, spec.n, spec.d_k) : 1.0;

  Matrix logits;
  double scale = 0.0;
  if (spec.cosine) {
    logits = rope_score_matrix(normalize_rows(q), normalize_rows(k), spec.positional);
    scale = temp * spec.cos_scale;
  } else {
    logits = rope_score_matrix(q, k, spec.positional);
    scale = temp / std::sqrt(static_cast<double>(spec.d_k));
  }
  for (double& x : logits.data()) x *= scale;

  if (const auto* alibi = std::get_if<ALiBi>(&spec.positional)) {
    const Matrix bias = alibi_bias(spec.n, alibi->head, alibi->head_count);
    for (std::size_t idx = 0; idx < logits.size(); ++idx) logits.data()[idx] += bias.data()[idx];
  }
  const Matrix mask = build_mask(spec.mask, spec.n);
  for (std::size_t idx = 0; idx < logits.size(); ++idx) logits.data()[idx] += mask.data()[idx];
  return logits;
}

AttentionResult attend(const Matrix& q, const Matrix& k, const Matrix& v,
                       const AttentionSpec& spec) {
  detail::require(v.rows() == spec.n, "attention: V must have n rows");
  AttentionResult result;
  result.probs = softmax_rows(attention_logits(q, k, spec));
  result.output = matmul(result.probs, v);
  return result;
}

double mass_in_window(const Matrix& probs, std::size_t w) {
  detail::require(probs.rows() >= 1, "mass_in_window: empty matrix");
  double total = 0.0;
  for (std::size_t i = 0; i < probs.rows(); ++i) {
    double row_mass = 0.0;
    for (std::size_t j = 0; j <= i && j < probs.cols(); ++j) {
      if (i - j < w) row_mass += probs(i, j);
    }
    total += row_mass;
  }
  return total / static_cast<double>(probs.rows());
}

}  // namespace infoscale
