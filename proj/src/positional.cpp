#include "infoscale/positional.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "infoscale/detail/overloaded.hpp"
#include "infoscale/error.hpp"

namespace infoscale {
namespace {

// Any real position, including the negative clamp used by ReRoPE.
void rotate_into(std::span<const double> x, double position, double base, std::span<double> out) {
  const std::size_t d = x.size();
  for (std::size_t t = 0; t < d / 2; ++t) {
    const double freq = std::pow(base, -2.0 * static_cast<double>(t) / static_cast<double>(d));
    const double angle = position * freq;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double a = x[2 * t];
    const double b = x[2 * t + 1];
    out[2 * t] = a * c - b * s;
    out[2 * t + 1] = a * s + b * c;
  }
}

Matrix rotate_rows(const Matrix& m, double base, double position_scale) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rotate_into(m.row(i), static_cast<double>(i) / position_scale, base, out.row(i));
  }
  return out;
}

Matrix rerope_scores(const Matrix& q, const Matrix& k, const ReRoPE& scheme) {
  const std::size_t n = q.rows();
  const Matrix q_abs = rotate_rows(q, scheme.base, 1.0);
  const Matrix k_abs = rotate_rows(k, scheme.base, 1.0);
  const double w = static_cast<double>(scheme.window);
  Matrix q_ahead(n, q.cols());
  Matrix q_behind(n, q.cols());
  for (std::size_t i = 0; i < n; ++i) {
    rotate_into(q.row(i), w, scheme.base, q_ahead.row(i));
    rotate_into(q.row(i), -w, scheme.base, q_behind.row(i));
  }
  Matrix scores(n, k.rows());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k.rows(); ++j) {
      const std::size_t dist = i >= j ? i - j : j - i;
      if (dist < scheme.window) {
        scores(i, j) = dot(q_abs.row(i), k_abs.row(j));
      } else if (i > j) {
        scores(i, j) = dot(q_ahead.row(i), k.row(j));
      } else {
        scores(i, j) = dot(q_behind.row(i), k.row(j));
      }
    }
  }
  return scores;
}

}  // namespace

void validate(const PositionalScheme& scheme) {
  std::visit(detail::overloaded{
                 [](const NoPE&) {},
                 [](const RoPE& s) { detail::require(s.base > 1.0, "RoPE base must be > 1"); },
                 [](const PIScaledRoPE& s) {
                   detail::require(s.base > 1.0, "PI base must be > 1");
                   detail::require(s.factor >= 1.0, "PI factor must be >= 1");
                 },
                 [](const ReRoPE& s) {
                   detail::require(s.base > 1.0, "ReRoPE base must be > 1");
                   detail::require(s.window >= 1, "ReRoPE window must be >= 1");
                 },
                 [](const ALiBi& s) {
                   detail::require(s.head_count >= 1 && std::has_single_bit(s.head_count),
                                   "ALiBi head_count must be a power of two");
                   detail::require(s.head < s.head_count, "ALiBi head must be < head_count");
                 },
             },
             scheme);
}

bool is_rotary(const PositionalScheme& scheme) {
  return std::holds_alternative<RoPE>(scheme) || std::holds_alternative<PIScaledRoPE>(scheme) ||
         std::holds_alternative<ReRoPE>(scheme);
}

std::string scheme_name(const PositionalScheme& scheme) {
  return std::visit(detail::overloaded{
                        [](const NoPE&) { return std::string("nope"); },
                        [](const RoPE&) { return std::string("rope"); },
                        [](const PIScaledRoPE&) { return std::string("pi"); },
                        [](const ReRoPE&) { return std::string("rerope"); },
                        [](const ALiBi&) { return std::string("alibi"); },
                    },
                    scheme);
}

std::vector<double> rope_rotate(std::span<const double> x, double position, double base) {
  detail::require(x.size() % 2 == 0, "rope_rotate: dimension must be even");
  detail::require(position >= 0.0, "rope_rotate: position must be >= 0");
  detail::require(base > 1.0, "rope_rotate: base must be > 1");
  std::vector<double> out(x.size());
  rotate_into(x, position, base, out);
  return out;
}

Matrix rope_score_matrix(const Matrix& q, const Matrix& k, const PositionalScheme& scheme) {
  detail::require(q.rows() == k.rows() && q.cols() == k.cols(),
                  "rope_score_matrix: Q and K must have the same shape");
  validate(scheme);
  if (is_rotary(scheme)) {
    detail::require(q.cols() % 2 == 0, "rope_score_matrix: rotary schemes need an even dimension");
  }
  return std::visit(
      detail::overloaded{
          [&](const NoPE&) { return matmul_transposed(q, k); },
          [&](const ALiBi&) { return matmul_transposed(q, k); },
          [&](const RoPE& s) {
            return matmul_transposed(rotate_rows(q, s.base, 1.0), rotate_rows(k, s.base, 1.0));
          },
          [&](const PIScaledRoPE& s) {
            return matmul_transposed(rotate_rows(q, s.base, s.factor),
                                     rotate_rows(k, s.base, s.factor));
          },
          [&](const ReRoPE& s) { return rerope_scores(q, k, s); },
      },
      scheme);
}

double alibi_slope(std::size_t head, std::size_t head_count) {
  detail::require(head_count >= 1 && head < head_count, "alibi: head must be < head_count");
  return std::exp2(-8.0 * static_cast<double>(head + 1) / static_cast<double>(head_count));
}

Matrix alibi_bias(std::size_t n, std::size_t head, std::size_t head_count) {
  const double slope = alibi_slope(head, head_count);
  Matrix bias(n, n, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) bias(i, j) = -slope * static_cast<double>(i - j);
    bias(i, i) = 0.0;
  }
  return bias;
}

}  // namespace infoscale
