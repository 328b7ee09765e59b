#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "infoscale/numkernel/matrix.hpp"

namespace infoscale {

inline constexpr double kDefaultRopeBase = 10000.0;

struct NoPE {};

/// Rotary embedding. Adjacent pairs (2t, 2t+1) rotate by position * base^(-2t/d).
struct RoPE {
  double base = kDefaultRopeBase;
};

/// Linear position interpolation: position i is rotated as i / factor.
struct PIScaledRoPE {
  double base = kDefaultRopeBase;
  double factor = 4.0;
};

/// RoPE with relative positions clamped to +-window.
struct ReRoPE {
  double base = kDefaultRopeBase;
  std::size_t window = 64;
};

/// Linear attention bias; `head` selects the slope 2^(-8 (head + 1) / head_count).
struct ALiBi {
  std::size_t head_count = 8;
  std::size_t head = 0;
};

using PositionalScheme = std::variant<NoPE, RoPE, PIScaledRoPE, ReRoPE, ALiBi>;

/// Throws ConfigError if the scheme's parameters are out of range:
/// base > 1, factor >= 1, window >= 1, head_count >= 1 and a power of two,
/// head < head_count.
void validate(const PositionalScheme& scheme);
bool is_rotary(const PositionalScheme& scheme);
std::string scheme_name(const PositionalScheme& scheme);

/// x rotated to `position`. Requires even x.size() and position >= 0.
std::vector<double> rope_rotate(std::span<const double> x, double position,
                                double base = kDefaultRopeBase);

/// Raw inner products with the scheme's positional transform applied.
///
/// NoPE and ALiBi return Q K^T (ALiBi acts on the logits, see alibi_bias).
/// RoPE and PI rotate q_i and k_j to their (scaled) absolute positions.
/// ReRoPE uses the RoPE product while |i - j| < window; beyond it the pair
/// is scored as <rope(q_i, c), k_j> with c = +-window (sign of i - j).
Matrix rope_score_matrix(const Matrix& q, const Matrix& k, const PositionalScheme& scheme);

double alibi_slope(std::size_t head, std::size_t head_count);

/// n x n bias: -slope * (i - j) for j <= i, -inf above the diagonal.
Matrix alibi_bias(std::size_t n, std::size_t head, std::size_t head_count);

}  // namespace infoscale
