#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "infoscale/numkernel/matrix.hpp"

namespace infoscale {

struct FullMask {};
struct CausalMask {};

/// Causal, restricted to the w most recent keys (i - j < w).
struct WindowedMask {
  std::size_t w = 64;
};

/// StreamingLLM: causal; key j allowed when j < sinks or i - j < w.
struct SinkWindowMask {
  std::size_t sinks = 4;
  std::size_t w = 60;
};

/// LM-Infinite. Same allowed set as SinkWindowMask; the distance ceiling
/// comes from pairing it with a ReRoPE scheme of the same window.
struct LambdaMask {
  std::size_t sinks = 5;
  std::size_t w = 64;
};

using MaskSpec = std::variant<FullMask, CausalMask, WindowedMask, SinkWindowMask, LambdaMask>;

std::string mask_name(const MaskSpec& mask);

/// Throws ConfigError unless w >= 1 and sinks + w <= n.
void validate(const MaskSpec& mask, std::size_t n);

bool is_allowed(const MaskSpec& mask, std::size_t i, std::size_t j);

/// n x n matrix of 0 (allowed) and -inf (masked).
Matrix build_mask(const MaskSpec& mask, std::size_t n);

/// Number of allowed keys in row i.
std::size_t allowed_in_row(const MaskSpec& mask, std::size_t n, std::size_t i);

}  // namespace infoscale
