#pragma once

#include <cstddef>

#include "infoscale/attention/attend.hpp"

namespace infoscale::presets {

inline constexpr std::size_t kDefaultWindow = 64;
inline constexpr double kDefaultCosScale = 128.0;
inline constexpr double kWindowedCosScale = 16.0;

/// Cosine attention, RoPE, windowed mask of width w, CosScale 16.
AttentionSpec windowed(std::size_t n, std::size_t d_k, std::size_t w = kDefaultWindow);
/// StreamingLLM: 4 sink tokens plus a window of w - 4 recent tokens, RoPE.
AttentionSpec streaming_llm(std::size_t n, std::size_t d_k, std::size_t w = kDefaultWindow);
/// LM-Infinite: 5 sinks, window w, ReRoPE clamped at the same w.
AttentionSpec lm_infinite(std::size_t n, std::size_t d_k, std::size_t w = kDefaultWindow);
/// Causal dot-product attention with the ALiBi bias of one head.
AttentionSpec alibi(std::size_t n, std::size_t d_k, std::size_t head = 0,
                    std::size_t head_count = 8);
/// Causal attention with positions interpolated by `factor`.
AttentionSpec position_interpolation(std::size_t n, std::size_t d_k, double factor = 4.0);
/// Causal attention with ReRoPE clamped at `window`.
AttentionSpec rerope(std::size_t n, std::size_t d_k, std::size_t window = kDefaultWindow);

/// spec with its schedule replaced by InfoScale trained at n_tr.
AttentionSpec with_infoscale(AttentionSpec spec, std::size_t n_tr = 64, double epsilon = 0.0);
/// spec switched to the cosine path with CosScale alpha.
AttentionSpec with_cosscale(AttentionSpec spec, double alpha = kDefaultCosScale);

}  // namespace infoscale::presets
