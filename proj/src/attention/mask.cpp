#include "infoscale/attention/mask.hpp"

#include <limits>

#include "infoscale/detail/overloaded.hpp"
#include "infoscale/error.hpp"

namespace infoscale {
namespace {

void require_window(std::size_t sinks, std::size_t w, std::size_t n) {
  detail::require(w >= 1, "mask window w must be >= 1");
  detail::require(sinks + w <= n, "mask: sinks + w (" + std::to_string(sinks + w) +
                                      ") exceeds sequence length " + std::to_string(n));
}

}  // namespace

std::string mask_name(const MaskSpec& mask) {
  return std::visit(detail::overloaded{
                        [](const FullMask&) { return std::string("full"); },
                        [](const CausalMask&) { return std::string("causal"); },
                        [](const WindowedMask&) { return std::string("windowed"); },
                        [](const SinkWindowMask&) { return std::string("sinkwindow"); },
                        [](const LambdaMask&) { return std::string("lambda"); },
                    },
                    mask);
}

void validate(const MaskSpec& mask, std::size_t n) {
  std::visit(detail::overloaded{
                 [](const FullMask&) {},
                 [](const CausalMask&) {},
                 [&](const WindowedMask& m) { require_window(0, m.w, n); },
                 [&](const SinkWindowMask& m) { require_window(m.sinks, m.w, n); },
                 [&](const LambdaMask& m) { require_window(m.sinks, m.w, n); },
             },
             mask);
}

bool is_allowed(const MaskSpec& mask, std::size_t i, std::size_t j) {
  return std::visit(detail::overloaded{
                        [](const FullMask&) { return true; },
                        [&](const CausalMask&) { return j <= i; },
                        [&](const WindowedMask& m) { return j <= i && i - j < m.w; },
                        [&](const SinkWindowMask& m) {
                          return j <= i && (j < m.sinks || i - j < m.w);
                        },
                        [&](const LambdaMask& m) { return j <= i && (j < m.sinks || i - j < m.w); },
                    },
                    mask);
}

Matrix build_mask(const MaskSpec& mask, std::size_t n) {
  validate(mask, n);
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_allowed(mask, i, j)) out(i, j) = -std::numeric_limits<double>::infinity();
    }
  }
  return out;
}

std::size_t allowed_in_row(const MaskSpec& mask, std::size_t n, std::size_t i) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < n; ++j) count += is_allowed(mask, i, j) ? 1 : 0;
  return count;
}

}  // namespace infoscale
