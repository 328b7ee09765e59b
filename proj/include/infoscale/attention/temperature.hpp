#pragma once

#include <cstddef>
#include <string>
#include <variant>

namespace infoscale {

/// Multiplier 1: plain 1/sqrt(d_k) attention.
struct Vanilla {};

/// Multiplier ln n_te.
struct LogLength {};

/// Multiplier log_{base_len} n_te = ln n_te / ln base_len.
struct SoftmaxPlus {
  std::size_t base_len = 512;
};

/// YaRN's pre-softmax factor (0.1 ln(n_te / n_tr) + 1)^2.
struct YarnPreSoftmax {
  std::size_t n_tr = 64;
};

/// Entropy-invariant multiplier
///
///   sqrt( (1 - e^{2 eps / d} n_te^{-2/d}) / (1 - e^{2 eps / d} n_tr^{-2/d}) )
///
/// which equals 1 at n_te = n_tr. d_k == 0 means "use the head dimension
/// passed to temperature()". Valid while eps < ln min(n_te, n_tr).
struct InfoScale {
  std::size_t n_tr = 64;
  std::size_t d_k = 0;
  double epsilon = 0.0;
};

/// Constant multiplier.
struct FixedTemperature {
  double value = 1.0;
};

using TemperatureSchedule =
    std::variant<Vanilla, LogLength, SoftmaxPlus, YarnPreSoftmax, InfoScale, FixedTemperature>;

/// Throws ConfigError on out-of-range schedule parameters.
void validate(const TemperatureSchedule& schedule);
std::string schedule_name(const TemperatureSchedule& schedule);

/// Logit multiplier applied on top of 1/sqrt(d_k) for a test length n_te.
/// Natural logarithms throughout. Throws ConfigError for n_te < 2, and
/// ConfigError("epsilon too large for length") outside InfoScale's domain.
double temperature(const TemperatureSchedule& schedule, std::size_t n_te, std::size_t d_k);

}  // namespace infoscale
