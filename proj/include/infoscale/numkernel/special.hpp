#pragma once

namespace infoscale {

/// ln Gamma(x) for x > 0 (Lanczos, g = 7, nine terms; reflection below 1/2).
/// Throws ConfigError for x <= 0.
double log_gamma(double x);

}  // namespace infoscale
