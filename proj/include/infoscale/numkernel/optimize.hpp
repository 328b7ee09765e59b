#pragma once

#include <functional>

namespace infoscale {

/// Grid points scanned by argmax_1d before golden-section refinement.
inline constexpr int kArgmaxGridPoints = 1024;

/// Maximizer of a unimodal f on [a, b].
///
/// A 1024-point grid scan (endpoints included) brackets the maximum, then
/// golden-section search shrinks the bracket below tol. If the best point is
/// an endpoint of [a, b] and beats the refined interior estimate, the
/// endpoint itself is returned. f may return -inf (e.g. a log-density at the
/// boundary). Multimodal f gives an unspecified local maximum.
double argmax_1d(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace infoscale
