#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace infoscale {

struct MeanEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;  ///< sample standard deviation / sqrt(count); 0 for one sample
};

/// Mean and standard error, summed left to right.
MeanEstimate mean_and_stderr(std::span<const double> values);

/// Ranks 0..n-1 with ties broken by index (stable ordinal ranking).
std::vector<double> ordinal_ranks(std::span<const double> values);

/// Spearman correlation on ordinal ranks: 1 - 6 sum(d^2) / (n (n^2 - 1)).
/// Identical inputs give exactly 1. Requires equal lengths >= 2.
double spearman_ordinal(std::span<const double> a, std::span<const double> b);

/// Runs body(i) for i in [0, count) on up to hardware_concurrency threads.
/// Index ranges are split statically; bodies must write only to their own
/// slot so results do not depend on the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace infoscale
