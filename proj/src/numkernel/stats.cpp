#include "infoscale/numkernel/stats.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include "infoscale/error.hpp"

namespace infoscale {

MeanEstimate mean_and_stderr(std::span<const double> values) {
  detail::require(!values.empty(), "mean_and_stderr: no values");
  // shifted by the first value: identical inputs give that value and 0 exactly
  const double shift = values.front();
  const double count = static_cast<double>(values.size());
  double total = 0.0;
  for (double v : values) total += v - shift;
  MeanEstimate est;
  est.mean = shift + total / count;
  if (values.size() < 2) return est;
  const double offset = total / count;
  double squares = 0.0;
  for (double v : values) squares += (v - shift - offset) * (v - shift - offset);
  est.stderr_ = std::sqrt(squares / (count - 1.0) / count);
  return est;
}

std::vector<double> ordinal_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });
  std::vector<double> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<double>(r);
  return ranks;
}

double spearman_ordinal(std::span<const double> a, std::span<const double> b) {
  detail::require(a.size() == b.size() && a.size() >= 2, "spearman: need equal lengths >= 2");
  const auto ra = ordinal_ranks(a);
  const auto rb = ordinal_ranks(b);
  double squared = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) squared += (ra[i] - rb[i]) * (ra[i] - rb[i]);
  const double n = static_cast<double>(a.size());
  return 1.0 - 6.0 * squared / (n * (n * n - 1.0));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace infoscale
