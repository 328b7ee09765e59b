#pragma once

#include <array>
#include <cstdint>

namespace infoscale {

/// Seeded xoshiro256** generator.
///
/// State is initialised from the 64-bit seed by four successive splitmix64
/// draws (Vigna's reference seeding). Uniform doubles take the top 53 bits;
/// normals use the Marsaglia polar method, caching the second variate.
/// Integer streams are bit-identical on every platform; normal streams are
/// identical wherever std::log and std::sqrt agree (IEEE-754 libm).
///
/// Independent streams are derived with fork(): the child seed is
/// splitmix64_mix(seed + 0x9E3779B97F4A7C15 * (stream + 1)). Forking only
/// reads the parent's seed, so a fork never depends on how far the parent
/// has advanced.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, 1).
  double uniform() noexcept;
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Standard normal.
  double normal() noexcept;

  SeededRng fork(std::uint64_t stream) const noexcept;

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_{};
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

/// splitmix64 output function applied to a single word.
std::uint64_t splitmix64_mix(std::uint64_t x) noexcept;

}  // namespace infoscale
