#include "infoscale/numkernel/sphere.hpp"

#include <cmath>

#include "infoscale/error.hpp"

namespace infoscale {

Matrix sample_hypersphere(SeededRng& rng, std::size_t dim, double radius, std::size_t n) {
  detail::require(dim >= 2, "sample_hypersphere: dim must be >= 2");
  detail::require(radius > 0.0 && std::isfinite(radius), "sample_hypersphere: radius must be > 0");
  Matrix out(n, dim);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = out.row(i);
    double len = 0.0;
    // a zero draw has probability ~0, but would divide by zero
    while (len == 0.0) {
      for (double& x : row) x = rng.normal();
      len = norm(row);
    }
    const double scale = radius / len;
    for (double& x : row) x *= scale;
  }
  return out;
}

double embedding_radius(double variance, std::size_t dim) {
  detail::require(variance > 0.0, "embedding variance must be > 0");
  return std::sqrt(variance * static_cast<double>(dim));
}

}  // namespace infoscale
