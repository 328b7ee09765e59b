#pragma once

#include <cstddef>

#include "infoscale/numkernel/matrix.hpp"
#include "infoscale/numkernel/rng.hpp"

namespace infoscale {

/// n points drawn uniformly from the sphere of the given radius in R^dim.
/// Each row is dim independent standard normals rescaled to `radius`.
/// Requires dim >= 2 and radius > 0.
Matrix sample_hypersphere(SeededRng& rng, std::size_t dim, double radius, std::size_t n);

/// Radius of the embedding sphere for variance v in dimension d: sqrt(v * d).
double embedding_radius(double variance, std::size_t dim);

}  // namespace infoscale
