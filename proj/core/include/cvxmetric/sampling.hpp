#pragma once

#include <cstdint>
#include <vector>

#include "cvxmetric/body.hpp"

namespace cvxmetric {

/* Deterministic strictly-interior samples. Balls use scaled radial draws,
 * V-polytopes strictly positive convex weights, H-polytopes rejection inside
 * the computed bounding box (SamplingError when unbounded or the rejection
 * budget runs out). */
std::vector<Vector> sample_interior(const ConvexBody& body, std::uint64_t seed,
                                    std::size_t count);

}  // namespace cvxmetric
