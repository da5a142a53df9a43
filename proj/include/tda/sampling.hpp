#pragma once

#include <cstdint>

#include "tda/matrix.hpp"

namespace tda {

// Uniform-by-area samples of the two synthetic shapes. The radius uses the
// inverse CDF  r = sqrt(u * (r_out^2 - r_in^2) + r_in^2)  so point counts
// are exact and the cloud is a pure function of the seed.
PointCloud sample_disk(int n, double radius, std::uint64_t seed);
PointCloud sample_annulus(int n, double r_inner, double r_outer, std::uint64_t seed);

}  // namespace tda
