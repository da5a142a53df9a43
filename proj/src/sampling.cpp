#include "tda/sampling.hpp"

#include <cmath>
#include <numbers>

#include "tda/rng.hpp"

namespace tda {

PointCloud sample_annulus(int n, double r_inner, double r_outer, std::uint64_t seed) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "sample count must be >= 1");
    if (!(r_inner >= 0.0) || !(r_inner < r_outer))
        fail(ErrorCode::BadRadii, "need 0 <= r_inner < r_outer");

    SplitMix64 rng(seed);
    PointCloud pc;
    pc.points.reserve(n);
    const double lo2 = r_inner * r_inner;
    const double hi2 = r_outer * r_outer;
    for (int i = 0; i < n; ++i) {
        const double u = rng.next_unit();
        const double v = rng.next_unit();
        const double r = std::sqrt(u * (hi2 - lo2) + lo2);
        const double theta = 2.0 * std::numbers::pi * v;
        pc.points.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return pc;
}

PointCloud sample_disk(int n, double radius, std::uint64_t seed) {
    return sample_annulus(n, 0.0, radius, seed);
}

}  // namespace tda
