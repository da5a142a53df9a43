#pragma once

#include <string>
#include <vector>

#include "tda/persistence.hpp"

namespace tda {

// Piecewise-linear function stored by its breakpoints, implicitly zero
// outside [front().t, back().t]. Breakpoints are strictly increasing in t
// and the function is continuous; landscapes only ever hold y >= 0.
struct PiecewiseLinear {
    struct Point {
        double t, y;
    };
    std::vector<Point> breakpoints;

    bool zero() const { return breakpoints.empty(); }
    double operator()(double t) const;
};

// The landscape of one homology degree: levels[0] is lambda_1, the pointwise
// largest tent value, levels[1] the second largest, and so on. Levels that
// are identically zero are not stored.
struct PersistenceLandscape {
    int degree = 0;
    std::vector<PiecewiseLinear> levels;

    std::size_t level_count() const { return levels.size(); }
};

// The triangular bump of an interval: min(t - a, b - t)+ with breakpoints
// (a,0), ((a+b)/2, (b-a)/2), (b,0); identically zero when a == b.
PiecewiseLinear tent(double a, double b);

// Exact landscape construction by peeling upper envelopes off the sorted
// interval list. Infinite deaths are replaced by `infinite_cap` first; the
// cap must be at least the largest finite death and the birth of every
// essential class.
PersistenceLandscape build_landscape(const Barcode& b, int degree, double infinite_cap);

// lambda_k(t) with 1-based k; zero beyond the stored levels or support.
double evaluate(const PersistenceLandscape& L, int k, double t);

// Pointwise arithmetic mean per level, exact on the union of breakpoints.
PersistenceLandscape mean_landscape(const std::vector<PersistenceLandscape>& ls);

constexpr double kPInfinity = std::numeric_limits<double>::infinity();

// ( sum_k  integral |lambda_k - lambda'_k|^p dt )^(1/p). Exact closed forms
// for p = 1 and p = 2; adaptive Gauss quadrature (relative tolerance 1e-10)
// for other finite p; max over breakpoints for p = infinity.
double landscape_distance(const PersistenceLandscape& a, const PersistenceLandscape& b, double p);

// sum_k integral lambda_k * lambda'_k dt, exact piecewise-quadratic
// integration; polarizes to the 2-landscape distance.
double landscape_kernel(const PersistenceLandscape& a, const PersistenceLandscape& b);

// sum_k integral lambda_k dt: the total area under all levels, the scalar
// each sample contributes to the permutation test.
double landscape_integral(const PersistenceLandscape& L);

// n_levels x n_grid matrix of lambda_i(t_j) on the uniform grid over
// [t_min, t_max] including both endpoints.
std::vector<std::vector<double>> discretize(const PersistenceLandscape& L, double t_min, double t_max,
                                            int n_grid, int n_levels);

// Exact representation as a structured text file (breakpoint lists), and the
// discretized grid as CSV with the t-grid as header row.
void save_landscape_text(const PersistenceLandscape& L, const std::string& path);
PersistenceLandscape load_landscape_text(const std::string& path);
void save_landscape_grid_csv(const std::vector<std::vector<double>>& grid, double t_min, double t_max,
                             const std::string& path);

}  // namespace tda
