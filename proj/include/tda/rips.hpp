#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tda/matrix.hpp"

namespace tda {

// One simplex of the filtration: strictly increasing vertex indices and the
// filtration value, which equals the largest pairwise distance among the
// vertices (0 for a vertex).
struct Simplex {
    std::vector<std::int32_t> vertices;
    double value = 0.0;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

// Simplices of the Vietoris-Rips complex up to max_dim and threshold, sorted
// by (value, dim, lexicographic vertices). The ordering puts every face
// before its cofaces, so the list can be consumed directly by boundary
// reduction.
struct Filtration {
    std::vector<Simplex> simplices;
    int vertex_count = 0;
    int max_dim = 0;
    double threshold = 0.0;
};

constexpr std::int64_t kDefaultSimplexCap = 50'000'000;

// Enumerates all cliques of the threshold graph with at most max_dim+1
// vertices by incremental expansion over lower-index neighbors. Throws
// CapacityExceeded once the count passes `cap`.
Filtration build_rips(const SquareMatrix& distances, int max_dim, double threshold,
                      std::int64_t cap = kDefaultSimplexCap);

// Simplex counts per dimension, [0..max_dim].
std::vector<std::int64_t> simplex_count_by_dim(const Filtration& f);

// Debug/golden dump: one row per simplex, "value,dim,v0,v1,...".
void save_filtration_csv(const Filtration& f, const std::string& path);
Filtration load_filtration_csv(const std::string& path);

}  // namespace tda
