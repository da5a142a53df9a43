#pragma once

#include <limits>
#include <string>
#include <vector>

#include "tda/rips.hpp"

namespace tda {

constexpr double kInfiniteDeath = std::numeric_limits<double>::infinity();

struct PersistenceInterval {
    int degree = 0;
    double birth = 0.0;
    double death = kInfiniteDeath;
    // For a finite interval computed with keep_representatives: the reduced
    // column of the death simplex, a degree-`degree` cycle born at `birth`.
    std::vector<Simplex> representative;

    bool finite() const { return death != kInfiniteDeath; }
    double length() const { return death - birth; }
};

struct Barcode {
    std::vector<PersistenceInterval> intervals;
    std::vector<int> degrees_computed;              // 0 .. max_dim-1
    std::vector<std::int64_t> zero_length_dropped;  // per degree, for bookkeeping checks
    bool has_representatives = false;

    std::vector<const PersistenceInterval*> in_degree(int degree) const;
};

// Persistent homology over Z/2 by column reduction of the boundary matrix,
// with the clearing ("twist") optimization: dimensions are processed from
// the top down so columns that are known birth columns are never reduced.
// Columns are sorted index lists; addition is a symmetric-difference merge.
// Degree max_dim is excluded: its deaths would need (max_dim+1)-simplices.
Barcode compute_persistence(const Filtration& f, bool keep_representatives = false);

// Verification oracle: Betti numbers of the subcomplex at `value` by dense
// Gaussian elimination over Z/2 on the full boundary matrices. Returns
// Betti_0 .. Betti_{max_dim-1}. Guarded to <= 5000 simplices.
std::vector<std::int64_t> betti_numbers_bruteforce(const Filtration& f, double value);

// Looks up the stored representative of a finite interval.
const std::vector<Simplex>& representative_cycle(const Barcode& b, const PersistenceInterval& interval);

// Interchange format between pipeline stages: rows "degree,birth,death",
// with the literal `inf` for infinite deaths.
void save_barcode_csv(const Barcode& b, const std::string& path);
Barcode load_barcode_csv(const std::string& path);

}  // namespace tda
