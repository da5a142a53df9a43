#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tda/error.hpp"

namespace tda {

enum class MatrixKind { Correlation, Distance };

// Symmetric n x n matrix of correlations (entries in [-1,1], unit diagonal)
// or distances (entries >= 0, zero diagonal). Entries are validated on
// construction; asymmetry up to 1e-9 is silently averaged away, anything
// larger is an error.
class SquareMatrix {
public:
    SquareMatrix(int n, MatrixKind kind);

    // Takes a full row-major table, validates the kind invariants and
    // symmetrizes via (M + M^T)/2 when the worst asymmetry is <= 1e-9.
    static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows, MatrixKind kind);

    int size() const { return n_; }
    MatrixKind kind() const { return kind_; }

    double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    // symmetric assignment; keeps the diagonal under caller control
    void set(int i, int j, double value) {
        entries_[static_cast<std::size_t>(i) * n_ + j] = value;
        entries_[static_cast<std::size_t>(j) * n_ + i] = value;
    }

    const std::vector<double>& entries() const { return entries_; }

private:
    int n_;
    MatrixKind kind_;
    std::vector<double> entries_;  // row-major, n*n
};

struct PointCloud {
    std::vector<std::vector<double>> points;  // all rows share one dimension d >= 1
    std::vector<std::string> labels;          // empty, or one label per point

    std::size_t size() const { return points.size(); }
    int dimension() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
};

// CSV I/O. Cell separator is a comma; a single leading header row is
// auto-detected by a non-numeric first token. Values are written with 17
// significant digits so a save/load round trip is bit exact.
SquareMatrix load_matrix_csv(const std::string& path, MatrixKind kind);
void save_matrix_csv(const SquareMatrix& m, const std::string& path);

PointCloud load_points_csv(const std::string& path);
void save_points_csv(const PointCloud& pc, const std::string& path);

// D_ij = 1 - |C_ij|, defined on correlation input only; the diagonal comes
// out exactly zero. Calling it on a Distance matrix is an error, which also
// guards against applying the transform twice.
SquareMatrix dynamical_distance(const SquareMatrix& correlation);

// Pairwise L2 distances of a non-empty point cloud.
SquareMatrix euclidean_distances(const PointCloud& pc);

// Formats one double with 17 significant digits (shared by all CSV writers).
std::string format_double(double v);

}  // namespace tda
