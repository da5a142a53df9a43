#include "tda/matrix.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tda {

namespace {

constexpr double kAsymmetryTolerance = 1e-9;

bool parse_double(const std::string& token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    while (first < last && (*first == ' ' || *first == '\t')) ++first;
    while (last > first && (*(last - 1) == ' ' || *(last - 1) == '\t' || *(last - 1) == '\r')) --last;
    if (first == last) return false;
    auto result = std::from_chars(first, last, out);
    return result.ec == std::errc() && result.ptr == last;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            tokens.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current.push_back(c);
        }
    }
    tokens.push_back(current);
    return tokens;
}

// Reads all rows of a numeric CSV table, skipping one leading header row
// when its first token does not parse as a number.
std::vector<std::vector<double>> load_numeric_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);

    std::vector<std::vector<double>> rows;
    std::string line;
    bool first_line = true;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        std::vector<std::string> tokens = split_csv_line(line);
        std::vector<double> row;
        row.reserve(tokens.size());
        bool ok = true;
        for (const std::string& token : tokens) {
            double v;
            if (!parse_double(token, v)) {
                ok = false;
                break;
            }
            row.push_back(v);
        }
        if (!ok) {
            if (first_line) {
                first_line = false;
                continue;  // header row
            }
            fail(ErrorCode::MalformedInput, path + ": non-numeric cell outside header row");
        }
        first_line = false;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(ErrorCode::MalformedInput, path + ": no numeric rows");
    return rows;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SquareMatrix::SquareMatrix(int n, MatrixKind kind) : n_(n), kind_(kind) {
    if (n <= 0) fail(ErrorCode::InvalidArgument, "matrix size must be positive");
    entries_.assign(static_cast<std::size_t>(n) * n, 0.0);
    if (kind == MatrixKind::Correlation) {
        for (int i = 0; i < n; ++i) entries_[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows, MatrixKind kind) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) fail(ErrorCode::NonSquare, "empty table");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            fail(ErrorCode::NonSquare, "table is not square: " + std::to_string(n) + " rows, row of width " +
                                           std::to_string(row.size()));
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!std::isfinite(rows[i][j])) fail(ErrorCode::NonFiniteEntry, "non-finite entry at (" +
                                                                                std::to_string(i) + "," +
                                                                                std::to_string(j) + ")");

    double worst_asymmetry = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            worst_asymmetry = std::max(worst_asymmetry, std::fabs(rows[i][j] - rows[j][i]));
    if (worst_asymmetry > kAsymmetryTolerance)
        fail(ErrorCode::AsymmetryTooLarge,
             "matrix asymmetry " + format_double(worst_asymmetry) + " exceeds 1e-9");

    SquareMatrix m(n, kind);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, 0.5 * (rows[i][j] + rows[j][i]));

    // kind invariants; diagonal noise within the asymmetry tolerance is snapped
    for (int i = 0; i < n; ++i) {
        const double d = m(i, i);
        if (kind == MatrixKind::Correlation) {
            if (std::fabs(d - 1.0) > kAsymmetryTolerance)
                fail(ErrorCode::OutOfRangeEntry, "correlation diagonal entry " + format_double(d) + " != 1");
            m.set(i, i, 1.0);
        } else {
            if (std::fabs(d) > kAsymmetryTolerance)
                fail(ErrorCode::OutOfRangeEntry, "distance diagonal entry " + format_double(d) + " != 0");
            m.set(i, i, 0.0);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (kind == MatrixKind::Correlation && (v < -1.0 || v > 1.0))
                fail(ErrorCode::OutOfRangeEntry, "correlation entry " + format_double(v) + " outside [-1,1]");
            if (kind == MatrixKind::Distance && v < 0.0)
                fail(ErrorCode::OutOfRangeEntry, "negative distance entry " + format_double(v));
        }
    }
    return m;
}

SquareMatrix load_matrix_csv(const std::string& path, MatrixKind kind) {
    return SquareMatrix::from_rows(load_numeric_table(path), kind);
}

void save_matrix_csv(const SquareMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path);
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
    if (!out) fail(ErrorCode::IoError, "write failed: " + path);
}

PointCloud load_points_csv(const std::string& path) {
    std::vector<std::vector<double>> rows = load_numeric_table(path);
    const std::size_t d = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != d) fail(ErrorCode::MalformedInput, path + ": rows of mixed dimension");
    PointCloud pc;
    pc.points = std::move(rows);
    return pc;
}

void save_points_csv(const PointCloud& pc, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path);
    for (const auto& point : pc.points) {
        for (std::size_t j = 0; j < point.size(); ++j) {
            if (j) out << ',';
            out << format_double(point[j]);
        }
        out << '\n';
    }
    if (!out) fail(ErrorCode::IoError, "write failed: " + path);
}

SquareMatrix dynamical_distance(const SquareMatrix& correlation) {
    if (correlation.kind() != MatrixKind::Correlation)
        fail(ErrorCode::WrongKind, "dynamical_distance expects a correlation matrix");
    const int n = correlation.size();
    SquareMatrix d(n, MatrixKind::Distance);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.set(i, j, 1.0 - std::fabs(correlation(i, j)));
    return d;
}

SquareMatrix euclidean_distances(const PointCloud& pc) {
    if (pc.points.empty()) fail(ErrorCode::EmptyCloud, "empty point cloud");
    const int n = static_cast<int>(pc.size());
    SquareMatrix d(n, MatrixKind::Distance);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t c = 0; c < pc.points[i].size(); ++c) {
                const double diff = pc.points[i][c] - pc.points[j][c];
                sum += diff * diff;
            }
            d.set(i, j, std::sqrt(sum));
        }
    }
    return d;
}

}  // namespace tda
