#include "tda/rips.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

namespace tda {

namespace {

bool simplex_order(const Simplex& a, const Simplex& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
}

struct RipsBuilder {
    const SquareMatrix& d;
    double threshold;
    int max_dim;
    std::int64_t cap;
    std::vector<std::vector<std::int32_t>> upper_neighbors;  // sorted ascending
    std::vector<Simplex> out;

    void expand(std::vector<std::int32_t>& clique, double clique_value,
                const std::vector<std::int32_t>& candidates) {
        if (static_cast<std::int64_t>(out.size()) >= cap)
            fail(ErrorCode::CapacityExceeded,
                 "simplex count exceeds cap of " + std::to_string(cap));
        out.push_back({clique, clique_value});
        if (static_cast<int>(clique.size()) == max_dim + 1) return;

        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            const std::int32_t w = candidates[ci];
            // candidates are common neighbors of the whole clique, so the
            // extension is always a clique; its value is the old value or a
            // new edge to w
            double value = clique_value;
            for (std::int32_t u : clique) value = std::max(value, d(u, w));

            // candidates for the extended clique: later upper neighbors of w
            // that are also candidates here (both lists sorted)
            std::vector<std::int32_t> next;
            const auto& nw = upper_neighbors[w];
            std::size_t a = ci + 1, b = 0;
            while (a < candidates.size() && b < nw.size()) {
                if (candidates[a] == nw[b]) {
                    next.push_back(candidates[a]);
                    ++a, ++b;
                } else if (candidates[a] < nw[b]) {
                    ++a;
                } else {
                    ++b;
                }
            }

            clique.push_back(w);
            expand(clique, value, next);
            clique.pop_back();
        }
    }
};

}  // namespace

Filtration build_rips(const SquareMatrix& distances, int max_dim, double threshold, std::int64_t cap) {
    if (distances.kind() != MatrixKind::Distance)
        fail(ErrorCode::WrongKind, "build_rips expects a distance matrix");
    if (max_dim < 0) fail(ErrorCode::InvalidArgument, "max_dim must be >= 0");
    if (threshold < 0) fail(ErrorCode::InvalidArgument, "threshold must be >= 0");

    const int n = distances.size();
    RipsBuilder builder{distances, threshold, max_dim, cap, {}, {}};
    builder.upper_neighbors.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (distances(i, j) <= threshold) builder.upper_neighbors[i].push_back(j);

    std::vector<std::int32_t> clique;
    for (int v = 0; v < n; ++v) {
        clique.assign(1, v);
        builder.expand(clique, 0.0, builder.upper_neighbors[v]);
    }

    std::sort(builder.out.begin(), builder.out.end(), simplex_order);

    Filtration f;
    f.simplices = std::move(builder.out);
    f.vertex_count = n;
    f.max_dim = max_dim;
    f.threshold = threshold;
    return f;
}

std::vector<std::int64_t> simplex_count_by_dim(const Filtration& f) {
    std::vector<std::int64_t> counts(f.max_dim + 1, 0);
    for (const Simplex& s : f.simplices) ++counts[s.dim()];
    return counts;
}

void save_filtration_csv(const Filtration& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path);
    out << "value,dim,vertices\n";
    for (const Simplex& s : f.simplices) {
        out << format_double(s.value) << ',' << s.dim();
        for (std::int32_t v : s.vertices) out << ',' << v;
        out << '\n';
    }
    if (!out) fail(ErrorCode::IoError, "write failed: " + path);
}

Filtration load_filtration_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);

    Filtration f;
    std::int32_t max_vertex = -1;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        if (first) {
            first = false;
            if (line.rfind("value,", 0) == 0) continue;  // header
        }
        Simplex s;
        std::size_t pos = 0;
        int field = 0;
        int dim_field = -1;
        while (pos <= line.size()) {
            std::size_t next = line.find(',', pos);
            if (next == std::string::npos) next = line.size();
            std::string token = line.substr(pos, next - pos);
            if (!token.empty() && token.back() == '\r') token.pop_back();
            if (field == 0) {
                auto r = std::from_chars(token.data(), token.data() + token.size(), s.value);
                if (r.ec != std::errc()) fail(ErrorCode::MalformedInput, path + ": bad value field");
            } else if (field == 1) {
                auto r = std::from_chars(token.data(), token.data() + token.size(), dim_field);
                if (r.ec != std::errc()) fail(ErrorCode::MalformedInput, path + ": bad dim field");
            } else {
                std::int32_t v;
                auto r = std::from_chars(token.data(), token.data() + token.size(), v);
                if (r.ec != std::errc()) fail(ErrorCode::MalformedInput, path + ": bad vertex field");
                s.vertices.push_back(v);
                max_vertex = std::max(max_vertex, v);
            }
            ++field;
            pos = next + 1;
            if (next == line.size()) break;
        }
        if (s.dim() != dim_field) fail(ErrorCode::MalformedInput, path + ": dim does not match vertex count");
        f.max_dim = std::max(f.max_dim, s.dim());
        f.threshold = std::max(f.threshold, s.value);
        f.simplices.push_back(std::move(s));
    }
    if (f.simplices.empty()) fail(ErrorCode::MalformedInput, path + ": empty filtration");
    f.vertex_count = max_vertex + 1;
    std::sort(f.simplices.begin(), f.simplices.end(), simplex_order);
    return f;
}

}  // namespace tda
