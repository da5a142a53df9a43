#include "tda/persistence.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <unordered_map>

#include "tda/gf2.hpp"

namespace tda {

namespace {

// Hash-map key viewing a vertex tuple owned by the filtration.
struct TupleKey {
    const std::int32_t* data;
    std::uint32_t len;

    bool operator==(const TupleKey& o) const {
        return len == o.len && std::memcmp(data, o.data, len * sizeof(std::int32_t)) == 0;
    }
};

struct TupleKeyHash {
    std::size_t operator()(const TupleKey& k) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint32_t i = 0; i < k.len; ++i) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.data[i]));
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

using FacetIndex = std::unordered_map<TupleKey, std::int32_t, TupleKeyHash>;

// Sorted facet positions of simplex `j` in filtration order.
std::vector<std::int32_t> boundary_column(const Filtration& f, std::size_t j, const FacetIndex& index,
                                          std::vector<std::int32_t>& facet_buf) {
    const Simplex& s = f.simplices[j];
    const std::size_t k = s.vertices.size();
    std::vector<std::int32_t> column;
    column.reserve(k);
    facet_buf.assign(s.vertices.begin() + 1, s.vertices.end());
    for (std::size_t omit = 0; omit < k; ++omit) {
        auto it = index.find(TupleKey{facet_buf.data(), static_cast<std::uint32_t>(k - 1)});
        if (it == index.end())
            fail(ErrorCode::MalformedInput, "filtration is not face-closed");
        column.push_back(it->second);
        if (omit + 1 < k) facet_buf[omit] = s.vertices[omit];  // slide the omitted vertex
    }
    std::sort(column.begin(), column.end());
    return column;
}

void xor_into(std::vector<std::int32_t>& dst, const std::vector<std::int32_t>& src,
              std::vector<std::int32_t>& buf) {
    buf.clear();
    std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(), std::back_inserter(buf));
    dst.swap(buf);
}

}  // namespace

std::vector<const PersistenceInterval*> Barcode::in_degree(int degree) const {
    std::vector<const PersistenceInterval*> out;
    for (const PersistenceInterval& iv : intervals)
        if (iv.degree == degree) out.push_back(&iv);
    return out;
}

Barcode compute_persistence(const Filtration& f, bool keep_representatives) {
    const std::size_t m = f.simplices.size();
    const int max_dim = f.max_dim;

    std::vector<std::vector<std::int32_t>> columns_by_dim(max_dim + 1);
    for (std::size_t i = 0; i < m; ++i) columns_by_dim[f.simplices[i].dim()].push_back(static_cast<std::int32_t>(i));

    // Facets have dimension < max_dim, so top-dimensional simplices never
    // enter the lookup table.
    FacetIndex facet_index;
    facet_index.reserve(m - columns_by_dim[max_dim].size());
    for (std::size_t i = 0; i < m; ++i) {
        const Simplex& s = f.simplices[i];
        if (s.dim() < max_dim)
            facet_index.emplace(
                TupleKey{s.vertices.data(), static_cast<std::uint32_t>(s.vertices.size())},
                static_cast<std::int32_t>(i));
    }

    std::vector<std::int32_t> pivot_owner(m, -1);  // row -> column whose reduced low is that row
    std::vector<char> cleared(m, 0);               // birth columns identified by clearing
    std::vector<char> is_death(m, 0);
    std::vector<std::vector<std::int32_t>> reduced(m);

    struct RawPair {
        std::int32_t birth, death;
    };
    std::vector<RawPair> pairs;
    std::vector<std::int32_t> facet_buf, merge_buf;

    for (int d = max_dim; d >= 1; --d) {
        for (std::int32_t j : columns_by_dim[d]) {
            if (cleared[j]) continue;
            std::vector<std::int32_t> column = boundary_column(f, j, facet_index, facet_buf);
            while (!column.empty()) {
                const std::int32_t low = column.back();
                const std::int32_t owner = pivot_owner[low];
                if (owner < 0) break;
                xor_into(column, reduced[owner], merge_buf);
            }
            if (!column.empty()) {
                const std::int32_t low = column.back();
                pivot_owner[low] = j;
                cleared[low] = 1;
                is_death[j] = 1;
                reduced[j] = std::move(column);
                pairs.push_back({low, j});
            }
            // empty column: j creates a degree-d class; if it stays unpaired
            // it shows up as an infinite interval below
        }
    }

    Barcode barcode;
    barcode.degrees_computed.resize(max_dim >= 0 ? max_dim : 0);
    for (int d = 0; d < max_dim; ++d) barcode.degrees_computed[d] = d;
    barcode.zero_length_dropped.assign(std::max(max_dim, 1), 0);
    barcode.has_representatives = keep_representatives;

    for (const RawPair& p : pairs) {
        const int degree = f.simplices[p.birth].dim();
        const double birth = f.simplices[p.birth].value;
        const double death = f.simplices[p.death].value;
        if (birth == death) {
            ++barcode.zero_length_dropped[degree];
            continue;
        }
        PersistenceInterval iv;
        iv.degree = degree;
        iv.birth = birth;
        iv.death = death;
        if (keep_representatives && degree >= 1) {
            iv.representative.reserve(reduced[p.death].size());
            for (std::int32_t idx : reduced[p.death]) iv.representative.push_back(f.simplices[idx]);
        }
        barcode.intervals.push_back(std::move(iv));
    }

    // Unpaired creators of dimension < max_dim are essential classes.
    for (std::size_t i = 0; i < m; ++i) {
        if (cleared[i] || is_death[i]) continue;
        const int degree = f.simplices[i].dim();
        if (degree >= max_dim) continue;
        PersistenceInterval iv;
        iv.degree = degree;
        iv.birth = f.simplices[i].value;
        barcode.intervals.push_back(std::move(iv));
    }

    std::sort(barcode.intervals.begin(), barcode.intervals.end(),
              [](const PersistenceInterval& a, const PersistenceInterval& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  if (a.birth != b.birth) return a.birth < b.birth;
                  return a.death < b.death;
              });
    return barcode;
}

std::vector<std::int64_t> betti_numbers_bruteforce(const Filtration& f, double value) {
    const int max_dim = f.max_dim;

    std::vector<std::vector<std::size_t>> present(max_dim + 1);  // filtration indices per dim
    std::size_t total = 0;
    for (std::size_t i = 0; i < f.simplices.size(); ++i) {
        if (f.simplices[i].value <= value) {
            present[f.simplices[i].dim()].push_back(i);
            ++total;
        }
    }
    if (total > 5000)
        fail(ErrorCode::TooLarge, "subcomplex at value has " + std::to_string(total) + " simplices (> 5000)");

    // local column index per dimension
    std::vector<FacetIndex> local(max_dim + 1);
    for (int d = 0; d <= max_dim; ++d)
        for (std::size_t c = 0; c < present[d].size(); ++c) {
            const Simplex& s = f.simplices[present[d][c]];
            local[d].emplace(TupleKey{s.vertices.data(), static_cast<std::uint32_t>(s.vertices.size())},
                             static_cast<std::int32_t>(c));
        }

    std::vector<std::size_t> boundary_rank(max_dim + 2, 0);
    for (int d = 1; d <= max_dim; ++d) {
        if (present[d].empty() || present[d - 1].empty()) continue;
        Gf2Matrix mat(present[d].size(), present[d - 1].size());
        std::vector<std::int32_t> facet(f.simplices[present[d][0]].vertices.size() - 1);
        for (std::size_t c = 0; c < present[d].size(); ++c) {
            const Simplex& s = f.simplices[present[d][c]];
            const std::size_t k = s.vertices.size();
            facet.assign(s.vertices.begin() + 1, s.vertices.end());
            for (std::size_t omit = 0; omit < k; ++omit) {
                auto it = local[d - 1].find(TupleKey{facet.data(), static_cast<std::uint32_t>(k - 1)});
                if (it == local[d - 1].end()) fail(ErrorCode::MalformedInput, "filtration is not face-closed");
                mat.set(c, static_cast<std::size_t>(it->second), true);
                if (omit + 1 < k) facet[omit] = s.vertices[omit];
            }
        }
        boundary_rank[d] = mat.rank();
    }

    std::vector<std::int64_t> betti(std::max(max_dim, 0));
    for (int k = 0; k < max_dim; ++k) {
        const std::int64_t cycles = static_cast<std::int64_t>(present[k].size()) - boundary_rank[k];
        betti[k] = cycles - static_cast<std::int64_t>(boundary_rank[k + 1]);
    }
    return betti;
}

const std::vector<Simplex>& representative_cycle(const Barcode& b, const PersistenceInterval& interval) {
    if (!b.has_representatives)
        fail(ErrorCode::NoRepresentativeStored, "barcode was computed without representatives");
    if (!interval.finite())
        fail(ErrorCode::InfiniteIntervalUnsupported, "no representative for essential classes");
    if (interval.degree < 1 || interval.representative.empty())
        fail(ErrorCode::NoRepresentativeStored, "no representative stored for this interval");
    return interval.representative;
}

void save_barcode_csv(const Barcode& b, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path);
    out << "degree,birth,death\n";
    for (const PersistenceInterval& iv : b.intervals) {
        out << iv.degree << ',' << format_double(iv.birth) << ',';
        if (iv.finite())
            out << format_double(iv.death);
        else
            out << "inf";
        out << '\n';
    }
    if (!out) fail(ErrorCode::IoError, "write failed: " + path);
}

Barcode load_barcode_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);
    Barcode b;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("degree,", 0) == 0) continue;
        }
        PersistenceInterval iv;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        auto r1 = std::from_chars(p, end, iv.degree);
        if (r1.ec != std::errc() || r1.ptr == end || *r1.ptr != ',')
            fail(ErrorCode::MalformedInput, path + ": bad degree field");
        auto r2 = std::from_chars(r1.ptr + 1, end, iv.birth);
        if (r2.ec != std::errc() || r2.ptr == end || *r2.ptr != ',')
            fail(ErrorCode::MalformedInput, path + ": bad birth field");
        const char* death_start = r2.ptr + 1;
        if (std::string_view(death_start, end - death_start) == "inf") {
            iv.death = kInfiniteDeath;
        } else {
            auto r3 = std::from_chars(death_start, end, iv.death);
            if (r3.ec != std::errc()) fail(ErrorCode::MalformedInput, path + ": bad death field");
        }
        b.intervals.push_back(std::move(iv));
    }
    std::vector<int> degrees;
    for (const PersistenceInterval& iv : b.intervals)
        if (std::find(degrees.begin(), degrees.end(), iv.degree) == degrees.end()) degrees.push_back(iv.degree);
    std::sort(degrees.begin(), degrees.end());
    b.degrees_computed = std::move(degrees);
    std::sort(b.intervals.begin(), b.intervals.end(),
              [](const PersistenceInterval& a, const PersistenceInterval& c) {
                  if (a.degree != c.degree) return a.degree < c.degree;
                  if (a.birth != c.birth) return a.birth < c.birth;
                  return a.death < c.death;
              });
    return b;
}

}  // namespace tda
