#include "tda/landscape.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tda {

namespace {

// Drops breakpoints that do not change the function: redundant zeros at the
// ends (the function is implicitly zero outside its support) and exactly
// collinear interior points.
void simplify(PiecewiseLinear& f) {
    auto& bp = f.breakpoints;
    std::size_t lead = 0;
    while (lead + 1 < bp.size() && bp[lead].y == 0.0 && bp[lead + 1].y == 0.0) ++lead;
    std::size_t tail = bp.size();
    while (tail >= 2 + lead && bp[tail - 1].y == 0.0 && bp[tail - 2].y == 0.0) --tail;
    std::vector<PiecewiseLinear::Point> kept;
    kept.reserve(tail - lead);
    for (std::size_t i = lead; i < tail; ++i) {
        while (kept.size() >= 2) {
            const auto& a = kept[kept.size() - 2];
            const auto& b = kept.back();
            const auto& c = bp[i];
            if ((b.y - a.y) * (c.t - a.t) == (c.y - a.y) * (b.t - a.t))
                kept.pop_back();
            else
                break;
        }
        kept.push_back(bp[i]);
    }
    bool all_zero = true;
    for (const auto& pt : kept)
        if (pt.y != 0.0) all_zero = false;
    if (all_zero)
        bp.clear();
    else
        bp = std::move(kept);
}

const PiecewiseLinear kZeroFunction{};

const PiecewiseLinear& level_or_zero(const PersistenceLandscape& L, std::size_t k) {
    return k < L.levels.size() ? L.levels[k] : kZeroFunction;
}

std::vector<double> merged_breakpoints(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    std::vector<double> ts;
    ts.reserve(f.breakpoints.size() + g.breakpoints.size());
    for (const auto& p : f.breakpoints) ts.push_back(p.t);
    for (const auto& p : g.breakpoints) ts.push_back(p.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

// 7-point Gauss-Legendre on [a, b]
double gauss7(const std::vector<double>& xs, const std::vector<double>& ws, double a, double b,
              double d0, double d1, double p) {
    // |d| is linear between the segment endpoints
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double t = mid + half * xs[i];
        const double u = (b == a) ? d0 : d0 + (d1 - d0) * (t - a) / (b - a);
        sum += ws[i] * std::pow(std::fabs(u), p);
    }
    return sum * half;
}

double adaptive_gauss(const std::vector<double>& xs, const std::vector<double>& ws, double a, double b,
                      double d0, double d1, double p, double whole, int depth) {
    const double mid = 0.5 * (a + b);
    const double dm = 0.5 * (d0 + d1);
    const double left = gauss7(xs, ws, a, mid, d0, dm, p);
    const double right = gauss7(xs, ws, mid, b, dm, d1, p);
    const double refined = left + right;
    if (depth > 40 || std::fabs(refined - whole) <= 1e-10 * std::fabs(refined) + 1e-300) return refined;
    return adaptive_gauss(xs, ws, a, mid, d0, dm, p, left, depth + 1) +
           adaptive_gauss(xs, ws, mid, b, dm, d1, p, right, depth + 1);
}

// integral of |d(t)|^p on [t0, t1], d linear from d0 to d1
double segment_p_integral(double t0, double t1, double d0, double d1, double p) {
    if (t1 <= t0) return 0.0;
    // split where d changes sign so each piece is |linear|
    if ((d0 < 0.0 && d1 > 0.0) || (d0 > 0.0 && d1 < 0.0)) {
        const double tc = t0 + (t1 - t0) * d0 / (d0 - d1);
        return segment_p_integral(t0, tc, d0, 0.0, p) + segment_p_integral(tc, t1, 0.0, d1, p);
    }
    const double u0 = std::fabs(d0), u1 = std::fabs(d1);
    const double h = t1 - t0;
    if (p == 1.0) return h * 0.5 * (u0 + u1);
    if (p == 2.0) return h * (u0 * u0 + u0 * u1 + u1 * u1) / 3.0;
    static const std::vector<double> xs = {-0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
                                           0.0,                 0.4058451513773972,  0.7415311855993945,
                                           0.9491079123427585};
    static const std::vector<double> ws = {0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
                                           0.4179591836734694, 0.3818300505051189, 0.2797053914892766,
                                           0.1294849661688697};
    const double whole = gauss7(xs, ws, t0, t1, u0, u1, p);
    return adaptive_gauss(xs, ws, t0, t1, u0, u1, p, whole, 0);
}

}  // namespace

double PiecewiseLinear::operator()(double t) const {
    if (breakpoints.empty()) return 0.0;
    if (t <= breakpoints.front().t) return t == breakpoints.front().t ? breakpoints.front().y : 0.0;
    if (t >= breakpoints.back().t) return t == breakpoints.back().t ? breakpoints.back().y : 0.0;
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t,
                               [](double value, const Point& p) { return value < p.t; });
    const Point& hi = *it;
    const Point& lo = *(it - 1);
    const double w = (t - lo.t) / (hi.t - lo.t);
    return lo.y + w * (hi.y - lo.y);
}

PiecewiseLinear tent(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) fail(ErrorCode::NonFinite, "tent endpoints must be finite");
    if (a > b) fail(ErrorCode::Unordered, "tent endpoints must satisfy a <= b");
    PiecewiseLinear f;
    if (a == b) return f;
    f.breakpoints = {{a, 0.0}, {0.5 * (a + b), 0.5 * (b - a)}, {b, 0.0}};
    return f;
}

PersistenceLandscape build_landscape(const Barcode& barcode, int degree, double infinite_cap) {
    std::vector<std::pair<double, double>> intervals;
    double max_finite_death = -kInfiniteDeath;
    bool has_infinite = false;
    for (const PersistenceInterval& iv : barcode.intervals) {
        if (iv.degree != degree) continue;
        if (iv.finite()) {
            max_finite_death = std::max(max_finite_death, iv.death);
            intervals.emplace_back(iv.birth, iv.death);
        } else {
            has_infinite = true;
            if (infinite_cap < iv.birth)
                fail(ErrorCode::CapTooSmall, "infinite_cap " + format_double(infinite_cap) +
                                                 " is below the birth of an essential class");
            intervals.emplace_back(iv.birth, infinite_cap);
        }
    }
    if (has_infinite && !intervals.empty() && infinite_cap < max_finite_death)
        fail(ErrorCode::CapTooSmall, "infinite_cap " + format_double(infinite_cap) +
                                         " is below the largest finite death " +
                                         format_double(max_finite_death));

    // zero-length tents (capped essentials born at the cap) contribute nothing
    std::erase_if(intervals, [](const auto& p) { return p.second <= p.first; });

    // (birth ascending, death descending): the order in which tents start
    // contributing to the top level
    std::sort(intervals.begin(), intervals.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second > y.second;
    });

    PersistenceLandscape L;
    L.degree = degree;

    // Peel the upper envelope of the remaining tents; overlapped leftovers
    // are reinserted and surface in lower levels.
    while (!intervals.empty()) {
        PiecewiseLinear level;
        auto [b, d] = intervals.front();
        intervals.erase(intervals.begin());
        level.breakpoints.push_back({b, 0.0});
        level.breakpoints.push_back({0.5 * (b + d), 0.5 * (d - b)});
        std::size_t scan = 0;
        while (true) {
            while (scan < intervals.size() && intervals[scan].second <= d) ++scan;
            if (scan == intervals.size()) {
                level.breakpoints.push_back({d, 0.0});
                break;
            }
            auto [b2, d2] = intervals[scan];
            intervals.erase(intervals.begin() + scan);
            if (b2 > d) {
                level.breakpoints.push_back({d, 0.0});
                level.breakpoints.push_back({b2, 0.0});
            } else if (b2 == d) {
                level.breakpoints.push_back({d, 0.0});
            } else {
                level.breakpoints.push_back({0.5 * (b2 + d), 0.5 * (d - b2)});
                const std::pair<double, double> leftover{b2, d};
                auto pos = std::upper_bound(intervals.begin() + scan, intervals.end(), leftover,
                                            [](const auto& x, const auto& y) {
                                                if (x.first != y.first) return x.first < y.first;
                                                return x.second > y.second;
                                            });
                intervals.insert(pos, leftover);
            }
            level.breakpoints.push_back({0.5 * (b2 + d2), 0.5 * (d2 - b2)});
            b = b2;
            d = d2;
        }
        simplify(level);
        if (!level.zero()) L.levels.push_back(std::move(level));
    }
    return L;
}

double evaluate(const PersistenceLandscape& L, int k, double t) {
    if (k < 1) fail(ErrorCode::InvalidArgument, "landscape level index is 1-based");
    if (static_cast<std::size_t>(k) > L.levels.size()) return 0.0;
    return L.levels[k - 1](t);
}

PersistenceLandscape mean_landscape(const std::vector<PersistenceLandscape>& ls) {
    if (ls.empty()) fail(ErrorCode::EmptyList, "mean of zero landscapes");
    for (const auto& L : ls)
        if (L.degree != ls.front().degree) fail(ErrorCode::DegreeMismatch, "landscape degrees differ");

    std::size_t max_levels = 0;
    for (const auto& L : ls) max_levels = std::max(max_levels, L.levels.size());

    PersistenceLandscape mean;
    mean.degree = ls.front().degree;
    const double inv = 1.0 / static_cast<double>(ls.size());
    for (std::size_t k = 0; k < max_levels; ++k) {
        std::vector<double> ts;
        for (const auto& L : ls)
            if (k < L.levels.size())
                for (const auto& p : L.levels[k].breakpoints) ts.push_back(p.t);
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

        PiecewiseLinear level;
        level.breakpoints.reserve(ts.size());
        for (double t : ts) {
            double sum = 0.0;
            for (const auto& L : ls) sum += level_or_zero(L, k)(t);
            level.breakpoints.push_back({t, sum * inv});
        }
        simplify(level);
        if (!level.zero()) mean.levels.push_back(std::move(level));
    }
    return mean;
}

double landscape_distance(const PersistenceLandscape& a, const PersistenceLandscape& b, double p) {
    if (a.degree != b.degree) fail(ErrorCode::DegreeMismatch, "landscape degrees differ");
    if (!(p >= 1.0)) fail(ErrorCode::BadP, "p must be >= 1 or infinity");

    const std::size_t levels = std::max(a.levels.size(), b.levels.size());
    double total = 0.0;  // sum of integrals, or running max for p = infinity
    for (std::size_t k = 0; k < levels; ++k) {
        const PiecewiseLinear& f = level_or_zero(a, k);
        const PiecewiseLinear& g = level_or_zero(b, k);
        const std::vector<double> ts = merged_breakpoints(f, g);
        if (ts.empty()) continue;
        if (p == kPInfinity) {
            for (double t : ts) total = std::max(total, std::fabs(f(t) - g(t)));
            continue;
        }
        double prev_t = ts.front();
        double prev_d = f(prev_t) - g(prev_t);
        for (std::size_t i = 1; i < ts.size(); ++i) {
            const double t = ts[i];
            const double d = f(t) - g(t);
            total += segment_p_integral(prev_t, t, prev_d, d, p);
            prev_t = t;
            prev_d = d;
        }
    }
    if (p == kPInfinity) return total;
    if (p == 1.0) return total;
    if (p == 2.0) return std::sqrt(total);
    return std::pow(total, 1.0 / p);
}

double landscape_kernel(const PersistenceLandscape& a, const PersistenceLandscape& b) {
    if (a.degree != b.degree) fail(ErrorCode::DegreeMismatch, "landscape degrees differ");
    const std::size_t levels = std::min(a.levels.size(), b.levels.size());
    double total = 0.0;
    for (std::size_t k = 0; k < levels; ++k) {
        const PiecewiseLinear& f = a.levels[k];
        const PiecewiseLinear& g = b.levels[k];
        const std::vector<double> ts = merged_breakpoints(f, g);
        for (std::size_t i = 1; i < ts.size(); ++i) {
            const double t0 = ts[i - 1], t1 = ts[i];
            const double f0 = f(t0), f1 = f(t1), g0 = g(t0), g1 = g(t1);
            // product of two linear functions: Simpson is exact on quadratics
            const double pm = 0.5 * (f0 + f1) * 0.5 * (g0 + g1);
            total += (t1 - t0) / 6.0 * (f0 * g0 + 4.0 * pm + f1 * g1);
        }
    }
    return total;
}

double landscape_integral(const PersistenceLandscape& L) {
    double total = 0.0;
    for (const PiecewiseLinear& level : L.levels)
        for (std::size_t i = 1; i < level.breakpoints.size(); ++i) {
            const auto& p0 = level.breakpoints[i - 1];
            const auto& p1 = level.breakpoints[i];
            total += (p1.t - p0.t) * 0.5 * (p0.y + p1.y);
        }
    return total;
}

std::vector<std::vector<double>> discretize(const PersistenceLandscape& L, double t_min, double t_max,
                                            int n_grid, int n_levels) {
    if (!(t_min < t_max) || n_grid < 2 || n_levels < 1)
        fail(ErrorCode::BadGrid, "need t_min < t_max, n_grid >= 2, n_levels >= 1");
    std::vector<std::vector<double>> grid(n_levels, std::vector<double>(n_grid, 0.0));
    const double step = (t_max - t_min) / (n_grid - 1);
    for (int i = 0; i < n_levels; ++i)
        for (int j = 0; j < n_grid; ++j) {
            const double t = (j + 1 == n_grid) ? t_max : t_min + step * j;
            grid[i][j] = evaluate(L, i + 1, t);
        }
    return grid;
}

void save_landscape_text(const PersistenceLandscape& L, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path);
    out << "landscape\n";
    out << "degree " << L.degree << '\n';
    out << "levels " << L.levels.size() << '\n';
    for (std::size_t k = 0; k < L.levels.size(); ++k) {
        out << "level " << (k + 1) << ' ' << L.levels[k].breakpoints.size() << '\n';
        for (const auto& p : L.levels[k].breakpoints)
            out << format_double(p.t) << ' ' << format_double(p.y) << '\n';
    }
    if (!out) fail(ErrorCode::IoError, "write failed: " + path);
}

PersistenceLandscape load_landscape_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);
    std::string word;
    if (!(in >> word) || word != "landscape") fail(ErrorCode::MalformedInput, path + ": not a landscape file");
    PersistenceLandscape L;
    std::size_t levels = 0;
    if (!(in >> word >> L.degree) || word != "degree") fail(ErrorCode::MalformedInput, path + ": bad degree line");
    if (!(in >> word >> levels) || word != "levels") fail(ErrorCode::MalformedInput, path + ": bad levels line");
    L.levels.resize(levels);
    for (std::size_t k = 0; k < levels; ++k) {
        std::size_t index = 0, count = 0;
        if (!(in >> word >> index >> count) || word != "level" || index != k + 1)
            fail(ErrorCode::MalformedInput, path + ": bad level header");
        L.levels[k].breakpoints.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            if (!(in >> L.levels[k].breakpoints[i].t >> L.levels[k].breakpoints[i].y))
                fail(ErrorCode::MalformedInput, path + ": truncated breakpoint list");
        }
    }
    return L;
}

void save_landscape_grid_csv(const std::vector<std::vector<double>>& grid, double t_min, double t_max,
                             const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path);
    const int n_grid = grid.empty() ? 0 : static_cast<int>(grid.front().size());
    for (int j = 0; j < n_grid; ++j) {
        if (j) out << ',';
        const double t = (j + 1 == n_grid) ? t_max : t_min + (t_max - t_min) / (n_grid - 1) * j;
        out << format_double(t);
    }
    out << '\n';
    for (const auto& row : grid) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            out << format_double(row[j]);
        }
        out << '\n';
    }
    if (!out) fail(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace tda
