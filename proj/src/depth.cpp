#include "dv/depth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include "dv/geometry.hpp"

namespace dv {

DepthSpec DepthSpec::wlp(double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::invalid_argument("wlp exponent must be finite and >= 1");
    DepthSpec s;
    s.kind = Kind::WLp;
    s.p = p;
    return s;
}

DepthSpec DepthSpec::wlinf() {
    DepthSpec s;
    s.kind = Kind::WLinf;
    return s;
}

DepthSpec DepthSpec::tukey() {
    DepthSpec s;
    s.kind = Kind::TukeyHalfspace;
    return s;
}

DepthSpec DepthSpec::liu() {
    DepthSpec s;
    s.kind = Kind::LiuSimplicial;
    return s;
}

DepthSpec& DepthSpec::with_grid_resolution(double r) {
    if (!(r > 0.0 && r <= 0.05))
        throw std::invalid_argument("grid resolution must be in (0, 0.05]");
    grid_resolution = r;
    return *this;
}

DepthSpec& DepthSpec::with_tukey_directions(int k) {
    if (k < 100) throw std::invalid_argument("need at least 100 sampled directions");
    tukey_directions = k;
    return *this;
}

std::string DepthSpec::id() const {
    switch (kind) {
        case Kind::WLp: {
            char buf[32];
            if (p == std::floor(p) && p < 1e6)
                std::snprintf(buf, sizeof buf, "wl%d", static_cast<int>(p));
            else
                std::snprintf(buf, sizeof buf, "wl%g", p);
            return buf;
        }
        case Kind::WLinf: return "wlinf";
        case Kind::TukeyHalfspace: return "tukey";
        case Kind::LiuSimplicial: return "liu";
    }
    return "?";
}

namespace {

void require_query(const Profile& x, const GradingMatrix& m) {
    if (x.size() != m.candidates())
        throw std::invalid_argument("query point dimension mismatch");
    if (m.candidates() == 0 || m.voters() == 0)
        throw std::invalid_argument("empty grading matrix");
}

// Advances idx to the next k-subset of {0, ..., n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    std::size_t t = k;
    while (t > 0) {
        --t;
        if (idx[t] + (k - t) < n) {
            ++idx[t];
            for (std::size_t s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

DepthValue wlp_depth(const Profile& x, const GradingMatrix& m, double p) {
    require_query(x, m);
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::invalid_argument("wlp exponent must be finite and >= 1");
    double total = 0.0;
    for (std::size_t j = 0; j < m.voters(); ++j)
        for (std::size_t i = 0; i < m.candidates(); ++i)
            total += std::pow(std::fabs(m(i, j) - x[i]), p);
    return 1.0 / (1.0 + total / m.voters());
}

DepthValue wlinf_depth(const Profile& x, const GradingMatrix& m) {
    require_query(x, m);
    double total = 0.0;
    for (std::size_t j = 0; j < m.voters(); ++j) {
        double worst = 0.0;
        for (std::size_t i = 0; i < m.candidates(); ++i)
            worst = std::max(worst, std::fabs(m(i, j) - x[i]));
        total += worst;
    }
    return 1.0 / (1.0 + total / m.voters());
}

bool tukey_is_exact(std::size_t d) { return d <= 2; }

namespace {

int tukey_count_1d(double x, const GradingMatrix& m) {
    int le = 0, ge = 0;
    for (std::size_t j = 0; j < m.voters(); ++j) {
        double g = m(0, j);
        if (g <= x) ++le;
        if (g >= x) ++ge;
    }
    return std::min(le, ge);
}

// Exact planar halfspace count by angular sweep.  Profiles coincident with x
// lie in every closed halfplane through x.  For the rest, a closed halfplane
// whose boundary avoids all data directions covers an open half-turn of
// direction angles, and the minimum over halfplanes is attained on such a
// generic one.  The event set (every angle and its antipode) is closed under
// the half-turn map, so a midpoint of a nonempty gap keeps both arc endpoints
// away from every data angle.
int tukey_count_2d(const Profile& x, const GradingMatrix& m) {
    const double two_pi = 2.0 * M_PI;
    std::vector<double> ang;
    int coincident = 0;
    for (std::size_t j = 0; j < m.voters(); ++j) {
        double dx = m(0, j) - x[0];
        double dy = m(1, j) - x[1];
        if (dx == 0.0 && dy == 0.0) {
            ++coincident;
            continue;
        }
        double a = std::atan2(dy, dx);
        if (a < 0.0) a += two_pi;
        ang.push_back(a);
    }
    if (ang.empty()) return static_cast<int>(m.voters());
    std::sort(ang.begin(), ang.end());

    std::vector<double> events;
    events.reserve(ang.size() * 2);
    for (double a : ang) {
        events.push_back(a);
        double b = a + M_PI;
        if (b >= two_pi) b -= two_pi;
        events.push_back(b);
    }
    std::sort(events.begin(), events.end());

    // Directions of exactly opposite voters land 1 ulp apart after the
    // antipode shift, so zero-width event gaps show up as ~1e-16 slivers and
    // the probe boundary can pass through voters.  Slivers are skipped, and
    // counting widens the arc so boundary voters stay in the closed side.
    constexpr double kGapSliver = 1e-12;
    constexpr double kBoundarySlack = 1e-9;

    auto count_arc = [&](double lo, double hi) {
        // number of angles inside (lo, hi), arc shorter than a full turn
        if (lo < 0.0) {
            lo += two_pi;
            hi += two_pi;
        }
        if (hi < two_pi) {
            return static_cast<int>(std::lower_bound(ang.begin(), ang.end(), hi) -
                                    std::upper_bound(ang.begin(), ang.end(), lo));
        }
        hi -= two_pi;
        int above = static_cast<int>(ang.end() - std::upper_bound(ang.begin(), ang.end(), lo));
        int below = static_cast<int>(std::lower_bound(ang.begin(), ang.end(), hi) - ang.begin());
        return above + below;
    };

    int best = static_cast<int>(ang.size());
    std::size_t e = events.size();
    for (std::size_t k = 0; k < e; ++k) {
        double lo = events[k];
        double hi = (k + 1 < e) ? events[k + 1] : events[0] + two_pi;
        if (hi - lo <= kGapSliver) continue;
        double theta = 0.5 * (lo + hi);
        best = std::min(best,
                        count_arc(theta - kBoundarySlack, theta + M_PI + kBoundarySlack));
        if (best == 0) break;
    }
    return coincident + best;
}

// Unit direction orthogonal to the span of the given difference vectors,
// found by Gaussian elimination; empty when the span already fills the
// orthogonal complement's codimension.
std::vector<double> null_direction(std::vector<std::vector<double>> rows, std::size_t d) {
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < d && r < rows.size(); ++c) {
        std::size_t best = r;
        for (std::size_t k = r + 1; k < rows.size(); ++k)
            if (std::fabs(rows[k][c]) > std::fabs(rows[best][c])) best = k;
        if (std::fabs(rows[best][c]) < 1e-13) continue;
        std::swap(rows[r], rows[best]);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r) continue;
            double f = rows[k][c] / rows[r][c];
            for (std::size_t cc = c; cc < d; ++cc) rows[k][cc] -= f * rows[r][cc];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = d;
    for (std::size_t c = 0; c < d; ++c)
        if (!is_pivot[c]) { free_col = c; break; }
    if (free_col == d) return {};
    std::vector<double> u(d, 0.0);
    u[free_col] = 1.0;
    for (std::size_t k = r; k-- > 0;) {
        std::size_t c = pivot_col[k];
        double s = 0.0;
        for (std::size_t cc = c + 1; cc < d; ++cc) s += rows[k][cc] * u[cc];
        u[c] = -s / rows[k][c];
    }
    double norm = 0.0;
    for (double v : u) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : u) v /= norm;
    return u;
}

int tukey_count_sampled(const Profile& x, const GradingMatrix& m, int directions) {
    const std::size_t d = m.candidates();
    const std::size_t n = m.voters();

    std::vector<std::vector<double>> diff(n, std::vector<double>(d));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < d; ++i) diff[j][i] = m(i, j) - x[i];

    int best = static_cast<int>(n);
    auto consider = [&](const std::vector<double>& u) {
        int pos = 0, neg = 0;
        for (std::size_t j = 0; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = 0; i < d; ++i) dot += u[i] * diff[j][i];
            if (dot >= -1e-12) ++pos;
            if (dot <= 1e-12) ++neg;
        }
        best = std::min(best, std::min(pos, neg));
    };

    // Axis directions, then hyperplanes spanned by x and d-1 profiles.
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> u(d, 0.0);
        u[i] = 1.0;
        consider(u);
    }
    if (d >= 2 && n >= d - 1) {
        std::vector<std::size_t> idx(d - 1);
        for (std::size_t i = 0; i < d - 1; ++i) idx[i] = i;
        long long emitted = 0;
        do {
            std::vector<std::vector<double>> rows;
            rows.reserve(d - 1);
            for (std::size_t i : idx) rows.push_back(diff[i]);
            std::vector<double> u = null_direction(std::move(rows), d);
            if (!u.empty()) consider(u);
        } while (++emitted < 50000 && next_combination(idx, n));
    }

    // Seeded sampling keeps repeated evaluations byte-identical.
    std::mt19937_64 eng(0x9e3779b97f4a7c15ULL);
    auto unit = [&eng]() { return (eng() >> 11) * 0x1.0p-53; };
    std::vector<double> u(d);
    for (int s = 0; s < directions; ++s) {
        double norm = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            // Box-Muller from the fixed generator
            double a = unit(), b = unit();
            if (a <= 0.0) a = 0x1.0p-53;
            u[i] = std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * M_PI * b);
            norm += u[i] * u[i];
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        for (std::size_t i = 0; i < d; ++i) u[i] /= norm;
        consider(u);
    }
    return best;
}

}  // namespace

int tukey_depth_count(const Profile& x, const GradingMatrix& m, int directions) {
    require_query(x, m);
    if (m.candidates() == 1) return tukey_count_1d(x[0], m);
    if (m.candidates() == 2) return tukey_count_2d(x, m);
    return tukey_count_sampled(x, m, directions);
}

DepthValue tukey_depth(const Profile& x, const GradingMatrix& m, int directions) {
    return static_cast<double>(tukey_depth_count(x, m, directions)) / m.voters();
}

namespace {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long simplicial_count_1d(double x, const GradingMatrix& m) {
    long long count = 0;
    std::size_t n = m.voters();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            double lo = std::min(m(0, a), m(0, b));
            double hi = std::max(m(0, a), m(0, b));
            if (x >= lo - geom::kOrientTol && x <= hi + geom::kOrientTol) ++count;
        }
    return count;
}

long long simplicial_count_2d(const Profile& x, const GradingMatrix& m) {
    std::size_t n = m.voters();
    std::vector<geom::Pt2> pts(n);
    for (std::size_t j = 0; j < n; ++j) pts[j] = {m(0, j), m(1, j)};
    geom::Pt2 q{x[0], x[1]};
    long long count = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (geom::triangle_contains(pts[a], pts[b], pts[c], q)) ++count;
    return count;
}

long long simplicial_count_general(const Profile& x, const GradingMatrix& m) {
    std::size_t n = m.voters();
    std::size_t d = m.candidates();
    std::size_t k = d + 1;
    if (n < k) throw std::invalid_argument("simplicial depth needs at least d+1 voters");
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    long long count = 0;
    do {
        std::vector<std::vector<double>> verts;
        verts.reserve(k);
        for (std::size_t j : idx) verts.push_back(m.voter_profile(j));
        if (geom::convex_hull_contains(verts, x)) ++count;
    } while (next_combination(idx, n));
    return count;
}

}  // namespace

long long simplicial_depth_count(const Profile& x, const GradingMatrix& m) {
    require_query(x, m);
    if (m.voters() < m.candidates() + 1)
        throw std::invalid_argument("simplicial depth needs at least d+1 voters");
    if (m.candidates() == 1) return simplicial_count_1d(x[0], m);
    if (m.candidates() == 2) return simplicial_count_2d(x, m);
    return simplicial_count_general(x, m);
}

DepthValue simplicial_depth(const Profile& x, const GradingMatrix& m) {
    long long total = binomial(static_cast<long long>(m.voters()),
                               static_cast<long long>(m.candidates()) + 1);
    return static_cast<double>(simplicial_depth_count(x, m)) / total;
}

DepthValue eval_depth(const Profile& x, const GradingMatrix& m, const DepthSpec& spec) {
    switch (spec.kind) {
        case DepthSpec::Kind::WLp: return wlp_depth(x, m, spec.p);
        case DepthSpec::Kind::WLinf: return wlinf_depth(x, m);
        case DepthSpec::Kind::TukeyHalfspace:
            return tukey_depth(x, m, spec.tukey_directions);
        case DepthSpec::Kind::LiuSimplicial: return simplicial_depth(x, m);
    }
    throw std::logic_error("unknown depth kind");
}

std::vector<double> lattice(double resolution) {
    if (!(resolution > 0.0 && resolution <= 1.0))
        throw std::invalid_argument("resolution must be in (0, 1]");
    std::vector<double> nodes;
    long long steps = std::llround(1.0 / resolution);
    if (steps >= 1 && std::fabs(steps * resolution - 1.0) <= 1e-9) {
        nodes.reserve(steps + 1);
        for (long long k = 0; k <= steps; ++k)
            nodes.push_back(static_cast<double>(k) / steps);
        return nodes;
    }
    for (double v = 0.0; v < 1.0 - 1e-12; v += resolution) nodes.push_back(v);
    nodes.push_back(1.0);
    return nodes;
}

DepthGrid depth_grid(const GradingMatrix& m, const DepthSpec& spec, double resolution) {
    if (m.candidates() != 2)
        throw std::invalid_argument("depth grids are defined for two candidates");
    DepthGrid g;
    g.nodes = lattice(resolution);
    g.resolution = resolution;
    g.values.reserve(g.nodes.size() * g.nodes.size());
    Profile x(2);
    for (double a : g.nodes) {
        x[0] = a;
        for (double b : g.nodes) {
            x[1] = b;
            g.values.push_back(eval_depth(x, m, spec));
        }
    }
    return g;
}

std::string to_csv(const DepthGrid& g) {
    std::string out = "x1,x2,depth\n";
    char buf[160];
    std::size_t s = g.nodes.size();
    for (std::size_t i1 = 0; i1 < s; ++i1)
        for (std::size_t i2 = 0; i2 < s; ++i2) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", g.nodes[i1],
                          g.nodes[i2], g.values[i1 * s + i2]);
            out += buf;
        }
    return out;
}

}  // namespace dv
