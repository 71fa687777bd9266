#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

double wlp_depth(const std::vector<double>& x, const dv::GradingMatrix& m, double p) {
    long double total = 0.0L;
    for (std::size_t j = 0; j < m.voters(); ++j)
        for (std::size_t i = 0; i < m.candidates(); ++i)
            total += powl(fabsl(static_cast<long double>(m(i, j)) - x[i]),
                          static_cast<long double>(p));
    return static_cast<double>(1.0L / (1.0L + total / m.voters()));
}

double wlinf_depth(const std::vector<double>& x, const dv::GradingMatrix& m) {
    long double total = 0.0L;
    for (std::size_t j = 0; j < m.voters(); ++j) {
        long double worst = 0.0L;
        for (std::size_t i = 0; i < m.candidates(); ++i)
            worst = std::max(worst, fabsl(static_cast<long double>(m(i, j)) - x[i]));
        total += worst;
    }
    return static_cast<double>(1.0L / (1.0L + total / m.voters()));
}

namespace {

std::size_t halfspace_count(const std::vector<double>& x, const dv::GradingMatrix& m,
                            double ux, double uy) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < m.voters(); ++j) {
        double dot = (m(0, j) - x[0]) * ux + (m(1, j) - x[1]) * uy;
        if (dot >= -1e-12) ++count;
    }
    return count;
}

}  // namespace

std::size_t tukey_count_2d(const std::vector<double>& x, const dv::GradingMatrix& m) {
    if (m.candidates() != 2) throw std::invalid_argument("oracle needs two candidates");
    const double pi = std::acos(-1.0);
    std::vector<double> breaks;
    for (std::size_t j = 0; j < m.voters(); ++j) {
        double dx = m(0, j) - x[0];
        double dy = m(1, j) - x[1];
        if (dx == 0.0 && dy == 0.0) continue;
        double theta = std::atan2(dy, dx);
        for (double b : {theta + pi / 2, theta - pi / 2}) {
            while (b < 0.0) b += 2 * pi;
            while (b >= 2 * pi) b -= 2 * pi;
            breaks.push_back(b);
        }
    }
    if (breaks.empty()) return m.voters();
    std::sort(breaks.begin(), breaks.end());

    std::vector<double> probes = breaks;
    for (std::size_t k = 0; k < breaks.size(); ++k) {
        double next = k + 1 < breaks.size() ? breaks[k + 1] : breaks.front() + 2 * pi;
        probes.push_back((breaks[k] + next) / 2);
    }
    // Boundaries parallel to a segment between two voters, nudged both ways.
    for (std::size_t a = 0; a < m.voters(); ++a)
        for (std::size_t b = a + 1; b < m.voters(); ++b) {
            double dx = m(0, b) - m(0, a);
            double dy = m(1, b) - m(1, a);
            if (dx == 0.0 && dy == 0.0) continue;
            double phi = std::atan2(dx, -dy);
            probes.push_back(phi);
            probes.push_back(phi + pi);
            probes.push_back(phi + 1e-7);
            probes.push_back(phi - 1e-7);
        }

    std::size_t best = m.voters();
    for (double phi : probes)
        best = std::min(best, halfspace_count(x, m, std::cos(phi), std::sin(phi)));
    return best;
}

namespace {

// Hull of a collinear triple is the segment between its two farthest points.
bool collinear_contains(const double* a, const double* b, const double* c,
                        const std::vector<double>& x) {
    const double* lo = a;
    const double* hi = b;
    double best = -1.0;
    const double* pts[3] = {a, b, c};
    for (int s = 0; s < 3; ++s)
        for (int t = s + 1; t < 3; ++t) {
            double d = std::hypot(pts[s][0] - pts[t][0], pts[s][1] - pts[t][1]);
            if (d > best) {
                best = d;
                lo = pts[s];
                hi = pts[t];
            }
        }
    if (best == 0.0) return std::fabs(x[0] - a[0]) <= 1e-12 && std::fabs(x[1] - a[1]) <= 1e-12;
    double cross = (hi[0] - lo[0]) * (x[1] - lo[1]) - (hi[1] - lo[1]) * (x[0] - lo[0]);
    if (std::fabs(cross) > 1e-12) return false;
    double t = ((x[0] - lo[0]) * (hi[0] - lo[0]) + (x[1] - lo[1]) * (hi[1] - lo[1])) /
               (best * best);
    return t >= -1e-12 && t <= 1.0 + 1e-12;
}

}  // namespace

std::size_t simplicial_count_2d(const std::vector<double>& x, const dv::GradingMatrix& m) {
    if (m.candidates() != 2) throw std::invalid_argument("oracle needs two candidates");
    std::size_t n = m.voters();
    std::size_t count = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                double pa[2] = {m(0, a), m(1, a)};
                double pb[2] = {m(0, b), m(1, b)};
                double pc[2] = {m(0, c), m(1, c)};
                double t00 = pa[0] - pc[0], t01 = pb[0] - pc[0];
                double t10 = pa[1] - pc[1], t11 = pb[1] - pc[1];
                double det = t00 * t11 - t01 * t10;
                if (std::fabs(det) <= 1e-12) {
                    if (collinear_contains(pa, pb, pc, x)) ++count;
                    continue;
                }
                double r0 = x[0] - pc[0], r1 = x[1] - pc[1];
                double l1 = (t11 * r0 - t01 * r1) / det;
                double l2 = (t00 * r1 - t10 * r0) / det;
                double l3 = 1.0 - l1 - l2;
                if (l1 >= -1e-9 && l2 >= -1e-9 && l3 >= -1e-9) ++count;
            }
    return count;
}

long double pnorm_objective(const std::vector<double>& grades, double p, double x) {
    long double total = 0.0L;
    for (double g : grades)
        total += powl(fabsl(static_cast<long double>(g) - x),
                      static_cast<long double>(p));
    return total;
}

double scan_argmin(const std::vector<double>& grades, double p) {
    double lo = *std::min_element(grades.begin(), grades.end());
    double hi = *std::max_element(grades.begin(), grades.end());
    for (int round = 0; round < 3; ++round) {
        const int steps = 2000;
        double best_x = lo;
        long double best_v = pnorm_objective(grades, p, lo);
        for (int k = 1; k <= steps; ++k) {
            double x = lo + (hi - lo) * k / steps;
            long double v = pnorm_objective(grades, p, x);
            if (v < best_v) {
                best_v = v;
                best_x = x;
            }
        }
        double h = (hi - lo) / steps;
        lo = std::max(lo, best_x - h);
        hi = std::min(hi, best_x + h);
        if (hi <= lo) return best_x;
    }
    return (lo + hi) / 2;
}

}  // namespace oracle
