#include "dv/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dv::geom {

int orientation(const Pt2& a, const Pt2& b, const Pt2& c) {
    double det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    if (std::fabs(det) <= kOrientTol) return 0;
    return det > 0 ? 1 : -1;
}

namespace {

double dist2(const Pt2& a, const Pt2& b) {
    double dx = a[0] - b[0], dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

// Closed containment of p in segment [u, w], all three known collinear.
bool segment_contains(const Pt2& u, const Pt2& w, const Pt2& p) {
    if (orientation(u, w, p) != 0) return false;
    double lox = std::min(u[0], w[0]) - kOrientTol, hix = std::max(u[0], w[0]) + kOrientTol;
    double loy = std::min(u[1], w[1]) - kOrientTol, hiy = std::max(u[1], w[1]) + kOrientTol;
    return p[0] >= lox && p[0] <= hix && p[1] >= loy && p[1] <= hiy;
}

}  // namespace

bool triangle_contains(const Pt2& a, const Pt2& b, const Pt2& c, const Pt2& p) {
    int o = orientation(a, b, c);
    if (o != 0) {
        int s1 = orientation(a, b, p);
        int s2 = orientation(b, c, p);
        int s3 = orientation(c, a, p);
        return s1 * o >= 0 && s2 * o >= 0 && s3 * o >= 0;
    }
    // Degenerate: span is the longest segment among the vertex pairs.
    double ab = dist2(a, b), ac = dist2(a, c), bc = dist2(b, c);
    if (ab == 0.0 && ac == 0.0) return p[0] == a[0] && p[1] == a[1];
    if (ab >= ac && ab >= bc) return segment_contains(a, b, p);
    if (ac >= bc) return segment_contains(a, c, p);
    return segment_contains(b, c, p);
}

// Phase-1 simplex on  A l = b, l >= 0  with artificial variables, Bland's
// rule.  Sizes here are tiny (a handful of points in up to a few dimensions),
// so a dense tableau is plenty.
bool convex_hull_contains(const std::vector<std::vector<double>>& pts,
                          const std::vector<double>& x, double tol) {
    if (pts.empty()) return false;
    std::size_t d = x.size();
    for (const auto& p : pts)
        if (p.size() != d) throw std::invalid_argument("hull point dimension mismatch");

    std::size_t rows = d + 1;        // coordinate constraints plus sum-to-one
    std::size_t m = pts.size();      // structural variables
    std::size_t cols = m + rows + 1; // structurals, artificials, rhs

    std::vector<std::vector<double>> t(rows, std::vector<double>(cols, 0.0));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t k = 0; k < m; ++k) t[r][k] = pts[k][r];
        t[r][cols - 1] = x[r];
    }
    for (std::size_t k = 0; k < m; ++k) t[d][k] = 1.0;
    t[d][cols - 1] = 1.0;

    for (std::size_t r = 0; r < rows; ++r) {
        if (t[r][cols - 1] < 0.0)
            for (std::size_t c = 0; c < cols; ++c) t[r][c] = -t[r][c];
        t[r][m + r] = 1.0;
    }

    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

    // Objective: minimize the sum of artificials; reduced costs start as the
    // negated column sums over the artificial rows.
    std::vector<double> obj(cols, 0.0);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) obj[c] -= t[r][c];
    for (std::size_t r = 0; r < rows; ++r) obj[m + r] += 1.0;

    const double pivot_tol = 1e-11;
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t enter = cols - 1;
        for (std::size_t c = 0; c + 1 < cols; ++c)
            if (obj[c] < -pivot_tol) { enter = c; break; }  // Bland: lowest index
        if (enter == cols - 1) break;

        std::size_t leave = rows;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] > pivot_tol) {
                double ratio = t[r][cols - 1] / t[r][enter];
                if (ratio < best_ratio - 1e-15 ||
                    (std::fabs(ratio - best_ratio) <= 1e-15 &&
                     (leave == rows || basis[r] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = r;
                }
            }
        }
        if (leave == rows) break;  // unbounded cannot happen in phase 1

        double piv = t[leave][enter];
        for (std::size_t c = 0; c < cols; ++c) t[leave][c] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave) continue;
            double f = t[r][enter];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < cols; ++c) t[r][c] -= f * t[leave][c];
        }
        double f = obj[enter];
        for (std::size_t c = 0; c < cols; ++c) obj[c] -= f * t[leave][c];
        basis[leave] = enter;
    }

    double infeasibility = 0.0;
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= m) infeasibility += t[r][cols - 1];
    return infeasibility <= tol;
}

}  // namespace dv::geom
