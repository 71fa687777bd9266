#ifndef DV_GEOMETRY_HPP_
#define DV_GEOMETRY_HPP_

#include <array>
#include <cstddef>
#include <vector>

namespace dv::geom {

// Determinant magnitudes at or below this are classified as degenerate.
inline constexpr double kOrientTol = 1e-12;

using Pt2 = std::array<double, 2>;

// Sign of the signed area of (a, b, c): +1 counterclockwise, -1 clockwise,
// 0 within kOrientTol of collinear.
int orientation(const Pt2& a, const Pt2& b, const Pt2& c);

// Closed containment of p in triangle (a, b, c).  A degenerate triangle
// contains exactly the points of the segment (or point) its vertices span.
bool triangle_contains(const Pt2& a, const Pt2& b, const Pt2& c, const Pt2& p);

// Closed containment of x in the convex hull of pts, decided by a phase-1
// simplex feasibility solve of  sum l_k p_k = x, sum l_k = 1, l >= 0.
bool convex_hull_contains(const std::vector<std::vector<double>>& pts,
                          const std::vector<double>& x, double tol = 1e-9);

}  // namespace dv::geom

#endif  // DV_GEOMETRY_HPP_
