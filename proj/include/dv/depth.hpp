#ifndef DV_DEPTH_HPP_
#define DV_DEPTH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dv/grades.hpp"

namespace dv {

// Which depth function to use and how to evaluate it.
struct DepthSpec {
    enum class Kind { WLp, WLinf, TukeyHalfspace, LiuSimplicial };

    Kind kind = Kind::WLp;
    double p = 1.0;               // exponent, WLp only, finite and >= 1
    int tukey_directions = 1000;  // sampled directions when d > 2, >= 100
    double grid_resolution = 0.005;  // lattice pitch for deepest-set search, <= 0.05

    static DepthSpec wlp(double p);
    static DepthSpec wlinf();
    static DepthSpec tukey();
    static DepthSpec liu();

    DepthSpec& with_grid_resolution(double r);
    DepthSpec& with_tukey_directions(int k);

    // Short identifier: "wl1", "wl2.5", "wlinf", "tukey", "liu".
    std::string id() const;
};

using DepthValue = double;

// Weighted-distance depths.  The query point may be any real vector of
// length m.candidates(); values lie in (0, 1].
DepthValue wlp_depth(const Profile& x, const GradingMatrix& m, double p);
DepthValue wlinf_depth(const Profile& x, const GradingMatrix& m);

// Halfspace depth: least fraction of voter profiles in a closed halfspace
// containing x.  Exact for d <= 2; for d > 2 the minimum is taken over
// sampled and data-derived directions only (an approximation from above).
int tukey_depth_count(const Profile& x, const GradingMatrix& m,
                      int directions = 1000);
DepthValue tukey_depth(const Profile& x, const GradingMatrix& m,
                       int directions = 1000);
bool tukey_is_exact(std::size_t d);

// Simplicial depth: fraction of the C(n, d+1) voter-profile simplices whose
// closed convex hull contains x.  Exhaustive enumeration.
long long simplicial_depth_count(const Profile& x, const GradingMatrix& m);
DepthValue simplicial_depth(const Profile& x, const GradingMatrix& m);

DepthValue eval_depth(const Profile& x, const GradingMatrix& m, const DepthSpec& spec);

// Axis lattice {0, resolution, ..., 1}.  Exact node coordinates k/steps when
// the resolution divides 1.
std::vector<double> lattice(double resolution);

struct DepthGrid {
    std::vector<double> nodes;      // shared axis lattice
    std::vector<double> values;     // row-major over (x1 index, x2 index)
    double resolution = 0.0;
    double value_at(std::size_t i1, std::size_t i2) const {
        return values[i1 * nodes.size() + i2];
    }
};

// Dense evaluation over the d = 2 lattice.
DepthGrid depth_grid(const GradingMatrix& m, const DepthSpec& spec, double resolution);

// CSV rendering: columns x1, x2, depth in row-major lattice order.
std::string to_csv(const DepthGrid& g);

}  // namespace dv

#endif  // DV_DEPTH_HPP_
