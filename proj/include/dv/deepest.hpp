#ifndef DV_DEEPEST_HPP_
#define DV_DEEPEST_HPP_

#include <vector>

#include "dv/depth.hpp"
#include "dv/grades.hpp"

namespace dv {

// Deepest set of a grade scatterplot, with a canonical representative.
struct DeepestResult {
    enum class Method { ClosedForm, ScalarOptimizer, GridSearch };
    enum class SetKind { SinglePoint, IntervalBox, GridRegion };

    Profile canonical;
    SetKind set_kind = SetKind::SinglePoint;
    Profile box_lower, box_upper;   // IntervalBox bounds
    std::vector<Profile> region;    // GridRegion lattice nodes, row-major order
    DepthValue depth = 0.0;         // depth attained on the deepest set
    Method method = Method::ClosedForm;
    double residual = 0.0;          // first-order residual of the scalar solver
    bool approximate = false;       // set when the evaluator itself is sampled
};

// Minimizer of x -> sum_j |g_j - x|^p for finite p > 1, by bisection on the
// strictly increasing derivative over [min g, max g].
double scalar_pnorm_argmin(const std::vector<double>& grades, double p);

// Same minimizer from a caller-chosen initial bracket, which must contain
// [min g, max g] or at least a sign change of the derivative.
double scalar_pnorm_argmin_bracketed(const std::vector<double>& grades, double p,
                                     double lo, double hi);

// Coordinate-wise deepest point of the weighted-distance depths.  Accepts
// p in [1, +infinity]: p = 1 gives per-candidate median intervals with the
// upper-middle order statistic as canonical point, p = 2 the mean, p = inf
// the midrange, and other finite p the scalar optimizer per coordinate.
DeepestResult deepest_wlp(const GradingMatrix& m, double p);

// Lattice search over [0,1]^2 at spec.grid_resolution; ties are collected
// into a GridRegion whose centroid is the canonical point.  Halfspace and
// simplicial regions compare exact integer counts.
DeepestResult deepest_grid(const GradingMatrix& m, const DepthSpec& spec);

// Dispatch on spec.kind: closed forms and the scalar solver for the
// weighted-distance family, lattice search for the geometric depths.
DeepestResult deepest(const GradingMatrix& m, const DepthSpec& spec);

}  // namespace dv

#endif  // DV_DEEPEST_HPP_
