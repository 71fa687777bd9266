#include "dv/deepest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dv {

namespace {

double pnorm_derivative(const std::vector<double>& grades, double p, double x) {
    double s = 0.0;
    for (double g : grades) {
        double diff = x - g;
        if (diff > 0.0)
            s += p * std::pow(diff, p - 1.0);
        else if (diff < 0.0)
            s -= p * std::pow(-diff, p - 1.0);
    }
    return s;
}

// Bisection down to a fixed bracket width.  The width is kept below the
// documented 1e-12 bound; a fixed final width (rather than an early exit on
// a small derivative) keeps answers from different initial brackets within
// a few ulps of each other even where the objective is nearly flat.
double bisect_argmin(const std::vector<double>& grades, double p, double lo, double hi) {
    for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (pnorm_derivative(grades, p, mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

void require_p_gt1(double p) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("scalar optimizer requires finite p > 1");
}

double sorted_mean(const std::vector<double>& sorted) {
    double s = 0.0;
    for (double g : sorted) s += g;
    return s / sorted.size();
}

}  // namespace

double scalar_pnorm_argmin(const std::vector<double>& grades, double p) {
    require_p_gt1(p);
    if (grades.empty()) throw std::invalid_argument("no grades");
    auto [lo, hi] = std::minmax_element(grades.begin(), grades.end());
    if (*lo == *hi) return *lo;  // unanimity snaps exactly
    return bisect_argmin(grades, p, *lo, *hi);
}

double scalar_pnorm_argmin_bracketed(const std::vector<double>& grades, double p,
                                     double lo, double hi) {
    require_p_gt1(p);
    if (grades.empty()) throw std::invalid_argument("no grades");
    if (!(lo <= hi)) throw std::invalid_argument("invalid bracket");
    auto [gmin, gmax] = std::minmax_element(grades.begin(), grades.end());
    if (*gmin == *gmax) return *gmin;
    if (pnorm_derivative(grades, p, lo) > 0.0 || pnorm_derivative(grades, p, hi) < 0.0)
        throw std::invalid_argument("bracket does not straddle the minimizer");
    return bisect_argmin(grades, p, lo, hi);
}

DeepestResult deepest_wlp(const GradingMatrix& m, double p) {
    if (m.candidates() == 0 || m.voters() == 0)
        throw std::invalid_argument("empty grading matrix");
    if (!(p >= 1.0))
        throw std::invalid_argument("exponent must be >= 1");
    const std::size_t d = m.candidates();
    const std::size_t n = m.voters();
    DeepestResult r;
    r.canonical.resize(d);

    if (p == 1.0) {
        r.method = DeepestResult::Method::ClosedForm;
        r.box_lower.resize(d);
        r.box_upper.resize(d);
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<double> row = m.row(i);
            std::sort(row.begin(), row.end());
            r.box_lower[i] = row[(n - 1) / 2];
            r.box_upper[i] = row[n / 2];
            r.canonical[i] = row[n / 2];  // upper-middle order statistic
        }
        r.set_kind = (r.box_lower == r.box_upper) ? DeepestResult::SetKind::SinglePoint
                                                  : DeepestResult::SetKind::IntervalBox;
        r.depth = wlp_depth(r.canonical, m, 1.0);
        return r;
    }

    if (std::isinf(p)) {
        r.method = DeepestResult::Method::ClosedForm;
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<double> row = m.row(i);
            auto [lo, hi] = std::minmax_element(row.begin(), row.end());
            r.canonical[i] = (*lo == *hi) ? *lo : 0.5 * (*lo + *hi);
        }
        r.depth = wlinf_depth(r.canonical, m);
        return r;
    }

    if (p == 2.0) {
        r.method = DeepestResult::Method::ClosedForm;
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<double> row = m.row(i);
            std::sort(row.begin(), row.end());  // order-free summation
            r.canonical[i] = (row.front() == row.back()) ? row.front() : sorted_mean(row);
        }
        r.depth = wlp_depth(r.canonical, m, 2.0);
        return r;
    }

    r.method = DeepestResult::Method::ScalarOptimizer;
    double worst = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> row = m.row(i);
        std::sort(row.begin(), row.end());  // column order must not matter
        r.canonical[i] = scalar_pnorm_argmin(row, p);
        if (row.front() != row.back())
            worst = std::max(worst, std::fabs(pnorm_derivative(row, p, r.canonical[i])));
    }
    r.residual = worst;
    r.depth = wlp_depth(r.canonical, m, p);
    return r;
}

DeepestResult deepest_grid(const GradingMatrix& m, const DepthSpec& spec) {
    if (m.candidates() != 2)
        throw std::invalid_argument("lattice deepest-set search is defined for two candidates");
    if (!(spec.grid_resolution > 0.0 && spec.grid_resolution <= 0.05))
        throw std::invalid_argument("grid resolution must be in (0, 0.05]");
    const std::vector<double> nodes = lattice(spec.grid_resolution);
    const std::size_t s = nodes.size();
    const bool integral = spec.kind == DepthSpec::Kind::TukeyHalfspace ||
                          spec.kind == DepthSpec::Kind::LiuSimplicial;

    DeepestResult r;
    r.method = DeepestResult::Method::GridSearch;
    r.set_kind = DeepestResult::SetKind::GridRegion;

    Profile x(2);
    if (integral) {
        long long best = -1;
        std::vector<long long> counts(s * s);
        for (std::size_t i1 = 0; i1 < s; ++i1) {
            x[0] = nodes[i1];
            for (std::size_t i2 = 0; i2 < s; ++i2) {
                x[1] = nodes[i2];
                long long c = spec.kind == DepthSpec::Kind::TukeyHalfspace
                                  ? tukey_depth_count(x, m, spec.tukey_directions)
                                  : simplicial_depth_count(x, m);
                counts[i1 * s + i2] = c;
                best = std::max(best, c);
            }
        }
        for (std::size_t i1 = 0; i1 < s; ++i1)
            for (std::size_t i2 = 0; i2 < s; ++i2)
                if (counts[i1 * s + i2] == best) r.region.push_back({nodes[i1], nodes[i2]});
        if (spec.kind == DepthSpec::Kind::TukeyHalfspace) {
            r.depth = static_cast<double>(best) / m.voters();
            r.approximate = !tukey_is_exact(m.candidates());
        } else {
            long long n = static_cast<long long>(m.voters());
            long long total = n * (n - 1) * (n - 2) / 6;
            r.depth = static_cast<double>(best) / total;
        }
    } else {
        double best = -1.0;
        std::vector<double> values(s * s);
        for (std::size_t i1 = 0; i1 < s; ++i1) {
            x[0] = nodes[i1];
            for (std::size_t i2 = 0; i2 < s; ++i2) {
                x[1] = nodes[i2];
                double v = spec.kind == DepthSpec::Kind::WLp ? wlp_depth(x, m, spec.p)
                                                             : wlinf_depth(x, m);
                values[i1 * s + i2] = v;
                best = std::max(best, v);
            }
        }
        for (std::size_t i1 = 0; i1 < s; ++i1)
            for (std::size_t i2 = 0; i2 < s; ++i2)
                if (values[i1 * s + i2] >= best - 1e-12)
                    r.region.push_back({nodes[i1], nodes[i2]});
        r.depth = best;
    }

    r.canonical.assign(2, 0.0);
    for (const Profile& node : r.region) {
        r.canonical[0] += node[0];
        r.canonical[1] += node[1];
    }
    r.canonical[0] /= r.region.size();
    r.canonical[1] /= r.region.size();
    return r;
}

DeepestResult deepest(const GradingMatrix& m, const DepthSpec& spec) {
    switch (spec.kind) {
        case DepthSpec::Kind::WLp: return deepest_wlp(m, spec.p);
        case DepthSpec::Kind::WLinf:
            return deepest_wlp(m, std::numeric_limits<double>::infinity());
        case DepthSpec::Kind::TukeyHalfspace:
        case DepthSpec::Kind::LiuSimplicial: return deepest_grid(m, spec);
    }
    throw std::logic_error("unknown depth kind");
}

}  // namespace dv
