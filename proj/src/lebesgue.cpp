#include "herzslice/lebesgue.hpp"

#include <algorithm>
#include <cmath>

namespace herzslice {

namespace {

double cell_measure(const GridSpec& g) {
    return g.dim == 1 ? g.spacing : g.spacing * g.spacing;
}

void check_p(double p) {
    require(p > 0, "lp exponent must be positive");
}

}  // namespace

double lp_norm(const GridFunction& f, double p) {
    check_p(p);
    if (is_inf(p)) return f.max_abs();
    accum_t s = 0;
    for (double v : f.values) {
        double a = std::fabs(v);
        if (a != 0.0) s += std::pow(a, p);
    }
    if (s == 0) return 0.0;
    return std::pow(static_cast<double>(s) * cell_measure(f.grid), 1.0 / p);
}

double weak_lp_norm(const GridFunction& f, double p) {
    check_p(p);
    require(!is_inf(p), "weak_lp_norm: p must be finite");
    std::vector<double> vals;
    vals.reserve(f.values.size());
    for (double v : f.values)
        if (v != 0.0) vals.push_back(std::fabs(v));
    if (vals.empty()) return 0.0;
    std::sort(vals.begin(), vals.end(), std::greater<>());
    double hn = cell_measure(f.grid);
    double best = 0.0;
    // Walk distinct values in descending order; the cumulative count at the
    // end of a run is measure{|f| >= v} in cells.
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i + 1 < vals.size() && vals[i + 1] == vals[i]) continue;
        double cand = vals[i] * std::pow(static_cast<double>(i + 1) * hn, 1.0 / p);
        best = std::max(best, cand);
    }
    return best;
}

double weighted_lp_norm(const GridFunction& f, double p, double alpha_p) {
    check_p(p);
    require(!is_inf(p), "weighted_lp_norm: p must be finite");
    accum_t s = 0;
    const GridSpec& g = f.grid;
    for (std::int64_t i = 0; i < g.total_cells(); ++i) {
        double a = std::fabs(f.at(i));
        if (a == 0.0) continue;
        double w = alpha_p == 0.0 ? 1.0 : std::pow(g.center_norm(i), alpha_p);
        s += std::pow(a, p) * w;
    }
    if (s == 0) return 0.0;
    return std::pow(static_cast<double>(s) * cell_measure(g), 1.0 / p);
}

}  // namespace herzslice
