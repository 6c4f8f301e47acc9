#include "herzslice/duality.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace herzslice {

double conjugate(double p) {
    require(p >= 1, "conjugate: p must lie in [1, inf]");
    if (p == 1.0) return kInf;
    if (is_inf(p)) return 1.0;
    return p / (p - 1.0);
}

double pairing(const GridFunction& f, const GridFunction& g) {
    require(f.grid.same_geometry(g.grid), "pairing: grid mismatch");
    accum_t s = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        s += static_cast<accum_t>(f.values[i]) * g.values[i];
    double hn = f.grid.dim == 1 ? f.grid.spacing : f.grid.spacing * f.grid.spacing;
    return static_cast<double>(s) * hn;
}

HolderCheck check_slice_holder(const GridFunction& f, const GridFunction& g,
                               const SliceParams& sp) {
    require(f.grid.same_geometry(g.grid), "check_slice_holder: grid mismatch");
    HolderCheck c;
    accum_t s = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        s += std::fabs(static_cast<accum_t>(f.values[i]) * g.values[i]);
    double hn = f.grid.dim == 1 ? f.grid.spacing : f.grid.spacing * f.grid.spacing;
    c.lhs = static_cast<double>(s) * hn;
    SliceParams dual = SliceParams::make(sp.t, conjugate(sp.r), conjugate(sp.q));
    c.rhs = slice_norm(f, sp) * slice_norm(g, dual);
    return c;
}

HolderCheck check_herz_holder(const GridFunction& f, const GridFunction& g,
                              const HerzParams& hp) {
    require(hp.p > 1 && !is_inf(hp.p), "check_herz_holder: p must lie in (1, inf)");
    require(hp.slice.q > 1 && !is_inf(hp.slice.q), "check_herz_holder: q must lie in (1, inf)");
    HolderCheck c;
    c.lhs = std::fabs(pairing(f, g));
    SliceParams dual_slice =
        SliceParams::make(hp.slice.t, conjugate(hp.slice.r), conjugate(hp.slice.q));
    HerzParams dual = HerzParams::make(-hp.alpha, conjugate(hp.p), dual_slice, hp.variant);
    c.rhs = herz_slice_norm(f, hp) * herz_slice_norm(g, dual);
    return c;
}

namespace {

// Random step function living on the annuli that carry f.
GridFunction random_witness(const GridFunction& f, Variant variant, std::mt19937_64& rng) {
    const GridSpec& g = f.grid;
    std::vector<char> active_annulus(64, 0);
    auto slot = [](int k) { return static_cast<std::size_t>(std::clamp(k + 32, 0, 63)); };
    for (std::int64_t i = 0; i < g.total_cells(); ++i)
        if (f.at(i) != 0.0) {
            int k = annulus_index(g.center_norm(i));
            if (variant == Variant::nonhomogeneous && k < 0) k = 0;
            active_annulus[slot(k)] = 1;
        }
    // One random level per macro patch of a few cells: textured enough to
    // probe the pairing, coarse enough to survive the local averaging.
    int patch = std::max(2, g.cells_per_axis / 64);
    int n = g.cells_per_axis;
    int patches = (n + patch - 1) / patch;
    std::vector<double> levels(static_cast<std::size_t>(patches) *
                               (g.dim == 2 ? patches : 1));
    for (auto& v : levels) v = 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
    GridFunction w(g);
    int ny = g.dim == 2 ? n : 1;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            std::int64_t idx = g.index(ix, iy);
            int k = annulus_index(g.center_norm(idx));
            if (variant == Variant::nonhomogeneous && k < 0) k = 0;
            if (!active_annulus[slot(k)]) continue;
            std::size_t li = static_cast<std::size_t>(iy / patch) *
                                 (g.dim == 2 ? static_cast<std::size_t>(patches) : 0) +
                             static_cast<std::size_t>(ix / patch);
            w.at(idx) = levels[li];
        }
    }
    return w;
}

}  // namespace

double norm_by_duality_lower_bound(const GridFunction& f, const HerzParams& hp, int trials,
                                   std::uint64_t seed) {
    require(hp.p > 1 && !is_inf(hp.p), "norm_by_duality_lower_bound: p must lie in (1, inf)");
    require(hp.slice.q > 1 && !is_inf(hp.slice.q),
            "norm_by_duality_lower_bound: q must lie in (1, inf)");
    require(trials >= 1, "norm_by_duality_lower_bound: need at least one trial");
    SliceParams dual_slice =
        SliceParams::make(hp.slice.t, conjugate(hp.slice.r), conjugate(hp.slice.q));
    HerzParams dual = HerzParams::make(-hp.alpha, conjugate(hp.p), dual_slice, hp.variant);

    double best = 0.0;
    auto consider = [&](const GridFunction& g) {
        double dn = herz_slice_norm(g, dual);
        if (dn == 0.0) return;
        best = std::max(best, std::fabs(pairing(f, g)) / dn);
    };
    consider(f);  // analytic witness: f normalized by its own dual norm
    std::mt19937_64 rng(seed);
    for (int tr = 1; tr < trials; ++tr) consider(random_witness(f, hp.variant, rng));
    return best;
}

}  // namespace herzslice
