#include "herzslice/herz.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "herzslice/lebesgue.hpp"
#include "herzslice/level_sets.hpp"

namespace herzslice {

HerzParams HerzParams::make(double alpha, double p, const SliceParams& slice, Variant variant) {
    require(std::isfinite(alpha), "HerzParams: alpha must be finite");
    require(p > 0, "HerzParams: p must be positive");
    HerzParams hp;
    hp.alpha = alpha;
    hp.p = p;
    hp.slice = SliceParams::make(slice.t, slice.r, slice.q);
    hp.variant = variant;
    return hp;
}

int annulus_index(double a) {
    require(a > 0 && std::isfinite(a), "annulus_index: need a positive finite radius");
    int k = static_cast<int>(std::ceil(std::log2(a)));
    // log2/ceil can misround right at dyadic boundaries; fix up against the
    // exact powers so that |x| = 2^k always lands in S_k.
    while (a > pow2(k)) ++k;
    while (a <= pow2(k - 1)) --k;
    return k;
}

namespace {

int effective_annulus(const GridSpec& g, std::int64_t idx, Variant variant) {
    int k = annulus_index(g.center_norm(idx));
    if (variant == Variant::nonhomogeneous && k < 0) k = 0;
    return k;
}

// Nonzero-cell indices bucketed by (effective) annulus index.
std::map<int, std::vector<std::int64_t>> bucket_cells(const GridFunction& f, Variant variant) {
    std::map<int, std::vector<std::int64_t>> buckets;
    for (std::int64_t i = 0; i < f.grid.total_cells(); ++i)
        if (f.at(i) != 0.0) buckets[effective_annulus(f.grid, i, variant)].push_back(i);
    return buckets;
}

GridFunction restrict_to(const GridFunction& f, const std::vector<std::int64_t>& cells) {
    GridFunction g(f.grid);
    for (auto i : cells) g.at(i) = f.at(i);
    return g;
}

// ( sum_k 2^{k alpha p} term_k^p )^{1/p}, sup modification at p = inf.
double combine_terms(const std::vector<std::pair<int, double>>& terms, double alpha, double p) {
    if (is_inf(p)) {
        double best = 0.0;
        for (const auto& [k, term] : terms)
            best = std::max(best, std::exp2(k * alpha) * term);
        return best;
    }
    accum_t s = 0;
    for (const auto& [k, term] : terms)
        if (term > 0) s += std::exp2(k * alpha * p) * std::pow(term, p);
    if (s == 0) return 0.0;
    return std::pow(static_cast<double>(s), 1.0 / p);
}

}  // namespace

GridFunction annulus_restrict(const GridFunction& f, int k, Variant variant) {
    GridFunction g(f.grid);
    require(variant == Variant::homogeneous || k >= 0,
            "annulus_restrict: nonhomogeneous annuli start at k = 0");
    for (std::int64_t i = 0; i < f.grid.total_cells(); ++i) {
        if (f.at(i) == 0.0) continue;
        if (effective_annulus(f.grid, i, variant) == k) g.at(i) = f.at(i);
    }
    return g;
}

std::vector<std::pair<int, double>> herz_slice_terms(const GridFunction& f,
                                                     const SliceParams& sp, Variant variant) {
    std::vector<std::pair<int, double>> terms;
    for (const auto& [k, cells] : bucket_cells(f, variant))
        terms.emplace_back(k, slice_norm(restrict_to(f, cells), sp));
    return terms;
}

double herz_slice_norm(const GridFunction& f, const HerzParams& hp) {
    return combine_terms(herz_slice_terms(f, hp.slice, hp.variant), hp.alpha, hp.p);
}

double classical_herz_norm(const GridFunction& f, double alpha, double p, double q,
                           Variant variant) {
    require(p > 0, "classical_herz_norm: p must be positive");
    require(q >= 1 && !is_inf(q), "classical_herz_norm: q must be finite and >= 1");
    std::vector<std::pair<int, double>> terms;
    for (const auto& [k, cells] : bucket_cells(f, variant))
        terms.emplace_back(k, lp_norm(restrict_to(f, cells), q));
    return combine_terms(terms, alpha, p);
}

double weak_herz_slice_norm(const GridFunction& f, const HerzParams& hp) {
    require(!is_inf(hp.p), "weak_herz_slice_norm: p must be finite");
    auto sweep = detail::LevelSweep::build(f);
    if (sweep.levels.empty()) return 0.0;

    // One indicator accumulator per annulus that ever gets a cell; the outer
    // sum W = sum_k 2^{k alpha p} norm_k^p is patched only for the annuli a
    // level actually touches.
    std::map<int, detail::IndicatorSliceNorm> accs;
    std::map<int, double> current_power;  // norm_k^p as last folded into W
    accum_t W = 0;
    double best = 0.0;
    std::vector<int> touched;
    for (const auto& level : sweep.levels) {
        touched.clear();
        for (auto idx : level.cells) {
            int k = effective_annulus(f.grid, idx, hp.variant);
            auto it = accs.find(k);
            if (it == accs.end()) {
                it = accs.emplace(k, detail::IndicatorSliceNorm(f.grid, hp.slice)).first;
                current_power[k] = 0.0;
            }
            it->second.add_cell(idx);
            if (touched.empty() || touched.back() != k) touched.push_back(k);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (int k : touched) {
            double fresh = std::pow(accs.at(k).norm(), hp.p);
            double weight = std::exp2(k * hp.alpha * hp.p);
            W += weight * (fresh - current_power[k]);
            current_power[k] = fresh;
        }
        if (W > 0)
            best = std::max(best, level.value * std::pow(static_cast<double>(W), 1.0 / hp.p));
    }
    return best;
}

std::pair<double, double> inclusion_check(const GridFunction& f, const HerzParams& hp1,
                                          const HerzParams& hp2) {
    bool same_slice = hp1.slice.t == hp2.slice.t && hp1.slice.r == hp2.slice.r &&
                      hp1.slice.q == hp2.slice.q;
    require(same_slice && hp1.variant == hp2.variant,
            "inclusion_check: slice parameters and variant must match");
    bool p_nested = hp1.alpha == hp2.alpha && hp1.p <= hp2.p;
    bool alpha_nested = hp1.p == hp2.p && hp2.alpha <= hp1.alpha &&
                        hp1.variant == Variant::nonhomogeneous;
    require(p_nested || alpha_nested,
            "inclusion_check: need p1 <= p2 (same alpha) or alpha2 <= alpha1 (nonhomogeneous, same p)");
    auto terms = herz_slice_terms(f, hp1.slice, hp1.variant);
    return {combine_terms(terms, hp1.alpha, hp1.p), combine_terms(terms, hp2.alpha, hp2.p)};
}

IntersectionReport intersection_check(const GridFunction& f, const HerzParams& hp) {
    require(hp.alpha > 0, "intersection_check: alpha must be positive");
    require(!is_inf(hp.p), "intersection_check: p must be finite");
    IntersectionReport rep;
    HerzParams nh = hp, ho = hp;
    nh.variant = Variant::nonhomogeneous;
    ho.variant = Variant::homogeneous;
    rep.nonhomogeneous = herz_slice_norm(f, nh);
    rep.homogeneous = herz_slice_norm(f, ho);
    rep.slice = slice_norm(f, hp.slice);
    return rep;
}

std::pair<double, double> weighted_sandwich_check(const GridFunction& f, double alpha, double p) {
    require(p > 0 && !is_inf(p), "weighted_sandwich_check: p must be finite");
    double herz = classical_herz_norm(f, alpha, p, p, Variant::homogeneous);
    double weighted = weighted_lp_norm(f, p, alpha * p);
    return {herz, weighted};
}

}  // namespace herzslice
