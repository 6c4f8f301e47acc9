#include "herzslice/blocks.hpp"

#include <cmath>

namespace herzslice {

std::pair<bool, double> is_central_block(const GridFunction& g, int k, const HerzParams& hp,
                                         bool restrict_type) {
    double measured = slice_norm(g, hp.slice);
    if (restrict_type && k < 0) return {false, measured};
    double radius = pow2(k);
    for (std::int64_t i = 0; i < g.grid.total_cells(); ++i)
        if (g.at(i) != 0.0 && g.grid.center_norm(i) > radius) return {false, measured};
    double bound = std::exp2(-static_cast<double>(k) * hp.alpha);
    return {measured <= bound * (1.0 + 1e-9), measured};
}

BlockDecomposition decompose(const GridFunction& f, const HerzParams& hp) {
    require(!is_inf(hp.p), "decompose: p must be finite");
    BlockDecomposition dec;
    dec.params = hp;
    bool restrict_type = hp.variant == Variant::nonhomogeneous;
    for (const auto& [k, piece_norm] : herz_slice_terms(f, hp.slice, hp.variant)) {
        if (piece_norm <= 0) continue;
        GridFunction piece = annulus_restrict(f, k, hp.variant);
        double lambda = std::exp2(k * hp.alpha) * piece_norm;
        CentralBlock block;
        block.k = k;
        block.data = scale(piece, 1.0 / lambda);
        block.measured_slice_norm = slice_norm(block.data, hp.slice);
        block.restrict_type = restrict_type;
        dec.entries.push_back({k, lambda, std::move(block)});
    }
    if (dec.entries.empty())
        throw std::domain_error("decompose: function is identically zero");
    return dec;
}

GridFunction reconstruct(const BlockDecomposition& dec) {
    require(!dec.entries.empty(), "reconstruct: empty decomposition");
    const GridSpec& g = dec.entries.front().block.data.grid;
    GridFunction out(g);
    for (const auto& e : dec.entries) {
        require(e.block.data.grid.same_geometry(g), "reconstruct: grid mismatch between blocks");
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += e.lambda * e.block.data.values[i];
    }
    return out;
}

std::pair<double, double> synthesis_bound_probe(const BlockDecomposition& dec) {
    require(!dec.entries.empty(), "synthesis_bound_probe: empty decomposition");
    bool restrict_type = dec.params.variant == Variant::nonhomogeneous;
    for (const auto& e : dec.entries) {
        auto [ok, measured] = is_central_block(e.block.data, e.k, dec.params, restrict_type);
        (void)measured;
        require(ok, "synthesis_bound_probe: entry fails the central-block conditions");
        require(e.lambda > 0, "synthesis_bound_probe: coefficients must be positive");
    }
    double lhs = herz_slice_norm(reconstruct(dec), dec.params);
    accum_t s = 0;
    for (const auto& e : dec.entries) s += std::pow(e.lambda, dec.params.p);
    double rhs = std::pow(static_cast<double>(s), 1.0 / dec.params.p);
    return {lhs, rhs};
}

}  // namespace herzslice
