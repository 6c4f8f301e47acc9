#pragma once

#include <optional>

#include "herzslice/herz.hpp"

namespace herzslice {

// Dyadic-free radius ladder r_j = (j + 1/2) h.  The smallest ball holds only
// the center cell, so Mf >= |f| pointwise by construction; in 1D consecutive
// radii enumerate every distinct discrete ball exactly once.
struct RadiusLadder {
    double spacing = 1.0;
    int last = 0;  // largest ladder index J

    // cover_distance: every point of the evaluation grid must see the whole
    // input box within r_J.  max_radius truncates the ladder (benchmarks).
    static RadiusLadder make(double spacing, double cover_distance, double max_radius);

    double radius(int j) const { return (j + 0.5) * spacing; }
};

// Hardy-Littlewood maximal function: max over ladder balls of the average of
// |f| with zero extension outside the box, divided by the full discrete ball
// size.  Evaluated on a grid widened to extension_factor * L (cell aligned).
// Fast path: per-row prefix sums.
GridFunction hl_maximal(const GridFunction& f, double extension_factor = 2.0,
                        double max_radius = kInf);

// Reference evaluator that re-sums every ball from scratch.  Guarded to
// N <= 4096 (1D) / 128^2 (2D) unless enforce_guard is lifted for benchmarks.
GridFunction hl_maximal_oracle(const GridFunction& f, double extension_factor = 2.0,
                               double max_radius = kInf, bool enforce_guard = true);

struct SweepRow {
    double alpha, p, q, r, t;
    double L, h;
    double constant;
    int corpus;
    std::uint64_t seed;
};

// max over the corpus of herz_slice_norm(Mf) / herz_slice_norm(f), with the
// annuli of Mf taken over its enlarged grid.  Zero-norm inputs are skipped.
SweepRow estimate_operator_norm(const std::vector<FunctionSpec>& corpus, const GridSpec& grid,
                                const HerzParams& hp, double extension_factor,
                                std::uint64_t corpus_seed);

// weak norm of Mf over the strong norm of f at q = 1; the Herz flavour uses
// hp, the slice flavour only hp.slice.  nullopt when the denominator is zero.
std::optional<double> weak_type_ratio(const FunctionSpec& spec, const GridSpec& grid,
                                      const HerzParams& hp, double extension_factor,
                                      bool slice_only);

}  // namespace herzslice
