#pragma once

#include <map>
#include <string>

#include "herzslice/grid.hpp"

namespace herzslice {

// Deterministic corpus of random FunctionSpecs.  Every draw for index i uses
// its own stream keyed on (seed, i), so extending size leaves earlier
// entries untouched.  All supports fit inside |x| <= L - margin.
struct CorpusConfig {
    std::uint64_t seed = 0;
    int size = 10;
    GridSpec grid;
    double margin = 1.0;
    // kind name -> weight; kinds: ball_indicator, gaussian, power_annulus,
    // piecewise_random.  Empty means equal weights.
    std::map<std::string, double> mix;
};

std::vector<FunctionSpec> generate_corpus(const CorpusConfig& cfg);

}  // namespace herzslice
