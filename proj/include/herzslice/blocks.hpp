#pragma once

#include "herzslice/herz.hpp"

namespace herzslice {

// A central block of index k: supported in B(0, 2^k) with slice norm at most
// 2^{-k alpha} (unit normalization).  Restrict-type blocks additionally
// require k >= 0 and arise in the nonhomogeneous decomposition.
struct CentralBlock {
    int k = 0;
    GridFunction data;
    double measured_slice_norm = 0.0;
    bool restrict_type = false;
};

struct BlockDecomposition {
    struct Entry {
        int k;
        double lambda;
        CentralBlock block;
    };
    std::vector<Entry> entries;  // strictly increasing k
    HerzParams params;
};

// Tests the two block conditions (support inside B(0, 2^k), slice norm at
// most 2^{-k alpha}) with a 1e-9 relative tolerance on the norm bound.
// Returns (verdict, measured norm).
std::pair<bool, double> is_central_block(const GridFunction& g, int k, const HerzParams& hp,
                                         bool restrict_type);

// Canonical decomposition: lambda_k = 2^{k alpha} ||f 1_{S_k}||, block =
// f 1_{S_k} / lambda_k over the annuli meeting supp f.  Nonhomogeneous
// variants produce restrict-type blocks with the S_0 = B_0 convention.
BlockDecomposition decompose(const GridFunction& f, const HerzParams& hp);

// sum_k lambda_k * block_k on the common grid.
GridFunction reconstruct(const BlockDecomposition& dec);

// (Herz-slice norm of the synthesized function, l^p norm of the coefficients).
// All entries must pass is_central_block.
std::pair<double, double> synthesis_bound_probe(const BlockDecomposition& dec);

}  // namespace herzslice
