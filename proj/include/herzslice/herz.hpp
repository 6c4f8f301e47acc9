#pragma once

#include "herzslice/slice.hpp"

namespace herzslice {

// Annulus convention: S_k = { 2^{k-1} < |x| <= 2^k } (open inner, closed
// outer), so a point with |x| = 2^k belongs to S_k.  The nonhomogeneous
// variant sums k >= 0 and merges everything with |x| <= 1 into the k = 0
// term (S_0 = B_0).
enum class Variant { homogeneous, nonhomogeneous };

struct HerzParams {
    double alpha = 0.0;
    double p = 1.0;
    SliceParams slice;
    Variant variant = Variant::homogeneous;

    static HerzParams make(double alpha, double p, const SliceParams& slice,
                           Variant variant = Variant::homogeneous);
};

// Smallest integer k with a <= 2^k, for a > 0.
int annulus_index(double a);

// f restricted to S_k under the given variant (k = 0 nonhomogeneous means B_0).
GridFunction annulus_restrict(const GridFunction& f, int k, Variant variant);

// Per-annulus slice norms over the annuli that meet supp f, sorted by k.
std::vector<std::pair<int, double>> herz_slice_terms(const GridFunction& f,
                                                     const SliceParams& sp, Variant variant);

// ( sum_k 2^{k alpha p} ||f 1_{S_k}||^p )^{1/p} with the slice norm inside;
// sup modification at p = inf.
double herz_slice_norm(const GridFunction& f, const HerzParams& hp);

// Same ladder with plain L^q annulus norms (finite q only).
double classical_herz_norm(const GridFunction& f, double alpha, double p, double q,
                           Variant variant);

// sup over distinct values v of |f| of
//   v * ( sum_k 2^{k alpha p} ||indicator{x in S_k : |f| >= v}||^p )^{1/p}.
// Finite p only.
double weak_herz_slice_norm(const GridFunction& f, const HerzParams& hp);

// Norms for a nested parameter pair.  Accepts either p1 <= p2 (all else
// equal) or, nonhomogeneously, alpha2 <= alpha1 (all else equal); the first
// returned norm belongs to hp1.  The stated contract is norm2 <= norm1 with
// constant 1.
std::pair<double, double> inclusion_check(const GridFunction& f, const HerzParams& hp1,
                                          const HerzParams& hp2);

struct IntersectionReport {
    double nonhomogeneous = 0.0;  // K
    double homogeneous = 0.0;     // Kdot
    double slice = 0.0;           // E
};

// Evaluates the three norms behind K = E intersect Kdot (alpha > 0, finite p).
IntersectionReport intersection_check(const GridFunction& f, const HerzParams& hp);

// (classical Herz norm at q = p, weighted L^p norm with weight |x|^{alpha p}).
std::pair<double, double> weighted_sandwich_check(const GridFunction& f, double alpha, double p);

}  // namespace herzslice
