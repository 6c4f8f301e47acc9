#pragma once

#include "herzslice/herz.hpp"

namespace herzslice {

// Hoelder conjugate: 1 <-> inf, otherwise p/(p-1).
double conjugate(double p);

// sum f g h^n (signed).
double pairing(const GridFunction& f, const GridFunction& g);

struct HolderCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};

// ||f g||_{L^1} against slice_norm(f; t,r,q) * slice_norm(g; t,r',q').
HolderCheck check_slice_holder(const GridFunction& f, const GridFunction& g,
                               const SliceParams& sp);

// |pairing(f, g)| against the product of the Herz-slice norm of f at
// (alpha, p, q, r) and of g at (-alpha, p', q', r'), same variant.
// Requires p, q in (1, inf).
HolderCheck check_herz_holder(const GridFunction& f, const GridFunction& g,
                              const HerzParams& hp);

// max over normalized trial functions g (dual norm 1) of |pairing(f, g)|.
// Trials: the analytic witness f / ||f||_dual plus seeded random piecewise
// functions restricted to the annuli where f lives.  Never exceeds the norm.
double norm_by_duality_lower_bound(const GridFunction& f, const HerzParams& hp, int trials,
                                   std::uint64_t seed);

}  // namespace herzslice
