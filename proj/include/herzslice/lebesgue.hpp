#pragma once

#include "herzslice/grid.hpp"

namespace herzslice {

// (sum |f|^p h^n)^{1/p} for 0 < p < inf, max |f| at p = inf.
double lp_norm(const GridFunction& f, double p);

// sup over the distinct values v of |f| of v * (measure{|f| >= v})^{1/p}.
// Exact for the step functions a grid carries; requires finite p.
double weak_lp_norm(const GridFunction& f, double p);

// (sum |f(x)|^p |x|^{alpha_p} h^n)^{1/p}; the weight exponent is passed as
// the product alpha*p.  Finite p only.
double weighted_lp_norm(const GridFunction& f, double p, double alpha_p);

}  // namespace herzslice
