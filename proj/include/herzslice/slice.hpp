#pragma once

#include "herzslice/grid.hpp"

namespace herzslice {

// Parameters of the local-average norm: ball radius t, inner exponent r,
// outer exponent q.  The usual sup modification applies at q = inf.
struct SliceParams {
    double t = 1.0;
    double r = 2.0;
    double q = 2.0;

    static SliceParams make(double t, double r, double q);
};

// Closed-ball stencil of integer cell offsets d with |d|*h <= t, shared by
// every evaluation point of a grid.  Stored as per-row extents: row dy
// carries offsets dx in [-extent, extent].  In 1D there is a single row.
struct BallStencil {
    int dim = 1;
    std::vector<int> extent;  // indexed by |dy| (1D: just extent[0])
    std::int64_t count = 0;   // total offsets

    static BallStencil make(const GridSpec& grid, double t);

    int half_rows() const { return static_cast<int>(extent.size()) - 1; }
    // Flat list of offsets, for oracles and tests.
    std::vector<std::array<int, 2>> offsets() const;
};

// Grid enlarged by ceil(t/h) cells per side, centers aligned with the input.
GridSpec enlarged_grid(const GridSpec& grid, double t);

// A(x) = ((1/count) * sum_{|d|h<=t, x+dh in box} |f(x+dh)|^r)^{1/r} at every
// cell of the enlarged grid; f is extended by zero and the divisor is always
// the full stencil count.  Prefix sums make each output cost O(rows).
GridFunction ball_average_r(const GridFunction& f, const SliceParams& sp);

// || ball_average_r(f) ||_{L^q} over the enlarged grid.
double slice_norm(const GridFunction& f, const SliceParams& sp);

// sup over distinct values v of |f| of v * slice_norm(indicator{|f| >= v}).
double weak_slice_norm(const GridFunction& f, const SliceParams& sp);

}  // namespace herzslice
