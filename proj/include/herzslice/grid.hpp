#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "herzslice/common.hpp"

namespace herzslice {

// Uniform cell-centered grid on [-L, L]^n, n in {1, 2}.  Cell centers sit at
// (i - N/2 + 0.5) * h per axis, so no center ever lands on the origin and the
// center set is exactly symmetric under negation.  N * h == 2L by
// construction (L is derived, not stored).
struct GridSpec {
    int dim = 1;
    double spacing = 1.0;   // h
    int cells_per_axis = 0; // N, even and positive

    static GridSpec make(int dim, double half_width, double spacing);

    double half_width() const { return 0.5 * cells_per_axis * spacing; }
    std::int64_t total_cells() const {
        std::int64_t n = cells_per_axis;
        return dim == 1 ? n : n * n;
    }
    // Coordinate of cell i along one axis.
    double coord(int i) const {
        return (i - cells_per_axis / 2 + 0.5) * spacing;
    }
    std::int64_t index(int ix, int iy = 0) const {
        return dim == 1 ? ix : static_cast<std::int64_t>(iy) * cells_per_axis + ix;
    }
    // Euclidean norm of the center of the flat-indexed cell.  Never zero.
    double center_norm(std::int64_t idx) const;

    bool same_geometry(const GridSpec& o) const {
        return dim == o.dim && spacing == o.spacing && cells_per_axis == o.cells_per_axis;
    }
};

struct GridFunction {
    GridSpec grid;
    std::vector<double> values;

    GridFunction() = default;
    explicit GridFunction(const GridSpec& g) : grid(g), values(g.total_cells(), 0.0) {}

    double& at(std::int64_t i) { return values[static_cast<std::size_t>(i)]; }
    double at(std::int64_t i) const { return values[static_cast<std::size_t>(i)]; }
    double max_abs() const;
};

// ---- analytic function specifications ----
//
// A FunctionSpec is a finite sum of coef * primitive terms.  It is grid
// independent: sampling evaluates each term at the cell centers of whatever
// grid it is given.

struct PowerAnnulus {     // |x|^beta on a < |x| <= b, zero elsewhere
    double beta = 0.0;
    double a = 0.0;
    double b = 1.0;
};

struct BallIndicator {    // 1 on |x - center| <= radius
    std::array<double, 2> center{0.0, 0.0};
    double radius = 1.0;
};

struct Gaussian {         // exp(-|x-c|^2 / (2 w^2)), truncated to 0 beyond |x-c| > 4w
    std::array<double, 2> center{0.0, 0.0};
    double width = 1.0;
};

struct PiecewiseRandom {  // random levels on a levels^n macro-cell partition of [-R, R]^n,
                          // masked to |x| <= R; deterministic in (seed, levels, R)
    std::uint64_t seed = 0;
    int levels = 4;
    double support_radius = 1.0;
};

using Primitive = std::variant<PowerAnnulus, BallIndicator, Gaussian, PiecewiseRandom>;

struct Term {
    double coef = 1.0;
    Primitive prim;
};

struct FunctionSpec {
    std::vector<Term> terms;
};

bool operator==(const Term& a, const Term& b);
bool operator==(const FunctionSpec& a, const FunctionSpec& b);

// Radius of the smallest origin-centered ball containing the primitive's
// support (used by the sampling margin check).
double support_radius(const Primitive& prim, int dim);

// Evaluate the sum of terms at cell centers.  Every primitive support must
// fit inside |x| <= L - margin or a support-violation (domain_error) is
// thrown; margin >= t keeps later ball averages from clipping the support.
GridFunction sample(const FunctionSpec& spec, const GridSpec& grid, double margin = 0.0);

// Midpoint quadrature: sum of values * h^n.
double integrate(const GridFunction& f);

GridFunction pointwise_abs_pow(const GridFunction& f, double s);  // |f|^s, s > 0
GridFunction add(const GridFunction& f, const GridFunction& g);
GridFunction scale(const GridFunction& f, double c);

// Shift by whole cells (zero fill).  Throws domain_error if a nonzero cell
// would leave the grid or land outside |x| <= L - margin.
GridFunction translate(const GridFunction& f, const std::array<int, 2>& offset_cells,
                       double margin = 0.0);

}  // namespace herzslice
