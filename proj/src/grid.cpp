#include "herzslice/grid.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace herzslice {

GridSpec GridSpec::make(int dim, double half_width, double spacing) {
    require(dim == 1 || dim == 2, "GridSpec: dim must be 1 or 2");
    require(half_width > 0 && std::isfinite(half_width), "GridSpec: half_width must be positive");
    require(spacing > 0 && std::isfinite(spacing), "GridSpec: spacing must be positive");
    double ratio = 2.0 * half_width / spacing;
    auto n = static_cast<long long>(std::llround(ratio));
    require(n >= 2, "GridSpec: need at least 2 cells per axis");
    require(std::fabs(ratio - static_cast<double>(n)) <= 1e-9 * std::max(1.0, ratio),
            "GridSpec: 2*half_width/spacing must be an integer");
    require(n % 2 == 0, "GridSpec: cells per axis must be even (no center at the origin)");
    require(n <= (1 << 22), "GridSpec: grid too large");
    GridSpec g;
    g.dim = dim;
    g.spacing = spacing;
    g.cells_per_axis = static_cast<int>(n);
    return g;
}

double GridSpec::center_norm(std::int64_t idx) const {
    if (dim == 1) return std::fabs(coord(static_cast<int>(idx)));
    int ix = static_cast<int>(idx % cells_per_axis);
    int iy = static_cast<int>(idx / cells_per_axis);
    double x = coord(ix), y = coord(iy);
    return std::sqrt(x * x + y * y);
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::fabs(v));
    return m;
}

bool operator==(const Term& a, const Term& b) {
    if (a.coef != b.coef || a.prim.index() != b.prim.index()) return false;
    if (auto* pa = std::get_if<PowerAnnulus>(&a.prim)) {
        auto* pb = std::get_if<PowerAnnulus>(&b.prim);
        return pa->beta == pb->beta && pa->a == pb->a && pa->b == pb->b;
    }
    if (auto* ba = std::get_if<BallIndicator>(&a.prim)) {
        auto* bb = std::get_if<BallIndicator>(&b.prim);
        return ba->center == bb->center && ba->radius == bb->radius;
    }
    if (auto* ga = std::get_if<Gaussian>(&a.prim)) {
        auto* gb = std::get_if<Gaussian>(&b.prim);
        return ga->center == gb->center && ga->width == gb->width;
    }
    auto* ra = std::get_if<PiecewiseRandom>(&a.prim);
    auto* rb = std::get_if<PiecewiseRandom>(&b.prim);
    return ra->seed == rb->seed && ra->levels == rb->levels &&
           ra->support_radius == rb->support_radius;
}

bool operator==(const FunctionSpec& a, const FunctionSpec& b) {
    return a.terms == b.terms;
}

namespace {

double center_norm_of(const std::array<double, 2>& c, int dim) {
    return dim == 1 ? std::fabs(c[0]) : std::sqrt(c[0] * c[0] + c[1] * c[1]);
}

// Portable uniform double in [-1, 1) from a raw 64-bit draw.
double unit_draw(std::mt19937_64& rng) {
    return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

struct PiecewiseTable {
    std::vector<double> levels;  // row-major macro cells
    int per_axis = 0;
};

PiecewiseTable build_table(const PiecewiseRandom& pr, int dim) {
    PiecewiseTable t;
    t.per_axis = pr.levels;
    std::size_t n = static_cast<std::size_t>(pr.levels);
    if (dim == 2) n *= static_cast<std::size_t>(pr.levels);
    t.levels.resize(n);
    std::mt19937_64 rng(pr.seed);
    for (auto& v : t.levels) v = unit_draw(rng);
    return t;
}

int macro_index(double x, double R, int levels) {
    double w = 2.0 * R / levels;
    int i = static_cast<int>(std::floor((x + R) / w));
    return std::clamp(i, 0, levels - 1);
}

}  // namespace

double support_radius(const Primitive& prim, int dim) {
    if (auto* p = std::get_if<PowerAnnulus>(&prim)) return p->b;
    if (auto* p = std::get_if<BallIndicator>(&prim))
        return center_norm_of(p->center, dim) + p->radius;
    if (auto* p = std::get_if<Gaussian>(&prim))
        return center_norm_of(p->center, dim) + 4.0 * p->width;
    return std::get<PiecewiseRandom>(prim).support_radius;
}

namespace {

void validate(const Primitive& prim, int dim) {
    if (auto* p = std::get_if<PowerAnnulus>(&prim)) {
        require(p->a >= 0 && p->b > p->a && std::isfinite(p->b),
                "power_annulus: need 0 <= a < b < inf");
        if (p->a == 0.0 && p->beta <= -static_cast<double>(dim))
            throw std::domain_error("power_annulus: beta <= -n with a = 0 is not integrable");
    } else if (auto* b = std::get_if<BallIndicator>(&prim)) {
        require(b->radius > 0, "ball_indicator: radius must be positive");
    } else if (auto* g = std::get_if<Gaussian>(&prim)) {
        require(g->width > 0, "gaussian: width must be positive");
    } else {
        auto& r = std::get<PiecewiseRandom>(prim);
        require(r.levels >= 1 && r.levels <= 4096, "piecewise_random: levels out of range");
        require(r.support_radius > 0, "piecewise_random: support_radius must be positive");
    }
}

}  // namespace

GridFunction sample(const FunctionSpec& spec, const GridSpec& grid, double margin) {
    require(margin >= 0, "sample: margin must be nonnegative");
    double limit = grid.half_width() - margin;
    for (const auto& term : spec.terms) {
        validate(term.prim, grid.dim);
        double sr = support_radius(term.prim, grid.dim);
        if (sr > limit + 1e-12)
            throw std::domain_error("sample: primitive support exceeds half_width - margin");
    }

    // Pre-expand the random tables once per term.
    std::vector<PiecewiseTable> tables(spec.terms.size());
    for (std::size_t ti = 0; ti < spec.terms.size(); ++ti)
        if (auto* pr = std::get_if<PiecewiseRandom>(&spec.terms[ti].prim))
            tables[ti] = build_table(*pr, grid.dim);

    GridFunction f(grid);
    int n = grid.cells_per_axis;
    int ny = grid.dim == 2 ? n : 1;
    for (int iy = 0; iy < ny; ++iy) {
        double y = grid.dim == 2 ? grid.coord(iy) : 0.0;
        for (int ix = 0; ix < n; ++ix) {
            double x = grid.coord(ix);
            double acc = 0.0;
            for (std::size_t ti = 0; ti < spec.terms.size(); ++ti) {
                const auto& term = spec.terms[ti];
                double v = 0.0;
                if (auto* p = std::get_if<PowerAnnulus>(&term.prim)) {
                    double rr = grid.dim == 1 ? std::fabs(x) : std::sqrt(x * x + y * y);
                    if (rr > p->a && rr <= p->b) v = std::pow(rr, p->beta);
                } else if (auto* b = std::get_if<BallIndicator>(&term.prim)) {
                    double dx = x - b->center[0];
                    double dy = grid.dim == 2 ? y - b->center[1] : 0.0;
                    if (dx * dx + dy * dy <= b->radius * b->radius) v = 1.0;
                } else if (auto* g = std::get_if<Gaussian>(&term.prim)) {
                    double dx = x - g->center[0];
                    double dy = grid.dim == 2 ? y - g->center[1] : 0.0;
                    double d2 = dx * dx + dy * dy;
                    double cut = 4.0 * g->width;
                    if (d2 <= cut * cut) v = std::exp(-d2 / (2.0 * g->width * g->width));
                } else {
                    auto& pr = std::get<PiecewiseRandom>(term.prim);
                    double rr = grid.dim == 1 ? std::fabs(x) : std::sqrt(x * x + y * y);
                    if (rr <= pr.support_radius) {
                        const auto& tab = tables[ti];
                        int mx = macro_index(x, pr.support_radius, pr.levels);
                        int idx = mx;
                        if (grid.dim == 2) {
                            int my = macro_index(y, pr.support_radius, pr.levels);
                            idx = my * pr.levels + mx;
                        }
                        v = tab.levels[static_cast<std::size_t>(idx)];
                    }
                }
                acc += term.coef * v;
            }
            f.at(grid.index(ix, iy)) = acc;
        }
    }
    return f;
}

double integrate(const GridFunction& f) {
    accum_t s = 0;
    for (double v : f.values) s += v;
    double hn = f.grid.dim == 1 ? f.grid.spacing : f.grid.spacing * f.grid.spacing;
    return static_cast<double>(s) * hn;
}

GridFunction pointwise_abs_pow(const GridFunction& f, double s) {
    require(s > 0 && std::isfinite(s), "pointwise_abs_pow: exponent must be positive");
    GridFunction g(f.grid);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double a = std::fabs(f.values[i]);
        g.values[i] = a == 0.0 ? 0.0 : std::pow(a, s);
    }
    return g;
}

GridFunction add(const GridFunction& f, const GridFunction& g) {
    require(f.grid.same_geometry(g.grid), "add: grid mismatch");
    GridFunction h(f.grid);
    for (std::size_t i = 0; i < f.values.size(); ++i) h.values[i] = f.values[i] + g.values[i];
    return h;
}

GridFunction scale(const GridFunction& f, double c) {
    GridFunction h(f.grid);
    for (std::size_t i = 0; i < f.values.size(); ++i) h.values[i] = c * f.values[i];
    return h;
}

GridFunction translate(const GridFunction& f, const std::array<int, 2>& offset_cells,
                       double margin) {
    const GridSpec& g = f.grid;
    GridFunction out(g);
    int n = g.cells_per_axis;
    int ny = g.dim == 2 ? n : 1;
    double limit = g.half_width() - margin;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            double v = f.at(g.index(ix, iy));
            if (v == 0.0) continue;
            int jx = ix + offset_cells[0];
            int jy = iy + (g.dim == 2 ? offset_cells[1] : 0);
            if (jx < 0 || jx >= n || (g.dim == 2 && (jy < 0 || jy >= n)))
                throw std::domain_error("translate: nonzero cell shifted off the grid");
            if (margin > 0 && g.center_norm(g.index(jx, jy)) > limit + 1e-12)
                throw std::domain_error("translate: shifted support violates margin");
            out.at(g.index(jx, jy)) = v;
        }
    }
    return out;
}

}  // namespace herzslice
