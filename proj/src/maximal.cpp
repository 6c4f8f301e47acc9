#include "herzslice/maximal.hpp"

#include <algorithm>
#include <cmath>

namespace herzslice {

RadiusLadder RadiusLadder::make(double spacing, double cover_distance, double max_radius) {
    require(spacing > 0, "RadiusLadder: spacing must be positive");
    require(cover_distance > 0, "RadiusLadder: cover distance must be positive");
    require(max_radius > 0, "RadiusLadder: max_radius must be positive");
    RadiusLadder ladder;
    ladder.spacing = spacing;
    int last = std::max(0, static_cast<int>(std::ceil(cover_distance / spacing - 0.5)));
    if (std::isfinite(max_radius)) {
        int cap = std::max(0, static_cast<int>(std::floor(max_radius / spacing - 0.5 + 1e-12)));
        last = std::min(last, cap);
    }
    ladder.last = last;
    return ladder;
}

namespace {

GridSpec evaluation_grid(const GridSpec& g, double extension_factor, int& pad) {
    require(extension_factor >= 1 && std::isfinite(extension_factor),
            "hl_maximal: extension_factor must be >= 1");
    pad = static_cast<int>(
        std::ceil((extension_factor - 1.0) * g.half_width() / g.spacing - 1e-9));
    pad = std::max(pad, 0);
    GridSpec out = g;
    out.cells_per_axis += 2 * pad;
    return out;
}

RadiusLadder ladder_for(const GridSpec& in, const GridSpec& out, double max_radius) {
    double cover = (in.half_width() + out.half_width()) * std::sqrt(static_cast<double>(in.dim));
    return RadiusLadder::make(in.spacing, cover + in.spacing, max_radius);
}

// Row extents of the ladder ball with radius (j+1/2)h: for each |dy| <= j the
// largest dx with dx^2 + dy^2 <= (j+1/2)^2.  Integer-exact fixup keeps both
// evaluators on the same cell sets.
struct LadderBalls {
    std::vector<std::vector<int>> extent;  // [j][dy], dy in [0, j]
    std::vector<double> count;

    static LadderBalls make(int last, int dim) {
        LadderBalls b;
        b.extent.resize(static_cast<std::size_t>(last) + 1);
        b.count.resize(static_cast<std::size_t>(last) + 1);
        for (int j = 0; j <= last; ++j) {
            if (dim == 1) {
                b.count[static_cast<std::size_t>(j)] = 2.0 * j + 1.0;
                continue;
            }
            double r2 = (j + 0.5) * (j + 0.5);
            auto& row = b.extent[static_cast<std::size_t>(j)];
            row.resize(static_cast<std::size_t>(j) + 1);
            double total = 0;
            for (int dy = 0; dy <= j; ++dy) {
                double rem = r2 - static_cast<double>(dy) * dy;
                int e = static_cast<int>(std::floor(std::sqrt(std::max(rem, 0.0))));
                while (static_cast<double>(e + 1) * (e + 1) + static_cast<double>(dy) * dy <= r2)
                    ++e;
                while (e > 0 && static_cast<double>(e) * e + static_cast<double>(dy) * dy > r2)
                    --e;
                row[static_cast<std::size_t>(dy)] = e;
                total += (dy == 0 ? 1.0 : 2.0) * (2.0 * e + 1.0);
            }
            b.count[static_cast<std::size_t>(j)] = total;
        }
        return b;
    }
};

}  // namespace

GridFunction hl_maximal(const GridFunction& f, double extension_factor, double max_radius) {
    const GridSpec& g = f.grid;
    int pad = 0;
    GridSpec go = evaluation_grid(g, extension_factor, pad);
    RadiusLadder ladder = ladder_for(g, go, max_radius);
    int n = g.cells_per_axis;
    int no = go.cells_per_axis;
    GridFunction out(go);

    if (g.dim == 1) {
        std::vector<accum_t> prefix(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i < n; ++i)
            prefix[static_cast<std::size_t>(i) + 1] =
                prefix[static_cast<std::size_t>(i)] + std::fabs(f.at(i));
        for (int io = 0; io < no; ++io) {
            int base = io - pad;
            // j = 0 is read directly so Mf >= |f| holds bitwise.
            double best = (base >= 0 && base < n) ? std::fabs(f.at(base)) : 0.0;
            for (int j = 1; j <= ladder.last; ++j) {
                int lo = std::max(base - j, 0);
                int hi = std::min(base + j, n - 1);
                if (hi < lo) continue;
                accum_t s = prefix[static_cast<std::size_t>(hi) + 1] -
                            prefix[static_cast<std::size_t>(lo)];
                best = std::max(best, static_cast<double>(s / (2.0L * j + 1.0L)));
                if (lo == 0 && hi == n - 1) break;  // ball covers the box; larger j only dilute
            }
            out.at(io) = best;
        }
        return out;
    }

    LadderBalls balls = LadderBalls::make(ladder.last, 2);
    std::vector<std::vector<accum_t>> prefix(static_cast<std::size_t>(n));
    for (int iy = 0; iy < n; ++iy) {
        auto& row = prefix[static_cast<std::size_t>(iy)];
        row.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int ix = 0; ix < n; ++ix)
            row[static_cast<std::size_t>(ix) + 1] =
                row[static_cast<std::size_t>(ix)] + std::fabs(f.at(g.index(ix, iy)));
    }
    for (int oy = 0; oy < no; ++oy) {
        int by = oy - pad;
        for (int ox = 0; ox < no; ++ox) {
            int bx = ox - pad;
            bool inside = bx >= 0 && bx < n && by >= 0 && by < n;
            double best = inside ? std::fabs(f.at(g.index(bx, by))) : 0.0;
            // Farthest box cell, for the covering cutoff.
            double cx = std::max(bx, n - 1 - bx), cy = std::max(by, n - 1 - by);
            double far2 = cx * cx + cy * cy;
            for (int j = 1; j <= ladder.last; ++j) {
                accum_t s = 0;
                const auto& ext = balls.extent[static_cast<std::size_t>(j)];
                for (int dy = -j; dy <= j; ++dy) {
                    int iy = by + dy;
                    if (iy < 0 || iy >= n) continue;
                    int e = ext[static_cast<std::size_t>(std::abs(dy))];
                    int lo = std::max(bx - e, 0);
                    int hi = std::min(bx + e, n - 1);
                    if (hi < lo) continue;
                    const auto& row = prefix[static_cast<std::size_t>(iy)];
                    s += row[static_cast<std::size_t>(hi) + 1] - row[static_cast<std::size_t>(lo)];
                }
                if (s > 0)
                    best = std::max(
                        best, static_cast<double>(
                                  s / static_cast<accum_t>(balls.count[static_cast<std::size_t>(j)])));
                if ((j + 0.5) * (j + 0.5) >= far2) break;
            }
            out.at(go.index(ox, oy)) = best;
        }
    }
    return out;
}

GridFunction hl_maximal_oracle(const GridFunction& f, double extension_factor, double max_radius,
                               bool enforce_guard) {
    const GridSpec& g = f.grid;
    if (enforce_guard) {
        bool ok = g.dim == 1 ? g.cells_per_axis <= 4096 : g.cells_per_axis <= 128;
        require(ok, "hl_maximal_oracle: grid too large for the naive evaluator");
    }
    int pad = 0;
    GridSpec go = evaluation_grid(g, extension_factor, pad);
    RadiusLadder ladder = ladder_for(g, go, max_radius);
    int n = g.cells_per_axis;
    int no = go.cells_per_axis;
    GridFunction out(go);
    LadderBalls balls = LadderBalls::make(ladder.last, g.dim);

    if (g.dim == 1) {
        for (int io = 0; io < no; ++io) {
            int base = io - pad;
            double best = (base >= 0 && base < n) ? std::fabs(f.at(base)) : 0.0;
            for (int j = 1; j <= ladder.last; ++j) {
                int lo = std::max(base - j, 0);
                int hi = std::min(base + j, n - 1);
                if (hi < lo) continue;
                accum_t s = 0;
                for (int i = lo; i <= hi; ++i) s += std::fabs(f.at(i));
                best = std::max(best, static_cast<double>(s / (2.0L * j + 1.0L)));
                if (lo == 0 && hi == n - 1) break;
            }
            out.at(io) = best;
        }
        return out;
    }

    for (int oy = 0; oy < no; ++oy) {
        int by = oy - pad;
        for (int ox = 0; ox < no; ++ox) {
            int bx = ox - pad;
            bool inside = bx >= 0 && bx < n && by >= 0 && by < n;
            double best = inside ? std::fabs(f.at(g.index(bx, by))) : 0.0;
            double cx = std::max(bx, n - 1 - bx), cy = std::max(by, n - 1 - by);
            double far2 = cx * cx + cy * cy;
            for (int j = 1; j <= ladder.last; ++j) {
                accum_t s = 0;
                const auto& ext = balls.extent[static_cast<std::size_t>(j)];
                for (int dy = -j; dy <= j; ++dy) {
                    int iy = by + dy;
                    if (iy < 0 || iy >= n) continue;
                    int e = ext[static_cast<std::size_t>(std::abs(dy))];
                    int lo = std::max(bx - e, 0);
                    int hi = std::min(bx + e, n - 1);
                    for (int ix = lo; ix <= hi; ++ix) s += std::fabs(f.at(g.index(ix, iy)));
                }
                if (s > 0)
                    best = std::max(
                        best, static_cast<double>(
                                  s / static_cast<accum_t>(balls.count[static_cast<std::size_t>(j)])));
                if ((j + 0.5) * (j + 0.5) >= far2) break;
            }
            out.at(go.index(ox, oy)) = best;
        }
    }
    return out;
}

SweepRow estimate_operator_norm(const std::vector<FunctionSpec>& corpus, const GridSpec& grid,
                                const HerzParams& hp, double extension_factor,
                                std::uint64_t corpus_seed) {
    require(!corpus.empty(), "estimate_operator_norm: empty corpus");
    require(!is_inf(hp.slice.q), "estimate_operator_norm: q must be finite");
    double best = 0.0;
    for (const auto& spec : corpus) {
        GridFunction f = sample(spec, grid, hp.slice.t);
        double denom = herz_slice_norm(f, hp);
        if (denom == 0.0) continue;
        double num = herz_slice_norm(hl_maximal(f, extension_factor), hp);
        best = std::max(best, num / denom);
    }
    SweepRow row;
    row.alpha = hp.alpha;
    row.p = hp.p;
    row.q = hp.slice.q;
    row.r = hp.slice.r;
    row.t = hp.slice.t;
    row.L = grid.half_width();
    row.h = grid.spacing;
    row.constant = best;
    row.corpus = static_cast<int>(corpus.size());
    row.seed = corpus_seed;
    return row;
}

std::optional<double> weak_type_ratio(const FunctionSpec& spec, const GridSpec& grid,
                                      const HerzParams& hp, double extension_factor,
                                      bool slice_only) {
    require(hp.slice.q == 1.0, "weak_type_ratio: the weak-type endpoint needs q = 1");
    GridFunction f = sample(spec, grid, hp.slice.t);
    double denom = slice_only ? slice_norm(f, hp.slice) : herz_slice_norm(f, hp);
    if (denom == 0.0) return std::nullopt;
    GridFunction mf = hl_maximal(f, extension_factor);
    double num = slice_only ? weak_slice_norm(mf, hp.slice) : weak_herz_slice_norm(mf, hp);
    return num / denom;
}

}  // namespace herzslice
