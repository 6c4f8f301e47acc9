#include "herzslice/slice.hpp"

#include <algorithm>
#include <cmath>

#include "herzslice/lebesgue.hpp"
#include "herzslice/level_sets.hpp"

namespace herzslice {

SliceParams SliceParams::make(double t, double r, double q) {
    require(t > 0 && std::isfinite(t), "SliceParams: t must be positive and finite");
    require(r > 1 && std::isfinite(r), "SliceParams: r must lie in (1, inf)");
    require(q >= 1, "SliceParams: q must lie in [1, inf]");
    SliceParams sp;
    sp.t = t;
    sp.r = r;
    sp.q = q;
    return sp;
}

namespace {

// Canonical membership test shared by stencil construction and oracles:
// offset d belongs to B(0, t) iff |d*h|^2 <= t^2 in double arithmetic.
bool member(std::int64_t d2, double h, double t) {
    return static_cast<double>(d2) * h * h <= t * t;
}

int pad_cells(const GridSpec& g, double t) {
    return static_cast<int>(std::ceil(t / g.spacing - 1e-12));
}

}  // namespace

BallStencil BallStencil::make(const GridSpec& grid, double t) {
    require(t > 0 && std::isfinite(t), "BallStencil: t must be positive");
    double h = grid.spacing;
    BallStencil st;
    st.dim = grid.dim;
    if (grid.dim == 1) {
        int e = 0;
        while (member(static_cast<std::int64_t>(e + 1) * (e + 1), h, t)) ++e;
        st.extent = {e};
        st.count = 2 * e + 1;
        return st;
    }
    int dy = 0;
    st.count = 0;
    while (member(static_cast<std::int64_t>(dy) * dy, h, t)) {
        int e = 0;
        while (member(static_cast<std::int64_t>(dy) * dy +
                          static_cast<std::int64_t>(e + 1) * (e + 1), h, t))
            ++e;
        st.extent.push_back(e);
        st.count += (dy == 0 ? 1 : 2) * static_cast<std::int64_t>(2 * e + 1);
        ++dy;
    }
    return st;
}

std::vector<std::array<int, 2>> BallStencil::offsets() const {
    std::vector<std::array<int, 2>> out;
    out.reserve(static_cast<std::size_t>(count));
    if (dim == 1) {
        for (int dx = -extent[0]; dx <= extent[0]; ++dx) out.push_back({dx, 0});
        return out;
    }
    int hr = half_rows();
    for (int dy = -hr; dy <= hr; ++dy) {
        int e = extent[static_cast<std::size_t>(std::abs(dy))];
        for (int dx = -e; dx <= e; ++dx) out.push_back({dx, dy});
    }
    return out;
}

GridSpec enlarged_grid(const GridSpec& grid, double t) {
    GridSpec g = grid;
    g.cells_per_axis += 2 * pad_cells(grid, t);
    return g;
}

GridFunction ball_average_r(const GridFunction& f, const SliceParams& sp) {
    const GridSpec& g = f.grid;
    BallStencil st = BallStencil::make(g, sp.t);
    int pad = pad_cells(g, sp.t);
    GridSpec go = enlarged_grid(g, sp.t);
    GridFunction out(go);
    int n = g.cells_per_axis;
    int no = go.cells_per_axis;
    double inv_r = 1.0 / sp.r;
    double cnt = static_cast<double>(st.count);

    if (g.dim == 1) {
        // prefix[i] = sum of |f|^r over cells < i
        std::vector<accum_t> prefix(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i < n; ++i) {
            double a = std::fabs(f.at(i));
            prefix[static_cast<std::size_t>(i) + 1] =
                prefix[static_cast<std::size_t>(i)] + (a == 0.0 ? 0.0 : std::pow(a, sp.r));
        }
        int e = st.extent[0];
        for (int io = 0; io < no; ++io) {
            int base = io - pad;
            int lo = std::max(base - e, 0);
            int hi = std::min(base + e, n - 1);
            if (hi < lo) continue;
            accum_t s = prefix[static_cast<std::size_t>(hi) + 1] - prefix[static_cast<std::size_t>(lo)];
            if (s > 0) out.at(io) = std::pow(static_cast<double>(s / cnt), inv_r);
        }
        return out;
    }

    // 2D: one prefix array per row of the original grid.
    std::vector<std::vector<accum_t>> prefix(static_cast<std::size_t>(n));
    for (int iy = 0; iy < n; ++iy) {
        auto& row = prefix[static_cast<std::size_t>(iy)];
        row.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int ix = 0; ix < n; ++ix) {
            double a = std::fabs(f.at(g.index(ix, iy)));
            row[static_cast<std::size_t>(ix) + 1] =
                row[static_cast<std::size_t>(ix)] + (a == 0.0 ? 0.0 : std::pow(a, sp.r));
        }
    }
    int hr = st.half_rows();
    for (int oy = 0; oy < no; ++oy) {
        int by = oy - pad;
        for (int ox = 0; ox < no; ++ox) {
            int bx = ox - pad;
            accum_t s = 0;
            for (int dy = -hr; dy <= hr; ++dy) {
                int iy = by + dy;
                if (iy < 0 || iy >= n) continue;
                int e = st.extent[static_cast<std::size_t>(std::abs(dy))];
                int lo = std::max(bx - e, 0);
                int hi = std::min(bx + e, n - 1);
                if (hi < lo) continue;
                const auto& row = prefix[static_cast<std::size_t>(iy)];
                s += row[static_cast<std::size_t>(hi) + 1] - row[static_cast<std::size_t>(lo)];
            }
            if (s > 0) out.at(go.index(ox, oy)) = std::pow(static_cast<double>(s / cnt), inv_r);
        }
    }
    return out;
}

double slice_norm(const GridFunction& f, const SliceParams& sp) {
    return lp_norm(ball_average_r(f, sp), sp.q);
}

double weak_slice_norm(const GridFunction& f, const SliceParams& sp) {
    auto sweep = detail::LevelSweep::build(f);
    if (sweep.levels.empty()) return 0.0;
    detail::IndicatorSliceNorm acc(f.grid, sp);
    double best = 0.0;
    for (const auto& level : sweep.levels) {
        for (auto idx : level.cells) acc.add_cell(idx);
        best = std::max(best, level.value * acc.norm());
    }
    return best;
}

namespace detail {

LevelSweep LevelSweep::build(const GridFunction& f) {
    std::vector<std::pair<double, std::int64_t>> entries;
    for (std::int64_t i = 0; i < f.grid.total_cells(); ++i) {
        double a = std::fabs(f.at(i));
        if (a != 0.0) entries.emplace_back(a, i);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    LevelSweep sweep;
    for (const auto& [v, idx] : entries) {
        if (sweep.levels.empty() || sweep.levels.back().value != v)
            sweep.levels.push_back({v, {}});
        sweep.levels.back().cells.push_back(idx);
    }
    return sweep;
}

IndicatorSliceNorm::IndicatorSliceNorm(const GridSpec& grid, const SliceParams& sp)
    : grid_(grid), sp_(sp), stencil_(BallStencil::make(grid, sp.t)) {
    pad_ = pad_cells(grid, sp.t);
    n_out_ = grid.cells_per_axis + 2 * pad_;
    hn_ = grid.dim == 1 ? grid.spacing : grid.spacing * grid.spacing;
    std::int64_t total = grid.dim == 1 ? n_out_ : static_cast<std::int64_t>(n_out_) * n_out_;
    counts_.assign(static_cast<std::size_t>(total), 0);
    if (!is_inf(sp.q)) {
        table_.resize(static_cast<std::size_t>(stencil_.count) + 1);
        double cnt = static_cast<double>(stencil_.count);
        for (std::size_t m = 0; m < table_.size(); ++m) {
            double frac = static_cast<double>(static_cast<long double>(m) / cnt);
            table_[m] = frac == 0.0
                            ? 0.0L
                            : static_cast<long double>(
                                  std::pow(std::pow(frac, 1.0 / sp.r), sp.q));
        }
    }
}

void IndicatorSliceNorm::add_cell(std::int64_t flat_index) {
    bool track_sum = !is_inf(sp_.q);
    if (grid_.dim == 1) {
        int ix = static_cast<int>(flat_index);
        int e = stencil_.extent[0];
        int base = ix + pad_;
        for (int dx = -e; dx <= e; ++dx) {
            auto pos = static_cast<std::size_t>(base + dx);
            std::int32_t c = counts_[pos]++;
            if (track_sum) sum_ += table_[static_cast<std::size_t>(c) + 1] - table_[static_cast<std::size_t>(c)];
            max_count_ = std::max(max_count_, c + 1);
        }
        return;
    }
    int ix = static_cast<int>(flat_index % grid_.cells_per_axis);
    int iy = static_cast<int>(flat_index / grid_.cells_per_axis);
    int hr = stencil_.half_rows();
    for (int dy = -hr; dy <= hr; ++dy) {
        int e = stencil_.extent[static_cast<std::size_t>(std::abs(dy))];
        std::int64_t row = static_cast<std::int64_t>(iy + pad_ + dy) * n_out_ + (ix + pad_);
        for (int dx = -e; dx <= e; ++dx) {
            auto pos = static_cast<std::size_t>(row + dx);
            std::int32_t c = counts_[pos]++;
            if (track_sum) sum_ += table_[static_cast<std::size_t>(c) + 1] - table_[static_cast<std::size_t>(c)];
            max_count_ = std::max(max_count_, c + 1);
        }
    }
}

double IndicatorSliceNorm::norm() const {
    if (is_inf(sp_.q)) {
        if (max_count_ == 0) return 0.0;
        double frac = static_cast<double>(max_count_) / static_cast<double>(stencil_.count);
        return std::pow(frac, 1.0 / sp_.r);
    }
    if (sum_ <= 0) return 0.0;
    return std::pow(static_cast<double>(sum_) * hn_, 1.0 / sp_.q);
}

}  // namespace detail

}  // namespace herzslice
