#include "herzslice/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <tuple>
#include <variant>

#include "herzslice/blocks.hpp"
#include "herzslice/corpus.hpp"
#include "herzslice/duality.hpp"
#include "herzslice/grid.hpp"
#include "herzslice/herz.hpp"
#include "herzslice/json_io.hpp"
#include "herzslice/lebesgue.hpp"
#include "herzslice/maximal.hpp"
#include "herzslice/slice.hpp"

namespace herzslice {

bool SuiteResult::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

void fail(CheckResult& r, const std::string& what) {
    r.pass = false;
    if (!r.details.empty()) r.details += "; ";
    if (r.details.size() < 240) r.details += what;
}

std::string num(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

// a == b within relative tolerance; worst tracks the largest gap seen.
void expect_close(CheckResult& r, double a, double b, double tol, const std::string& what) {
    double g = rel_gap(a, b);
    r.worst = std::max(r.worst, g);
    if (!(g <= tol)) fail(r, what + " gap=" + num(g));
}

// a <= b up to relative slack; worst tracks the largest overshoot.
void expect_le(CheckResult& r, double a, double b, double slack, const std::string& what) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    double over = (a - b) / scale;
    r.worst = std::max(r.worst, std::max(over, 0.0));
    if (!(over <= slack)) fail(r, what + " excess=" + num(over));
}

void expect_true(CheckResult& r, bool cond, const std::string& what) {
    if (!cond) fail(r, what);
}

template <class Fn>
void check(std::vector<CheckResult>& out, const std::string& name, Fn&& fn) {
    CheckResult r;
    r.name = name;
    try {
        fn(r);
    } catch (const std::exception& e) {
        fail(r, std::string("exception: ") + e.what());
    }
    out.push_back(std::move(r));
}

struct Draw {
    std::mt19937_64 eng;
    explicit Draw(std::uint64_t s) : eng(s) {}
    double uni() { return (eng() >> 11) * 0x1.0p-53; }
    double uni(double a, double b) { return a + (b - a) * uni(); }
};

GridSpec g1() { return GridSpec::make(1, 4.0, 1.0 / 64); }   // N = 512
GridSpec g2() { return GridSpec::make(2, 2.0, 1.0 / 8); }    // 32 x 32
GridSpec g2m() { return GridSpec::make(2, 1.0, 1.0 / 16); }  // 32 x 32, tight box

std::vector<GridFunction> corpus_functions(const GridSpec& g, std::uint64_t seed, int size,
                                           double margin) {
    CorpusConfig cfg{seed, size, g, margin, {}};
    std::vector<GridFunction> out;
    for (const auto& spec : generate_corpus(cfg)) out.push_back(sample(spec, g, margin));
    return out;
}

// Reference ball average: walks the full stencil for every output cell.
GridFunction naive_ball_average(const GridFunction& f, const SliceParams& sp) {
    const GridSpec& g = f.grid;
    BallStencil st = BallStencil::make(g, sp.t);
    GridSpec out = enlarged_grid(g, sp.t);
    int pad = (out.cells_per_axis - g.cells_per_axis) / 2;
    auto offs = st.offsets();
    GridFunction A(out);
    int n = g.cells_per_axis;
    int ony = out.dim == 2 ? out.cells_per_axis : 1;
    for (int oy = 0; oy < ony; ++oy) {
        for (int ox = 0; ox < out.cells_per_axis; ++ox) {
            accum_t s = 0;
            for (const auto& d : offs) {
                int ix = ox - pad + d[0];
                int iy = g.dim == 2 ? oy - pad + d[1] : 0;
                if (ix < 0 || ix >= n || iy < 0 || (g.dim == 2 && iy >= n)) continue;
                double v = std::fabs(f.at(g.index(ix, iy)));
                if (v != 0.0) s += std::pow(static_cast<accum_t>(v), static_cast<accum_t>(sp.r));
            }
            double m = static_cast<double>(s / static_cast<accum_t>(st.count));
            A.at(out.index(ox, oy)) = m == 0.0 ? 0.0 : std::pow(m, 1.0 / sp.r);
        }
    }
    return A;
}

GridFunction indicator_at_least(const GridFunction& f, double v) {
    GridFunction ind(f.grid);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        ind.values[i] = std::fabs(f.values[i]) >= v ? 1.0 : 0.0;
    return ind;
}

// ---------------------------------------------------------------- grid ----

void suite_grid(std::vector<CheckResult>& out, std::uint64_t seed) {
    check(out, "centers_symmetric_origin_free", [&](CheckResult& r) {
        for (const GridSpec& g : {g1(), g2()}) {
            int n = g.cells_per_axis;
            for (int i = 0; i < n; ++i)
                expect_true(r, g.coord(i) == -g.coord(n - 1 - i), "center symmetry");
            for (std::int64_t i = 0; i < g.total_cells(); ++i)
                expect_true(r, g.center_norm(i) > 0, "origin-free centers");
            expect_close(r, n * g.spacing, 2 * g.half_width(), 0.0, "N*h == 2L");
        }
    });

    check(out, "ball_indicator_sampling_oracle", [&](CheckResult& r) {
        GridSpec g = GridSpec::make(1, 4.0, 0.25);
        FunctionSpec spec{{Term{1.0, BallIndicator{{0.0, 0.0}, 1.0}}}};
        GridFunction f = sample(spec, g, 0.5);
        int ones = 0;
        for (double v : f.values) {
            expect_true(r, v == 0.0 || v == 1.0, "indicator values");
            ones += v == 1.0;
        }
        expect_true(r, ones == 8, "indicator hits 8 cells");
        expect_close(r, integrate(f), 2.0, 0.0, "indicator mass");
    });

    check(out, "quadrature_linear", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed, 6, 1.0);
        for (std::size_t i = 0; i + 1 < fns.size(); i += 2) {
            // signed integrals can cancel, so bound the error by the L1 mass
            double mass = lp_norm(fns[i], 1.0) + lp_norm(fns[i + 1], 1.0) + 1.0;
            double lhs = integrate(add(fns[i], fns[i + 1]));
            double rhs = integrate(fns[i]) + integrate(fns[i + 1]);
            expect_le(r, std::fabs(lhs - rhs), 1e-12 * mass, 0.0, "additive");
            double sl = integrate(scale(fns[i], -2.5));
            expect_le(r, std::fabs(sl + 2.5 * integrate(fns[i])), 1e-12 * mass, 0.0,
                      "homogeneous");
        }
    });

    check(out, "annulus_partition_reassembles", [&](CheckResult& r) {
        for (const GridSpec& g : {g1(), g2()}) {
            auto fns = corpus_functions(g, seed + 1, 2, 1.0);
            double diag = g.half_width() * std::sqrt(static_cast<double>(g.dim));
            int kmax = annulus_index(diag);
            for (const auto& f : fns) {
                for (Variant var : {Variant::homogeneous, Variant::nonhomogeneous}) {
                    int kmin = var == Variant::homogeneous ? annulus_index(g.spacing / 2) : 0;
                    GridFunction acc(g);
                    for (int k = kmin; k <= kmax; ++k)
                        acc = add(acc, annulus_restrict(f, k, var));
                    for (std::size_t i = 0; i < f.values.size(); ++i)
                        expect_true(r, acc.values[i] == f.values[i], "partition reassembly");
                }
            }
        }
    });

    check(out, "translate_preserves_lp", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 2, 4, 1.0);
        for (const auto& f : fns) {
            GridFunction f2 = translate(f, {16, 0}, 0.25);
            for (double p : {1.0, 2.0, kInf})
                expect_close(r, lp_norm(f2, p), lp_norm(f, p), 1e-15, "lp shift");
            expect_close(r, weak_lp_norm(f2, 1.7), weak_lp_norm(f, 1.7), 1e-15, "weak shift");
        }
    });

    check(out, "sampling_margin_guard", [&](CheckResult& r) {
        GridSpec g = g1();
        FunctionSpec wide{{Term{1.0, BallIndicator{{0.0, 0.0}, 3.5}}}};
        bool threw = false;
        try {
            sample(wide, g, 1.0);
        } catch (const std::domain_error&) {
            threw = true;
        }
        expect_true(r, threw, "support beyond margin rejected");
        FunctionSpec sing{{Term{1.0, PowerAnnulus{-2.0, 0.0, 1.0}}}};
        threw = false;
        try {
            sample(sing, g, 1.0);
        } catch (const std::domain_error&) {
            threw = true;
        }
        expect_true(r, threw, "non-integrable power rejected");
    });

    check(out, "abs_pow_pointwise", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 3, 2, 1.0);
        for (const auto& f : fns) {
            GridFunction a1 = pointwise_abs_pow(f, 1.0);
            GridFunction a2 = pointwise_abs_pow(f, 2.0);
            for (std::size_t i = 0; i < f.values.size(); ++i) {
                expect_close(r, a1.values[i], std::fabs(f.values[i]), 0.0, "s=1 is |f|");
                expect_close(r, a2.values[i], f.values[i] * f.values[i], 1e-15, "s=2 is f^2");
            }
        }
    });
}

// ------------------------------------------------------------ lebesgue ----

void suite_lebesgue(std::vector<CheckResult>& out, std::uint64_t seed) {
    check(out, "scaling_homogeneity", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed, 4, 1.0);
        for (const auto& f : fns) {
            for (double p : {1.0, 2.0, kInf})
                expect_close(r, lp_norm(scale(f, -8.0), p), 8.0 * lp_norm(f, p), 0.0,
                             "dyadic scale exact");
            expect_close(r, lp_norm(scale(f, 1.37), 1.5), 1.37 * lp_norm(f, 1.5), 1e-13,
                         "generic scale");
            expect_close(r, weak_lp_norm(scale(f, 2.0), 2.0), 2.0 * weak_lp_norm(f, 2.0), 1e-14,
                         "weak scale");
        }
    });

    check(out, "dominated_implies_smaller", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 1, 6, 1.0);
        for (std::size_t i = 0; i + 1 < fns.size(); i += 2) {
            GridFunction big(fns[i].grid);
            for (std::size_t c = 0; c < big.values.size(); ++c)
                big.values[c] = std::fabs(fns[i].values[c]) + std::fabs(fns[i + 1].values[c]);
            for (double p : {1.0, 1.5, 2.0, kInf})
                expect_le(r, lp_norm(fns[i], p), lp_norm(big, p), 0.0, "lp monotone");
            expect_le(r, weak_lp_norm(fns[i], 2.0), weak_lp_norm(big, 2.0), 1e-15,
                      "weak monotone");
        }
    });

    check(out, "chebyshev_weak_below_strong", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 2, 6, 1.0);
        for (const auto& f : fns)
            for (double p : {1.0, 1.5, 2.0, 3.0})
                expect_le(r, weak_lp_norm(f, p), lp_norm(f, p), 1e-12, "weak <= strong");
    });

    check(out, "power_exponent_identity", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 3, 4, 1.0);
        for (const auto& f : fns)
            for (double s : {0.5, 2.0, 3.0}) {
                double lhs = std::pow(lp_norm(pointwise_abs_pow(f, s), 1.5), 1.0 / s);
                expect_close(r, lhs, lp_norm(f, 1.5 * s), 1e-12, "power identity");
            }
    });

    check(out, "two_level_weak_oracle", [&](CheckResult& r) {
        GridSpec g = GridSpec::make(1, 4.0, 0.25);
        GridFunction f(g);
        for (int i = 0; i < g.cells_per_axis; ++i) {
            double x = std::fabs(g.coord(i));
            if (x <= 1.0)
                f.at(i) = 3.0;
            else if (x <= 3.0)
                f.at(i) = 1.0;
        }
        expect_close(r, lp_norm(f, 1.0), 10.0, 0.0, "two-level L1 mass");
        expect_close(r, weak_lp_norm(f, 2.0), 3.0 * std::sqrt(2.0), 1e-15, "weak p=2");
        expect_close(r, weak_lp_norm(f, 1.0), 6.0, 1e-15, "weak p=1 tie");
    });

    check(out, "weight_zero_matches_plain", [&](CheckResult& r) {
        auto fns = corpus_functions(g2(), seed + 4, 3, 0.5);
        for (const auto& f : fns)
            for (double p : {1.0, 2.0})
                expect_close(r, weighted_lp_norm(f, p, 0.0), lp_norm(f, p), 1e-15,
                             "alpha=0 weight");
    });

    check(out, "sup_norm_is_max", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 5, 3, 1.0);
        for (const auto& f : fns)
            expect_close(r, lp_norm(f, kInf), f.max_abs(), 0.0, "Linf = max");
    });
}

// --------------------------------------------------------------- slice ----

void suite_slice(std::vector<CheckResult>& out, std::uint64_t seed) {
    const double t = 0.25;

    check(out, "matches_direct_enumeration", [&](CheckResult& r) {
        for (const GridSpec& g : {g1(), g2()}) {
            auto fns = corpus_functions(g, seed, 2, 1.0);
            for (const auto& f : fns)
                for (double rr : {1.5, 2.0}) {
                    SliceParams sp = SliceParams::make(t, rr, 2.0);
                    GridFunction fast = ball_average_r(f, sp);
                    GridFunction slow = naive_ball_average(f, sp);
                    for (std::size_t i = 0; i < fast.values.size(); ++i)
                        expect_close(r, fast.values[i], slow.values[i], 1e-12, "cell average");
                }
        }
    });

    check(out, "collapse_q_equals_r", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 1, 4, 1.0);
        for (const auto& f : fns)
            for (double qr : {1.5, 2.0, 3.0}) {
                SliceParams sp = SliceParams::make(t, qr, qr);
                expect_close(r, slice_norm(f, sp), lp_norm(f, qr), 1e-12, "q=r collapse");
            }
    });

    check(out, "translation_invariant", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 2, 4, 1.0);
        SliceParams sp = SliceParams::make(t, 1.5, 2.0);
        for (const auto& f : fns) {
            GridFunction f2 = translate(f, {-24, 0}, t);
            expect_close(r, slice_norm(f2, sp), slice_norm(f, sp), 1e-12, "shifted norm");
            expect_close(r, weak_slice_norm(f2, sp), weak_slice_norm(f, sp), 1e-12,
                         "shifted weak norm");
        }
    });

    check(out, "impulse_average_profile", [&](CheckResult& r) {
        GridSpec g = g1();
        GridFunction f(g);
        int i0 = 300;
        f.at(i0) = 1.0;
        SliceParams sp = SliceParams::make(2 * g.spacing, 2.0, 2.0);  // 5-cell stencil
        GridFunction A = ball_average_r(f, sp);
        int pad = (A.grid.cells_per_axis - g.cells_per_axis) / 2;
        double expected = std::pow(0.2, 0.5);
        for (int o = 0; o < A.grid.cells_per_axis; ++o) {
            int d = std::abs(o - pad - i0);
            expect_close(r, A.at(o), d <= 2 ? expected : 0.0, 0.0, "impulse stencil");
        }
    });

    check(out, "plateau_center_average_one", [&](CheckResult& r) {
        GridSpec g = g1();
        GridFunction f = sample(FunctionSpec{{Term{1.0, BallIndicator{{0.0, 0.0}, 1.0}}}}, g, t);
        for (double rr : {1.5, 3.0}) {
            SliceParams sp = SliceParams::make(t, rr, 2.0);
            GridFunction A = ball_average_r(f, sp);
            for (int o = 0; o < A.grid.cells_per_axis; ++o) {
                double x = std::fabs(A.grid.coord(o));
                if (x <= 1.0 - t) expect_close(r, A.at(o), 1.0, 0.0, "deep interior");
                if (x > 1.0 + t) expect_close(r, A.at(o), 0.0, 0.0, "outside support");
            }
        }
    });

    check(out, "disjoint_supports_add_in_power", [&](CheckResult& r) {
        GridSpec g = g1();
        GridFunction f = sample(FunctionSpec{{Term{0.8, BallIndicator{{-2.0, 0.0}, 0.5}}}}, g, t);
        GridFunction h = sample(FunctionSpec{{Term{1.3, Gaussian{{2.0, 0.0}, 0.12}}}}, g, t);
        SliceParams sp = SliceParams::make(t, 1.5, 2.0);
        GridFunction Af = ball_average_r(f, sp);
        GridFunction Ah = ball_average_r(h, sp);
        GridFunction As = ball_average_r(add(f, h), sp);
        for (std::size_t i = 0; i < As.values.size(); ++i) {
            expect_true(r, Af.values[i] == 0.0 || Ah.values[i] == 0.0, "supports separated");
            // prefix sums over the combined function carry the other support's
            // total as a cancelling offset, so this is close, not bitwise
            expect_close(r, As.values[i], Af.values[i] + Ah.values[i], 1e-12, "power split");
        }
    });

    check(out, "weak_below_strong", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 3, 4, 1.0);
        for (const auto& f : fns)
            for (double q : {1.0, 2.0, kInf}) {
                SliceParams sp = SliceParams::make(t, 1.5, q);
                expect_le(r, weak_slice_norm(f, sp), slice_norm(f, sp), 1e-12, "weak <= strong");
            }
    });

    check(out, "weak_single_level_scales", [&](CheckResult& r) {
        GridSpec g = g1();
        GridFunction ind =
            sample(FunctionSpec{{Term{1.0, BallIndicator{{0.7, 0.0}, 0.6}}}}, g, 1.0);
        for (double q : {1.5, kInf}) {
            SliceParams sp = SliceParams::make(t, 2.0, q);
            expect_close(r, weak_slice_norm(scale(ind, 0.7), sp), 0.7 * slice_norm(ind, sp),
                         1e-13, "single level");
        }
    });

    check(out, "weak_matches_per_level_recompute", [&](CheckResult& r) {
        GridSpec g = g1();
        GridFunction f =
            sample(FunctionSpec{{Term{1.0, PiecewiseRandom{seed + 4, 6, 2.5}}}}, g, 1.0);
        for (double q : {1.5, kInf}) {
            SliceParams sp = SliceParams::make(t, 2.0, q);
            std::vector<double> vals;
            for (double v : f.values)
                if (v != 0.0) vals.push_back(std::fabs(v));
            std::sort(vals.begin(), vals.end());
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            double sup = 0.0;
            for (double v : vals) sup = std::max(sup, v * slice_norm(indicator_at_least(f, v), sp));
            expect_close(r, weak_slice_norm(f, sp), sup, 1e-12, "level sweep");
        }
    });

    check(out, "ball_indicator_norm_sandwich", [&](CheckResult& r) {
        GridSpec g = g1();
        for (double rho : {1.0, 2.0}) {
            GridFunction f =
                sample(FunctionSpec{{Term{1.0, BallIndicator{{0.0, 0.0}, rho}}}}, g, t);
            for (double q : {1.5, 2.0}) {
                SliceParams sp = SliceParams::make(t, 2.0, q);
                GridSpec eg = enlarged_grid(g, t);
                std::int64_t m_in = 0, m_out = 0;
                for (int i = 0; i < eg.cells_per_axis; ++i) {
                    double x = std::fabs(eg.coord(i));
                    m_in += x <= rho - t;
                    m_out += x <= rho + t;
                }
                double lo = std::pow(m_in * g.spacing, 1.0 / q);
                double hi = std::pow(m_out * g.spacing, 1.0 / q);
                double measured = slice_norm(f, sp);
                expect_le(r, lo, measured, 1e-12, "lower count bound");
                expect_le(r, measured, hi, 1e-12, "upper count bound");
            }
            SliceParams sup_sp = SliceParams::make(t, 2.0, kInf);
            expect_close(r, slice_norm(f, sup_sp), 1.0, 0.0, "sup of averages");
        }
    });

    check(out, "annulus_dominated_by_ball", [&](CheckResult& r) {
        GridSpec g = g1();
        SliceParams sp = SliceParams::make(t, 2.0, 2.0);
        for (int k : {0, 1}) {
            GridFunction ring(g), ball(g);
            for (std::int64_t i = 0; i < g.total_cells(); ++i) {
                double x = g.center_norm(i);
                if (x <= pow2(k)) {
                    ball.at(i) = 1.0;
                    if (x > pow2(k - 1)) ring.at(i) = 1.0;
                }
            }
            expect_le(r, slice_norm(ring, sp), slice_norm(ball, sp), 1e-12, "ring <= ball");
        }
    });
}

// ---------------------------------------------------------------- herz ----

void suite_herz(std::vector<CheckResult>& out, std::uint64_t seed) {
    const double t = 0.25;
    auto sp = [&](double rr, double q) { return SliceParams::make(t, rr, q); };

    check(out, "collapse_to_classical", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed, 3, 1.0);
        for (const auto& f : fns)
            for (Variant var : {Variant::homogeneous, Variant::nonhomogeneous})
                for (double alpha : {-0.5, 0.7})
                    for (double p : {1.0, 1.5}) {
                        HerzParams hp = HerzParams::make(alpha, p, sp(2.0, 2.0), var);
                        expect_close(r, herz_slice_norm(f, hp),
                                     classical_herz_norm(f, alpha, p, 2.0, var), 1e-12,
                                     "q=r collapse");
                    }
    });

    check(out, "power_exponent_identity", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 1, 3, 1.0);
        for (const auto& f : fns)
            for (double s : {0.5, 2.0, 3.0}) {
                HerzParams base = HerzParams::make(0.3 / s, 1.5 * s, sp(3.0 * s, 2.0 * s),
                                                   Variant::homogeneous);
                HerzParams powed = HerzParams::make(0.3, 1.5, sp(3.0, 2.0), Variant::homogeneous);
                double lhs = std::pow(herz_slice_norm(pointwise_abs_pow(f, s), powed), 1.0 / s);
                expect_close(r, lhs, herz_slice_norm(f, base), 1e-12, "power identity");
            }
    });

    check(out, "outer_inner_exponent_ordering", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 2, 3, 1.0);
        for (const auto& f : fns) {
            double hi = herz_slice_norm(f, HerzParams::make(0.0, 2.0, sp(1.5, 2.0),
                                                            Variant::homogeneous));
            expect_le(r, hi, slice_norm(f, sp(1.5, 2.0)), 1e-12, "q>r contracts");
            double lo = herz_slice_norm(f, HerzParams::make(0.0, 1.5, sp(2.0, 1.5),
                                                            Variant::homogeneous));
            expect_le(r, slice_norm(f, sp(2.0, 1.5)), lo, 1e-12, "q<r expands");
            double eq = herz_slice_norm(f, HerzParams::make(0.0, 2.0, sp(2.0, 2.0),
                                                            Variant::homogeneous));
            expect_close(r, eq, lp_norm(f, 2.0), 1e-12, "q=r ties L2");
        }
    });

    check(out, "quasi_triangle", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 3, 6, 1.0);
        for (std::size_t i = 0; i + 1 < fns.size(); i += 2) {
            const auto &f = fns[i], &g = fns[i + 1];
            GridFunction s2 = add(f, g);
            for (Variant var : {Variant::homogeneous, Variant::nonhomogeneous}) {
                for (double p : {1.0, 2.0}) {
                    HerzParams hp = HerzParams::make(0.4, p, sp(1.5, 2.0), var);
                    expect_le(r, herz_slice_norm(s2, hp),
                              herz_slice_norm(f, hp) + herz_slice_norm(g, hp), 1e-12,
                              "triangle p>=1");
                }
                HerzParams hq = HerzParams::make(0.4, 0.5, sp(1.5, 2.0), var);
                double np = 0.5;
                expect_le(r, std::pow(herz_slice_norm(s2, hq), np),
                          std::pow(herz_slice_norm(f, hq), np) +
                              std::pow(herz_slice_norm(g, hq), np),
                          1e-12, "p-triangle p<1");
            }
        }
    });

    check(out, "scaling_and_domination", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 4, 4, 1.0);
        HerzParams hp = HerzParams::make(0.5, 1.5, sp(1.5, 2.0), Variant::homogeneous);
        for (std::size_t i = 0; i + 1 < fns.size(); i += 2) {
            expect_close(r, herz_slice_norm(scale(fns[i], -3.7), hp),
                         3.7 * herz_slice_norm(fns[i], hp), 1e-13, "absolute homogeneity");
            GridFunction big(fns[i].grid);
            for (std::size_t c = 0; c < big.values.size(); ++c)
                big.values[c] = std::fabs(fns[i].values[c]) + std::fabs(fns[i + 1].values[c]);
            expect_le(r, herz_slice_norm(fns[i], hp), herz_slice_norm(big, hp), 1e-15,
                      "pointwise domination");
        }
    });

    check(out, "nested_parameter_inclusions", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 5, 3, 1.0);
        for (const auto& f : fns) {
            for (auto pp : {std::pair{0.5, 1.0}, std::pair{1.0, 2.0}, std::pair{2.0, 4.0}})
                for (Variant var : {Variant::homogeneous, Variant::nonhomogeneous}) {
                    HerzParams hp1 = HerzParams::make(0.4, pp.first, sp(1.5, 2.0), var);
                    HerzParams hp2 = HerzParams::make(0.4, pp.second, sp(1.5, 2.0), var);
                    auto [n1, n2] = inclusion_check(f, hp1, hp2);
                    expect_le(r, n2, n1, 1e-12, "p ladder contracts");
                }
            for (auto aa : {std::pair{0.75, 0.25}, std::pair{1.0, 0.0}}) {
                HerzParams hp1 =
                    HerzParams::make(aa.first, 1.5, sp(1.5, 2.0), Variant::nonhomogeneous);
                HerzParams hp2 =
                    HerzParams::make(aa.second, 1.5, sp(1.5, 2.0), Variant::nonhomogeneous);
                auto [n1, n2] = inclusion_check(f, hp1, hp2);
                expect_le(r, n2, n1, 1e-12, "alpha ladder contracts");
            }
        }
    });

    check(out, "intersection_threeway", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 6, 3, 1.0);
        for (const auto& f : fns)
            for (double alpha : {0.5, 0.75})
                for (double p : {1.0, 2.0}) {
                    HerzParams hp = HerzParams::make(alpha, p, sp(1.5, 2.0),
                                                     Variant::nonhomogeneous);
                    IntersectionReport rep = intersection_check(f, hp);
                    double rhs = std::pow(std::pow(rep.slice, p) + std::pow(rep.homogeneous, p),
                                          1.0 / p);
                    expect_le(r, rep.nonhomogeneous, rhs, 1e-12, "K within E+Kdot");
                    if (lp_norm(f, 2.0) > 0) expect_true(r, rep.nonhomogeneous > 0, "K positive");
                }
    });

    check(out, "weighted_power_sandwich", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 7, 3, 1.0);
        for (const auto& f : fns)
            for (double alpha : {-1.0, 0.5, 1.0})
                for (double p : {1.0, 2.0}) {
                    auto [herz, weighted] = weighted_sandwich_check(f, alpha, p);
                    double c = std::pow(2.0, std::fabs(alpha));
                    expect_le(r, herz, c * weighted, 1e-12, "herz within weight");
                    expect_le(r, weighted, c * herz, 1e-12, "weight within herz");
                }
        for (const auto& f : fns) {
            auto [herz, weighted] = weighted_sandwich_check(f, 0.0, 2.0);
            expect_close(r, herz, weighted, 1e-13, "alpha=0 ties");
        }
    });

    check(out, "weak_below_strong", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 8, 4, 1.0);
        for (const auto& f : fns)
            for (double alpha : {-0.3, 0.3})
                for (double p : {1.0, 2.0}) {
                    HerzParams hp = HerzParams::make(alpha, p, sp(1.5, 2.0),
                                                     Variant::homogeneous);
                    expect_le(r, weak_herz_slice_norm(f, hp), herz_slice_norm(f, hp), 1e-12,
                              "weak <= strong");
                }
    });

    check(out, "weak_collapse_alpha_zero", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 9, 3, 1.0);
        for (const auto& f : fns) {
            HerzParams hp = HerzParams::make(0.0, 2.0, sp(2.0, 2.0), Variant::homogeneous);
            double wh = weak_herz_slice_norm(f, hp);
            expect_close(r, wh, weak_lp_norm(f, 2.0), 1e-12, "ties weak L2");
            expect_close(r, wh, weak_slice_norm(f, sp(2.0, 2.0)), 1e-12, "ties weak slice");
        }
    });

    check(out, "annulus_boundary_membership", [&](CheckResult& r) {
        expect_true(r, annulus_index(0.5) == -1, "0.5 in S_-1");
        expect_true(r, annulus_index(1.0) == 0, "1.0 in S_0");
        expect_true(r, annulus_index(2.0) == 1, "2.0 in S_1");
        expect_true(r, annulus_index(2.0000001) == 2, "above 2 moves out");
        expect_true(r, annulus_index(0.75) == 0, "0.75 in S_0");
        GridSpec g = GridSpec::make(1, 8.0, 1.0);
        GridFunction one(g);
        for (auto& v : one.values) v = 1.0;
        auto mass = [&](int k, Variant var) {
            return integrate(annulus_restrict(one, k, var));
        };
        expect_close(r, mass(-1, Variant::homogeneous), 2.0, 0.0, "S_-1 holds the half cells");
        expect_close(r, mass(0, Variant::homogeneous), 0.0, 0.0, "S_0 empty on unit grid");
        expect_close(r, mass(1, Variant::homogeneous), 2.0, 0.0, "S_1 mass");
        expect_close(r, mass(2, Variant::homogeneous), 4.0, 0.0, "S_2 mass");
        expect_close(r, mass(3, Variant::homogeneous), 8.0, 0.0, "S_3 mass");
        expect_close(r, mass(0, Variant::nonhomogeneous), 2.0, 0.0, "B_0 gathers |x|<=1");
    });
}

// -------------------------------------------------------------- blocks ----

void suite_blocks(std::vector<CheckResult>& out, std::uint64_t seed) {
    const double t = 0.25;
    auto sp = SliceParams::make(t, 1.5, 2.0);

    check(out, "canonical_roundtrip_exact", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed, 3, 1.0);
        for (const auto& f : fns)
            for (Variant var : {Variant::homogeneous, Variant::nonhomogeneous})
                for (double alpha : {0.5, 1.0}) {
                    HerzParams hp = HerzParams::make(alpha, 1.5, sp, var);
                    GridFunction back = reconstruct(decompose(f, hp));
                    for (std::size_t i = 0; i < f.values.size(); ++i) {
                        if (f.values[i] == 0.0)
                            expect_true(r, back.values[i] == 0.0, "zero stays zero");
                        else
                            expect_close(r, back.values[i], f.values[i], 1e-13, "cell restored");
                    }
                }
    });

    check(out, "coefficient_norm_identity", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 1, 3, 1.0);
        for (const auto& f : fns)
            for (Variant var : {Variant::homogeneous, Variant::nonhomogeneous})
                for (double p : {1.0, 2.0}) {
                    HerzParams hp = HerzParams::make(0.5, p, sp, var);
                    BlockDecomposition dec = decompose(f, hp);
                    accum_t s = 0;
                    for (const auto& e : dec.entries)
                        s += std::pow(static_cast<accum_t>(e.lambda), static_cast<accum_t>(p));
                    double coef = static_cast<double>(std::pow(s, static_cast<accum_t>(1.0 / p)));
                    expect_close(r, coef, herz_slice_norm(f, hp), 1e-12, "coefficients tie norm");
                }
    });

    check(out, "entries_are_central_blocks", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 2, 3, 1.0);
        for (const auto& f : fns)
            for (Variant var : {Variant::homogeneous, Variant::nonhomogeneous}) {
                HerzParams hp = HerzParams::make(0.75, 1.0, sp, var);
                BlockDecomposition dec = decompose(f, hp);
                expect_true(r, !dec.entries.empty(), "nonzero input yields blocks");
                int prev_k = INT32_MIN;
                for (const auto& e : dec.entries) {
                    expect_true(r, e.k > prev_k, "indices strictly increase");
                    prev_k = e.k;
                    auto [ok, measured] =
                        is_central_block(e.block.data, e.k, hp, e.block.restrict_type);
                    expect_true(r, ok, "entry verifies as central block");
                    expect_close(r, measured * std::pow(2.0, e.k * hp.alpha), 1.0, 1e-12,
                                 "unit normalization");
                    if (var == Variant::nonhomogeneous)
                        expect_true(r, e.block.restrict_type && e.k >= 0, "restrict blocks");
                }
            }
    });

    check(out, "synthesis_ratio_one_on_canonical", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 3, 3, 1.0);
        for (const auto& f : fns) {
            HerzParams hp = HerzParams::make(0.5, 1.5, sp, Variant::homogeneous);
            auto [lhs, rhs] = synthesis_bound_probe(decompose(f, hp));
            expect_close(r, lhs, rhs, 1e-12, "canonical synthesis is tight");
        }
    });

    check(out, "split_two_blocks_ratio_oracle", [&](CheckResult& r) {
        GridSpec g = g1();
        // indicator of the annulus 1 < |x| <= 2, declared once at k=1 and once
        // (padded support) at k=2, each half weight.
        GridFunction f(g);
        for (std::int64_t i = 0; i < g.total_cells(); ++i)
            if (double x = g.center_norm(i); x > 1.0 && x <= 2.0) f.at(i) = 1.0;
        for (double alpha : {0.5, 1.0})
            for (double p : {1.0, 0.5}) {
                HerzParams hp = HerzParams::make(alpha, p, sp, Variant::homogeneous);
                double s = slice_norm(f, sp);
                BlockDecomposition dec;
                dec.params = hp;
                auto push = [&](int k) {
                    BlockDecomposition::Entry e;
                    e.k = k;
                    e.lambda = 0.5 * s * std::pow(2.0, k * alpha);
                    e.block.k = k;
                    e.block.data = scale(f, std::pow(2.0, -k * alpha) / s);
                    e.block.restrict_type = false;
                    dec.entries.push_back(std::move(e));
                };
                push(1);
                push(2);
                auto [lhs, rhs] = synthesis_bound_probe(dec);
                double expected = 2.0 / std::pow(1.0 + std::pow(2.0, alpha * p), 1.0 / p);
                expect_close(r, lhs / rhs, expected, 1e-10, "two-block ratio");
                double bound = p <= 1.0
                                   ? std::pow(1.0 - std::pow(2.0, -alpha * p), -1.0 / p)
                                   : 1.0 / (1.0 - std::pow(2.0, -alpha));
                expect_le(r, lhs / rhs, bound, 1e-12, "within synthesis constant");
            }
    });

    check(out, "random_synthesis_within_constant", [&](CheckResult& r) {
        GridSpec g = g1();
        Draw d(seed + 4);
        for (int trial = 0; trial < 6; ++trial)
            for (double p : {0.5, 1.0, 2.0}) {
                double alpha = d.uni(0.4, 1.2);
                HerzParams hp = HerzParams::make(alpha, p, sp, Variant::homogeneous);
                BlockDecomposition dec;
                dec.params = hp;
                GridFunction noise = sample(
                    FunctionSpec{{Term{1.0, PiecewiseRandom{seed + 100 * trial, 7, 3.0}}}}, g,
                    1.0);
                for (int k = -2; k <= 1; ++k) {
                    GridFunction piece = annulus_restrict(noise, k, Variant::homogeneous);
                    double s = slice_norm(piece, sp);
                    if (s == 0.0) continue;
                    BlockDecomposition::Entry e;
                    e.k = k;
                    e.lambda = std::exp(d.uni(-1.0, 1.0));
                    e.block.k = k;
                    double u = d.uni(0.3, 1.0);  // keep the norm strictly inside the bound
                    e.block.data = scale(piece, u * std::pow(2.0, -k * alpha) / s);
                    e.block.restrict_type = false;
                    dec.entries.push_back(std::move(e));
                }
                if (dec.entries.empty()) continue;
                auto [lhs, rhs] = synthesis_bound_probe(dec);
                double bound = p <= 1.0
                                   ? std::pow(1.0 - std::pow(2.0, -alpha * p), -1.0 / p)
                                   : 1.0 / (1.0 - std::pow(2.0, -alpha));
                expect_le(r, lhs / rhs, bound, 1e-9, "random synthesis bounded");
            }
    });

    check(out, "restrict_type_rejects_negative_k", [&](CheckResult& r) {
        GridSpec g = g1();
        HerzParams hp = HerzParams::make(0.5, 1.0, sp, Variant::nonhomogeneous);
        GridFunction f = sample(FunctionSpec{{Term{1.0, BallIndicator{{0.0, 0.0}, 0.4}}}}, g, t);
        double s = slice_norm(f, sp);
        GridFunction unit = scale(f, std::pow(2.0, 1.0 * hp.alpha) / s);  // fits B(0, 1/2)
        expect_true(r, !is_central_block(unit, -1, hp, true).first, "restrict forbids k<0");
        expect_true(r, is_central_block(unit, -1, hp, false).first, "plain allows k<0");
    });

    check(out, "decompose_zero_rejected", [&](CheckResult& r) {
        GridFunction zero(g1());
        HerzParams hp = HerzParams::make(0.5, 1.0, sp, Variant::homogeneous);
        bool threw = false;
        try {
            decompose(zero, hp);
        } catch (const std::domain_error&) {
            threw = true;
        }
        expect_true(r, threw, "zero function rejected");
    });
}

// ------------------------------------------------------------- maximal ----

void suite_maximal(std::vector<CheckResult>& out, std::uint64_t seed) {
    check(out, "impulse_exact_profile", [&](CheckResult& r) {
        GridSpec g = GridSpec::make(1, 1.0, 1.0 / 32);
        GridFunction f(g);
        f.at(20) = 1.0;
        GridFunction M = hl_maximal(f, 2.0);
        int pad = (M.grid.cells_per_axis - g.cells_per_axis) / 2;
        for (int o = 0; o < M.grid.cells_per_axis; ++o) {
            int d = std::abs(o - pad - 20);
            expect_close(r, M.at(o), 1.0 / (2 * d + 1), 1e-15, "1d impulse decay");
        }
        expect_close(r, M.at(pad + 20), 1.0, 0.0, "unit peak");

        GridSpec g2d = g2m();
        GridFunction f2(g2d);
        f2.at(g2d.index(20, 14)) = 1.0;
        GridFunction M2 = hl_maximal(f2, 1.0);
        for (int dy = -5; dy <= 5; ++dy)
            for (int dx = -5; dx <= 5; ++dx) {
                int jstar = static_cast<int>(
                    std::ceil(std::sqrt(static_cast<double>(dx * dx + dy * dy)) - 0.5));
                std::int64_t count = 0;
                double rr = (jstar + 0.5) * (jstar + 0.5);
                for (int a = -jstar - 1; a <= jstar + 1; ++a)
                    for (int b = -jstar - 1; b <= jstar + 1; ++b) count += a * a + b * b <= rr;
                expect_close(r, M2.at(g2d.index(20 + dx, 14 + dy)), 1.0 / count, 1e-15,
                             "2d impulse decay");
            }
    });

    check(out, "indicator_plateau_value_one", [&](CheckResult& r) {
        GridSpec g = g1();
        GridFunction f = sample(FunctionSpec{{Term{1.0, BallIndicator{{0.0, 0.0}, 0.5}}}}, g, 0.5);
        GridFunction M = hl_maximal(f, 1.5);
        int pad = (M.grid.cells_per_axis - g.cells_per_axis) / 2;
        for (int o = 0; o < M.grid.cells_per_axis; ++o) {
            expect_le(r, M.at(o), 1.0, 0.0, "never exceeds sup");
            int i = o - pad;
            if (i >= 0 && i < g.cells_per_axis && f.at(i) == 1.0)
                expect_close(r, M.at(o), 1.0, 0.0, "plateau kept");
        }
    });

    check(out, "dominates_input", [&](CheckResult& r) {
        for (const GridSpec& g : {g1(), g2m()}) {
            auto fns = corpus_functions(g, seed, 2, g.dim == 1 ? 1.0 : 0.25);
            for (const auto& f : fns) {
                GridFunction M = hl_maximal(f, 1.5);
                int pad = (M.grid.cells_per_axis - g.cells_per_axis) / 2;
                int ny = g.dim == 2 ? g.cells_per_axis : 1;
                for (int iy = 0; iy < ny; ++iy)
                    for (int ix = 0; ix < g.cells_per_axis; ++ix) {
                        double mv = M.at(M.grid.index(ix + pad, g.dim == 2 ? iy + pad : 0));
                        expect_le(r, std::fabs(f.at(g.index(ix, iy))), mv, 0.0, "Mf >= |f|");
                    }
            }
        }
    });

    check(out, "monotone_sublinear_scaling", [&](CheckResult& r) {
        GridSpec g = g1();
        auto fns = corpus_functions(g, seed + 1, 4, 1.0);
        for (std::size_t i = 0; i + 1 < fns.size(); i += 2) {
            const auto &f = fns[i], &h = fns[i + 1];
            GridFunction big(g);
            for (std::size_t c = 0; c < big.values.size(); ++c)
                big.values[c] = std::fabs(f.values[c]) + std::fabs(h.values[c]);
            GridFunction Mf = hl_maximal(f, 1.5);
            GridFunction Mh = hl_maximal(h, 1.5);
            GridFunction Mbig = hl_maximal(big, 1.5);
            GridFunction Msum = hl_maximal(add(f, h), 1.5);
            for (std::size_t c = 0; c < Mf.values.size(); ++c) {
                expect_le(r, Mf.values[c], Mbig.values[c], 0.0, "monotone");
                expect_le(r, Msum.values[c], Mf.values[c] + Mh.values[c], 1e-14, "sublinear");
            }
            GridFunction Ms = hl_maximal(scale(f, 8.0), 1.5);
            GridFunction Mc = hl_maximal(scale(f, 1.37), 1.5);
            for (std::size_t c = 0; c < Mf.values.size(); ++c) {
                expect_close(r, Ms.values[c], 8.0 * Mf.values[c], 0.0, "dyadic scaling");
                expect_close(r, Mc.values[c], 1.37 * Mf.values[c], 1e-14, "generic scaling");
            }
        }
    });

    check(out, "fast_matches_reference", [&](CheckResult& r) {
        GridSpec ga = GridSpec::make(1, 2.0, 1.0 / 64);  // N = 256
        auto fns = corpus_functions(ga, seed + 2, 2, 0.5);
        for (const auto& f : fns) {
            GridFunction fast = hl_maximal(f, 1.5);
            GridFunction slow = hl_maximal_oracle(f, 1.5);
            for (std::size_t c = 0; c < fast.values.size(); ++c)
                expect_close(r, fast.values[c], slow.values[c], 1e-12, "1d agreement");
        }
        auto fns2 = corpus_functions(g2m(), seed + 3, 1, 0.25);
        GridFunction fast = hl_maximal(fns2[0], 1.0);
        GridFunction slow = hl_maximal_oracle(fns2[0], 1.0);
        for (std::size_t c = 0; c < fast.values.size(); ++c)
            expect_close(r, fast.values[c], slow.values[c], 1e-12, "2d agreement");
    });

    check(out, "radius_cap_monotone", [&](CheckResult& r) {
        GridSpec g = g1();
        auto fns = corpus_functions(g, seed + 4, 2, 1.0);
        for (const auto& f : fns) {
            GridFunction a = hl_maximal(f, 1.5, 0.25);
            GridFunction b = hl_maximal(f, 1.5, 0.5);
            GridFunction c = hl_maximal(f, 1.5);
            for (std::size_t i = 0; i < a.values.size(); ++i) {
                expect_le(r, a.values[i], b.values[i], 0.0, "cap 1/4 <= cap 1/2");
                expect_le(r, b.values[i], c.values[i], 0.0, "cap 1/2 <= full");
            }
        }
    });

    check(out, "herz_ratio_at_least_one", [&](CheckResult& r) {
        GridSpec g = g1();
        CorpusConfig cfg{seed + 5, 8, g, 1.0, {}};
        auto corpus = generate_corpus(cfg);
        HerzParams hp = HerzParams::make(0.25, 2.0, SliceParams::make(0.25, 1.5, 2.0),
                                         Variant::homogeneous);
        SweepRow row = estimate_operator_norm(corpus, g, hp, 1.5, seed + 5);
        expect_true(r, row.constant >= 1.0 - 1e-12, "operator ratio >= 1");
        expect_true(r, std::isfinite(row.constant) && row.constant < 1e3, "ratio finite");
        expect_close(r, row.alpha, hp.alpha, 0.0, "row alpha");
        expect_close(r, row.L, g.half_width(), 0.0, "row L");
        expect_true(r, row.corpus == 8 && row.seed == seed + 5, "row corpus/seed");
    });

    check(out, "weak_type_ratio_defined", [&](CheckResult& r) {
        GridSpec g = g1();
        HerzParams hp = HerzParams::make(0.25, 1.0, SliceParams::make(0.25, 1.5, 1.0),
                                         Variant::homogeneous);
        FunctionSpec ball{{Term{1.0, BallIndicator{{0.9, 0.0}, 0.35}}}};
        for (bool slice_only : {false, true}) {
            auto ratio = weak_type_ratio(ball, g, hp, 1.5, slice_only);
            expect_true(r, ratio.has_value() && *ratio > 0, "ball ratio defined");
            if (ratio) r.worst = std::max(r.worst, 0.0);
        }
        FunctionSpec zero{{Term{0.0, BallIndicator{{0.0, 0.0}, 0.5}}}};
        auto none = weak_type_ratio(zero, g, hp, 1.5, false);
        expect_true(r, !none.has_value(), "zero input yields no ratio");
    });
}

// ------------------------------------------------------------- duality ----

void suite_duality(std::vector<CheckResult>& out, std::uint64_t seed) {
    const double t = 0.25;

    check(out, "conjugate_involution", [&](CheckResult& r) {
        for (double p : {1.0, 1.5, 2.0, 3.0})
            expect_close(r, conjugate(conjugate(p)), p, 0.0, "involution on anchors");
        expect_true(r, is_inf(conjugate(conjugate(kInf))), "involution at infinity");
        for (double p : {1.37, 2.71, 11.0}) {
            expect_close(r, conjugate(conjugate(p)), p, 1e-15, "involution generic");
            expect_close(r, 1.0 / p + 1.0 / conjugate(p), 1.0, 1e-15, "exponents sum to 1");
        }
    });

    check(out, "pointwise_product_integrable", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed, 8, 1.0);
        for (std::size_t i = 0; i + 1 < fns.size(); i += 2)
            for (auto rq : {std::pair{1.5, 2.0}, std::pair{2.0, 2.0}, std::pair{3.0, 1.5},
                            std::pair{1.5, 1.0}, std::pair{1.5, kInf}}) {
                SliceParams sp = SliceParams::make(t, rq.first, rq.second);
                HolderCheck c = check_slice_holder(fns[i], fns[i + 1], sp);
                expect_le(r, c.lhs, c.rhs, 1e-9, "product bound");
            }
    });

    check(out, "herz_pairing_holder", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 1, 8, 1.0);
        for (std::size_t i = 0; i + 1 < fns.size(); i += 2)
            for (Variant var : {Variant::homogeneous, Variant::nonhomogeneous})
                for (auto apqr : {std::tuple{0.3, 1.5, 2.0, 1.5}, std::tuple{-0.4, 2.0, 1.5, 2.0}}) {
                    auto [alpha, p, q, rr] = apqr;
                    HerzParams hp = HerzParams::make(alpha, p, SliceParams::make(t, rr, q), var);
                    HolderCheck c = check_herz_holder(fns[i], fns[i + 1], hp);
                    expect_le(r, c.lhs, c.rhs, 1e-9, "pairing bound");
                }
    });

    check(out, "lower_bound_stays_below_norm", [&](CheckResult& r) {
        auto fns = corpus_functions(g1(), seed + 2, 4, 1.0);
        HerzParams hp = HerzParams::make(0.3, 1.5, SliceParams::make(t, 1.5, 2.0),
                                         Variant::homogeneous);
        double worst_ratio = 1.0;
        for (const auto& f : fns) {
            double norm = herz_slice_norm(f, hp);
            if (norm == 0.0) continue;
            double lower = norm_by_duality_lower_bound(f, hp, 32, seed + 2);
            expect_le(r, lower, norm, 1e-9, "lower bound valid");
            worst_ratio = std::min(worst_ratio, lower / norm);
        }
        expect_true(r, worst_ratio > 0.05, "witnesses are not degenerate");
    });

    check(out, "single_annulus_pairing_sharp", [&](CheckResult& r) {
        GridSpec g = g1();
        GridFunction f = sample(FunctionSpec{{Term{0.8, PowerAnnulus{0.0, 0.5, 1.0}}}}, g, t);
        HerzParams hp = HerzParams::make(0.3, 2.0, SliceParams::make(t, 2.0, 2.0),
                                         Variant::homogeneous);
        double norm = herz_slice_norm(f, hp);
        double lower = norm_by_duality_lower_bound(f, hp, 8, seed);
        expect_close(r, lower, norm, 1e-10, "self witness is sharp at p=q=r=2");
    });
}

// -------------------------------------------------------------- corpus ----

void suite_corpus(std::vector<CheckResult>& out, std::uint64_t seed) {
    check(out, "deterministic_regeneration", [&](CheckResult& r) {
        for (const GridSpec& g : {g1(), g2()}) {
            CorpusConfig cfg{seed, 6, g, 1.0, {}};
            auto a = generate_corpus(cfg);
            auto b = generate_corpus(cfg);
            expect_true(r, a.size() == b.size(), "sizes agree");
            for (std::size_t i = 0; i < a.size(); ++i) {
                expect_true(r, a[i] == b[i], "specs agree");
                GridFunction fa = sample(a[i], g, 1.0);
                GridFunction fb = sample(b[i], g, 1.0);
                expect_true(r, fa.values == fb.values, "samples agree");
            }
        }
    });

    check(out, "margin_respected", [&](CheckResult& r) {
        GridSpec g = g1();
        CorpusConfig cfg{seed + 1, 12, g, 1.0, {}};
        for (const auto& spec : generate_corpus(cfg))
            for (const auto& term : spec.terms)
                expect_le(r, support_radius(term.prim, g.dim), g.half_width() - 1.0, 1e-12,
                          "support inside margin");
    });

    check(out, "prefix_stable_extension", [&](CheckResult& r) {
        GridSpec g = g1();
        CorpusConfig small{seed + 2, 5, g, 1.0, {}};
        CorpusConfig large{seed + 2, 9, g, 1.0, {}};
        auto a = generate_corpus(small);
        auto b = generate_corpus(large);
        for (std::size_t i = 0; i < a.size(); ++i)
            expect_true(r, a[i] == b[i], "prefix unchanged by growth");
    });

    check(out, "json_roundtrip_identity", [&](CheckResult& r) {
        for (const GridSpec& g : {g1(), g2()}) {
            CorpusConfig cfg{seed + 3, 6, g, 1.0, {}};
            for (const auto& spec : generate_corpus(cfg)) {
                auto [g2s, spec2] = spec_from_json(to_json(g, spec));
                expect_true(r, g.same_geometry(g2s), "grid survives");
                expect_true(r, spec == spec2, "terms survive");
                GridFunction fa = sample(spec, g, 1.0);
                GridFunction fb = sample(spec2, g2s, 1.0);
                expect_true(r, fa.values == fb.values, "samples survive");
            }
        }
    });

    check(out, "mix_weights_respected", [&](CheckResult& r) {
        GridSpec g = g1();
        CorpusConfig cfg{seed + 4, 8, g, 1.0, {{"gaussian", 1.0}}};
        for (const auto& spec : generate_corpus(cfg))
            for (const auto& term : spec.terms)
                expect_true(r, std::holds_alternative<Gaussian>(term.prim), "pure gaussian mix");
    });

    check(out, "csv_layout_stable", [&](CheckResult& r) {
        GridSpec g = GridSpec::make(1, 1.0, 0.5);
        GridFunction f(g);
        std::ostringstream os;
        write_csv(os, f);
        std::istringstream is(os.str());
        std::string line;
        std::getline(is, line);
        expect_true(r, line == "x,value", "1d header");
        int rows = 0;
        while (std::getline(is, line)) ++rows;
        expect_true(r, rows == g.total_cells(), "one row per cell");

        std::ostringstream os2;
        GridFunction f2(GridSpec::make(2, 1.0, 0.5));
        write_csv(os2, f2);
        std::istringstream is2(os2.str());
        std::getline(is2, line);
        expect_true(r, line == "x,y,value", "2d header");

        std::ostringstream os3;
        write_sweep_csv(os3, {});
        std::istringstream is3(os3.str());
        std::getline(is3, line);
        expect_true(r, line == "alpha,p,q,r,t,L,h,constant,corpus,seed", "sweep header");
    });
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"grid", "lebesgue", "slice", "herz", "blocks", "maximal", "duality", "corpus"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    SuiteResult res;
    res.suite = name;
    if (name == "grid")
        suite_grid(res.checks, seed);
    else if (name == "lebesgue")
        suite_lebesgue(res.checks, seed);
    else if (name == "slice")
        suite_slice(res.checks, seed);
    else if (name == "herz")
        suite_herz(res.checks, seed);
    else if (name == "blocks")
        suite_blocks(res.checks, seed);
    else if (name == "maximal")
        suite_maximal(res.checks, seed);
    else if (name == "duality")
        suite_duality(res.checks, seed);
    else if (name == "corpus")
        suite_corpus(res.checks, seed);
    else
        throw std::invalid_argument("unknown suite: " + name);
    return res;
}

}  // namespace herzslice
