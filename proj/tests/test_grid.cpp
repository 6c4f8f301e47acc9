#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "herzslice/grid.hpp"
#include "herzslice/lebesgue.hpp"

using namespace herzslice;

TEST_CASE("grid construction and geometry") {
    GridSpec g = GridSpec::make(1, 4.0, 0.25);
    CHECK(g.cells_per_axis == 32);
    CHECK(g.total_cells() == 32);
    CHECK(g.half_width() == doctest::Approx(4.0));
    // centers at (i - 16 + 0.5)/4: symmetric, never zero
    CHECK(g.coord(0) == -3.875);
    CHECK(g.coord(31) == 3.875);
    CHECK(g.coord(15) == -0.125);
    CHECK(g.coord(16) == 0.125);
    for (int i = 0; i < 32; ++i) CHECK(g.coord(i) == -g.coord(31 - i));

    GridSpec g2 = GridSpec::make(2, 1.0, 0.5);
    CHECK(g2.total_cells() == 16);
    CHECK(g2.index(1, 2) == 9);
    CHECK(g2.center_norm(g2.index(1, 2)) ==
          doctest::Approx(std::hypot(-0.25, 0.25)).epsilon(1e-15));
}

TEST_CASE("grid construction rejects bad input") {
    CHECK_THROWS_AS(GridSpec::make(3, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::make(1, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::make(1, 1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec::make(1, 1.0, 0.3), std::invalid_argument);  // 2L/h not integral
    CHECK_THROWS_AS(GridSpec::make(1, 0.75, 0.5), std::invalid_argument); // odd cell count
}

TEST_CASE("ball indicator sampling: frozen 8-cell case") {
    // h = 1/4, ball of radius 1 at the origin: centers 0.125..0.875 on each
    // side lie inside, 1.125 does not -> 8 unit cells, total mass 8/4 = 2.
    GridSpec g = GridSpec::make(1, 4.0, 0.25);
    GridFunction f = sample(FunctionSpec{{Term{1.0, BallIndicator{{0.0, 0.0}, 1.0}}}}, g, 0.5);
    int ones = 0;
    for (double v : f.values) {
        CHECK((v == 0.0 || v == 1.0));
        ones += v == 1.0;
    }
    CHECK(ones == 8);
    CHECK(integrate(f) == 2.0);
}

TEST_CASE("power annulus respects open inner / closed outer boundary") {
    GridSpec g = GridSpec::make(1, 8.0, 1.0);  // centers at half-integers
    // a = 0.5, b = 2.5: cell at |x| = 0.5 is excluded (a < |x| fails), cells
    // at 1.5 and 2.5 are included (|x| <= b holds at 2.5).
    GridFunction f = sample(FunctionSpec{{Term{1.0, PowerAnnulus{0.0, 0.5, 2.5}}}}, g, 0.5);
    CHECK(f.at(8) == 0.0);   // x = 0.5
    CHECK(f.at(9) == 1.0);   // x = 1.5
    CHECK(f.at(10) == 1.0);  // x = 2.5
    CHECK(f.at(11) == 0.0);  // x = 3.5
}

TEST_CASE("power annulus evaluates |x|^beta") {
    GridSpec g = GridSpec::make(1, 4.0, 0.25);
    GridFunction f = sample(FunctionSpec{{Term{2.0, PowerAnnulus{-0.5, 0.0, 2.0}}}}, g, 0.5);
    std::int64_t i = g.index(20);  // x = 1.125
    CHECK(f.at(i) == doctest::Approx(2.0 * std::pow(1.125, -0.5)).epsilon(1e-15));
}

TEST_CASE("gaussian is truncated at four widths") {
    GridSpec g = GridSpec::make(1, 4.0, 1.0 / 64);
    GridFunction f = sample(FunctionSpec{{Term{1.0, Gaussian{{0.0, 0.0}, 0.25}}}}, g, 1.0);
    for (std::int64_t i = 0; i < g.total_cells(); ++i) {
        double x = g.coord(static_cast<int>(i));
        if (std::fabs(x) > 1.0)
            CHECK(f.at(i) == 0.0);
        else
            CHECK(f.at(i) == doctest::Approx(std::exp(-x * x / (2 * 0.0625))).epsilon(1e-14));
    }
}

TEST_CASE("piecewise random is deterministic and masked to its support") {
    GridSpec g = GridSpec::make(1, 4.0, 1.0 / 32);
    FunctionSpec spec{{Term{1.0, PiecewiseRandom{42, 5, 2.0}}}};
    GridFunction a = sample(spec, g, 1.0);
    GridFunction b = sample(spec, g, 1.0);
    CHECK(a.values == b.values);
    bool nonzero = false;
    for (std::int64_t i = 0; i < g.total_cells(); ++i) {
        if (std::fabs(g.coord(static_cast<int>(i))) > 2.0) CHECK(a.at(i) == 0.0);
        nonzero = nonzero || a.at(i) != 0.0;
    }
    CHECK(nonzero);
}

TEST_CASE("sampling enforces the support margin") {
    GridSpec g = GridSpec::make(1, 4.0, 0.25);
    FunctionSpec wide{{Term{1.0, BallIndicator{{2.0, 0.0}, 1.5}}}};  // support radius 3.5
    CHECK_NOTHROW(sample(wide, g, 0.5));
    CHECK_THROWS_AS(sample(wide, g, 1.0), std::domain_error);
    // non-integrable power at the origin is rejected outright
    FunctionSpec sing{{Term{1.0, PowerAnnulus{-1.0, 0.0, 1.0}}}};
    CHECK_THROWS_AS(sample(sing, g, 0.5), std::domain_error);
    // beta > -n is fine
    FunctionSpec ok{{Term{1.0, PowerAnnulus{-0.75, 0.0, 1.0}}}};
    CHECK_NOTHROW(sample(ok, g, 0.5));
}

TEST_CASE("support radius covers off-center primitives") {
    CHECK(support_radius(Primitive{BallIndicator{{1.0, 0.0}, 0.5}}, 1) == doctest::Approx(1.5));
    CHECK(support_radius(Primitive{Gaussian{{-1.0, 0.0}, 0.25}}, 1) == doctest::Approx(2.0));
    CHECK(support_radius(Primitive{PowerAnnulus{1.0, 0.5, 2.0}}, 1) == doctest::Approx(2.0));
    CHECK(support_radius(Primitive{PiecewiseRandom{1, 4, 1.5}}, 1) == doctest::Approx(1.5));
    CHECK(support_radius(Primitive{BallIndicator{{3.0, 4.0}, 1.0}}, 2) == doctest::Approx(6.0));
}

TEST_CASE("terms add and scale") {
    GridSpec g = GridSpec::make(1, 4.0, 0.25);
    FunctionSpec two{{Term{1.0, BallIndicator{{0.0, 0.0}, 1.0}},
                      Term{-0.5, BallIndicator{{0.0, 0.0}, 2.0}}}};
    GridFunction f = sample(two, g, 0.5);
    std::int64_t inner = g.index(16);  // x = 0.125: 1 - 0.5
    std::int64_t outer = g.index(22);  // x = 1.625: only the big ball
    CHECK(f.at(inner) == 0.5);
    CHECK(f.at(outer) == -0.5);

    GridFunction h = add(scale(f, 2.0), f);
    CHECK(h.at(inner) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(lp_norm(scale(f, -2.0), 1.0) == doctest::Approx(2.0 * lp_norm(f, 1.0)).epsilon(1e-15));
}

TEST_CASE("translate shifts cells and guards the margin") {
    GridSpec g = GridSpec::make(1, 4.0, 0.25);
    GridFunction f = sample(FunctionSpec{{Term{1.0, BallIndicator{{0.0, 0.0}, 1.0}}}}, g, 0.5);
    GridFunction s = translate(f, {4, 0}, 0.0);  // shift by +1.0
    for (int i = 0; i < 28; ++i) CHECK(s.at(i + 4) == f.at(i));
    CHECK(integrate(s) == integrate(f));
    // shifting the support off the grid throws
    CHECK_THROWS_AS(translate(f, {16, 0}, 0.0), std::domain_error);
    // margin violation without leaving the box also throws
    CHECK_THROWS_AS(translate(f, {8, 0}, 1.5), std::domain_error);

    GridSpec g2 = GridSpec::make(2, 2.0, 0.25);
    GridFunction f2 = sample(FunctionSpec{{Term{1.0, BallIndicator{{0.0, 0.0}, 0.5}}}}, g2, 0.5);
    GridFunction s2 = translate(f2, {2, -1}, 0.0);
    CHECK(integrate(s2) == integrate(f2));
    CHECK(s2.at(g2.index(10, 7)) == f2.at(g2.index(8, 8)));
}

TEST_CASE("quadrature is the plain cell-sum") {
    GridSpec g = GridSpec::make(2, 1.0, 0.5);
    GridFunction f(g);
    f.at(g.index(0, 0)) = 3.0;
    f.at(g.index(3, 3)) = -1.0;
    CHECK(integrate(f) == doctest::Approx(0.5).epsilon(1e-15));  // (3 - 1) * 0.25
    CHECK(f.max_abs() == 3.0);
}

TEST_CASE("pointwise_abs_pow computes |f|^s") {
    GridSpec g = GridSpec::make(1, 1.0, 0.25);
    GridFunction f(g);
    f.at(0) = -2.0;
    f.at(5) = 0.5;
    GridFunction a = pointwise_abs_pow(f, 3.0);
    CHECK(a.at(0) == 8.0);
    CHECK(a.at(5) == 0.125);
    CHECK(a.at(1) == 0.0);
    CHECK_THROWS_AS(pointwise_abs_pow(f, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(pointwise_abs_pow(f, -1.0), std::invalid_argument);
}
