#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "herzslice/herz.hpp"
#include "herzslice/lebesgue.hpp"

using namespace herzslice;

namespace {

// Unit-spacing grid on [-4, 4]: centers at +-0.5, +-1.5, +-2.5, +-3.5.
// Annulus masses for the all-ones function: S_{-1} = (1/4, 1/2] holds the
// two +-0.5 cells, S_1 = (1, 2] the two +-1.5 cells, S_2 = (2, 4] the four
// outer cells.  t = 0.5 < h makes every ball average the cell value itself,
// so with 0/1 data all slice norms below are exact integers.
const GridSpec g8 = GridSpec::make(1, 4.0, 1.0);
const SliceParams sp151 = SliceParams::make(0.5, 1.5, 1.0);

GridFunction ones() {
    GridFunction f(g8);
    for (auto& v : f.values) v = 1.0;
    return f;
}

HerzParams hp(double alpha, double p, const SliceParams& sp,
              Variant v = Variant::homogeneous) {
    return HerzParams::make(alpha, p, sp, v);
}

}  // namespace

TEST_CASE("annulus index: open inner, closed outer boundary") {
    CHECK(annulus_index(0.5) == -1);
    CHECK(annulus_index(1.0) == 0);
    CHECK(annulus_index(1.0000001) == 1);
    CHECK(annulus_index(2.0) == 1);
    CHECK(annulus_index(2.1) == 2);
    CHECK(annulus_index(0.75) == 0);
    CHECK(annulus_index(0.25) == -2);
    CHECK_THROWS_AS(annulus_index(0.0), std::invalid_argument);
}

TEST_CASE("annulus restriction masses on the unit grid") {
    GridFunction f = ones();
    CHECK(integrate(annulus_restrict(f, -1, Variant::homogeneous)) == 2.0);
    CHECK(integrate(annulus_restrict(f, 0, Variant::homogeneous)) == 0.0);  // (1/2, 1] empty
    CHECK(integrate(annulus_restrict(f, 1, Variant::homogeneous)) == 2.0);
    CHECK(integrate(annulus_restrict(f, 2, Variant::homogeneous)) == 4.0);
    // nonhomogeneous k = 0 is the whole unit ball
    CHECK(integrate(annulus_restrict(f, 0, Variant::nonhomogeneous)) == 2.0);
    CHECK_THROWS_AS(annulus_restrict(f, -1, Variant::nonhomogeneous), std::invalid_argument);
}

TEST_CASE("herz terms and frozen norms, homogeneous") {
    GridFunction f = ones();
    auto terms = herz_slice_terms(f, sp151, Variant::homogeneous);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0] == std::pair<int, double>{-1, 2.0});
    CHECK(terms[1] == std::pair<int, double>{1, 2.0});
    CHECK(terms[2] == std::pair<int, double>{2, 4.0});
    // alpha = 1, p = 1: 2^{-1} 2 + 2 * 2 + 4 * 4 = 21
    CHECK(herz_slice_norm(f, hp(1.0, 1.0, sp151)) == 21.0);
    // p = inf: sup(1, 4, 16)
    CHECK(herz_slice_norm(f, hp(1.0, kInf, sp151)) == 16.0);
    // p = 2: sqrt(1 + 16 + 256)
    CHECK(herz_slice_norm(f, hp(1.0, 2.0, sp151)) ==
          doctest::Approx(std::sqrt(273.0)).epsilon(1e-15));
    // alpha = 0, p = 1 is the plain L1 mass
    CHECK(herz_slice_norm(f, hp(0.0, 1.0, sp151)) == 8.0);
}

TEST_CASE("herz norms, nonhomogeneous variant") {
    GridFunction f = ones();
    // alpha = 1, p = 1: 1 * 2 + 2 * 2 + 4 * 4 = 22
    CHECK(herz_slice_norm(f, hp(1.0, 1.0, sp151, Variant::nonhomogeneous)) == 22.0);
    CHECK(herz_slice_norm(f, hp(1.0, kInf, sp151, Variant::nonhomogeneous)) == 16.0);
}

TEST_CASE("classical ladder agrees at q = r") {
    GridFunction f = ones();
    CHECK(classical_herz_norm(f, 1.0, 1.0, 1.0, Variant::homogeneous) == 21.0);
    CHECK(classical_herz_norm(f, 1.0, 1.0, 1.0, Variant::nonhomogeneous) == 22.0);
    // r = q = 1 is unavailable (r > 1), but 0/1 data collapses at any r
    CHECK(herz_slice_norm(f, hp(1.0, 1.0, sp151)) ==
          classical_herz_norm(f, 1.0, 1.0, 1.0, Variant::homogeneous));
    double c2 = classical_herz_norm(f, 0.5, 2.0, 2.0, Variant::homogeneous);
    double s2 = herz_slice_norm(f, hp(0.5, 2.0, SliceParams::make(0.5, 2.0, 2.0)));
    CHECK(s2 == doctest::Approx(c2).epsilon(1e-13));
}

TEST_CASE("power identity on the frozen grid") {
    // |f|^2 = f for 0/1 data: herz(f; 1,1,q=1,r=1.5) = herz(f; 1/2,2,2,3)^2
    GridFunction f = ones();
    double powed = herz_slice_norm(f, hp(1.0, 1.0, sp151));
    double base = herz_slice_norm(f, hp(0.5, 2.0, SliceParams::make(0.5, 3.0, 2.0)));
    CHECK(powed == doctest::Approx(base * base).epsilon(1e-12));
    CHECK(base == doctest::Approx(std::sqrt(21.0)).epsilon(1e-13));
}

TEST_CASE("weak herz norm: single level equals the strong norm") {
    GridFunction f = ones();
    CHECK(weak_herz_slice_norm(f, hp(1.0, 1.0, sp151)) ==
          doctest::Approx(21.0).epsilon(1e-13));
    // two levels: doubling the outer annulus moves the sup to level 1
    GridFunction g = ones();
    for (std::int64_t i = 0; i < g.grid.total_cells(); ++i)
        if (g.grid.center_norm(i) > 2.0) g.at(i) = 2.0;
    // level 1: whole function -> 21; level 2: outer annulus only -> 2 * 16
    CHECK(weak_herz_slice_norm(g, hp(1.0, 1.0, sp151)) ==
          doctest::Approx(32.0).epsilon(1e-13));
    CHECK(weak_herz_slice_norm(g, hp(1.0, 1.0, sp151)) <=
          herz_slice_norm(g, hp(1.0, 1.0, sp151)));
    CHECK_THROWS_AS(weak_herz_slice_norm(f, hp(1.0, kInf, sp151)), std::invalid_argument);
}

TEST_CASE("inclusion pairs hold with constant one") {
    GridFunction f = ones();
    auto [n1, n2] = inclusion_check(f, hp(1.0, 1.0, sp151), hp(1.0, 2.0, sp151));
    CHECK(n1 == 21.0);
    CHECK(n2 == doctest::Approx(std::sqrt(273.0)).epsilon(1e-15));
    CHECK(n2 <= n1);
    auto [m1, m2] = inclusion_check(f, hp(1.0, 1.0, sp151, Variant::nonhomogeneous),
                                    hp(0.0, 1.0, sp151, Variant::nonhomogeneous));
    CHECK(m1 == 22.0);
    CHECK(m2 == 8.0);
    CHECK(m2 <= m1);
    // mismatched slice parameters are rejected
    CHECK_THROWS_AS(inclusion_check(f, hp(1.0, 1.0, sp151),
                                    hp(1.0, 2.0, SliceParams::make(0.5, 2.0, 1.0))),
                    std::invalid_argument);
}

TEST_CASE("intersection report: K, Kdot and E on the frozen grid") {
    GridFunction f = ones();
    IntersectionReport rep = intersection_check(f, hp(1.0, 1.0, sp151));
    CHECK(rep.nonhomogeneous == 22.0);
    CHECK(rep.homogeneous == 21.0);
    CHECK(rep.slice == 8.0);
    // p = 1 triangle: K <= E + Kdot
    CHECK(rep.nonhomogeneous <= rep.slice + rep.homogeneous);
    CHECK_THROWS_AS(intersection_check(f, hp(-0.5, 1.0, sp151)), std::invalid_argument);
}

TEST_CASE("weighted sandwich: frozen pair and the 2^|alpha| bounds") {
    GridFunction f = ones();
    auto [herz, weighted] = weighted_sandwich_check(f, 1.0, 1.0);
    CHECK(herz == 21.0);
    // sum |x| h = 2 (0.5 + 1.5 + 2.5 + 3.5) = 16
    CHECK(weighted == 16.0);
    CHECK(weighted <= 2.0 * herz);
    CHECK(herz <= 2.0 * weighted);
    // alpha = 0: the two coincide
    auto [h0, w0] = weighted_sandwich_check(f, 0.0, 2.0);
    CHECK(h0 == doctest::Approx(w0).epsilon(1e-14));
}
