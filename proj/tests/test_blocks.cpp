#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "herzslice/blocks.hpp"

using namespace herzslice;

namespace {

// Same frozen setup as the herz tests: unit grid, t < h, 0/1 data, so every
// slice norm is an exact integer (see test_herz.cpp for the annulus masses).
const GridSpec g8 = GridSpec::make(1, 4.0, 1.0);
const SliceParams sp = SliceParams::make(0.5, 1.5, 1.0);

GridFunction ones() {
    GridFunction f(g8);
    for (auto& v : f.values) v = 1.0;
    return f;
}

HerzParams hp(double alpha, double p, Variant v = Variant::homogeneous) {
    return HerzParams::make(alpha, p, sp, v);
}

}  // namespace

TEST_CASE("canonical decomposition: frozen coefficients and tight blocks") {
    GridFunction f = ones();
    BlockDecomposition dec = decompose(f, hp(1.0, 1.0));
    REQUIRE(dec.entries.size() == 3);
    CHECK(dec.entries[0].k == -1);
    CHECK(dec.entries[1].k == 1);
    CHECK(dec.entries[2].k == 2);
    // lambda_k = 2^{k alpha} * annulus norm: 1, 4, 16
    CHECK(dec.entries[0].lambda == 1.0);
    CHECK(dec.entries[1].lambda == 4.0);
    CHECK(dec.entries[2].lambda == 16.0);
    // canonical blocks sit on the norm bound 2^{-k alpha}; the last one is a
    // single ulp off because 1/r is not exactly representable
    CHECK(dec.entries[0].block.measured_slice_norm == 2.0);
    CHECK(dec.entries[1].block.measured_slice_norm == 0.5);
    CHECK(dec.entries[2].block.measured_slice_norm == doctest::Approx(0.25).epsilon(1e-15));
    for (const auto& e : dec.entries) {
        CHECK_FALSE(e.block.restrict_type);
        auto [ok, measured] = is_central_block(e.block.data, e.k, hp(1.0, 1.0), false);
        CHECK(ok);
        CHECK(measured == e.block.measured_slice_norm);
    }
}

TEST_CASE("reconstruction is exact and the coefficient norm matches") {
    GridFunction f = ones();
    for (Variant v : {Variant::homogeneous, Variant::nonhomogeneous}) {
        BlockDecomposition dec = decompose(f, hp(1.0, 1.0, v));
        GridFunction back = reconstruct(dec);
        REQUIRE(back.values.size() == f.values.size());
        for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(back.values[i] == 1.0);
        auto [synth, coef] = synthesis_bound_probe(dec);
        double expect = v == Variant::homogeneous ? 21.0 : 22.0;
        CHECK(coef == expect);
        CHECK(synth == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("nonhomogeneous blocks are restrict-type with k >= 0") {
    GridFunction f = ones();
    BlockDecomposition dec = decompose(f, hp(1.0, 1.0, Variant::nonhomogeneous));
    REQUIRE(dec.entries.size() == 3);
    CHECK(dec.entries[0].k == 0);  // B_0 swallows the +-0.5 cells
    CHECK(dec.entries[0].lambda == 2.0);
    CHECK(dec.entries[1].lambda == 4.0);
    CHECK(dec.entries[2].lambda == 16.0);
    for (const auto& e : dec.entries) CHECK(e.block.restrict_type);
}

TEST_CASE("central block verdicts: bound, support, restriction") {
    HerzParams h1 = hp(1.0, 1.0);
    // 0.25 on the two +-1.5 cells: slice-L1 = 0.5 = 2^{-1}, exactly tight
    GridFunction b(g8);
    b.at(2) = 0.25;
    b.at(5) = 0.25;
    auto [ok, measured] = is_central_block(b, 1, h1, false);
    CHECK(ok);
    CHECK(measured == 0.5);
    // same data against a harsher alpha fails the norm bound
    CHECK_FALSE(is_central_block(b, 1, hp(2.0, 1.0), false).first);
    // support escaping B(0, 2) fails regardless of size
    GridFunction s(g8);
    s.at(7) = 1e-6;  // x = 3.5
    CHECK_FALSE(is_central_block(s, 1, h1, false).first);
    CHECK(is_central_block(s, 2, h1, false).first);
    // restrict-type blocks must have k >= 0
    GridFunction inner(g8);
    inner.at(4) = 0.1;  // x = 0.5
    CHECK(is_central_block(inner, -1, h1, false).first);
    CHECK_FALSE(is_central_block(inner, -1, h1, true).first);
}

TEST_CASE("degenerate inputs are rejected") {
    GridFunction z(g8);
    CHECK_THROWS_AS(decompose(z, hp(1.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(decompose(ones(), hp(1.0, kInf)), std::invalid_argument);
    BlockDecomposition empty;
    CHECK_THROWS_AS(reconstruct(empty), std::invalid_argument);
    CHECK_THROWS_AS(synthesis_bound_probe(empty), std::invalid_argument);
}

TEST_CASE("two-block split: frozen synthesis ratio") {
    // f = 1_{S_1} + 1_{S_2} at alpha = 1, p = 1: the canonical split has
    // coefficient norm 4 + 16 while the herz norm of the sum is also 20
    // here (annuli are disjoint), so the probe ratio is exactly one.
    GridFunction f(g8);
    f.at(2) = 1.0;
    f.at(5) = 1.0;  // S_1
    f.at(0) = 1.0;
    f.at(1) = 1.0;
    f.at(6) = 1.0;
    f.at(7) = 1.0;  // S_2
    BlockDecomposition dec = decompose(f, hp(1.0, 1.0));
    auto [synth, coef] = synthesis_bound_probe(dec);
    CHECK(coef == 20.0);
    CHECK(synth == doctest::Approx(20.0).epsilon(1e-13));
}
