#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "herzslice/corpus.hpp"
#include "herzslice/json_io.hpp"

using namespace herzslice;

namespace {
CorpusConfig base_config() {
    CorpusConfig cc;
    cc.seed = 17;
    cc.size = 12;
    cc.grid = GridSpec::make(1, 4.0, 0.125);
    cc.margin = 1.0;
    return cc;
}
}  // namespace

TEST_CASE("corpus generation is deterministic in the seed") {
    CorpusConfig cc = base_config();
    auto a = generate_corpus(cc);
    auto b = generate_corpus(cc);
    REQUIRE(a.size() == 12);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    cc.seed = 18;
    auto c = generate_corpus(cc);
    int differing = 0;
    for (std::size_t i = 0; i < a.size(); ++i) differing += !(a[i] == c[i]);
    CHECK(differing > 0);
}

TEST_CASE("per-index streams: extending the corpus keeps the prefix") {
    CorpusConfig small = base_config();
    small.size = 5;
    CorpusConfig large = base_config();
    large.size = 11;
    auto s = generate_corpus(small);
    auto l = generate_corpus(large);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == l[i]);
}

TEST_CASE("supports respect the margin and samples stay in range") {
    CorpusConfig cc = base_config();
    cc.margin = 1.5;
    cc.size = 30;
    for (const auto& spec : generate_corpus(cc)) {
        REQUIRE(!spec.terms.empty());
        for (const auto& term : spec.terms) {
            CHECK(support_radius(term.prim, 1) <= 2.5 + 1e-12);
        }
        // margin t = 0.5 leaves room for ball averages
        GridFunction f = sample(spec, cc.grid, 0.5);
        CHECK(f.max_abs() < kInf);
    }
    // tight grids still generate (draw ranges clamp to the box)
    CorpusConfig tiny = base_config();
    tiny.grid = GridSpec::make(1, 1.0, 0.0625);
    tiny.margin = 0.25;
    tiny.size = 25;
    for (const auto& spec : generate_corpus(tiny)) {
        for (const auto& term : spec.terms)
            CHECK(support_radius(term.prim, 1) <= 0.75 + 1e-12);
    }
}

TEST_CASE("mix weights select primitive kinds") {
    CorpusConfig cc = base_config();
    cc.mix = {{"gaussian", 1.0}};
    for (const auto& spec : generate_corpus(cc))
        for (const auto& term : spec.terms)
            CHECK(std::holds_alternative<Gaussian>(term.prim));
    cc.mix = {{"ball_indicator", 1.0}, {"power_annulus", 1.0}};
    for (const auto& spec : generate_corpus(cc))
        for (const auto& term : spec.terms)
            CHECK((std::holds_alternative<BallIndicator>(term.prim) ||
                   std::holds_alternative<PowerAnnulus>(term.prim)));
    cc.mix = {{"lorentzian", 1.0}};
    CHECK_THROWS_AS(generate_corpus(cc), std::invalid_argument);
}

TEST_CASE("json round trip preserves every primitive exactly") {
    GridSpec g = GridSpec::make(2, 2.0, 0.25);
    FunctionSpec spec;
    spec.terms.push_back({0.75, PowerAnnulus{-0.5, 0.25, 1.5}});
    spec.terms.push_back({-1.25, BallIndicator{{0.5, -0.25}, 0.6}});
    spec.terms.push_back({1.0 / 3.0, Gaussian{{-0.125, 0.375}, 0.2}});
    spec.terms.push_back({2.0, PiecewiseRandom{987654321, 5, 1.375}});
    std::string text = to_json(g, spec);
    auto [g2, spec2] = spec_from_json(text);
    CHECK(g2.same_geometry(g));
    CHECK(spec2 == spec);
    // samples agree cell for cell
    GridFunction a = sample(spec, g, 0.25);
    GridFunction b = sample(spec2, g2, 0.25);
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("spec files: write, reload, and error paths") {
    GridSpec g = GridSpec::make(1, 2.0, 0.125);
    CorpusConfig cc = base_config();
    cc.grid = g;
    cc.size = 3;
    auto specs = generate_corpus(cc);
    const char* path = "corpus_roundtrip_tmp.json";
    {
        std::ofstream out(path);
        out << to_json(g, specs[2]);
    }
    auto [g2, spec2] = load_spec_file(path);
    CHECK(g2.same_geometry(g));
    CHECK(spec2 == specs[2]);
    std::remove(path);

    CHECK_THROWS_AS(load_spec_file("definitely_missing_directory/x.json"),
                    std::invalid_argument);
    CHECK_THROWS_AS(spec_from_json("{ not json"), std::invalid_argument);
    CHECK_THROWS_AS(spec_from_json("{\"grid\":{\"n\":1,\"L\":1.0,\"h\":0.5}}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        spec_from_json("{\"grid\":{\"n\":1,\"L\":1.0,\"h\":0.5},"
                       "\"terms\":[{\"coef\":1.0,\"kind\":\"mystery\"}]}"),
        std::invalid_argument);
}

TEST_CASE("fmt17 round-trips doubles and prints short forms") {
    for (double x : {0.1, 1.0 / 3.0, 1e-300, 12345.678901234567, -2.5e17, 0.0625}) {
        CHECK(std::stod(fmt17(x)) == x);
    }
    CHECK(fmt17(2.0) == "2");
    CHECK(fmt17(0.5) == "0.5");
    CHECK(fmt17(-1.25) == "-1.25");
}

TEST_CASE("csv layouts are stable") {
    GridSpec g1 = GridSpec::make(1, 1.0, 1.0);
    GridFunction f(g1);
    f.at(0) = 0.5;
    f.at(1) = -1.5;
    std::ostringstream os;
    write_csv(os, f);
    CHECK(os.str() == "x,value\n-0.5,0.5\n0.5,-1.5\n");

    GridSpec g2 = GridSpec::make(2, 0.5, 0.5);
    GridFunction q(g2);
    q.at(g2.index(1, 0)) = 2.0;
    std::ostringstream os2;
    write_csv(os2, q);
    CHECK(os2.str() == "x,y,value\n-0.25,-0.25,0\n0.25,-0.25,2\n-0.25,0.25,0\n0.25,0.25,0\n");

    SweepRow row;
    row.alpha = 0.5;
    row.p = 1.0;
    row.q = 2.0;
    row.r = 1.5;
    row.t = 0.5;
    row.L = 8.0;
    row.h = 0.0625;
    row.constant = 2.0;
    row.corpus = 10;
    row.seed = 7;
    std::ostringstream os3;
    write_sweep_csv(os3, {row});
    CHECK(os3.str() ==
          "alpha,p,q,r,t,L,h,constant,corpus,seed\n0.5,1,2,1.5,0.5,8,0.0625,2,10,7\n");
}
