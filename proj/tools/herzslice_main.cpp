// Command-line surface for the Herz-slice norm library: corpus generation,
// norm evaluation, block decomposition, maximal-function reports, operator
// norm sweeps, the property-suite runner, and a fast-vs-reference benchmark.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "herzslice/blocks.hpp"
#include "herzslice/corpus.hpp"
#include "herzslice/duality.hpp"
#include "herzslice/json_io.hpp"
#include "herzslice/lebesgue.hpp"
#include "herzslice/maximal.hpp"
#include "herzslice/verify.hpp"

namespace hz = herzslice;

namespace {

// Accepts plain reals plus "inf" (strtod handles the spelling variants).
double parse_real(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": cannot parse '" + s + "' as a real");
    }
}

hz::Variant parse_variant(const std::string& s) {
    if (s == "homo") return hz::Variant::homogeneous;
    if (s == "nonhomo") return hz::Variant::nonhomogeneous;
    throw std::invalid_argument("variant must be 'homo' or 'nonhomo', got '" + s + "'");
}

// Exponents may be infinite; JSON has no inf literal, so those become "inf".
std::string json_real(double x) {
    if (hz::is_inf(x)) return "\"inf\"";
    return hz::fmt17(x);
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    return file;
}

struct GridFlags {
    int dim = 1;
    double L = 4.0;
    double h = 1.0 / 64;

    void attach(CLI::App* cmd) {
        cmd->add_option("--dim", dim, "dimension (1 or 2)")->check(CLI::Range(1, 2));
        cmd->add_option("--L", L, "half-width of the box [-L, L]^n");
        cmd->add_option("--spacing", h, "grid spacing h (2L/h must be an even integer)");
    }
    hz::GridSpec make() const { return hz::GridSpec::make(dim, L, h); }
};

struct NormFlags {
    double alpha = 0.0;
    std::string p = "1";
    std::string q = "2";
    double r = 2.0;
    double t = 0.5;
    std::string variant = "homo";

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "annulus weight exponent");
        cmd->add_option("--p", p, "outer exponent across annuli ('inf' allowed)");
        cmd->add_option("--q", q, "outer exponent of the slice norm ('inf' allowed)");
        cmd->add_option("--r", r, "inner exponent of the local average, in (1, inf)");
        cmd->add_option("--t", t, "radius of the averaging ball");
        cmd->add_option("--variant", variant, "annulus family: homo | nonhomo")
            ->check(CLI::IsMember({"homo", "nonhomo"}));
    }
    hz::SliceParams slice() const {
        return hz::SliceParams::make(t, r, parse_real(q, "--q"));
    }
    hz::HerzParams herz() const {
        return hz::HerzParams::make(alpha, parse_real(p, "--p"), slice(),
                                    parse_variant(variant));
    }
};

// ------------------------------------------------------------------ gen ----

int cmd_gen(std::uint64_t seed, int size, const GridFlags& gf, double margin,
            const std::string& mix_text, const std::string& out_dir) {
    hz::CorpusConfig cfg;
    cfg.seed = seed;
    cfg.size = size;
    cfg.grid = gf.make();
    cfg.margin = margin;
    if (!mix_text.empty()) {
        std::istringstream is(mix_text);
        std::string item;
        while (std::getline(is, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--mix entries look like kind=weight, got '" +
                                            item + "'");
            cfg.mix[item.substr(0, eq)] =
                parse_real(item.substr(eq + 1), "--mix weight");
        }
    }
    auto corpus = hz::generate_corpus(cfg);
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        std::filesystem::path path =
            std::filesystem::path(out_dir) /
            ("corpus_" + std::to_string(seed) + "_" + std::to_string(i) + ".json");
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << hz::to_json(cfg.grid, corpus[i]);
        std::cout << path.string() << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- norm ----

int cmd_norm(const std::string& spec_path, const std::string& family, bool weak,
             const NormFlags& nf) {
    auto [grid, spec] = hz::load_spec_file(spec_path);
    hz::GridFunction f = hz::sample(spec, grid);

    double value = 0.0;
    if (family == "lebesgue") {
        double p = parse_real(nf.p, "--p");
        value = weak ? hz::weak_lp_norm(f, p) : hz::lp_norm(f, p);
    } else if (family == "slice") {
        hz::SliceParams sp = nf.slice();
        value = weak ? hz::weak_slice_norm(f, sp) : hz::slice_norm(f, sp);
    } else if (family == "herz") {
        hz::HerzParams hp = nf.herz();
        value = weak ? hz::weak_herz_slice_norm(f, hp) : hz::herz_slice_norm(f, hp);
    } else if (family == "classical-herz") {
        if (weak)
            throw std::invalid_argument("--weak is not available for classical-herz");
        value = hz::classical_herz_norm(f, nf.alpha, parse_real(nf.p, "--p"),
                                        parse_real(nf.q, "--q"), parse_variant(nf.variant));
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }

    std::cout << "{\n"
              << "  \"file\": " << json_string(spec_path) << ",\n"
              << "  \"family\": " << json_string(family) << ",\n"
              << "  \"weak\": " << (weak ? "true" : "false") << ",\n"
              << "  \"variant\": " << json_string(nf.variant) << ",\n"
              << "  \"alpha\": " << hz::fmt17(nf.alpha) << ",\n"
              << "  \"p\": " << json_real(parse_real(nf.p, "--p")) << ",\n"
              << "  \"q\": " << json_real(parse_real(nf.q, "--q")) << ",\n"
              << "  \"r\": " << hz::fmt17(nf.r) << ",\n"
              << "  \"t\": " << hz::fmt17(nf.t) << ",\n"
              << "  \"grid\": {\"n\": " << grid.dim << ", \"L\": " << hz::fmt17(grid.half_width())
              << ", \"h\": " << hz::fmt17(grid.spacing) << "},\n"
              << "  \"norm\": " << hz::fmt17(value) << "\n"
              << "}\n";
    return 0;
}

// ------------------------------------------------------------ decompose ----

int cmd_decompose(const std::string& spec_path, const NormFlags& nf) {
    auto [grid, spec] = hz::load_spec_file(spec_path);
    hz::GridFunction f = hz::sample(spec, grid);
    hz::HerzParams hp = nf.herz();

    hz::BlockDecomposition dec = hz::decompose(f, hp);
    hz::GridFunction back = hz::reconstruct(dec);
    double max_rel = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double scale = std::max(std::fabs(f.values[i]), 1e-300);
        max_rel = std::max(max_rel, std::fabs(back.values[i] - f.values[i]) / scale);
    }
    auto [lhs, rhs] = hz::synthesis_bound_probe(dec);

    std::cout << "{\n"
              << "  \"file\": " << json_string(spec_path) << ",\n"
              << "  \"variant\": " << json_string(nf.variant) << ",\n"
              << "  \"alpha\": " << hz::fmt17(hp.alpha) << ",\n"
              << "  \"p\": " << json_real(hp.p) << ",\n"
              << "  \"q\": " << json_real(hp.slice.q) << ",\n"
              << "  \"r\": " << hz::fmt17(hp.slice.r) << ",\n"
              << "  \"t\": " << hz::fmt17(hp.slice.t) << ",\n"
              << "  \"entries\": [\n";
    for (std::size_t i = 0; i < dec.entries.size(); ++i) {
        const auto& e = dec.entries[i];
        auto [central, measured] = hz::is_central_block(e.block.data, e.k, hp,
                                                        e.block.restrict_type);
        std::cout << "    {\"k\": " << e.k << ", \"lambda\": " << hz::fmt17(e.lambda)
                  << ", \"block_norm\": " << hz::fmt17(measured)
                  << ", \"central\": " << (central ? "true" : "false") << "}"
                  << (i + 1 < dec.entries.size() ? "," : "") << "\n";
    }
    std::cout << "  ],\n"
              << "  \"coefficient_norm\": " << hz::fmt17(rhs) << ",\n"
              << "  \"herz_norm\": " << hz::fmt17(lhs) << ",\n"
              << "  \"reconstruction_max_rel_error\": " << hz::fmt17(max_rel) << "\n"
              << "}\n";
    return 0;
}

// -------------------------------------------------------------- maximal ----

int cmd_maximal(const std::string& spec_path, double ef, const std::string& max_radius,
                bool use_oracle, const std::string& out_path) {
    auto [grid, spec] = hz::load_spec_file(spec_path);
    hz::GridFunction f = hz::sample(spec, grid);
    double cap = parse_real(max_radius, "--max-radius");
    hz::GridFunction M =
        use_oracle ? hz::hl_maximal_oracle(f, ef, cap) : hz::hl_maximal(f, ef, cap);
    std::ofstream file;
    hz::write_csv(open_sink(out_path, file), M);
    return 0;
}

// ---------------------------------------------------------------- sweep ----

int cmd_sweep(const std::string& config_path, const std::string& out_path) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot read " + config_path);
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(config_path + ": " + e.what());
    }

    std::vector<double> alphas = cfg.at("alphas").get<std::vector<double>>();
    std::vector<double> Ls = cfg.at("L_values").get<std::vector<double>>();
    double h = cfg.at("h").get<double>();
    int dim = cfg.value("dim", 1);
    double p = cfg.value("p", 1.0);
    double q = cfg.value("q", 2.0);
    double r = cfg.value("r", 1.5);
    double t = cfg.value("t", 0.5);
    std::string variant = cfg.value("variant", "homo");
    int corpus_size = cfg.value("corpus_size", 10);
    std::uint64_t seed = cfg.value("seed", std::uint64_t{7});
    double margin = cfg.value("margin", 1.0);
    double ef = cfg.value("extension_factor", 1.5);

    std::sort(alphas.begin(), alphas.end());
    std::sort(Ls.begin(), Ls.end());

    std::vector<hz::SweepRow> rows;
    for (double alpha : alphas)
        for (double L : Ls) {
            hz::GridSpec grid = hz::GridSpec::make(dim, L, h);
            hz::CorpusConfig cc;
            cc.seed = seed;
            cc.size = corpus_size;
            cc.grid = grid;
            cc.margin = margin;
            auto corpus = hz::generate_corpus(cc);
            hz::HerzParams hp = hz::HerzParams::make(
                alpha, p, hz::SliceParams::make(t, r, q), parse_variant(variant));
            rows.push_back(hz::estimate_operator_norm(corpus, grid, hp, ef, seed));
        }

    std::ofstream file;
    hz::write_sweep_csv(open_sink(out_path, file), rows);
    return 0;
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    std::vector<std::string> names =
        suite == "all" ? hz::suite_names() : std::vector<std::string>{suite};
    int failures = 0, total = 0;
    for (const auto& name : names) {
        hz::SuiteResult res = hz::run_suite(name, seed);
        std::cout << "suite " << res.suite << "\n";
        for (const auto& c : res.checks) {
            ++total;
            failures += c.pass ? 0 : 1;
            std::cout << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name
                      << "  worst=" << hz::fmt17(c.worst);
            if (!c.details.empty()) std::cout << "  (" << c.details << ")";
            std::cout << "\n";
        }
    }
    std::cout << "verify: " << total << " checks, " << failures << " failed\n";
    return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- bench ----

int cmd_bench(const std::vector<int>& sizes, int cap_cells, std::uint64_t seed) {
    std::printf("%-10s %12s %12s %10s\n", "n", "fast_ms", "oracle_ms", "speedup");
    for (int n : sizes) {
        double L = 8.0;
        double h = 2.0 * L / n;
        hz::GridSpec grid = hz::GridSpec::make(1, L, h);
        hz::GridFunction f = hz::sample(
            hz::FunctionSpec{{hz::Term{1.0, hz::PiecewiseRandom{seed, 9, 0.8 * L}}}}, grid);
        double cap = (cap_cells + 0.5) * h;

        using clock = std::chrono::steady_clock;
        double fast_ms = 1e300;
        hz::GridFunction fast;
        for (int rep = 0; rep < 3; ++rep) {
            auto t0 = clock::now();
            fast = hz::hl_maximal(f, 1.0, cap);
            auto t1 = clock::now();
            fast_ms = std::min(fast_ms,
                               std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        auto t0 = clock::now();
        hz::GridFunction slow = hz::hl_maximal_oracle(f, 1.0, cap, /*enforce_guard=*/false);
        auto t1 = clock::now();
        double slow_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        double worst = 0.0;
        for (std::size_t i = 0; i < fast.values.size(); ++i)
            worst = std::max(worst, hz::rel_gap(fast.values[i], slow.values[i]));
        if (worst > 1e-12) {
            std::cerr << "bench: fast and reference paths disagree (gap " << worst << ")\n";
            return 1;
        }
        std::printf("%-10d %12.3f %12.3f %10.1f\n", n, fast_ms, slow_ms, slow_ms / fast_ms);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Norms on slice and Herz-slice spaces over uniform grids"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "write a deterministic corpus of function specs");
    std::uint64_t gen_seed = 0;
    int gen_size = 10;
    GridFlags gen_grid;
    double gen_margin = 1.0;
    std::string gen_mix, gen_out;
    gen->add_option("--seed", gen_seed, "corpus seed");
    gen->add_option("--size", gen_size, "number of specs");
    gen_grid.attach(gen);
    gen->add_option("--margin", gen_margin, "keep supports inside |x| <= L - margin");
    gen->add_option("--mix", gen_mix,
                    "kind=weight list, e.g. gaussian=2,ball_indicator=1 "
                    "(kinds: ball_indicator, gaussian, power_annulus, piecewise_random)");
    gen->add_option("--out", gen_out, "output directory")->required();

    // norm
    auto* norm = app.add_subcommand("norm", "evaluate a norm of a sampled spec");
    std::string norm_spec, norm_family = "herz";
    bool norm_weak = false;
    NormFlags norm_nf;
    norm->add_option("--spec", norm_spec, "FunctionSpec JSON file")->required();
    norm->add_option("--family", norm_family, "lebesgue | slice | herz | classical-herz")
        ->check(CLI::IsMember({"lebesgue", "slice", "herz", "classical-herz"}));
    norm->add_flag("--weak", norm_weak, "weak (level-set) version of the norm");
    norm_nf.attach(norm);

    // decompose
    auto* deco = app.add_subcommand("decompose", "central block decomposition report");
    std::string deco_spec;
    NormFlags deco_nf;
    deco->add_option("--spec", deco_spec, "FunctionSpec JSON file")->required();
    deco_nf.attach(deco);

    // maximal
    auto* maxi = app.add_subcommand("maximal", "Hardy-Littlewood maximal function as CSV");
    std::string maxi_spec, maxi_out, maxi_cap = "inf";
    double maxi_ef = 2.0;
    bool maxi_oracle = false;
    maxi->add_option("--spec", maxi_spec, "FunctionSpec JSON file")->required();
    maxi->add_option("--extension-factor", maxi_ef, "evaluate on [-fL, fL]^n, f >= 1");
    maxi->add_option("--max-radius", maxi_cap, "truncate the radius ladder ('inf' = none)");
    maxi->add_flag("--oracle", maxi_oracle, "use the slow reference evaluator");
    maxi->add_option("--out", maxi_out, "CSV path (default stdout)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "operator-norm sweep over alpha and L");
    std::string sweep_cfg, sweep_out;
    sweep->add_option("--config", sweep_cfg, "sweep config JSON")->required();
    sweep->add_option("--out", sweep_out, "CSV path (default stdout)");

    // verify
    auto* veri = app.add_subcommand("verify", "run the property suites");
    std::string veri_suite = "all";
    std::uint64_t veri_seed = 7;
    veri->add_option("--suite", veri_suite, "grid|lebesgue|slice|herz|blocks|maximal|duality|corpus|all");
    veri->add_option("--seed", veri_seed, "seed for the randomized checks");

    // bench
    auto* bench = app.add_subcommand("bench", "time the fast maximal path against the reference");
    std::vector<int> bench_sizes{16384};
    int bench_cap = 128;
    std::uint64_t bench_seed = 7;
    bench->add_option("--size", bench_sizes, "1D grid sizes to time");
    bench->add_option("--max-radius-cells", bench_cap, "radius ladder cap, in cells");
    bench->add_option("--seed", bench_seed, "seed for the test function");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_seed, gen_size, gen_grid, gen_margin, gen_mix, gen_out);
        if (norm->parsed()) return cmd_norm(norm_spec, norm_family, norm_weak, norm_nf);
        if (deco->parsed()) return cmd_decompose(deco_spec, deco_nf);
        if (maxi->parsed())
            return cmd_maximal(maxi_spec, maxi_ef, maxi_cap, maxi_oracle, maxi_out);
        if (sweep->parsed()) return cmd_sweep(sweep_cfg, sweep_out);
        if (veri->parsed()) return cmd_verify(veri_suite, veri_seed);
        if (bench->parsed()) return cmd_bench(bench_sizes, bench_cap, bench_seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
