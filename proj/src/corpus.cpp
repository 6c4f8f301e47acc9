#include "herzslice/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace herzslice {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

std::vector<FunctionSpec> generate_corpus(const CorpusConfig& cfg) {
    require(cfg.size >= 1, "generate_corpus: size must be positive");
    require(cfg.margin >= 0, "generate_corpus: margin must be nonnegative");
    double rmax = cfg.grid.half_width() - cfg.margin;
    require(rmax >= 8 * cfg.grid.spacing,
            "generate_corpus: margin leaves too little room for supports");
    int dim = cfg.grid.dim;
    double root = std::sqrt(static_cast<double>(dim));

    std::vector<std::string> kinds;
    std::vector<double> weights;
    const std::map<std::string, double> defaults = {{"ball_indicator", 1.0},
                                                    {"gaussian", 1.0},
                                                    {"power_annulus", 1.0},
                                                    {"piecewise_random", 1.0}};
    const auto& mix = cfg.mix.empty() ? defaults : cfg.mix;
    double total_weight = 0;
    for (const auto& [name, w] : mix) {
        require(defaults.count(name) == 1, "generate_corpus: unknown kind " + name);
        require(w >= 0, "generate_corpus: negative weight");
        if (w > 0) {
            kinds.push_back(name);
            weights.push_back(w);
            total_weight += w;
        }
    }
    require(total_weight > 0, "generate_corpus: all weights are zero");

    std::vector<FunctionSpec> corpus;
    corpus.reserve(static_cast<std::size_t>(cfg.size));
    for (int index = 0; index < cfg.size; ++index) {
        std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
        FunctionSpec spec;
        int nterms = uniform_int(rng, 1, 3);
        for (int ti = 0; ti < nterms; ++ti) {
            double pick = uniform(rng, 0.0, total_weight);
            std::size_t ki = 0;
            for (; ki + 1 < kinds.size(); ++ki) {
                if (pick < weights[ki]) break;
                pick -= weights[ki];
            }
            const std::string& kind = kinds[ki];
            Term term;
            term.coef = (uniform(rng, 0, 1) < 0.5 ? -1.0 : 1.0) * uniform(rng, 0.2, 2.0);
            if (kind == "ball_indicator") {
                BallIndicator b;
                b.radius = uniform(rng, 3 * cfg.grid.spacing, std::min(1.5, rmax / 2));
                double cmax = (rmax - b.radius) / root;
                for (int d = 0; d < dim; ++d) b.center[d] = uniform(rng, -cmax, cmax);
                term.prim = b;
            } else if (kind == "gaussian") {
                Gaussian gsn;
                double w_hi = std::min(0.6, rmax / 8);
                gsn.width = uniform(rng, std::min(std::max(0.05, 2 * cfg.grid.spacing), w_hi),
                                    w_hi);
                double cmax = (rmax - 4 * gsn.width) / root;
                for (int d = 0; d < dim; ++d) gsn.center[d] = uniform(rng, -cmax, cmax);
                term.prim = gsn;
            } else if (kind == "power_annulus") {
                PowerAnnulus pa;
                pa.b = uniform(rng, std::min(0.5, 0.5 * rmax), rmax);
                if (uniform(rng, 0, 1) < 0.3) {
                    pa.a = 0.0;
                    pa.beta = uniform(rng, -dim + 0.25, 1.0);
                } else {
                    pa.a = uniform(rng, 0.1 * pa.b, 0.8 * pa.b);
                    pa.beta = uniform(rng, -1.5, 1.0);
                }
                term.prim = pa;
            } else {
                PiecewiseRandom pr;
                pr.seed = rng();
                pr.levels = uniform_int(rng, 3, 8);
                pr.support_radius = uniform(rng, std::min(1.0, 0.5 * rmax), rmax);
                term.prim = pr;
            }
            spec.terms.push_back(term);
        }
        corpus.push_back(std::move(spec));
    }
    return corpus;
}

}  // namespace herzslice
