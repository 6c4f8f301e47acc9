#include "herzslice/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace herzslice {

using nlohmann::ordered_json;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

ordered_json grid_to_json(const GridSpec& g) {
    return ordered_json{{"n", g.dim}, {"L", g.half_width()}, {"h", g.spacing}};
}

ordered_json center_to_json(const std::array<double, 2>& c, int dim) {
    ordered_json a = ordered_json::array();
    for (int d = 0; d < dim; ++d) a.push_back(c[d]);
    return a;
}

std::array<double, 2> center_from_json(const ordered_json& j) {
    std::array<double, 2> c{0.0, 0.0};
    require(j.is_array() && j.size() >= 1 && j.size() <= 2, "spec json: bad center");
    for (std::size_t d = 0; d < j.size(); ++d) c[d] = j[d].get<double>();
    return c;
}

}  // namespace

std::string to_json(const GridSpec& grid, const FunctionSpec& spec) {
    ordered_json doc;
    doc["grid"] = grid_to_json(grid);
    doc["terms"] = ordered_json::array();
    for (const auto& term : spec.terms) {
        ordered_json t;
        t["coef"] = term.coef;
        if (auto* p = std::get_if<PowerAnnulus>(&term.prim)) {
            t["kind"] = "power_annulus";
            t["beta"] = p->beta;
            t["a"] = p->a;
            t["b"] = p->b;
        } else if (auto* b = std::get_if<BallIndicator>(&term.prim)) {
            t["kind"] = "ball_indicator";
            t["center"] = center_to_json(b->center, grid.dim);
            t["radius"] = b->radius;
        } else if (auto* g = std::get_if<Gaussian>(&term.prim)) {
            t["kind"] = "gaussian";
            t["center"] = center_to_json(g->center, grid.dim);
            t["width"] = g->width;
        } else {
            auto& r = std::get<PiecewiseRandom>(term.prim);
            t["kind"] = "piecewise_random";
            t["seed"] = r.seed;
            t["levels"] = r.levels;
            t["support_radius"] = r.support_radius;
        }
        doc["terms"].push_back(std::move(t));
    }
    return doc.dump(2) + "\n";
}

std::pair<GridSpec, FunctionSpec> spec_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("spec json: parse error: ") + e.what());
    }
    require(doc.contains("grid") && doc.contains("terms"), "spec json: need grid and terms");
    const auto& gj = doc["grid"];
    GridSpec grid = GridSpec::make(gj.at("n").get<int>(), gj.at("L").get<double>(),
                                   gj.at("h").get<double>());
    FunctionSpec spec;
    for (const auto& t : doc["terms"]) {
        Term term;
        term.coef = t.at("coef").get<double>();
        std::string kind = t.at("kind").get<std::string>();
        if (kind == "power_annulus") {
            PowerAnnulus p;
            p.beta = t.at("beta").get<double>();
            p.a = t.at("a").get<double>();
            p.b = t.at("b").get<double>();
            term.prim = p;
        } else if (kind == "ball_indicator") {
            BallIndicator b;
            b.center = center_from_json(t.at("center"));
            b.radius = t.at("radius").get<double>();
            term.prim = b;
        } else if (kind == "gaussian") {
            Gaussian g;
            g.center = center_from_json(t.at("center"));
            g.width = t.at("width").get<double>();
            term.prim = g;
        } else if (kind == "piecewise_random") {
            PiecewiseRandom r;
            r.seed = t.at("seed").get<std::uint64_t>();
            r.levels = t.at("levels").get<int>();
            r.support_radius = t.at("support_radius").get<double>();
            term.prim = r;
        } else {
            throw std::invalid_argument("spec json: unknown kind " + kind);
        }
        spec.terms.push_back(std::move(term));
    }
    return {grid, spec};
}

std::pair<GridSpec, FunctionSpec> load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return spec_from_json(ss.str());
}

void write_csv(std::ostream& os, const GridFunction& f) {
    const GridSpec& g = f.grid;
    if (g.dim == 1) {
        os << "x,value\n";
        for (int i = 0; i < g.cells_per_axis; ++i)
            os << fmt17(g.coord(i)) << ',' << fmt17(f.at(i)) << '\n';
        return;
    }
    os << "x,y,value\n";
    for (int iy = 0; iy < g.cells_per_axis; ++iy)
        for (int ix = 0; ix < g.cells_per_axis; ++ix)
            os << fmt17(g.coord(ix)) << ',' << fmt17(g.coord(iy)) << ','
               << fmt17(f.at(g.index(ix, iy))) << '\n';
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "alpha,p,q,r,t,L,h,constant,corpus,seed\n";
    for (const auto& row : rows) {
        os << fmt17(row.alpha) << ',' << fmt17(row.p) << ',' << fmt17(row.q) << ','
           << fmt17(row.r) << ',' << fmt17(row.t) << ',' << fmt17(row.L) << ','
           << fmt17(row.h) << ',' << fmt17(row.constant) << ',' << row.corpus << ','
           << row.seed << '\n';
    }
}

}  // namespace herzslice
