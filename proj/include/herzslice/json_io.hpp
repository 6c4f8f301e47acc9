#pragma once

#include <iosfwd>
#include <string>

#include "herzslice/grid.hpp"
#include "herzslice/maximal.hpp"

namespace herzslice {

// %.17g formatting used by every report so runs diff cleanly.
std::string fmt17(double x);

// Document layout: {"grid": {"n":1,"L":4.0,"h":0.25}, "terms":[{...}]}.
// Kinds and their fields:
//   power_annulus:    beta, a, b
//   ball_indicator:   center (array of n), radius
//   gaussian:         center, width
//   piecewise_random: seed, levels, support_radius
std::string to_json(const GridSpec& grid, const FunctionSpec& spec);
std::pair<GridSpec, FunctionSpec> spec_from_json(const std::string& text);
std::pair<GridSpec, FunctionSpec> load_spec_file(const std::string& path);

// "x,value" / "x,y,value" rows, one per cell.
void write_csv(std::ostream& os, const GridFunction& f);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace herzslice
