#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace herzslice {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Wide accumulator for the big reductions (prefix sums, norm sums).  On
// x86-64 this is the 80-bit extended type, which keeps reassociation error
// well below the 1e-12 tolerances used throughout the tests.
using accum_t = long double;

inline bool is_inf(double x) { return std::isinf(x) && x > 0; }

inline double pow2(int k) { return std::ldexp(1.0, k); }

// Relative gap between two nonnegative quantities, safe at zero.
inline double rel_gap(double a, double b) {
    double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) / scale;
}

// a <= b up to a relative slack (both sides expected nonnegative).
inline bool leq_with_slack(double a, double b, double slack) {
    return a <= b + slack * std::max(std::fabs(b), 1.0e-300) + 1e-300;
}

inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace herzslice
