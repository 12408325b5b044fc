#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace hardy {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
inline constexpr double kE = 2.718281828459045235360287471352662498;

// Volume of the unit ball in R^N.
inline double unit_ball_volume(int N) {
    return std::pow(M_PI, 0.5 * N) / std::tgamma(0.5 * N + 1.0);
}

// Result of a numerical integration. `divergent` marks a genuinely infinite
// integral (value is +inf); `converged=false` without divergence means the
// requested tolerance was not certified and `error` is the honest estimate.
struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
    bool divergent = false;
};

struct SupResult {
    double value = 0.0;
    double arg = 0.0;
    bool finite = true;
};

inline bool nearly_equal(double a, double b, double rel, double abs = 0.0) {
    if (a == b) return true;
    const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) <= std::max(abs, rel * scale);
}

} // namespace hardy
