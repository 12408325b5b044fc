#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "hardy/common.hpp"

namespace hardy {

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 60;
};

// Adaptive Simpson on a finite interval. Integrand must be finite on (a,b);
// the endpoints themselves are never evaluated closer than ~1e-14*(b-a).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     QuadOptions opt = {});

// Improper integral of a locally integrable f over (lo, hi) with 0 <= lo and
// hi <= +inf. The interval is split into decades around a positive anchor and
// each decade is integrated adaptively in the log coordinate, so power and
// power-log endpoint behavior is resolved without wasted refinement. Beyond a
// fixed number of decades the remaining tail is extrapolated from the decade
// increments (geometric model when the ratios settle below 1, power-law model
// otherwise); increments that fail to decay mark that side as divergent.
//
// Cumulatives are the main interface: lower(t) = integral over (lo, t],
// upper(t) = integral over [t, hi). Both are exact table sums plus one partial
// decade, so repeated evaluation is cheap.
class DecadeIntegral {
public:
    DecadeIntegral(std::function<double(double)> f, double lo, double hi,
                   double anchor, QuadOptions opt = {});

    QuadResult lower(double t) const;
    QuadResult upper(double t) const;
    QuadResult total() const;
    QuadResult between(double x, double y) const; // lo <= x <= y <= hi, no tails

    bool lower_divergent() const;
    bool upper_divergent() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

struct SupOptions {
    int per_decade = 4096;
    std::size_t max_points = std::size_t{1} << 17;
    // Growth toward an open endpoint flags the sup as infinite; a closed
    // endpoint takes the boundary grid value as an honest finite sup.
    bool open_lo = true;
    bool open_hi = false;
    double growth_tol = 1e-8;
};

// Supremum of f over the log-spaced grid on [lo, hi] (0 < lo < hi < inf),
// refined by golden-section search around the grid argmax. If the argmax sits
// at an endpoint and f is still growing toward it, the sup is flagged
// infinite; pass a closed endpoint's exact value separately if it is attained.
SupResult grid_sup(const std::function<double(double)>& f, double lo, double hi,
                   SupOptions opt = {});

// Root of a sign-changing continuous f on [a,b] by bisection.
double bisect(const std::function<double(double)>& f, double a, double b,
              double tol = 1e-12);

} // namespace hardy
