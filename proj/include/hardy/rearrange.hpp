#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "hardy/common.hpp"
#include "hardy/profile.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

// Exact rearrangement of a simple (finitely-valued) function: value val[i] on
// the measure slab [cum[i-1], cum[i]). Running integrals and power moments are
// closed-form sums, which keeps the randomized property batches cheap.
struct StepRearrangement {
    std::vector<double> val; // strictly decreasing, positive
    std::vector<double> cum; // strictly increasing slab right-edges
    std::vector<double> Fcum; // Fcum[i] = integral of f* over (0, cum[i])
    double ambient = kInf;

    double support() const { return cum.empty() ? 0.0 : cum.back(); }
    double f_star(double t) const;
    double F(double t) const;
    double f_star_star(double t) const { return t > 0.0 ? F(t) / t : kInf; }
    // Exact integral of t^c * f*(t)^e over (0, min(T, support)).
    double power_moment(double c, double e, double T) const;

    static StepRearrangement from_cells(std::vector<double> values,
                                        std::vector<double> measures,
                                        double ambient);
};

struct MeasureResult {
    double value = 0.0;
    bool finite = true;
};

// Measure of the super-level set {x in sectorial set : g~(|x|) > s} in R^dim.
MeasureResult distribution(const RadialProfile& g, int dim, const Domain& dom, double s);

// Piecewise-constant shell sampling of a radial profile: values at geometric
// shell midpoints with exact shell volumes, on a log grid over (lo, hi)
// clipped to the domain. Feeds the set-family norms and sampling fallbacks.
struct CellData {
    std::vector<double> value;
    std::vector<double> measure;
};
CellData shell_cells(const RadialProfile& g, int dim, const Domain& dom,
                     int per_decade, double lo, double hi);

// Decreasing rearrangement f* with its maximal average f**. The ambient
// measure |Omega| bounds the integration range of norms; f* vanishes beyond
// the support measure. f** is computed from a cached cumulative of f* and
// reports divergence when f* is not integrable at 0.
class Rearrangement {
public:
    double f_star(double t) const;
    QuadResult F(double t) const; // integral of f* over (0,t)
    double f_star_star(double t) const;
    bool maximal_divergent() const;

    double total_measure() const { return ambient_; }
    double support_t() const { return support_; }
    double anchor() const { return anchor_; }
    const StepRearrangement* step() const { return step_.get(); }
    bool has_deriv() const { return static_cast<bool>(deriv_); }
    double f_star_deriv(double t) const { return deriv_(t); }

    // Closed form f*(t) = g~((a^dim + t/(sigma omega_dim))^(1/dim)) for a
    // strictly decreasing profile on the domain. Throws on non-monotone input.
    static Rearrangement radial_shortcut(const RadialProfile& g, int dim, const Domain& dom);

    // Generic inversion of the distribution function (bisection in log level);
    // handles non-monotone profiles. Exact for tabulated profiles.
    static Rearrangement generic(const RadialProfile& g, int dim, const Domain& dom);

    static Rearrangement steps(StepRearrangement s);
    static Rearrangement custom(std::function<double(double)> f_star, double ambient,
                                double support_scale,
                                std::function<double(double)> deriv = {});

private:
    std::function<double(double)> fstar_;
    std::function<double(double)> deriv_;
    std::shared_ptr<const StepRearrangement> step_;
    double ambient_ = kInf;
    double support_ = 1.0;
    double anchor_ = 1.0;
    mutable std::shared_ptr<DecadeIntegral> cumulative_;

    const DecadeIntegral& cumulative() const;
};

} // namespace hardy
