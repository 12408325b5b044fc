#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hardy/admit.hpp"
#include "hardy/common.hpp"
#include "hardy/exponents.hpp"
#include "hardy/rearrange.hpp"

namespace hardy {

// Compactly supported radial test profile u~(r) with a piecewise derivative.
// Cylindrical test functions are products u_1(|y|) u_2(|z|).
class TestFunction {
public:
    double value(double r) const { return val_(r); }
    double deriv(double r) const { return der_(r); }
    double support_radius() const { return support_; }
    bool cylindrical() const { return static_cast<bool>(uy_); }
    const TestFunction& part_y() const { return *uy_; }
    const TestFunction& part_z() const { return *uz_; }
    const std::string& describe() const { return desc_; }
    bool nonincreasing_grid(int n = 2000) const;
    TestFunction dilated(double lambda) const; // x -> u(lambda x)

    // (r0 - r)_+
    static TestFunction cone(double r0);
    // log(R/r) clamped at log(R/r0) inside r0, zero outside R
    static TestFunction log_cutoff(double r0, double R);
    // r^{-(N-p)/p + eps} with C^1 ramps on [r1/2, r1] and [r2, 2 r2]
    static TestFunction power_cutoff(double N, double p, double eps,
                                     double r1 = 1e-4, double r2 = 1.0);
    // sin(pi r/a)/(pi r/a) on (0, a)
    static TestFunction sin_dilate(double a);
    // log(e/r)^kappa - 1 on (0, 1)
    static TestFunction log_power(double kappa);
    // piecewise-linear through (r_i, v_i); v must end at 0
    static TestFunction tabulated(std::vector<double> r, std::vector<double> v);
    static TestFunction custom(std::function<double(double)> value,
                               std::function<double(double)> deriv, double support,
                               std::string desc = "custom");
    static TestFunction product(TestFunction uy, TestFunction uz);

private:
    std::function<double(double)> val_, der_;
    double support_ = 1.0;
    std::shared_ptr<TestFunction> uy_, uz_;
    std::string desc_;
};

struct RatioReport {
    double lhs = 0.0;  // integral of |g| |u|^q
    double rhs = 0.0;  // (integral of |grad u|^p)^{q/p}
    double ratio = 0.0;
    double quadrature_error = 0.0; // relative estimate on the ratio
    bool lhs_finite = true;
};

// Both sides of the weighted inequality on one test function, reduced to
// radial (or doubly radial) quadrature.
RatioReport hardy_ratio(const ExponentContext& ctx, const DomainSpec& dom,
                        const WeightSpec& w, const TestFunction& u);

struct FamilySweep {
    std::function<TestFunction(double)> make;
    double lo = 0.0;
    double hi = 1.0;
    bool log_scale = false;
    int grid = 24; // at least 20
    std::string param_name = "param";
};

struct SweepPoint {
    double param, lhs, rhs, ratio, err;
};

struct SweepResult {
    double sup_ratio = 0.0;   // certified lower bound on the best constant
    double argmax_param = 0.0;
    std::vector<SweepPoint> points;
};

// Grid sweep of hardy_ratio over the family plus golden-section refinement
// around the grid argmax.
SweepResult empirical_best_constant(const ExponentContext& ctx, const DomainSpec& dom,
                                    const WeightSpec& w, const FamilySweep& fam);

struct ScalingReport {
    double base_ratio = 0.0;
    std::vector<std::pair<double, double>> ratios; // (lambda, ratio)
    double max_deviation = 0.0; // max |ratio(lambda)/ratio(1) - 1|
};

// Ratio drift under u -> u(lambda .). Exactly zero (up to quadrature) when
// the weight is the scale-critical power |y|^{-N/alpha}.
ScalingReport scaling_invariance_check(const ExponentContext& ctx, const DomainSpec& dom,
                                       const WeightSpec& w, const TestFunction& u,
                                       const std::vector<double>& lambdas);

struct OneDimReport {
    double lhs = 0.0;
    double norm_g = 0.0;
    double constant = 0.0; // explicit prefactor chain
    double rhs_with_norm = 0.0;
    bool rhs_finite = true;
    bool holds = false;
};

// Reduced one-dimensional inequality between rearrangements:
//   int g*(t) u*(t)^q dt <= C ||g||_X (int t^{p-p/N} |u*'(t)|^p dt)^{q/p}
// with the explicit constant from the weighted-Hardy prefactors. u_star is a
// decreasing profile in the measure variable t.
OneDimReport check_one_dim_hardy(const ExponentContext& ctx, const Rearrangement& g,
                                 const TestFunction& u_star);

struct EmbeddingReport {
    std::vector<double> ratios;
    double max_ratio = 0.0;
};

// Gradient-to-Lorentz norm ratios over a family: ||u||_{p*,p}/||grad u||_p for
// N > p, or the log-corrected ||u||_{inf,p;-1}/||grad u||_p for N = p on a
// bounded domain.
EmbeddingReport check_embedding(const ExponentContext& ctx, const DomainSpec& dom,
                                const std::vector<TestFunction>& family);

struct PolyaSzegoReport {
    double lhs_1d = 0.0; // N^p omega_N^{p/N} int s^{p-p/N} |u*'(s)|^p ds
    double rhs_Nd = 0.0; // int |grad u|^p
    bool holds = false;
};

// Dirichlet integral does not increase under rearrangement; equality for
// radial decreasing u (checked through two independent quadratures).
PolyaSzegoReport polya_szego_check(const TestFunction& u, int N, double p);

} // namespace hardy
