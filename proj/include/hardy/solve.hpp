#pragma once

#include <string>
#include <vector>

#include "hardy/common.hpp"
#include "hardy/exponents.hpp"
#include "hardy/profile.hpp"

namespace hardy {

// 1-D radial mesh. Dirichlet ends pin the solution to zero; a free end is a
// natural (no-flux) boundary, used at the origin and at inner truncations of
// domains that reach r = 0.
struct RadialMesh {
    std::vector<double> r;
    bool dirichlet_left = false;
    bool dirichlet_right = true;

    int cells() const { return int(r.size()) - 1; }
    void validate() const; // M >= 100, increasing, adjacent width ratio <= 1.1

    static RadialMesh uniform(double a, double b, int M);
    // cells shrink geometrically toward both ends (factor `grading`)
    static RadialMesh graded(double a, double b, int M, double grading = 1.05);
    static RadialMesh logarithmic(double rmin, double b, int M);
};

struct SolveOptions {
    int max_iters = 50000;
    double tol = 1e-11;         // stationarity target for the projected gradient
    double armijo_slope = 1e-4;
    double shrink = 0.5;
    double step_init = 1.0;
    int trajectory_stride = 100;
};

struct MinimizerResult {
    double lambda = kInf;
    std::vector<double> r;
    std::vector<double> u;      // nonnegative, int g|u|^q = 1
    double residual = 0.0;
    bool attained = true;
    bool converged = false;
    int iterations = 0;
    double constraint = 0.0;    // final int g|u|^q
    double outer_decade_mass = 0.0; // constraint-mass fraction in (r_M/10, r_M)
    double half_mass_radius = 0.0;
    std::vector<double> trajectory; // lambda sampled along the descent
    std::string diagnostics;
};

// Minimize int |grad u|^p over { int g|u|^q = 1 } on the radial mesh:
// projected (nonnegative) preconditioned gradient descent with Armijo
// backtracking, from cone / Gaussian / first-mode starts. lambda is the
// discrete 1/B_q(g).
MinimizerResult minimize_rayleigh(const ExponentContext& ctx, const Domain& dom,
                                  const RadialProfile& g, const RadialMesh& mesh,
                                  const SolveOptions& opts = {});

// Defect of the discrete Euler-Lagrange equation: max over the nodal hat
// basis of |a(u,v) - lambda b(u,v)| / ||v||, combined with the strong-form
// divergence check at interior nodes.
double weak_residual(const MinimizerResult& res, const ExponentContext& ctx,
                     const RadialProfile& g, const RadialMesh& mesh);

// v = (lambda_target / lambda)^{1/(p-q)} u solves the equation with
// lambda_target in place of lambda. Rejected for q = p.
MinimizerResult homogeneity_rescale(const MinimizerResult& res,
                                    const ExponentContext& ctx, double lambda_target);

struct ContinuationResult {
    std::vector<double> R_values;
    std::vector<MinimizerResult> stages;
    bool attained = true;
    double lambda = kInf; // final-stage value
    std::string diagnostics;
};

// Truncate an unbounded domain at growing radii and track the minimizer.
// Non-attainment is diagnosed when constraint mass persistently sits in the
// outer decade, or when lambda keeps dropping while the half-mass radius
// drifts like a power of the truncation ratio.
ContinuationResult continuation_solve(const ExponentContext& ctx, const Domain& dom,
                                      const RadialProfile& g,
                                      const std::vector<double>& R_list, int M,
                                      const SolveOptions& opts = {});

} // namespace hardy
