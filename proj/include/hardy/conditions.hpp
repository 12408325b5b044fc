#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hardy/common.hpp"
#include "hardy/profile.hpp"

namespace hardy {

// Two weights on the half-line (0,b) plus the Hardy-inequality exponents.
// `v` weighs the averaged side, `w` (positive) the gradient side. `anchor`
// centers the decade tables; 0 picks one automatically.
struct MuckenhouptInput {
    std::function<double(double)> v;
    std::function<double(double)> w;
    double b = kInf;
    double p = 2.0;
    double q = 2.0;
    double anchor = 0.0;
};

struct ConditionReport {
    double constant = 0.0;
    std::string regime; // "A1" | "A2" | "A3" | "SW1"
    double implied_inequality_constant = 0.0;
    bool finite = true;
    std::string note;
};

// Weighted-Hardy characteristic on (0,b). The regime is picked by (p,q):
//   0<q<1   : A1, double integral with exponent gamma = pq/(p-q)
//   1<=q<p  : A2, double integral with gamma
//   1<=p<=q : A3, sup_t (int_0^t v)^{1/q} (int_t^b w^{1-p'})^{1/p'}
// The implied inequality constant carries the regime prefactor.
ConditionReport muckenhoupt_constant(const MuckenhouptInput& in);

struct HardyCheck {
    double lhs = 0.0;
    double rhs = 0.0; // prefactor * A * (int f^p w)^{1/p}
    bool holds = false;
    bool lhs_finite = true;
    bool rhs_finite = true;
};

// Evaluates both sides of (int_0^b |int_s^b f|^q v ds)^{1/q} <= C (int f^p w)^{1/p}
// for one test function and the constant reported by muckenhoupt_constant.
HardyCheck muckenhoupt_verify(const MuckenhouptInput& in,
                              const std::function<double(double)>& f);

// Dyadic cube family: origin-centered cubes plus centers along one positive
// half-axis (radial weights lose nothing by symmetry), side lengths
// 2^-max_level .. 2^max_level.
struct CubeFamilySpec {
    double half_width = 8.0;
    int max_level = 6;
    int grid_points = 17;
};

// Fefferman-Phong style sup of |Q|^{1/alpha-1/s} (int_Q |g|^s dx)^{1/s} over
// the cube family. Cubes touching the origin are integrated by geometric
// corner refinement, which also detects non-locally-s-integrable weights.
ConditionReport sawyer_wheeden_sup(const RadialProfile& g, double s, int N, double p,
                                   double q, const CubeFamilySpec& window = {});

struct BesselPairReport {
    bool is_bessel_pair = false;
    std::vector<std::pair<double, double>> solution_samples; // (r, phi), smallest eps
    bool integral_1_infinite = false; // int_0^R r^{1-N}/g~ dr diverges
    bool integral_2_finite = true;    // int_0^R h~ r^{N-1} dr converges
    double failure_radius = kNaN;     // first zero of phi, when not positive
    std::string note;
};

// Positivity test for (B phi')' + H phi = 0 with B = r^{N-1} g~, H = r^{N-1} h~:
// integrates outward from r = eps with phi(eps)=1, phi'(eps)=0 and requires
// phi > 0 on (eps, R-eps) for every eps in eps_list (verdict stability).
BesselPairReport bessel_pair_check(const RadialProfile& g, const RadialProfile& h, double R,
                                   int N, std::vector<double> eps_list = {1e-3, 1e-4, 1e-5});

struct NecessaryReport {
    bool passes = false;
    double sup_value = 0.0;
};

// Necessary condition for radial nonincreasing weights on a ball B_R:
//   N > p : sup_t t^{1/alpha} g**(t) finite        (q in [p, p*], R <= inf)
//   N = p : sup_t t log(|Omega|/t)^{q/N'} g**(t)   (q > p, R < inf)
// The sup is scanned on (0, |Omega|(1-1e-6)).
NecessaryReport necessary_check_radial(const RadialProfile& g, int N, double p, double q,
                                       double R);

} // namespace hardy
