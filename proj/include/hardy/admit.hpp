#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hardy/exponents.hpp"
#include "hardy/profile.hpp"

namespace hardy {

// Domain of the inequality. `base` lives in R^k when `product` is set (the
// full domain is then base x R^(N-k)); otherwise base is the whole domain in
// R^N. Geometry predicates take the relevant dimension explicitly.
struct DomainSpec {
    Domain base;
    bool product = false;

    bool contains_origin() const;
    bool bounded() const;
    bool bounded_one_direction() const;
};

// Weight of the inequality. Radial means g(x) = g1(|x|) in all N variables.
// Cylindrical means g(y,z) = g1(|y|) g2(|z|) on a product domain. Abstract
// supplies a precomputed norm value for the rearrangement-based criterion
// instead of a profile.
struct WeightSpec {
    enum class Form { Radial, Cylindrical, Abstract };
    Form form = Form::Radial;
    RadialProfile g1;
    RadialProfile g2;
    double abstract_norm = kNaN;
    std::string abstract_space;
};

enum class Admissibility { Admissible, Unknown, StructurallyExcluded };

// One sufficient criterion that accepted the weight: the function space it
// checked, the finite norm value(s), and the structural form of the constant.
// Norm conventions: maximal-function (f**) norms for Lorentz spaces with
// first index > 1; rearrangement (f*) quasinorms for first index 1 and for
// weak (second index infinity) spaces.
struct BranchRecord {
    std::string rule;
    std::string space;
    std::vector<double> norms;
    std::string constant_form;
    std::string params;
};

struct AdmissibilityVerdict {
    Admissibility admissible = Admissibility::Unknown;
    std::vector<BranchRecord> branches;
    std::vector<std::string> failure_reasons;
};

// Evaluates every sufficient criterion that fits (N,k,p,q), the domain shape,
// and the weight form; admissible when at least one accepts. "Unknown" when
// none applies (the criteria are sufficient, not exhaustive);
// "StructurallyExcluded" only for documented obstructions: q > p* on the
// whole space (scaling) and weights that are not locally integrable.
AdmissibilityVerdict classify(const ExponentContext& ctx, const DomainSpec& dom,
                              const WeightSpec& w);

// A recorded membership g in H_{p,q} with its inequality constant. `l1_only`
// marks a plain L^1 bound instead (usable as the second factor in the
// interpolation with q = t*p).
struct Certificate {
    double p = 2.0;
    double q = 2.0;
    double constant = kNaN;
    std::string weight_desc;
    std::string derivation;
    bool l1_only = false;
};

// Geometric interpolation |g1|^t |g2|^(1-t): q = t q1 + (1-t) q2 and constant
// C1^t C2^(1-t). When `b` is an L^1 certificate, requires a.q == a.p and
// yields q = t p with constant C1^t ||g2||_1^(1-t).
Certificate interpolate_potentials(const Certificate& a, const Certificate& b, double t);

// Lift g1 in H_{p,q}(Omega_1), q <= p, to g1 g2 on Omega_1 x Omega_2 given a
// finite L^{p/(p-q)}(Omega_2) norm of g2; constants multiply.
Certificate product_lift(const Certificate& c1, double g2_norm);

// Slice-wise lift on a sectorial product: g1 weighted by r^{k-1} h against a
// named pointwise slice inequality with exponents (gamma, delta),
// q = delta p + gamma p*. `role_swap` exchanges the factor taking the L^1(h)
// role with the one taking the conjugate-Lebesgue role.
struct SectorialLiftInput {
    ExponentContext ctx;
    DomainSpec domain; // product sectorial, base.a > 0
    RadialProfile g1;
    RadialProfile g2;
    std::function<double(double)> h;
    double gamma = 0.0;
    double delta = 0.0;
    bool role_swap = false;
    std::string hypothesis; // tag of the assumed slice inequality
};

Certificate sectorial_lift(const SectorialLiftInput& in);

} // namespace hardy
