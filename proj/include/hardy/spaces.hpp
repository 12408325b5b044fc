#pragma once

#include <cstdint>

#include "hardy/rearrange.hpp"

namespace hardy {

// Outcome of a norm evaluation. `finite == false` means the defining
// integral/sup diverges; `value` is then +inf. `error` is the quadrature
// error estimate (0 for exact step-function arithmetic).
struct NormResult {
    double value = 0.0;
    bool finite = true;
    double error = 0.0;
};

// Lorentz quasinorm |f|_{P,Q} built from the decreasing rearrangement f*:
//   Q < inf : ( int_0^inf (t^{1/P} f*(t))^Q dt/t )^{1/Q}
//   Q = inf : sup_t t^{1/P} f*(t)
// Requires P, Q > 0.
NormResult lorentz_quasinorm(const Rearrangement& f, double P, double Q);

// Lorentz norm ||f||_{P,Q}: same expression with the maximal function f**
// in place of f*. Requires P > 1 (the averaged integrand decays too slowly
// at infinity otherwise); the integral runs over (0, ambient measure).
NormResult lorentz_norm(const Rearrangement& f, double P, double Q);

// Lorentz-Zygmund quasinorm |f|_{P,Q;A} over a finite-measure base set:
//   ( int_0^omega (t^{1/P} log(e*omega/t)^A f*(t))^Q dt/t )^{1/Q},
// sup form for Q = inf. `omega` is the measure of the base set.
NormResult lorentz_zygmund_quasinorm(const Rearrangement& f, double P, double Q, double A,
                                     double omega);

// Same with f** in place of f*. Requires P >= 1.
NormResult lorentz_zygmund_norm(const Rearrangement& f, double P, double Q, double A,
                                double omega);

// Plain Lebesgue norm ||f||_e = |f|_{e,e}.
NormResult lebesgue_norm(const Rearrangement& f, double e);

// One-dimensional weighted Lebesgue norm of a radial profile:
//   ( int_a^b g~(r)^e r^theta log(r/a)^kappa dr )^{1/e}.
// kappa != 0 requires a > 0 (the log factor has no meaning at a = 0).
NormResult weighted_lebesgue_norm(const RadialProfile& g, double e, double a, double b,
                                  double theta, double kappa);

// Set-family weak norm: sup over a family of finite-measure sets E of
//   |E|^{1/P - 1/s} ( int_E |f|^s )^{1/s},
// where f is a sampled (piecewise-constant) function given by cell values
// and cell measures. The family is every "top slice" by value (including
// partial cells) plus `n_random` seeded random cell unions.
// Requires 0 < s < P.
NormResult weak_triple_norm(const std::vector<double>& values,
                            const std::vector<double>& measures, double P, double s,
                            std::uint64_t seed = 42, int n_random = 200);

} // namespace hardy
