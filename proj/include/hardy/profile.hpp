#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hardy/common.hpp"

namespace hardy {

// Radial profile r -> g~(r) >= 0 on a support interval [a,b); evaluates to 0
// outside. Closed-form kinds carry enough structure for exact monotonicity
// checks and derivatives; everything else goes through `custom` or tables.
struct RadialProfile {
    enum class Kind { Zero, Const, Power, PowerLog, ShiftedPower, Tabulated, Custom };

    Kind kind = Kind::Zero;
    double scale = 1.0;
    double expo = 0.0;               // Power: scale * r^expo (signed exponent)
    double d = 0.0, kappa = 0.0, logR = 1.0; // PowerLog: scale * r^-d * log(e*logR/r)^-kappa
    double sd = 0.0, sc = 0.0;       // ShiftedPower: scale * (sc + r)^-sd
    std::vector<double> tab_r, tab_v; // Tabulated: tab_v[i] on [tab_r[i], tab_r[i+1}), 0 beyond
    std::function<double(double)> fn; // Custom
    double a = 0.0, b = kInf;        // support clip

    double operator()(double r) const;
    // log g~(r), -inf where the profile vanishes. Exact for closed-form kinds,
    // so products like g(r)^e * r^theta stay representable where the direct
    // evaluation would overflow or underflow.
    double log_value(double r) const;
    bool has_derivative() const;
    double deriv(double r) const;

    // True when the kind is analytically non-increasing on its support.
    bool nonincreasing_hint() const;
    // Sampled strict-decrease check on a 1000-point log grid over the support.
    bool strictly_decreasing_grid(int n = 1000, double tol = 1e-14) const;

    RadialProfile clipped(double lo, double hi) const;
    RadialProfile scaled(double c) const;
    std::string describe() const;

    static RadialProfile zero();
    static RadialProfile constant(double c);
    static RadialProfile power(double e);
    static RadialProfile power_log(double d, double kappa, double R);
    static RadialProfile shifted_power(double d, double c);
    static RadialProfile tabulated(std::vector<double> r, std::vector<double> v);
    static RadialProfile custom(std::function<double(double)> f);
    static RadialProfile from_csv(const std::string& path);

    // Descriptor grammar: const:c | power:d | power_log:d,kappa,R |
    // shifted_power:d,c | csv:path. Throws std::invalid_argument on bad input.
    static RadialProfile parse(const std::string& desc);
};

struct Domain {
    enum class Kind { Full, Ball, Annulus, Exterior, Sector };
    Kind kind = Kind::Full;
    double a = 0.0, b = kInf; // radial extent
    double sigma = 1.0;       // |S| / |S^(k-1)| for sectorial sets

    bool bounded() const { return std::isfinite(b); }
    bool contains_origin() const { return a == 0.0; }
    // Lebesgue measure of the sectorial set in R^dim (inf when unbounded).
    double measure(int dim) const;

    std::string describe() const;
    static Domain full();
    static Domain ball(double R);
    static Domain annulus(double a, double b);
    static Domain exterior(double a);
    static Domain sector(double a, double b, double sigma);
    // full | ball:R | annulus:a,b | exterior:a | sector:a,b,sigma
    static Domain parse(const std::string& desc);
};

// Weight on Omega_1 x R^(N-k): g(x) = g1(|y|) * g2(|z|). Plain radial weights
// (k = N) use g2 == 1.
struct Weight {
    RadialProfile g1 = RadialProfile::constant(1.0);
    RadialProfile g2 = RadialProfile::constant(1.0);
    bool is_product = false;

    std::string describe() const;
    // Single profile descriptor, or product:<desc>|<desc>.
    static Weight parse(const std::string& desc);
};

} // namespace hardy
