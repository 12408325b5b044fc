#include "hardy/exponents.hpp"

#include <cmath>
#include <stdexcept>

namespace hardy {

double conjugate(double a) {
    if (std::isinf(a)) return 1.0;
    if (a < 1.0) throw std::invalid_argument("conjugate: exponent must be in [1,inf]");
    if (a == 1.0) return kInf;
    return a / (a - 1.0);
}

bool is_conjugate_triple(double a, double b, double c) {
    auto inv = [](double x) { return std::isinf(x) ? 0.0 : 1.0 / x; };
    return std::fabs(inv(a) + inv(b) + inv(c) - 1.0) <= 1e-12;
}

double alpha(int N, double p, double q) {
    const double den = N * (p - q) + q * p;
    if (den == 0.0) return kInf;
    return N * p / den;
}

bool alpha_admissible(int N, double p, double q) {
    return N * (p - q) + q * p >= 0.0;
}

double p_star(int N, double p) {
    if (N <= p) return kInf;
    return N * p / (N - p);
}

double p_star_s(int N, double p, double s) {
    if (N <= p) throw std::invalid_argument("p_star_s: requires N > p");
    return p * (N - s) / (N - p);
}

double beta(int N, double p, double q) {
    if (N <= p) throw std::invalid_argument("beta: requires N > p");
    const double Np = N / (N - 1.0);
    const double ps = p_star(N, p);
    const double den = ps - Np * q;
    if (den == 0.0) return kInf;
    return (ps - Np * p) / den;
}

void validate(const ExponentContext& ctx) {
    if (ctx.N < 1) throw std::invalid_argument("ExponentContext: N must be >= 1");
    if (ctx.k < 1 || ctx.k > ctx.N)
        throw std::invalid_argument("ExponentContext: k must satisfy 1 <= k <= N");
    if (!(ctx.p > 1.0)) throw std::invalid_argument("ExponentContext: p must be > 1");
    if (!(ctx.q > 0.0)) throw std::invalid_argument("ExponentContext: q must be > 0");
}

DerivedExponents derive(const ExponentContext& ctx) {
    validate(ctx);
    DerivedExponents d{};
    d.alpha = alpha(ctx.N, ctx.p, ctx.q);
    d.alpha_admissible = alpha_admissible(ctx.N, ctx.p, ctx.q);
    d.p_star = p_star(ctx.N, ctx.p);
    d.p_prime = conjugate(ctx.p);
    d.N_prime = ctx.N > 1 ? ctx.N / (ctx.N - 1.0) : kInf;
    d.beta = ctx.N > ctx.p ? beta(ctx.N, ctx.p, ctx.q) : kNaN;
    return d;
}

} // namespace hardy
