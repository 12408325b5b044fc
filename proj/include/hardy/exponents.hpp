#pragma once

#include "hardy/common.hpp"

namespace hardy {

// Parameter bundle for the inequality  int g |u|^q <= C (int |grad u|^p)^(q/p)
// on a domain in R^N split as R^k x R^(N-k).
struct ExponentContext {
    int N = 3;
    int k = 3;
    double p = 2.0;
    double q = 2.0;
};

struct DerivedExponents {
    double alpha;     // Np/(N(p-q)+qp); +inf at the q=p* pole, negative past it
    bool alpha_admissible; // denominator >= 0, i.e. q <= p* (N>p)
    double p_star;    // Np/(N-p) for N>p, +inf otherwise
    double p_prime;
    double N_prime;
    double beta;      // (p*-N'p)/(p*-N'q); only meaningful for N>p
};

// a/(a-1) on [1,inf] with 1 <-> inf. Throws std::invalid_argument for a < 1.
double conjugate(double a);

// 1/a + 1/b + 1/c == 1 within 1e-12 (1/inf = 0).
bool is_conjugate_triple(double a, double b, double c);

double alpha(int N, double p, double q);
bool alpha_admissible(int N, double p, double q);

double p_star(int N, double p); // +inf for N <= p

// P*(s) = p(N-s)/(N-p). Throws for N <= p.
double p_star_s(int N, double p, double s);

// beta(p,q) = (p*-N'p)/(p*-N'q); +inf at the pole q = P*(1). Throws for N <= p.
double beta(int N, double p, double q);

DerivedExponents derive(const ExponentContext& ctx);

// Throws std::invalid_argument unless 1 <= k <= N, p > 1, q > 0.
void validate(const ExponentContext& ctx);

} // namespace hardy
