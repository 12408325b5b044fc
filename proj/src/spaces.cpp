#include "hardy/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hardy/quadrature.hpp"

namespace hardy {

namespace {

NormResult infinite_norm() { return {kInf, false, 0.0}; }

// Raise an integral result to 1/Q with first-order error propagation.
NormResult finish_power(const QuadResult& I, double Q) {
    if (I.divergent || !std::isfinite(I.value)) return infinite_norm();
    if (I.value <= 0.0) return {0.0, true, 0.0};
    const double v = std::pow(I.value, 1.0 / Q);
    return {v, true, I.error / (Q * I.value) * v};
}

// Sup of t^(1/P) * extra(t) * f(t) over (0, hi); hi_open marks an infinite
// right end. Growth toward an open end means the sup diverges.
NormResult sup_norm(const std::function<double(double)>& integrand, double anchor, double hi,
                    bool hi_open) {
    const double lo = std::min(anchor, hi) * 1e-40;
    SupOptions opt;
    opt.open_hi = hi_open;
    SupResult s = grid_sup(integrand, lo, hi, opt);
    if (!s.finite) return infinite_norm();
    return {s.value, true, 0.0};
}

double effective_hi(const Rearrangement& f) {
    return std::min(f.support_t(), f.total_measure());
}

} // namespace

NormResult lorentz_quasinorm(const Rearrangement& f, double P, double Q) {
    if (!(P > 0.0) || !(Q > 0.0)) throw std::invalid_argument("lorentz_quasinorm: P,Q > 0");
    const double hi = effective_hi(f);
    if (std::isinf(Q)) {
        if (const StepRearrangement* s = f.step()) {
            double best = 0.0;
            for (std::size_t i = 0; i < s->val.size(); ++i)
                best = std::max(best, std::pow(s->cum[i], 1.0 / P) * s->val[i]);
            return {best, true, 0.0};
        }
        auto g = [&](double t) { return std::pow(t, 1.0 / P) * f.f_star(t); };
        if (std::isinf(hi))
            return sup_norm(g, f.anchor(), f.anchor() * 1e40, true);
        return sup_norm(g, f.anchor(), hi, false);
    }
    const double c = Q / P - 1.0;
    if (const StepRearrangement* s = f.step()) {
        const double I = s->power_moment(c, Q, hi);
        if (!std::isfinite(I)) return infinite_norm();
        return {std::pow(I, 1.0 / Q), true, 0.0};
    }
    auto g = [&](double t) { return std::pow(t, c) * std::pow(f.f_star(t), Q); };
    DecadeIntegral I(g, 0.0, hi, f.anchor());
    if (I.lower_divergent() || I.upper_divergent()) return infinite_norm();
    return finish_power(I.total(), Q);
}

NormResult lorentz_norm(const Rearrangement& f, double P, double Q) {
    if (!(P > 1.0)) throw std::invalid_argument("lorentz_norm: requires P > 1");
    if (!(Q > 0.0)) throw std::invalid_argument("lorentz_norm: Q > 0");
    if (f.maximal_divergent()) return infinite_norm();
    const double S = effective_hi(f);
    const double amb = f.total_measure();

    if (std::isinf(Q)) {
        auto g = [&](double t) { return std::pow(t, 1.0 / P) * f.f_star_star(t); };
        NormResult head = sup_norm(g, f.anchor(), std::isinf(S) ? f.anchor() * 1e40 : S,
                                   std::isinf(S));
        if (!head.finite) return head;
        // Beyond the support f** = F_tot/t, so t^{1/P} f** decreases; its sup
        // on (S, ambient) is the value at S.
        if (std::isfinite(S) && amb > S) {
            const double Ftot = f.F(S).value;
            head.value = std::max(head.value, std::pow(S, 1.0 / P - 1.0) * Ftot);
        }
        return head;
    }

    const double c = Q / P - 1.0;
    auto g = [&](double t) { return std::pow(t, c) * std::pow(f.f_star_star(t), Q); };
    const double hi_num = std::min(S, amb);
    DecadeIntegral I(g, 0.0, hi_num, f.anchor());
    if (I.lower_divergent() || I.upper_divergent()) return infinite_norm();
    QuadResult total = I.total();
    if (std::isfinite(S) && amb > S) {
        // Exact tail: integrand = F_tot^Q * t^(Q/P - Q - 1) past the support.
        const double Ftot = f.F(S).value;
        const double e = Q / P - Q; // < 0 since P > 1
        const double upperv = std::isinf(amb) ? 0.0 : std::pow(amb, e);
        total.value += std::pow(Ftot, Q) * (std::pow(S, e) - upperv) / (-e);
    }
    return finish_power(total, Q);
}

namespace {

NormResult lorentz_zygmund_impl(const Rearrangement& f, double P, double Q, double A,
                                double omega, bool maximal) {
    if (!(P > 0.0) || !(Q > 0.0)) throw std::invalid_argument("lorentz_zygmund: P,Q > 0");
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("lorentz_zygmund: finite base measure required");
    if (maximal && !(P >= 1.0))
        throw std::invalid_argument("lorentz_zygmund_norm: requires P >= 1");
    if (maximal && f.maximal_divergent()) return infinite_norm();
    auto l1 = [omega](double t) { return std::log(kE * omega / t); };
    auto fs = [&](double t) { return maximal ? f.f_star_star(t) : f.f_star(t); };
    // f* vanishes past the support measure; f** does not.
    const double hi = maximal ? omega : std::min(effective_hi(f), omega);
    if (!(hi > 0.0)) return {0.0, true, 0.0};
    if (std::isinf(Q)) {
        auto g = [&](double t) { return std::pow(t, 1.0 / P) * std::pow(l1(t), A) * fs(t); };
        return sup_norm(g, std::min(f.anchor(), 0.5 * hi), hi, false);
    }
    const double c = Q / P - 1.0;
    auto g = [&](double t) {
        return std::pow(t, c) * std::pow(l1(t), A * Q) * std::pow(fs(t), Q);
    };
    DecadeIntegral I(g, 0.0, hi, std::min(f.anchor(), 0.5 * hi));
    if (I.lower_divergent() || I.upper_divergent()) return infinite_norm();
    return finish_power(I.total(), Q);
}

} // namespace

NormResult lorentz_zygmund_quasinorm(const Rearrangement& f, double P, double Q, double A,
                                     double omega) {
    return lorentz_zygmund_impl(f, P, Q, A, omega, false);
}

NormResult lorentz_zygmund_norm(const Rearrangement& f, double P, double Q, double A,
                                double omega) {
    return lorentz_zygmund_impl(f, P, Q, A, omega, true);
}

NormResult lebesgue_norm(const Rearrangement& f, double e) {
    return lorentz_quasinorm(f, e, e);
}

NormResult weighted_lebesgue_norm(const RadialProfile& g, double e, double a, double b,
                                  double theta, double kappa) {
    if (!(e > 0.0)) throw std::invalid_argument("weighted_lebesgue_norm: e > 0");
    if (!(b > a) || a < 0.0) throw std::invalid_argument("weighted_lebesgue_norm: bad interval");
    if (kappa != 0.0 && !(a > 0.0))
        throw std::invalid_argument("weighted_lebesgue_norm: log factor needs a > 0");
    // log-space product: g^e and r^theta can over/underflow individually at
    // depths where the integrand is still perfectly representable
    auto h = [&](double r) {
        const double lg = g.log_value(r);
        if (lg == -kInf) return 0.0;
        double lw = e * lg + theta * std::log(r);
        if (kappa != 0.0) {
            const double L = std::log(r / a);
            if (L <= 0.0) return 0.0;
            lw += kappa * std::log(L);
        }
        return std::isfinite(lw) ? std::exp(lw) : (lw > 0.0 ? kInf : 0.0);
    };
    double anchor;
    if (a > 0.0 && std::isfinite(b))
        anchor = std::sqrt(a * b) * (kappa != 0.0 ? kE : 1.0);
    else if (a > 0.0)
        anchor = std::max(1.0, 2.0 * a) * (kappa != 0.0 ? kE : 1.0);
    else if (std::isfinite(b))
        anchor = 0.5 * b;
    else
        anchor = 1.0;
    anchor = std::min(std::max(anchor, a * (1.0 + 1e-12)), std::isfinite(b) ? b : anchor);
    DecadeIntegral I(h, a, b, anchor);
    if (I.lower_divergent() || I.upper_divergent()) return infinite_norm();
    return finish_power(I.total(), e);
}

NormResult weak_triple_norm(const std::vector<double>& values,
                            const std::vector<double>& measures, double P, double s,
                            std::uint64_t seed, int n_random) {
    if (!(s > 0.0) || !(s < P)) throw std::invalid_argument("weak_triple_norm: 0 < s < P");
    if (values.size() != measures.size())
        throw std::invalid_argument("weak_triple_norm: size mismatch");
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });

    const double a = 1.0 / P - 1.0 / s; // < 0
    auto rate = [&](double M, double T) {
        return M > 0.0 && T > 0.0 ? std::pow(M, a) * std::pow(T, 1.0 / s) : 0.0;
    };

    // Top slices by value: every prefix of the sorted cells plus the partial
    // cell where the one-sided stationary point t* = -a*A*P/v^s lands inside.
    double best = 0.0, cprev = 0.0, Sprev = 0.0;
    for (std::size_t k : order) {
        const double v = values[k], m = measures[k];
        if (!(v > 0.0) || !(m > 0.0)) continue;
        const double vs = std::pow(v, s);
        const double c = cprev + m, S = Sprev + vs * m;
        best = std::max(best, rate(c, S));
        const double A = Sprev - vs * cprev;
        const double tstar = -a * A * P / vs;
        if (tstar > cprev && tstar < c) best = std::max(best, rate(tstar, A + vs * tstar));
        cprev = c;
        Sprev = S;
    }

    // Seeded random unions probe non-nested sets; they can only push the sup up.
    std::mt19937_64 rng(seed);
    for (int it = 0; it < n_random; ++it) {
        double M = 0.0, T = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (rng() & 1u) {
                M += measures[i];
                T += std::pow(values[i], s) * measures[i];
            }
        }
        best = std::max(best, rate(M, T));
    }
    return {best, true, 0.0};
}

} // namespace hardy
