#include "hardy/admit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hardy/quadrature.hpp"
#include "hardy/rearrange.hpp"
#include "hardy/spaces.hpp"

namespace hardy {

bool DomainSpec::contains_origin() const {
    return base.a == 0.0 && base.sigma == 1.0 && base.kind != Domain::Kind::Exterior;
}

bool DomainSpec::bounded() const { return !product && std::isfinite(base.b); }

bool DomainSpec::bounded_one_direction() const { return std::isfinite(base.b); }

namespace {

std::string fmt(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

Rearrangement rearr(const RadialProfile& g, int dim, const Domain& dom) {
    try {
        return Rearrangement::radial_shortcut(g, dim, dom);
    } catch (const std::exception&) {
        return Rearrangement::generic(g, dim, dom);
    }
}

// sup of g~(r) * r^e over the radial extent of the domain.
SupResult weighted_sup(const RadialProfile& g, double e, double lo, double hi) {
    lo = std::max(lo, g.a);
    hi = std::min(hi, g.b);
    if (!(hi > lo)) return {0.0, lo, true};
    auto f = [&](double r) { return g(r) * std::pow(r, e); };
    SupOptions so;
    so.open_lo = !(lo > 0.0);
    so.open_hi = !std::isfinite(hi);
    const double ref = std::isfinite(hi) ? hi : std::max(1.0, 2.0 * lo);
    const double lo_eff = lo > 0.0 ? lo : ref * 1e-40;
    const double hi_eff = std::isfinite(hi) ? hi : ref * 1e40;
    return grid_sup(f, lo_eff, hi_eff, so);
}

bool locally_integrable_at_origin(const RadialProfile& g, int dim) {
    const double r0 = std::min({g.b, 1.0});
    if (!(r0 > 0.0) || g.a > 0.0) return true;
    NormResult n = weighted_lebesgue_norm(g, 1.0, 0.0, r0, dim - 1.0, 0.0);
    return n.finite;
}

struct Classifier {
    const ExponentContext& ctx;
    const DomainSpec& dom;
    const WeightSpec& w;
    DerivedExponents d;
    AdmissibilityVerdict V;

    double N() const { return ctx.N; }
    double p() const { return ctx.p; }
    double q() const { return ctx.q; }

    void reject(const std::string& rule, const std::string& why) {
        V.failure_reasons.push_back(rule + ": " + why);
    }

    void accept(BranchRecord rec) { V.branches.push_back(std::move(rec)); }

    bool norm_or_reject(const std::string& rule, const std::string& space,
                        const NormResult& n) {
        if (!n.finite) {
            reject(rule, "norm in " + space + " diverges");
            return false;
        }
        return true;
    }

    // Rearrangement-space criterion: one Lorentz (N>p), Lorentz-Zygmund (N=p,
    // bounded), or L^1 (N<p, bounded in one direction) norm of the full
    // weight.
    void branch_lorentz() {
        const std::string rule = "lorentz_rearrangement";
        if (dom.product || w.form == WeightSpec::Form::Cylindrical) return;
        const bool abstract_form = w.form == WeightSpec::Form::Abstract;
        if (N() > p()) {
            if (!(q() <= d.p_star)) {
                reject(rule, "q > p* is outside the range");
                return;
            }
            const double gam = q() < p() ? p() / (p() - q()) : kInf;
            std::string space = "L^{" + fmt(d.alpha) + "," + fmt(gam) + "}";
            NormResult n;
            if (abstract_form) {
                n = {w.abstract_norm, std::isfinite(w.abstract_norm), 0.0};
                if (!w.abstract_space.empty()) space = w.abstract_space;
            } else {
                n = lorentz_norm(rearr(w.g1, ctx.N, dom.base), d.alpha, gam);
            }
            if (!norm_or_reject(rule, space, n)) return;
            accept({rule, space, {n.value}, "C(N,p,q) * ||g||_X", ""});
            return;
        }
        if (N() == p()) {
            if (!dom.bounded()) {
                reject(rule, "the N = p case needs a bounded domain");
                return;
            }
            const double gam = q() < p() ? p() / (p() - q()) : kInf;
            std::vector<double> As;
            if (q() < 1.0 || q() >= p())
                As.push_back(q() / d.p_prime);
            else
                As.push_back(q() - 1.0);
            if (q() == 1.0) As.push_back(q() / d.p_prime); // boundary: try both indices
            const double omega = dom.base.measure(ctx.N);
            Rearrangement re;
            if (!abstract_form) re = rearr(w.g1, ctx.N, dom.base);
            for (double A : As) {
                const std::string space = "L^{1," + fmt(gam) + ";" + fmt(A) + "}";
                NormResult n = abstract_form
                                   ? NormResult{w.abstract_norm,
                                                std::isfinite(w.abstract_norm), 0.0}
                                   : lorentz_zygmund_quasinorm(re, 1.0, gam, A, omega);
                if (n.finite) {
                    accept({rule, space, {n.value}, "C(N,p,q) * |g|_X", ""});
                    return;
                }
                reject(rule, "norm in " + space + " diverges");
            }
            return;
        }
        // N < p
        if (!dom.bounded_one_direction()) {
            reject(rule, "the N < p case needs a domain bounded in one direction");
            return;
        }
        NormResult n;
        if (abstract_form) {
            n = {w.abstract_norm, std::isfinite(w.abstract_norm), 0.0};
        } else {
            n = weighted_lebesgue_norm(w.g1, 1.0, dom.base.a, dom.base.b, N() - 1.0, 0.0);
            n.value *= ctx.N * dom.base.sigma * unit_ball_volume(ctx.N);
        }
        if (!norm_or_reject(rule, "L^1", n)) return;
        accept({rule, "L^1", {n.value}, "C(N,p,q) * ||g||_1", ""});
    }

    // Radial-majorant criterion on a sectorial set: one weighted L^1 norm of
    // the profile, with a monotonicity side condition near the critical range.
    void branch_weighted_lebesgue() {
        const std::string rule = "radial_majorant_lebesgue";
        if (dom.product || w.form != WeightSpec::Form::Radial) return;
        const double a = dom.base.a, b = dom.base.b;
        double theta, kappa = 0.0;
        if (N() == p()) {
            theta = N() - 1.0;
            kappa = q() / d.N_prime;
            if (!(q() <= p())) {
                reject(rule, "q > p is outside the N = p range");
                return;
            }
            if (!(a > 0.0)) {
                reject(rule, "the N = p case needs a > 0");
                return;
            }
        } else {
            const double inv_alpha = std::isfinite(d.alpha) ? 1.0 / d.alpha : 0.0;
            theta = N() * inv_alpha - 1.0;
            if (N() > p()) {
                if (!(q() <= d.p_star)) {
                    reject(rule, "q > p* is outside the range");
                    return;
                }
                const double crit = p_star_s(ctx.N, p(), 1.0);
                if (q() >= crit && !w.g1.strictly_decreasing_grid()) {
                    reject(rule, "profile is not strictly decreasing on the sampled grid");
                    return;
                }
            } else { // N < p
                if (!(q() <= p())) {
                    reject(rule, "q > p is outside the N < p range");
                    return;
                }
                if (dom.contains_origin()) {
                    reject(rule, "the N < p case needs 0 outside the domain");
                    return;
                }
            }
        }
        const std::string space = kappa == 0.0
                                      ? "L^1((a,b), r^{" + fmt(theta) + "})"
                                      : "L^1((a,b), r^{" + fmt(theta) + "} log(r/a)^{" +
                                            fmt(kappa) + "})";
        NormResult n = weighted_lebesgue_norm(w.g1, 1.0, a, b, theta, kappa);
        if (!norm_or_reject(rule, space, n)) return;
        accept({rule, space, {n.value}, "C(N,p,q) * ||g~||_X", ""});
    }

    // Cylindrical power criterion: the first factor dominated by
    // r^{-N/alpha}, constant second factor.
    void branch_cylindrical_power() {
        const std::string base_rule = "cylindrical_power";
        if (!dom.product || w.form != WeightSpec::Form::Cylindrical) return;
        if (!(N() > p())) return;
        if (w.g2.kind != RadialProfile::Kind::Const) {
            reject(base_rule, "second factor is not constant");
            return;
        }
        const double k = ctx.k;
        const double s_req = std::isfinite(d.alpha) ? N() / d.alpha : 0.0;
        const bool origin_free = !(dom.base.a == 0.0 && dom.base.sigma == 1.0);
        bool in_range = false;
        std::string which;
        if (q() >= p() && q() <= d.p_star) {
            if (k > p()) {
                in_range = true;
                which = "k > p";
            } else {
                const double pk = p_star_s(ctx.N, p(), k);
                if (q() > pk) {
                    in_range = true;
                    which = "q > P*(k)";
                } else if (k < p() && origin_free && q() <= pk) {
                    in_range = true;
                    which = "hole at origin, q <= P*(k)";
                }
            }
        }
        if (!in_range) {
            reject(base_rule, "q outside every cylindrical range");
            return;
        }
        SupResult sup = weighted_sup(w.g1, s_req, dom.base.a, dom.base.b);
        const bool exact_power = w.g1.kind == RadialProfile::Kind::Power &&
                                 nearly_equal(-w.g1.expo, s_req, 1e-12);
        const std::string rule = exact_power ? base_rule : "cylindrical_dominated";
        const std::string space = "L^inf((a,b), r^{" + fmt(s_req) + "})";
        if (!sup.finite || !std::isfinite(sup.value)) {
            reject(rule, "sup of r^{N/alpha} g~_1 diverges");
            return;
        }
        accept({rule, space, {sup.value, w.g2.scale},
                "C(N,k,p,q) * sup(r^{N/alpha} g~_1) * const(g_2)", which});
    }

    // Compatible Lorentz pairs: the two-parameter (s,t) family.
    void branch_lorentz_pair() {
        const std::string rule = "lorentz_pair";
        if (!dom.product || w.form != WeightSpec::Form::Cylindrical) return;
        if (!(N() > p())) return;
        const double k = ctx.k, nk = N() - ctx.k;
        Rearrangement re1 = rearr(w.g1, ctx.k, dom.base);
        Rearrangement re2 = rearr(w.g2, ctx.N - ctx.k, Domain::full());

        if (q() <= p()) {
            const double st = 1.0 - q() / p();
            bool ok_side = st > 0.0 ? k > p() : (k > p() || nk > p());
            if (!ok_side) {
                reject(rule, "diagonal branch needs k > p (or N-k > p at q = p)");
            } else {
                const double P1 = k / ((k - p()) * st + p());
                const double Q1 = st > 0.0 ? 1.0 / st : kInf;
                NormResult n1 = st > 0.0 ? lorentz_norm(re1, P1, Q1)
                                         : lorentz_quasinorm(re1, P1, kInf);
                NormResult n2 = st > 0.0 ? lebesgue_norm(re2, 1.0 / st)
                                         : lorentz_quasinorm(re2, kInf, kInf);
                const std::string space = "L^{" + fmt(P1) + "," + fmt(Q1) + "} x L^{" +
                                          fmt(Q1) + "}";
                if (n1.finite && n2.finite) {
                    accept({rule, space, {n1.value, n2.value},
                            "C(N,k,p,q) * ||g_1||_{X1} * ||g_2||_{X2}",
                            "st=" + fmt(st)});
                } else {
                    reject(rule, "norm in " + space + " diverges");
                }
            }
        }
        if (q() >= p() && q() <= d.p_star) {
            const double st = (q() - p()) / (d.p_star - p());
            std::vector<double> ts;
            if (st == 0.0) ts.push_back(0.0);
            const int grid = 64;
            for (int i = 0; i < grid; ++i)
                ts.push_back(st + (1.0 - st) * double(i) / double(grid - 1));
            std::string last_fail = "no feasible (s,t) pair";
            for (double t : ts) {
                if (t > 0.0 && !(k > p())) {
                    last_fail = "t > 0 needs k > p";
                    continue;
                }
                if (t < 1.0 && !(nk > p())) {
                    last_fail = "t < 1 needs N-k > p";
                    continue;
                }
                const double s = t > 0.0 ? st / t : 1.0;
                const double den1 = (1.0 - s) * t * p();
                const double P1 = den1 > 0.0 ? k / den1 : kInf;
                const double den2 = (1.0 - t) * p();
                const double P2 = den2 > 0.0 ? nk / den2 : kInf;
                NormResult n1 = lorentz_quasinorm(re1, P1, kInf);
                NormResult n2 = lorentz_quasinorm(re2, P2, kInf);
                if (n1.finite && n2.finite) {
                    accept({rule,
                            "L^{" + fmt(P1) + ",inf} x L^{" + fmt(P2) + ",inf}",
                            {n1.value, n2.value},
                            "C(N,k,p,q) * |g_1|_{X1} * |g_2|_{X2}",
                            "s=" + fmt(s) + ",t=" + fmt(t)});
                    return;
                }
                last_fail = "weak norms diverge at s=" + fmt(s) + ",t=" + fmt(t);
            }
            reject(rule, last_fail);
        }
    }

    // Compatible weighted-Lebesgue pairs on a punctured sectorial product.
    void branch_weighted_pair() {
        const std::string rule = "weighted_lebesgue_pair";
        if (!dom.product || w.form != WeightSpec::Form::Cylindrical) return;
        if (!(N() > p())) return;
        const double k = ctx.k;
        if (k == p()) {
            reject(rule, "needs k != p");
            return;
        }
        if (!(dom.base.a > 0.0)) {
            reject(rule, "needs a > 0");
            return;
        }
        const double a = dom.base.a, b = dom.base.b;
        const double crit = p_star_s(ctx.N, p(), 1.0);
        NormResult n1, n2;
        std::string space;
        if (q() < p()) {
            const double theta = (p() - k) * q() / p() + k - 1.0;
            n1 = weighted_lebesgue_norm(w.g1, 1.0, a, b, theta, 0.0);
            n2 = weighted_lebesgue_norm(w.g2, p() / (p() - q()), 0.0, kInf,
                                        N() - k - 1.0, 0.0);
            space = "L^1((a,b), r^{" + fmt(theta) + "}) x L^{" + fmt(p() / (p() - q())) +
                    "}((0,inf), r^{" + fmt(N() - k - 1.0) + "})";
        } else if (q() < crit) {
            const double be = beta(ctx.N, p(), q());
            n1 = weighted_lebesgue_norm(w.g1, be, a, b, p() - 1.0, 0.0);
            if (be > 1.0) {
                n2 = weighted_lebesgue_norm(w.g2, be / (be - 1.0), 0.0, kInf, 0.0, 0.0);
            } else {
                SupResult sup = weighted_sup(w.g2, 0.0, 0.0, kInf);
                n2 = {sup.value, sup.finite && std::isfinite(sup.value), 0.0};
            }
            space = "L^{" + fmt(be) + "}((a,b), r^{" + fmt(p() - 1.0) + "}) x L^{" +
                    fmt(be > 1.0 ? be / (be - 1.0) : kInf) + "}((0,inf))";
        } else if (q() <= d.p_star) {
            SupResult sup = weighted_sup(w.g1, 0.0, a, b);
            n1 = {sup.value, sup.finite && std::isfinite(sup.value), 0.0};
            n2 = weighted_lebesgue_norm(w.g2, d.alpha / N(), 0.0, kInf, 0.0, 0.0);
            space = "L^inf((a,b)) x L^{" + fmt(d.alpha / N()) + "}((0,inf))";
        } else {
            reject(rule, "q > p* is outside the range");
            return;
        }
        if (!n1.finite || !n2.finite) {
            reject(rule, "norm in " + space + " diverges");
            return;
        }
        accept({rule, space, {n1.value, n2.value},
                "C(N,k,p,q) * ||g~_1||_{X1} * ||g~_2||_{X2}", ""});
    }
};

} // namespace

AdmissibilityVerdict classify(const ExponentContext& ctx, const DomainSpec& dom,
                              const WeightSpec& w) {
    validate(ctx);
    if (dom.product && !(ctx.k >= 1 && ctx.k < ctx.N))
        throw std::invalid_argument("classify: product domain needs 1 <= k < N");
    if (w.form == WeightSpec::Form::Cylindrical && !dom.product)
        throw std::invalid_argument("classify: cylindrical weight needs a product domain");

    Classifier C{ctx, dom, w, derive(ctx), {}};

    // Documented obstructions come first: they defeat every branch.
    if (w.form != WeightSpec::Form::Abstract) {
        bool integrable = true;
        std::string which;
        if (w.form == WeightSpec::Form::Radial) {
            if (dom.contains_origin() && !locally_integrable_at_origin(w.g1, ctx.N)) {
                integrable = false;
                which = "g";
            }
        } else {
            if (dom.contains_origin() && !locally_integrable_at_origin(w.g1, ctx.k)) {
                integrable = false;
                which = "g_1";
            } else if (!locally_integrable_at_origin(w.g2, ctx.N - ctx.k)) {
                integrable = false;
                which = "g_2";
            }
        }
        if (!integrable) {
            C.V.admissible = Admissibility::StructurallyExcluded;
            C.V.failure_reasons.push_back(which + " is not locally integrable");
            return C.V;
        }
    }
    const bool whole_space =
        dom.base.kind == Domain::Kind::Full && dom.base.sigma == 1.0;
    if (double(ctx.N) > ctx.p && ctx.q > C.d.p_star && whole_space &&
        w.form != WeightSpec::Form::Abstract &&
        !(w.g1.kind == RadialProfile::Kind::Zero)) {
        C.V.admissible = Admissibility::StructurallyExcluded;
        C.V.failure_reasons.push_back(
            "q > p* on the whole space: rescaling u_l(x) = u(lx) makes the ratio "
            "unbounded for any nonzero weight");
        return C.V;
    }

    C.branch_lorentz();
    C.branch_weighted_lebesgue();
    C.branch_cylindrical_power();
    C.branch_lorentz_pair();
    C.branch_weighted_pair();

    C.V.admissible =
        C.V.branches.empty() ? Admissibility::Unknown : Admissibility::Admissible;
    return C.V;
}

Certificate interpolate_potentials(const Certificate& a, const Certificate& b, double t) {
    if (!(t >= 0.0) || !(t <= 1.0))
        throw std::invalid_argument("interpolate_potentials: t in [0,1]");
    if (t == 1.0) return a;
    if (b.l1_only) {
        if (!(t > 0.0))
            throw std::invalid_argument("interpolate_potentials: L^1 factor needs t > 0");
        if (!nearly_equal(a.q, a.p, 1e-12))
            throw std::invalid_argument("interpolate_potentials: L^1 factor needs q1 = p");
        Certificate out;
        out.p = a.p;
        out.q = t * a.p;
        out.constant = std::pow(a.constant, t) * std::pow(b.constant, 1.0 - t);
        out.weight_desc = "|" + a.weight_desc + "|^" + std::to_string(t) + " |" +
                          b.weight_desc + "|^" + std::to_string(1.0 - t);
        out.derivation = "geometric interpolation against an L^1 weight";
        return out;
    }
    if (!nearly_equal(a.p, b.p, 1e-12))
        throw std::invalid_argument("interpolate_potentials: mismatched p");
    if (t == 0.0) return b;
    Certificate out;
    out.p = a.p;
    out.q = t * a.q + (1.0 - t) * b.q;
    out.constant = std::pow(a.constant, t) * std::pow(b.constant, 1.0 - t);
    out.weight_desc = "|" + a.weight_desc + "|^" + std::to_string(t) + " |" +
                      b.weight_desc + "|^" + std::to_string(1.0 - t);
    out.derivation = "geometric interpolation of two certificates";
    return out;
}

Certificate product_lift(const Certificate& c1, double g2_norm) {
    if (!(c1.q <= c1.p))
        throw std::invalid_argument("product_lift: requires q <= p");
    if (c1.l1_only) throw std::invalid_argument("product_lift: needs a Hardy certificate");
    Certificate out = c1;
    out.constant = c1.constant * g2_norm;
    out.weight_desc = c1.weight_desc + " * g_2";
    out.derivation = "product with an L^{p/(p-q)} factor in the remaining variables";
    return out;
}

Certificate sectorial_lift(const SectorialLiftInput& in) {
    validate(in.ctx);
    const double p = in.ctx.p, ps = p_star(in.ctx.N, p);
    if (!(in.delta > 0.0) || !(in.gamma >= 0.0) || !(in.gamma + in.delta > 0.0) ||
        !(in.gamma + in.delta <= 1.0))
        throw std::invalid_argument("sectorial_lift: need delta > 0, 0 < gamma+delta <= 1");
    if (!(double(in.ctx.N) > p)) throw std::invalid_argument("sectorial_lift: needs N > p");
    if (!in.domain.product || !(in.domain.base.a > 0.0))
        throw std::invalid_argument("sectorial_lift: needs a product domain with a > 0");

    const double a = in.domain.base.a, b = in.domain.base.b;
    const int k = in.ctx.k, nk = in.ctx.N - in.ctx.k;
    const double conj_e = 1.0 / (1.0 - in.gamma - in.delta); // inf at gamma+delta = 1

    auto weighted_l1 = [&](const RadialProfile& g, double dimexp, double lo,
                           double hi) {
        auto f = [&](double r) { return g(r) * std::pow(r, dimexp) * in.h(r); };
        double anchor = 1.0;
        if (lo > 0.0 && std::isfinite(hi)) anchor = std::sqrt(lo * hi);
        else if (lo > 0.0) anchor = std::max(1.0, 2.0 * lo);
        else if (std::isfinite(hi)) anchor = 0.5 * hi;
        DecadeIntegral I(f, lo, hi, anchor);
        QuadResult t = I.total();
        if (t.divergent || !std::isfinite(t.value))
            throw std::runtime_error("sectorial_lift: weighted L^1 factor diverges");
        return t.value;
    };
    auto conj_norm = [&](const RadialProfile& g, double dimexp, double lo, double hi) {
        if (in.gamma + in.delta == 1.0) {
            SupResult s = weighted_sup(g, 0.0, lo, hi);
            if (!s.finite || !std::isfinite(s.value))
                throw std::runtime_error("sectorial_lift: L^inf factor diverges");
            return s.value;
        }
        NormResult n = weighted_lebesgue_norm(g, conj_e, lo, hi, dimexp, 0.0);
        if (!n.finite)
            throw std::runtime_error("sectorial_lift: conjugate Lebesgue factor diverges");
        return n.value;
    };

    double n1, n2;
    if (!in.role_swap) {
        n1 = weighted_l1(in.g1, k - 1.0, a, b);
        n2 = conj_norm(in.g2, nk - 1.0, 0.0, kInf);
    } else {
        n1 = conj_norm(in.g1, k - 1.0, a, b);
        n2 = weighted_l1(in.g2, nk - 1.0, 0.0, kInf);
    }

    Certificate out;
    out.p = p;
    out.q = in.delta * p + in.gamma * ps;
    out.constant = n1 * n2;
    out.weight_desc = "g_1(|y|) g_2(|z|)";
    out.derivation = "slice inequality '" + in.hypothesis + "' with gamma=" +
                     fmt(in.gamma) + ", delta=" + fmt(in.delta) +
                     (in.role_swap ? " (roles swapped)" : "");
    return out;
}

} // namespace hardy
