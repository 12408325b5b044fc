#include "hardy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardy/par.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/spaces.hpp"

namespace hardy {

namespace {

double smoothstep(double x) { return x * x * (3.0 - 2.0 * x); }
double smoothstep_d(double x) { return 6.0 * x * (1.0 - x); }

Rearrangement test_rearrangement(const TestFunction& u, int dim, const Domain& dom) {
    TestFunction cu = u;
    RadialProfile prof =
        RadialProfile::custom([cu](double r) { return std::abs(cu.value(r)); })
            .clipped(0.0, u.support_radius());
    try {
        return Rearrangement::radial_shortcut(prof, dim, dom);
    } catch (const std::exception&) {
        return Rearrangement::generic(prof, dim, dom);
    }
}

double golden_max(const std::function<double(double)>& f, double a, double b,
                  double* argmax) {
    const double gr = 0.6180339887498949;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    double best = fc, barg = c;
    if (fd > best) best = fd, barg = d;
    for (int i = 0; i < 60; ++i) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
            if (fd > best) best = fd, barg = d;
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
            if (fc > best) best = fc, barg = c;
        }
    }
    *argmax = barg;
    return best;
}

} // namespace

bool TestFunction::nonincreasing_grid(int n) const {
    if (cylindrical()) return uy_->nonincreasing_grid(n) && uz_->nonincreasing_grid(n);
    double prev = value(support_ * 0.5 / n);
    for (int i = 1; i <= n; ++i) {
        const double v = value(support_ * double(i) / n);
        if (v > prev + 1e-12 * std::max(1.0, std::abs(prev))) return false;
        prev = v;
    }
    return true;
}

TestFunction TestFunction::dilated(double lambda) const {
    if (!(lambda > 0.0)) throw std::invalid_argument("dilated: lambda > 0");
    if (cylindrical()) return product(uy_->dilated(lambda), uz_->dilated(lambda));
    TestFunction base = *this;
    return custom([base, lambda](double r) { return base.value(lambda * r); },
                  [base, lambda](double r) { return lambda * base.deriv(lambda * r); },
                  support_ / lambda, desc_ + " dilated");
}

TestFunction TestFunction::cone(double r0) {
    if (!(r0 > 0.0)) throw std::invalid_argument("cone: r0 > 0");
    return custom([r0](double r) { return std::max(r0 - r, 0.0); },
                  [r0](double r) { return r < r0 ? -1.0 : 0.0; }, r0, "cone");
}

TestFunction TestFunction::log_cutoff(double r0, double R) {
    if (!(r0 > 0.0) || !(R > r0)) throw std::invalid_argument("log_cutoff: 0 < r0 < R");
    auto v = [r0, R](double r) {
        if (r >= R) return 0.0;
        return std::log(R / std::max(r, r0));
    };
    auto d = [r0, R](double r) { return (r > r0 && r < R) ? -1.0 / r : 0.0; };
    return custom(v, d, R, "log_cutoff");
}

TestFunction TestFunction::power_cutoff(double N, double p, double eps, double r1,
                                        double r2) {
    if (!(r1 > 0.0) || !(r2 > r1)) throw std::invalid_argument("power_cutoff: 0 < r1 < r2");
    const double m = (N - p) / p - eps;
    auto chi = [r1, r2](double r, double* dchi) {
        *dchi = 0.0;
        if (r <= 0.5 * r1 || r >= 2.0 * r2) return 0.0;
        if (r < r1) {
            const double x = 2.0 * r / r1 - 1.0;
            *dchi = smoothstep_d(x) * 2.0 / r1;
            return smoothstep(x);
        }
        if (r <= r2) return 1.0;
        const double x = r / r2 - 1.0;
        *dchi = -smoothstep_d(x) / r2;
        return 1.0 - smoothstep(x);
    };
    auto v = [m, chi](double r) {
        double dc;
        const double c = chi(r, &dc);
        return c == 0.0 ? 0.0 : std::pow(r, -m) * c;
    };
    auto d = [m, chi](double r) {
        double dc;
        const double c = chi(r, &dc);
        if (c == 0.0 && dc == 0.0) return 0.0;
        return std::pow(r, -m) * (dc - m * c / r);
    };
    return custom(v, d, 2.0 * r2, "power_cutoff");
}

TestFunction TestFunction::sin_dilate(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("sin_dilate: a > 0");
    auto v = [a](double r) {
        if (r >= a) return 0.0;
        const double x = M_PI * r / a;
        return x < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
    };
    auto d = [a](double r) {
        if (r >= a) return 0.0;
        const double x = M_PI * r / a;
        const double ux = x < 1e-6 ? -x / 3.0 + x * x * x / 30.0
                                   : (x * std::cos(x) - std::sin(x)) / (x * x);
        return ux * M_PI / a;
    };
    return custom(v, d, a, "sin_dilate");
}

TestFunction TestFunction::log_power(double kappa) {
    if (!(kappa > 0.0)) throw std::invalid_argument("log_power: kappa > 0");
    auto v = [kappa](double r) {
        if (r >= 1.0) return 0.0;
        return std::pow(std::log(kE / r), kappa) - 1.0;
    };
    auto d = [kappa](double r) {
        if (r >= 1.0) return 0.0;
        return -kappa * std::pow(std::log(kE / r), kappa - 1.0) / r;
    };
    return custom(v, d, 1.0, "log_power");
}

TestFunction TestFunction::tabulated(std::vector<double> r, std::vector<double> v) {
    if (r.size() != v.size() || r.size() < 2)
        throw std::invalid_argument("tabulated: matching arrays, length >= 2");
    for (size_t i = 1; i < r.size(); ++i)
        if (!(r[i] > r[i - 1])) throw std::invalid_argument("tabulated: r must increase");
    if (v.back() != 0.0) throw std::invalid_argument("tabulated: must end at 0");
    auto val = [r, v](double x) {
        if (x >= r.back()) return 0.0;
        if (x <= r.front()) return v.front();
        auto it = std::upper_bound(r.begin(), r.end(), x);
        const size_t i = size_t(it - r.begin());
        const double w = (x - r[i - 1]) / (r[i] - r[i - 1]);
        return v[i - 1] * (1.0 - w) + v[i] * w;
    };
    auto der = [r, v](double x) {
        if (x >= r.back() || x <= r.front()) return 0.0;
        auto it = std::upper_bound(r.begin(), r.end(), x);
        const size_t i = size_t(it - r.begin());
        return (v[i] - v[i - 1]) / (r[i] - r[i - 1]);
    };
    return custom(val, der, r.back(), "tabulated");
}

TestFunction TestFunction::custom(std::function<double(double)> value,
                                  std::function<double(double)> deriv, double support,
                                  std::string desc) {
    if (!(support > 0.0)) throw std::invalid_argument("custom: support > 0");
    TestFunction u;
    u.val_ = std::move(value);
    u.der_ = std::move(deriv);
    u.support_ = support;
    u.desc_ = std::move(desc);
    return u;
}

TestFunction TestFunction::product(TestFunction uy, TestFunction uz) {
    TestFunction u;
    u.desc_ = uy.desc_ + " x " + uz.desc_;
    u.support_ = std::max(uy.support_, uz.support_);
    u.uy_ = std::make_shared<TestFunction>(std::move(uy));
    u.uz_ = std::make_shared<TestFunction>(std::move(uz));
    u.val_ = [](double) -> double {
        throw std::logic_error("cylindrical test function has no single radial profile");
    };
    u.der_ = u.val_;
    return u;
}

namespace {

struct Piece {
    QuadResult lhs, grad;
};

// One radial factor: integrals of |g| u^q r^{d-1} and |u'|^p r^{d-1}.
Piece radial_piece(const RadialProfile& g, const TestFunction& u, double d, double p,
                   double q, double a, double b) {
    const double hi = std::min(b, u.support_radius());
    if (!(hi > a)) return {{0.0, 0.0, true, false}, {0.0, 0.0, true, false}};
    const double anchor = a > 0.0 ? std::sqrt(a * hi) : 0.5 * hi;
    auto fl = [&](double r) {
        const double uv = std::abs(u.value(r));
        return uv == 0.0 ? 0.0 : std::abs(g(r)) * std::pow(uv, q) * std::pow(r, d - 1.0);
    };
    auto fg = [&](double r) {
        const double du = std::abs(u.deriv(r));
        return du == 0.0 ? 0.0 : std::pow(du, p) * std::pow(r, d - 1.0);
    };
    DecadeIntegral L(fl, a, hi, anchor);
    DecadeIntegral G(fg, a, hi, anchor);
    return {L.total(), G.total()};
}

} // namespace

RatioReport hardy_ratio(const ExponentContext& ctx, const DomainSpec& dom,
                        const WeightSpec& w, const TestFunction& u) {
    validate(ctx);
    if (w.form == WeightSpec::Form::Abstract)
        throw std::invalid_argument("hardy_ratio: needs an evaluable weight");
    const double N = ctx.N, p = ctx.p, q = ctx.q;
    const double a = dom.base.a, b = dom.base.b;
    RatioReport rep;

    if (!u.cylindrical()) {
        if (dom.product || w.form == WeightSpec::Form::Cylindrical)
            throw std::invalid_argument("hardy_ratio: radial test function on a product domain");
        if (u.support_radius() > b * (1.0 + 1e-12))
            throw std::invalid_argument("hardy_ratio: test function exceeds the domain");
        if (a > 0.0 && std::abs(u.value(a)) > 1e-12)
            throw std::invalid_argument("hardy_ratio: test function does not vanish at the inner radius");
        const double surf = N * dom.base.sigma * unit_ball_volume(ctx.N);
        Piece pc = radial_piece(w.g1, u, N, p, q, a, b);
        rep.lhs = surf * pc.lhs.value;
        rep.lhs_finite = !pc.lhs.divergent;
        const double gint = surf * pc.grad.value;
        rep.rhs = std::pow(gint, q / p);
        rep.ratio = rep.rhs > 0.0 && rep.lhs_finite ? rep.lhs / rep.rhs : 0.0;
        rep.quadrature_error = pc.lhs.error / std::max(pc.lhs.value, 1e-300) +
                               (q / p) * pc.grad.error / std::max(pc.grad.value, 1e-300);
        return rep;
    }

    if (!dom.product || w.form != WeightSpec::Form::Cylindrical)
        throw std::invalid_argument("hardy_ratio: cylindrical test function needs a product domain");
    const int k = ctx.k, nk = ctx.N - ctx.k;
    const TestFunction& u1 = u.part_y();
    const TestFunction& u2 = u.part_z();
    if (u1.support_radius() > b * (1.0 + 1e-12))
        throw std::invalid_argument("hardy_ratio: test function exceeds the domain");
    if (a > 0.0 && std::abs(u1.value(a)) > 1e-12)
        throw std::invalid_argument("hardy_ratio: test function does not vanish at the inner radius");
    const double Sy = k * dom.base.sigma * unit_ball_volume(k);
    const double Sz = nk * unit_ball_volume(nk);

    Piece py = radial_piece(w.g1, u1, k, p, q, a, b);
    Piece pz = radial_piece(w.g2, u2, nk, p, q, 0.0, kInf);
    rep.lhs = Sy * py.lhs.value * Sz * pz.lhs.value;
    rep.lhs_finite = !py.lhs.divergent && !pz.lhs.divergent;

    double grad, grad_err;
    if (p == 2.0) {
        // |grad u|^2 separates: u1'^2 u2^2 + u1^2 u2'^2
        auto mass = [&](const TestFunction& f, double d, double lo, double hi) {
            const double h = std::min(hi, f.support_radius());
            const double anch = lo > 0.0 ? std::sqrt(lo * h) : 0.5 * h;
            DecadeIntegral I(
                [&](double r) {
                    const double v = f.value(r);
                    return v * v * std::pow(r, d - 1.0);
                },
                lo, h, anch);
            return I.total();
        };
        QuadResult A0 = mass(u1, k, a, b), B0 = mass(u2, nk, 0.0, kInf);
        grad = Sy * Sz * (py.grad.value * B0.value + A0.value * pz.grad.value);
        grad_err = py.grad.error * B0.value + A0.error * pz.grad.value +
                   A0.value * pz.grad.error + py.grad.value * B0.error;
    } else {
        const double h1 = std::min(b, u1.support_radius());
        const double h2 = u2.support_radius();
        QuadOptions inner_opt{1e-9, 1e-9, 40};
        auto inner = [&](double ry) {
            const double d1 = u1.deriv(ry), v1 = u1.value(ry);
            return integrate(
                       [&](double rz) {
                           const double d2 = u2.deriv(rz), v2 = u2.value(rz);
                           const double s = d1 * d1 * v2 * v2 + v1 * v1 * d2 * d2;
                           return std::pow(s, 0.5 * p) * std::pow(rz, nk - 1.0);
                       },
                       0.0, h2, inner_opt)
                .value;
        };
        QuadResult outer = integrate(
            [&](double ry) { return inner(ry) * std::pow(ry, double(k) - 1.0); }, a, h1,
            QuadOptions{1e-8, 1e-8, 28});
        grad = Sy * Sz * outer.value;
        grad_err = Sy * Sz * outer.error + 1e-8 * grad;
    }
    rep.rhs = std::pow(grad, q / p);
    rep.ratio = rep.rhs > 0.0 && rep.lhs_finite ? rep.lhs / rep.rhs : 0.0;
    rep.quadrature_error =
        (py.lhs.error / std::max(py.lhs.value, 1e-300) +
         pz.lhs.error / std::max(pz.lhs.value, 1e-300)) +
        (q / p) * grad_err / std::max(grad, 1e-300);
    return rep;
}

SweepResult empirical_best_constant(const ExponentContext& ctx, const DomainSpec& dom,
                                    const WeightSpec& w, const FamilySweep& fam) {
    if (fam.grid < 20)
        throw std::invalid_argument("empirical_best_constant: need at least 20 grid points");
    if (!(fam.hi > fam.lo))
        throw std::invalid_argument("empirical_best_constant: empty parameter range");
    if (fam.log_scale && !(fam.lo > 0.0))
        throw std::invalid_argument("empirical_best_constant: log scale needs lo > 0");
    auto param_at = [&](double s) {
        return fam.log_scale ? fam.lo * std::pow(fam.hi / fam.lo, s)
                             : fam.lo + (fam.hi - fam.lo) * s;
    };
    std::vector<SweepPoint> pts(fam.grid);
    std::string err_msg;
    bool failed = false;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < fam.grid; ++i) {
        try {
            const double prm = param_at(double(i) / (fam.grid - 1));
            RatioReport r = hardy_ratio(ctx, dom, w, fam.make(prm));
            pts[i] = {prm, r.lhs, r.rhs, r.ratio, r.quadrature_error};
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                err_msg = e.what();
            }
        }
    }
    if (failed) throw std::runtime_error("empirical_best_constant: " + err_msg);
    bool any_rhs = false;
    int best = 0;
    for (int i = 0; i < fam.grid; ++i) {
        any_rhs = any_rhs || pts[i].rhs > 0.0;
        if (pts[i].ratio > pts[best].ratio) best = i;
    }
    if (!any_rhs)
        throw std::runtime_error("empirical_best_constant: every test function has zero gradient");

    // Refine inside the bracketing cells around the grid argmax.
    auto to_s = [&](int i) { return double(i) / (fam.grid - 1); };
    const double slo = to_s(std::max(0, best - 1));
    const double shi = to_s(std::min(fam.grid - 1, best + 1));
    auto ratio_of = [&](double s) {
        return hardy_ratio(ctx, dom, w, fam.make(param_at(s))).ratio;
    };
    double sarg = to_s(best);
    const double refined = golden_max(ratio_of, slo, shi, &sarg);

    SweepResult out;
    out.points = std::move(pts);
    if (refined > out.points[best].ratio) {
        out.sup_ratio = refined;
        out.argmax_param = param_at(sarg);
    } else {
        out.sup_ratio = out.points[best].ratio;
        out.argmax_param = out.points[best].param;
    }
    return out;
}

ScalingReport scaling_invariance_check(const ExponentContext& ctx, const DomainSpec& dom,
                                       const WeightSpec& w, const TestFunction& u,
                                       const std::vector<double>& lambdas) {
    ScalingReport rep;
    RatioReport base = hardy_ratio(ctx, dom, w, u);
    rep.base_ratio = base.ratio;
    for (double l : lambdas) {
        RatioReport r = l == 1.0 ? base : hardy_ratio(ctx, dom, w, u.dilated(l));
        rep.ratios.emplace_back(l, r.ratio);
        if (base.ratio > 0.0)
            rep.max_deviation =
                std::max(rep.max_deviation, std::abs(r.ratio / base.ratio - 1.0));
    }
    return rep;
}

OneDimReport check_one_dim_hardy(const ExponentContext& ctx, const Rearrangement& g,
                                 const TestFunction& u_star) {
    validate(ctx);
    const double N = ctx.N, p = ctx.p, q = ctx.q;
    if (N < p) throw std::invalid_argument("check_one_dim_hardy: needs N >= p");
    const double omega = g.total_measure();
    if (N == p && !std::isfinite(omega))
        throw std::invalid_argument("check_one_dim_hardy: the N = p form needs finite measure");
    const double ps = p_star(ctx.N, p);
    if (N > p && q > ps * (1.0 + 1e-12))
        throw std::invalid_argument("check_one_dim_hardy: q > p* is outside the range");

    const double T = std::min(u_star.support_radius(), omega);
    const double anchor = std::min(g.anchor(), 0.5 * T);
    DecadeIntegral L(
        [&](double t) {
            const double uv = std::abs(u_star.value(t));
            return uv == 0.0 ? 0.0 : g.f_star(t) * std::pow(uv, q);
        },
        0.0, T, anchor);
    DecadeIntegral R(
        [&](double t) {
            const double du = std::abs(u_star.deriv(t));
            return du == 0.0 ? 0.0 : std::pow(t, p - p / N) * std::pow(du, p);
        },
        0.0, T, anchor);
    QuadResult lq = L.total(), rq = R.total();

    const double pp = conjugate(p);
    NormResult nx;
    double cst;
    if (N > p) {
        const double al = alpha(ctx.N, p, q);
        const double C1 = N * (p - 1.0) / (N - p);
        if (q < 1.0) {
            const double gam = p * q / (p - q);
            nx = lorentz_norm(g, al, p / (p - q));
            cst = std::pow(pp, q / gam) * std::pow(q, q / p) * std::pow(C1, q / pp);
        } else if (q < p) {
            nx = lorentz_norm(g, al, p / (p - q));
            cst = std::pow(pp * C1, q / conjugate(q)) * q;
        } else {
            nx = lorentz_norm(g, al, kInf);
            cst = std::pow(pp * C1, q / pp) * p;
        }
    } else {
        if (q < 1.0) {
            const double gam = p * q / (p - q);
            nx = lorentz_zygmund_norm(g, 1.0, p / (p - q), q / pp, omega);
            cst = std::pow(pp, q / gam) * std::pow(q, q / p);
        } else if (q < p) {
            nx = lorentz_zygmund_norm(g, 1.0, p / (p - q), q - 1.0, omega);
            cst = std::pow(pp, q / conjugate(q)) * q;
        } else {
            nx = lorentz_zygmund_norm(g, 1.0, kInf, q / pp, omega);
            cst = std::pow(pp, q / pp) * p;
        }
    }

    OneDimReport rep;
    rep.lhs = lq.value;
    rep.norm_g = nx.value;
    rep.constant = cst;
    rep.rhs_finite = nx.finite && !rq.divergent;
    rep.rhs_with_norm = cst * nx.value * std::pow(rq.value, q / p);
    rep.holds = !rep.rhs_finite ||
                (!lq.divergent && rep.lhs <= rep.rhs_with_norm * (1.0 + 1e-8) + 1e-14);
    return rep;
}

EmbeddingReport check_embedding(const ExponentContext& ctx, const DomainSpec& dom,
                                const std::vector<TestFunction>& family) {
    validate(ctx);
    if (family.empty()) throw std::invalid_argument("check_embedding: empty family");
    const double N = ctx.N, p = ctx.p;
    if (N < p) throw std::invalid_argument("check_embedding: needs N >= p");
    if (N == p && !dom.bounded())
        throw std::invalid_argument("check_embedding: the N = p form needs a bounded domain");
    EmbeddingReport rep;
    for (const TestFunction& u : family) {
        if (u.cylindrical())
            throw std::invalid_argument("check_embedding: radial test functions only");
        Rearrangement re = test_rearrangement(u, ctx.N, dom.base);
        NormResult nr;
        if (N > p) {
            nr = lorentz_norm(re, p_star(ctx.N, p), p);
        } else {
            nr = lorentz_zygmund_quasinorm(re, kInf, p, -1.0, dom.base.measure(ctx.N));
        }
        const double S = u.support_radius();
        DecadeIntegral G(
            [&](double r) {
                const double du = std::abs(u.deriv(r));
                return du == 0.0 ? 0.0 : std::pow(du, p) * std::pow(r, N - 1.0);
            },
            0.0, S, 0.5 * S);
        const double grad =
            std::pow(N * dom.base.sigma * unit_ball_volume(ctx.N) * G.total().value,
                     1.0 / p);
        rep.ratios.push_back(grad > 0.0 ? nr.value / grad : 0.0);
        rep.max_ratio = std::max(rep.max_ratio, rep.ratios.back());
    }
    return rep;
}

PolyaSzegoReport polya_szego_check(const TestFunction& u, int N, double p) {
    if (u.cylindrical())
        throw std::invalid_argument("polya_szego_check: radial test functions only");
    if (N < 1 || !(p >= 1.0)) throw std::invalid_argument("polya_szego_check: N >= 1, p >= 1");
    const double S = u.support_radius();
    const double omega = unit_ball_volume(N);

    DecadeIntegral G(
        [&](double r) {
            const double du = std::abs(u.deriv(r));
            return du == 0.0 ? 0.0 : std::pow(du, p) * std::pow(r, N - 1.0);
        },
        0.0, S, 0.5 * S);
    const double rhs = N * omega * G.total().value;

    // Level-set substitution t = mu(s): the 1-D side becomes an integral over
    // levels with mu'(s) = -N omega sum_j r_j^{N-1}/|u'(r_j)| across the roots
    // of u = s. Exact for monotone and multi-bump profiles alike.
    const int M = 16384;
    std::vector<double> rv(M + 1), vv(M + 1);
    double umax = 0.0;
    for (int i = 0; i <= M; ++i) {
        rv[i] = S * double(i) / M;
        vv[i] = std::abs(u.value(std::max(rv[i], S * 1e-14)));
        umax = std::max(umax, vv[i]);
    }
    auto level = [&](double s) -> double {
        double measN = 0.0, slope = 0.0;
        bool inside = vv[0] > s;
        double open_at = 0.0;
        for (int i = 0; i < M; ++i) {
            const bool next_inside = vv[i + 1] > s;
            if (next_inside == inside) continue;
            double lo = rv[i], hi = rv[i + 1];
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                if ((std::abs(u.value(mid)) > s) == inside)
                    lo = mid;
                else
                    hi = mid;
            }
            const double root = 0.5 * (lo + hi);
            if (inside) {
                measN += std::pow(root, double(N)) - std::pow(open_at, double(N));
            } else {
                open_at = root;
            }
            slope += std::pow(root, N - 1.0) /
                     std::max(std::abs(u.deriv(root)), 1e-300);
            inside = next_inside;
        }
        if (inside) measN += std::pow(S, double(N)) - std::pow(open_at, double(N));
        const double mu = omega * measN;
        const double dmu = N * omega * slope;
        if (mu == 0.0 || dmu == 0.0) return 0.0;
        return std::pow(mu, p - p / N) * std::pow(dmu, 1.0 - p);
    };
    QuadResult lvl = integrate(level, 0.0, umax, QuadOptions{1e-10, 1e-10, 44});
    const double lhs = std::pow(double(N), p) * std::pow(omega, p / N) * lvl.value;

    PolyaSzegoReport rep;
    rep.lhs_1d = lhs;
    rep.rhs_Nd = rhs;
    rep.holds = lhs <= rhs * (1.0 + 1e-8) + 1e-12;
    return rep;
}

} // namespace hardy
