#include "hardy/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardy/exponents.hpp"
#include "hardy/par.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/rearrange.hpp"

namespace hardy {

namespace {

double auto_anchor(const MuckenhouptInput& in) {
    if (in.anchor > 0.0) return in.anchor;
    return std::isfinite(in.b) ? 0.5 * in.b : 1.0;
}

} // namespace

ConditionReport muckenhoupt_constant(const MuckenhouptInput& in) {
    if (!(in.p > 1.0) || !std::isfinite(in.p) || !(in.q > 0.0) || !std::isfinite(in.q))
        throw std::invalid_argument("muckenhoupt_constant: p in (1,inf), q in (0,inf)");
    const double p = in.p, q = in.q, b = in.b;
    const double pp = conjugate(p);
    const double anchor = auto_anchor(in);
    auto wdual = [&](double s) { return std::pow(in.w(s), 1.0 - pp); };
    DecadeIntegral V(in.v, 0.0, b, anchor);
    DecadeIntegral W(wdual, 0.0, b, anchor);

    ConditionReport rep;
    if (V.lower_divergent()) {
        // int_0^s v already infinite for s > 0: every regime degenerates.
        rep.regime = q < 1.0 ? "A1" : (q < p ? "A2" : "A3");
        rep.constant = kInf;
        rep.finite = false;
        rep.note = "int_0^s v diverges at 0";
        return rep;
    }

    if (q >= 1.0 && q >= p) {
        rep.regime = "A3";
        auto product = [&](double t) {
            const QuadResult lo = V.lower(t), up = W.upper(t);
            if (up.divergent) return kInf;
            return std::pow(lo.value, 1.0 / q) * std::pow(up.value, 1.0 / pp);
        };
        // The product is smooth in log t; a modest grid plus golden refinement
        // keeps the cumulative evaluations cheap.
        SupOptions so;
        so.per_decade = 128;
        so.open_hi = !std::isfinite(b);
        const double hi = std::isfinite(b) ? b : anchor * 1e40;
        SupResult s = grid_sup(product, anchor * 1e-40, hi, so);
        rep.constant = s.finite ? s.value : kInf;
        rep.finite = s.finite && std::isfinite(s.value);
        if (!rep.finite && W.upper(anchor).divergent) rep.note = "int_s^b w^{1-p'} diverges";
        rep.implied_inequality_constant =
            std::pow(pp, 1.0 / pp) * std::pow(p, 1.0 / q) * rep.constant;
        return rep;
    }

    const double gamma = p * q / (p - q);
    const bool case1 = q < 1.0;
    rep.regime = case1 ? "A1" : "A2";
    const double e_lo = case1 ? gamma / p : gamma / q;
    const double e_up = case1 ? gamma / pp : gamma / conjugate(q);
    bool inner_divergent = false;
    auto integrand = [&](double s) {
        const QuadResult lo = V.lower(s), up = W.upper(s);
        if (up.divergent && e_up != 0.0) {
            inner_divergent = true;
            return kInf;
        }
        const double density = case1 ? in.v(s) : wdual(s);
        if (density == 0.0) return 0.0;
        double val = std::pow(lo.value, e_lo) * density;
        if (e_up != 0.0) val *= std::pow(up.value, e_up);
        return val;
    };
    DecadeIntegral I(integrand, 0.0, b, anchor);
    QuadResult total = I.total();
    if (total.divergent || inner_divergent || !std::isfinite(total.value)) {
        rep.constant = kInf;
        rep.finite = false;
        rep.note = inner_divergent ? "int_s^b w^{1-p'} diverges" : "outer integral diverges";
    } else {
        rep.constant = std::pow(total.value, 1.0 / gamma);
        rep.finite = true;
    }
    const double prefactor = case1 ? std::pow(pp, 1.0 / gamma) * std::pow(q, 1.0 / p)
                                   : std::pow(pp, 1.0 / conjugate(q)) * std::pow(q, 1.0 / q);
    rep.implied_inequality_constant = prefactor * rep.constant;
    return rep;
}

HardyCheck muckenhoupt_verify(const MuckenhouptInput& in,
                              const std::function<double(double)>& f) {
    ConditionReport rep = muckenhoupt_constant(in);
    const double anchor = auto_anchor(in);
    DecadeIntegral F(f, 0.0, in.b, anchor);

    HardyCheck out;
    auto lhs_integrand = [&](double s) {
        const QuadResult tail = F.upper(s);
        if (tail.divergent) return kInf;
        return std::pow(std::fabs(tail.value), in.q) * in.v(s);
    };
    DecadeIntegral L(lhs_integrand, 0.0, in.b, anchor);
    QuadResult lt = L.total();
    out.lhs_finite = !lt.divergent && std::isfinite(lt.value) && !F.upper_divergent();
    out.lhs = out.lhs_finite ? std::pow(lt.value, 1.0 / in.q) : kInf;

    auto rhs_integrand = [&](double t) {
        return std::pow(std::fabs(f(t)), in.p) * in.w(t);
    };
    DecadeIntegral R(rhs_integrand, 0.0, in.b, anchor);
    QuadResult rt = R.total();
    const bool core_finite = !rt.divergent && std::isfinite(rt.value);
    out.rhs_finite = core_finite && rep.finite;
    out.rhs = out.rhs_finite
                  ? rep.implied_inequality_constant * std::pow(rt.value, 1.0 / in.p)
                  : kInf;
    out.holds = !out.rhs_finite || out.lhs <= out.rhs * (1.0 + 1e-8) + 1e-14;
    return out;
}

namespace {

// 12-point Gauss-Legendre rule on [-1,1].
constexpr int kGL = 12;
constexpr double kGLx[kGL] = {
    -0.9815606342467192, -0.9041172563704749, -0.7699026741943047,
    -0.5873179542866175, -0.3678314989981802, -0.1252334085114689,
    0.1252334085114689,  0.3678314989981802,  0.5873179542866175,
    0.7699026741943047,  0.9041172563704749,  0.9815606342467192};
constexpr double kGLw[kGL] = {
    0.0471753363865118, 0.1069393259953184, 0.1600783285433462,
    0.2031674267230659, 0.2334925365383548, 0.2491470458134028,
    0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
    0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

struct Box {
    double lo[3];
    double hi[3];
};

double box_gl(const std::function<double(double)>& gs, int N, const Box& B) {
    double mid[3], half[3];
    for (int d = 0; d < N; ++d) {
        mid[d] = 0.5 * (B.lo[d] + B.hi[d]);
        half[d] = 0.5 * (B.hi[d] - B.lo[d]);
        if (!(half[d] > 0.0)) return 0.0;
    }
    double acc = 0.0;
    const int ny = N > 1 ? kGL : 1, nz = N > 2 ? kGL : 1;
    for (int i = 0; i < kGL; ++i) {
        const double x = mid[0] + half[0] * kGLx[i];
        for (int j = 0; j < ny; ++j) {
            const double y = N > 1 ? mid[1] + half[1] * kGLx[j] : 0.0;
            const double wj = N > 1 ? kGLw[j] : 1.0;
            for (int k = 0; k < nz; ++k) {
                const double z = N > 2 ? mid[2] + half[2] * kGLx[k] : 0.0;
                const double wk = N > 2 ? kGLw[k] : 1.0;
                const double r = std::sqrt(x * x + y * y + z * z);
                acc += kGLw[i] * wj * wk * gs(r);
            }
        }
    }
    double scale = 1.0;
    for (int d = 0; d < N; ++d) scale *= half[d];
    return acc * scale;
}

// Box with the singular corner at the origin: peel dyadic shells toward the
// corner and extrapolate the geometric remainder. A non-decaying level sum
// marks the integral divergent.
QuadResult corner_refined(const std::function<double(double)>& gs, int N, const double ext[3]) {
    constexpr int kLevels = 60;
    double cur[3];
    for (int d = 0; d < N; ++d) cur[d] = ext[d];
    double total = 0.0;
    double level_sum[kLevels];
    int k = 0;
    for (; k < kLevels; ++k) {
        double s = 0.0;
        // 2^N half-scale boxes; all but the origin one integrate cleanly.
        const int combos = 1 << N;
        for (int c = 1; c < combos; ++c) {
            Box B{};
            for (int d = 0; d < N; ++d) {
                const bool upper = (c >> d) & 1;
                B.lo[d] = upper ? 0.5 * cur[d] : 0.0;
                B.hi[d] = upper ? cur[d] : 0.5 * cur[d];
            }
            s += box_gl(gs, N, B);
        }
        level_sum[k] = s;
        total += s;
        for (int d = 0; d < N; ++d) cur[d] *= 0.5;
        if (k >= 8 && level_sum[k] < 1e-250) break; // dead tail
        // Converged: the geometric remainder is below rounding noise, the
        // extrapolation below accounts for it.
        if (k >= 12 && level_sum[k] < 1e-12 * total) {
            ++k;
            break;
        }
    }
    QuadResult out;
    const int last = std::min(k, kLevels - 1);
    if (last >= 8 && level_sum[last] >= 1e-250) {
        double rho = 0.0;
        int cnt = 0;
        for (int j = last - 4; j < last; ++j) {
            if (level_sum[j] > 0.0) {
                rho += level_sum[j + 1] / level_sum[j];
                ++cnt;
            }
        }
        rho = cnt ? rho / cnt : 0.0;
        if (rho >= 0.9995) {
            out.divergent = true;
            out.value = kInf;
            return out;
        }
        const double tail = level_sum[last] * rho / (1.0 - rho);
        total += tail;
        out.error = tail * 0.05 + 1e-14 * total;
    }
    out.value = total;
    return out;
}

// Integral of gs(|x|) over an axis-aligned box; boxes containing the origin
// split at it so every singular piece has the origin at a corner.
QuadResult cube_integral(const std::function<double(double)>& gs, int N, const Box& B) {
    bool touches = true;
    for (int d = 0; d < N; ++d)
        if (B.lo[d] > 0.0 || B.hi[d] < 0.0) touches = false;
    if (!touches) {
        // Mirror into the positive orthant where needed, then GL directly.
        return {box_gl(gs, N, B), 0.0, true, false};
    }
    QuadResult out;
    const int combos = 1 << N;
    for (int c = 0; c < combos; ++c) {
        double ext[3] = {0, 0, 0};
        bool empty = false;
        for (int d = 0; d < N; ++d) {
            const bool upper = (c >> d) & 1;
            ext[d] = upper ? B.hi[d] : -B.lo[d];
            if (!(ext[d] > 0.0)) empty = true;
        }
        if (empty) continue;
        QuadResult piece = corner_refined(gs, N, ext);
        if (piece.divergent) return piece;
        out.value += piece.value;
        out.error += piece.error;
    }
    return out;
}

} // namespace

ConditionReport sawyer_wheeden_sup(const RadialProfile& g, double s, int N, double p,
                                   double q, const CubeFamilySpec& window) {
    if (!(s > 1.0)) throw std::invalid_argument("sawyer_wheeden_sup: s > 1");
    if (!(q >= p)) throw std::invalid_argument("sawyer_wheeden_sup: regime is q >= p");
    if (N < 1 || N > 3) throw std::invalid_argument("sawyer_wheeden_sup: N in {1,2,3}");
    const double al = alpha(N, p, q);
    if (!(al > 0.0)) throw std::invalid_argument("sawyer_wheeden_sup: alpha(p,q) <= 0");
    const double exponent = 1.0 / al - 1.0 / s; // 1/alpha may be 0 at the pole

    auto gs = [&](double r) {
        const double v = std::fabs(g(r));
        return v > 0.0 ? std::pow(v, s) : 0.0;
    };

    struct Cube {
        double center;
        double side;
    };
    std::vector<Cube> cubes;
    const int J = window.max_level;
    for (int j = -J; j <= J; ++j) {
        const double side = std::ldexp(1.0, j);
        cubes.push_back({0.0, side});
        for (int i = 1; i < window.grid_points; ++i) {
            const double c = window.half_width * double(i) / double(window.grid_points - 1);
            cubes.push_back({c, side});
        }
    }

    ConditionReport rep;
    rep.regime = "SW1";
    par::MaxLoc m = par::max(cubes.size(), [&](std::size_t i) {
        Box B{};
        B.lo[0] = cubes[i].center - 0.5 * cubes[i].side;
        B.hi[0] = cubes[i].center + 0.5 * cubes[i].side;
        for (int d = 1; d < N; ++d) {
            B.lo[d] = -0.5 * cubes[i].side;
            B.hi[d] = 0.5 * cubes[i].side;
        }
        const QuadResult I = cube_integral(gs, N, B);
        const double volume = std::pow(cubes[i].side, N);
        return I.divergent ? kInf : std::pow(volume, exponent) * std::pow(I.value, 1.0 / s);
    });
    rep.constant = m.value;
    rep.finite = std::isfinite(m.value);
    rep.implied_inequality_constant = m.value;
    if (!rep.finite)
        rep.note = "divergent on cube side " + std::to_string(cubes[m.index].side) +
                   " centered at " + std::to_string(cubes[m.index].center);
    else
        rep.note = "sup at cube side " + std::to_string(cubes[m.index].side) +
                   " centered at " + std::to_string(cubes[m.index].center);
    return rep;
}

namespace {

struct OdeState {
    double phi;
    double flux; // B phi'
};

} // namespace

BesselPairReport bessel_pair_check(const RadialProfile& g, const RadialProfile& h, double R,
                                   int N, std::vector<double> eps_list) {
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::invalid_argument("bessel_pair_check: finite R > 0");
    if (eps_list.empty()) throw std::invalid_argument("bessel_pair_check: eps list empty");
    auto B = [&](double r) { return std::pow(r, N - 1) * g(r); };
    // log-space product: r^(N-1) and h(r) can over/underflow individually at
    // depths where their product is still perfectly representable
    auto H = [&](double r) {
        const double lh = h.log_value(r) + (N - 1) * std::log(r);
        if (lh == -kInf) return 0.0;
        return std::isfinite(lh) ? std::exp(lh) : kInf;
    };

    BesselPairReport rep;
    DecadeIntegral inv(
        [&](double r) {
            const double b = B(r);
            return b > 0.0 ? 1.0 / b : kInf;
        },
        0.0, R, 0.5 * R);
    rep.integral_1_infinite = inv.lower_divergent() || inv.total().divergent;
    DecadeIntegral hh(H, 0.0, R, 0.5 * R);
    rep.integral_2_finite = !hh.total().divergent && std::isfinite(hh.total().value);

    bool all_positive = true;
    for (std::size_t e = 0; e < eps_list.size(); ++e) {
        const double eps = eps_list[e];
        if (!(eps > 0.0) || !(eps < 0.25 * R))
            throw std::invalid_argument("bessel_pair_check: eps out of range");
        const double r_end = R - eps;
        const bool record = e + 1 == eps_list.size();
        if (record) rep.solution_samples.clear();

        // Cash-Karp RK45 on y = (phi, B phi').
        auto rhs = [&](double r, const OdeState& y) {
            const double b = B(r);
            return OdeState{b > 0.0 ? y.flux / b : 0.0, -H(r) * y.phi};
        };
        OdeState y{1.0, 0.0};
        double r = eps;
        double step = (r_end - eps) * 1e-6;
        const double tol = 1e-10;
        bool positive = true;
        long iters = 0;
        const long max_iters = 4000000;
        double next_sample = eps;
        while (r < r_end && positive) {
            if (++iters > max_iters) {
                rep.note = "step budget exhausted near r=" + std::to_string(r);
                positive = false;
                break;
            }
            step = std::min(step, r_end - r);
            static const double a2 = 1.0 / 5, a3 = 3.0 / 10, a4 = 3.0 / 5, a5 = 1.0,
                                a6 = 7.0 / 8;
            static const double b21 = 1.0 / 5;
            static const double b31 = 3.0 / 40, b32 = 9.0 / 40;
            static const double b41 = 3.0 / 10, b42 = -9.0 / 10, b43 = 6.0 / 5;
            static const double b51 = -11.0 / 54, b52 = 5.0 / 2, b53 = -70.0 / 27,
                                b54 = 35.0 / 27;
            static const double b61 = 1631.0 / 55296, b62 = 175.0 / 512, b63 = 575.0 / 13824,
                                b64 = 44275.0 / 110592, b65 = 253.0 / 4096;
            static const double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594,
                                c6 = 512.0 / 1771;
            static const double d1 = c1 - 2825.0 / 27648, d3 = c3 - 18575.0 / 48384,
                                d4 = c4 - 13525.0 / 55296, d5 = -277.0 / 14336,
                                d6 = c6 - 1.0 / 4;
            auto ax = [](const OdeState& u, double f, const OdeState& k) {
                return OdeState{u.phi + f * k.phi, u.flux + f * k.flux};
            };
            OdeState k1 = rhs(r, y);
            OdeState k2 = rhs(r + a2 * step, ax(y, step * b21, k1));
            OdeState k3 = rhs(r + a3 * step,
                              {y.phi + step * (b31 * k1.phi + b32 * k2.phi),
                               y.flux + step * (b31 * k1.flux + b32 * k2.flux)});
            OdeState k4 = rhs(r + a4 * step,
                              {y.phi + step * (b41 * k1.phi + b42 * k2.phi + b43 * k3.phi),
                               y.flux + step * (b41 * k1.flux + b42 * k2.flux + b43 * k3.flux)});
            OdeState k5 = rhs(
                r + a5 * step,
                {y.phi + step * (b51 * k1.phi + b52 * k2.phi + b53 * k3.phi + b54 * k4.phi),
                 y.flux + step * (b51 * k1.flux + b52 * k2.flux + b53 * k3.flux +
                                  b54 * k4.flux)});
            OdeState k6 =
                rhs(r + a6 * step,
                    {y.phi + step * (b61 * k1.phi + b62 * k2.phi + b63 * k3.phi +
                                     b64 * k4.phi + b65 * k5.phi),
                     y.flux + step * (b61 * k1.flux + b62 * k2.flux + b63 * k3.flux +
                                      b64 * k4.flux + b65 * k5.flux)});
            OdeState y5{y.phi + step * (c1 * k1.phi + c3 * k3.phi + c4 * k4.phi + c6 * k6.phi),
                        y.flux +
                            step * (c1 * k1.flux + c3 * k3.flux + c4 * k4.flux + c6 * k6.flux)};
            const double err_phi = step * (d1 * k1.phi + d3 * k3.phi + d4 * k4.phi +
                                           d5 * k5.phi + d6 * k6.phi);
            const double err_flux = step * (d1 * k1.flux + d3 * k3.flux + d4 * k4.flux +
                                            d5 * k5.flux + d6 * k6.flux);
            const double scale_phi = std::fabs(y.phi) + std::fabs(step * k1.phi) + 1e-30;
            const double scale_flux = std::fabs(y.flux) + std::fabs(step * k1.flux) + 1e-30;
            const double err = std::max(std::fabs(err_phi) / scale_phi,
                                        std::fabs(err_flux) / scale_flux) /
                               tol;
            if (err > 1.0) {
                step *= std::max(0.1, 0.9 * std::pow(err, -0.25));
                continue;
            }
            const double r_new = r + step;
            if (y5.phi <= 0.0) {
                // Linear bracket of the zero within the accepted step.
                const double frac = y.phi / (y.phi - y5.phi);
                rep.failure_radius = r + frac * step;
                positive = false;
            }
            r = r_new;
            y = y5;
            if (record && (r >= next_sample || r >= r_end)) {
                rep.solution_samples.emplace_back(r, y.phi);
                next_sample = r * 1.2 + 1e-3 * R;
            }
            step *= std::min(5.0, 0.9 * std::pow(std::max(err, 1e-4), -0.2));
        }
        all_positive = all_positive && positive;
    }
    rep.is_bessel_pair = all_positive;
    return rep;
}

NecessaryReport necessary_check_radial(const RadialProfile& g, int N, double p, double q,
                                       double R) {
    const bool conformal = !(double(N) > p);
    if (conformal) {
        if (double(N) != p || !(q > p) || !std::isfinite(R))
            throw std::invalid_argument(
                "necessary_check_radial: N = p needs q > p and finite R");
    } else {
        const double ps = p_star(N, p);
        if (!(q >= p) || !(q <= ps))
            throw std::invalid_argument("necessary_check_radial: q in [p, p*]");
    }
    Domain dom = std::isfinite(R) ? Domain::ball(R) : Domain::full();
    Rearrangement re;
    try {
        re = Rearrangement::radial_shortcut(g, N, dom);
    } catch (const std::exception&) {
        re = Rearrangement::generic(g, N, dom);
    }
    const double omega = dom.measure(N);

    NecessaryReport out;
    if (re.maximal_divergent()) {
        out.passes = false;
        out.sup_value = kInf;
        return out;
    }
    std::function<double(double)> fn;
    if (conformal) {
        const double e = q / (double(N) / (N - 1.0));
        fn = [&, e](double t) {
            return t * std::pow(std::log(omega / t), e) * re.f_star_star(t);
        };
    } else {
        const double al = alpha(N, p, q);
        const double e = std::isfinite(al) ? 1.0 / al : 0.0;
        fn = [&, e](double t) { return std::pow(t, e) * re.f_star_star(t); };
    }
    const double hi = std::isfinite(omega) ? omega * (1.0 - 1e-6) : re.anchor() * 1e40;
    SupOptions so;
    so.open_hi = !std::isfinite(omega);
    SupResult s = grid_sup(fn, re.anchor() * 1e-40, hi, so);
    out.passes = s.finite && std::isfinite(s.value);
    out.sup_value = s.finite ? s.value : kInf;
    return out;
}

} // namespace hardy
