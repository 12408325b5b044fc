#include "hardy/quadrature.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "hardy/par.hpp"

namespace hardy {

namespace {

struct SimpsonState {
    const std::function<double(double)>* f;
    int max_depth;
    double err = 0.0;
    bool converged = true;

    double recurse(double a, double m, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = (*f)(lm), frm = (*f)(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (!std::isfinite(delta)) {
            // Non-finite samples: refinement cannot converge, report and bail.
            converged = false;
            err = kInf;
            return left + right;
        }
        if (std::fabs(delta) <= 15.0 * tol || depth >= max_depth) {
            if (std::fabs(delta) > 15.0 * tol) {
                converged = false;
                err += std::fabs(delta);
            } else {
                err += std::fabs(delta) / 15.0;
            }
            return left + right + delta / 15.0;
        }
        return recurse(a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               recurse(m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     QuadOptions opt) {
    if (!(b > a)) return {0.0, 0.0, true, false};
    SimpsonState st{&f, opt.max_depth};
    const double m = 0.5 * (a + b);
    const double fa = f(a + 1e-14 * (b - a)), fm = f(m), fb = f(b - 1e-14 * (b - a));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::fabs(whole));
    const double v = st.recurse(a, m, b, fa, fm, fb, whole, tol, 0);
    return {v, st.err, st.converged, false};
}

// ---------------------------------------------------------------------------
// DecadeIntegral

namespace {

// Integral over (a, b), 0 < a < b < inf, taken in the log coordinate so that
// power-type behavior near 0 and infinity is smooth for the Simpson rule.
QuadResult log_piece(const std::function<double(double)>& f, double a, double b,
                     QuadOptions opt) {
    if (!(b > a)) return {0.0, 0.0, true, false};
    auto g = [&f](double u) {
        const double r = std::exp(u);
        return f(r) * r;
    };
    return integrate(g, std::log(a), std::log(b), opt);
}

struct TailModel {
    double value = 0.0;
    double error = 0.0;
    bool divergent = false;
};

// Extrapolates sum_{j>J} I_j from the trailing window of decade increments.
// Geometric model when the ratios settle below 1 (exact for pure powers),
// power-law model I_j ~ c j^-m otherwise; m <= 1.05 cannot be certified
// summable and is reported divergent.
TailModel fit_tail(const std::vector<double>& inc, double scale) {
    TailModel tm;
    const std::size_t n = inc.size();
    if (n == 0) return tm;
    const double last = std::fabs(inc.back());
    if (!std::isfinite(last)) {
        tm.divergent = true; // integrand blew up inside the last decade
        return tm;
    }
    if (last <= 1e-250 || last <= 1e-16 * scale) return tm;
    const std::size_t W = std::min<std::size_t>(10, n);
    double rmin = kInf, rmax = 0.0;
    bool usable = true;
    for (std::size_t i = n - W; i + 1 < n; ++i) {
        const double prev = std::fabs(inc[i]);
        if (prev == 0.0) { usable = false; break; }
        const double r = std::fabs(inc[i + 1]) / prev;
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    if (!usable || W < 3) {
        tm.divergent = true;
        return tm;
    }
    if (rmax < 0.995) {
        // Trailing ratios below 1 come either from geometric decade mass
        // (t^delta endpoint: constant ratio) or from a log-type tail
        // I_j ~ j^-m whose ratios keep drifting toward 1. Only the former may
        // use the geometric sum; a mid-depth ratio separates the two.
        bool stable = true;
        const std::size_t mid = n / 2;
        if (mid >= 2 && mid + 1 < n - W) {
            const double a0 = std::fabs(inc[mid - 2]);
            const double a1 = std::fabs(inc[mid + 1]);
            if (a0 > 0.0 && a1 > 0.0) {
                const double r_mid = std::cbrt(a1 / a0);
                const double r_deep = std::sqrt(rmin * rmax);
                stable = 1.0 - r_mid < 1.5 * (1.0 - r_deep);
            }
        }
        if (stable) {
            const double rho = std::sqrt(rmin * rmax);
            tm.value = inc.back() * rho / (1.0 - rho);
            tm.error =
                std::fabs(tm.value) * std::max(rmax / rmin - 1.0, 1e-10) / (1.0 - rmax);
            return tm;
        }
    }
    if (rmin >= 1.0) {
        tm.divergent = true;
        return tm;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = n - W; i < n; ++i) {
        const double x = std::log(static_cast<double>(i + 1));
        const double y = std::log(std::fabs(inc[i]));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double W_ = static_cast<double>(W);
    const double m = -(W_ * sxy - sx * sy) / (W_ * sxx - sx * sx);
    if (!(m > 1.05)) {
        tm.divergent = true;
        return tm;
    }
    tm.value = inc.back() * static_cast<double>(n) / (m - 1.0);
    tm.error = std::fabs(tm.value) * (0.2 + 2.0 / static_cast<double>(n));
    return tm;
}

void accumulate(QuadResult& acc, const QuadResult& piece) {
    acc.value += piece.value;
    acc.error += piece.error;
    acc.converged = acc.converged && piece.converged;
    acc.divergent = acc.divergent || piece.divergent;
}

} // namespace

struct DecadeIntegral::Impl {
    std::function<double(double)> f;
    double lo, hi, anchor;
    QuadOptions opt;

    // down[j] covers (max(lo, anchor*10^-(j+1)), anchor*10^-j];
    // up[j] covers (anchor*10^j, min(hi, anchor*10^(j+1))].
    std::vector<QuadResult> down, up;
    TailModel tail_down, tail_up;
    bool down_complete = false; // decades reach lo (or the remainder is dead)
    bool up_complete = false;
    static constexpr int kMaxDecades = 240;

    double edge_down(std::size_t j) const {
        return anchor * std::pow(10.0, -static_cast<double>(j));
    }
    double edge_up(std::size_t j) const {
        return anchor * std::pow(10.0, static_cast<double>(j));
    }

    QuadOptions decade_opt(double scale) const {
        QuadOptions o = opt;
        // Scale the absolute floor down with the local piece magnitude:
        // decades far below the peak are still consumed on their own scale by
        // the partial sums, so a fixed floor would freeze refinement there.
        o.abs_tol = std::max(opt.abs_tol * 1e-2 * std::min(1.0, scale),
                             opt.rel_tol * scale * 1e-3);
        o.rel_tol = opt.rel_tol * 0.1;
        o.max_depth = std::min(opt.max_depth, 48);
        return o;
    }

    void build() {
        // Tolerance for each decade tracks the previous decade's magnitude,
        // not the running peak: partial sums over deep decades are consumed
        // on their own scale by lower_at/upper_at, so a peak-relative abs_tol
        // would freeze refinement there and leave a same-signed relative bias.
        double scale = 0.0;
        double peak = 0.0;
        std::vector<double> inc;
        for (int j = 0; j < kMaxDecades; ++j) {
            const double top = edge_down(static_cast<std::size_t>(j));
            double bot = edge_down(static_cast<std::size_t>(j) + 1);
            bool final_piece = false;
            if (bot <= lo * (1.0 + 1e-14) || bot <= 1e-300) {
                bot = std::max(lo, 1e-300);
                final_piece = true;
            }
            down.push_back(bot < top ? log_piece(f, bot, top, decade_opt(scale)) : QuadResult{});
            inc.push_back(down.back().value);
            scale = std::fabs(down.back().value);
            peak = std::max(peak, scale);
            if (final_piece) {
                down_complete = true;
                break;
            }
            if (!std::isfinite(down.back().value)) break; // blow-up: side is divergent
            if (std::fabs(down.back().value) <= 1e-250 && j > 4) break;
        }
        if (!down_complete) {
            tail_down = fit_tail(inc, peak);
            if (!tail_down.divergent && std::fabs(tail_down.value) <= 1e-250) down_complete = true;
        }

        scale = 0.0;
        peak = 0.0;
        inc.clear();
        for (int j = 0; j < kMaxDecades; ++j) {
            const double bot = edge_up(static_cast<std::size_t>(j));
            double top = edge_up(static_cast<std::size_t>(j) + 1);
            bool final_piece = false;
            if (top >= hi * (1.0 - 1e-14) || top >= 1e300) {
                top = std::min(hi, 1e300);
                final_piece = std::isfinite(hi);
            }
            up.push_back(top > bot ? log_piece(f, bot, top, decade_opt(scale)) : QuadResult{});
            inc.push_back(up.back().value);
            scale = std::fabs(up.back().value);
            peak = std::max(peak, scale);
            if (final_piece) {
                up_complete = true;
                break;
            }
            if (!std::isfinite(up.back().value)) break; // blow-up: side is divergent
            if (std::fabs(up.back().value) <= 1e-250 && j > 4) break;
        }
        if (!up_complete) {
            tail_up = fit_tail(inc, peak);
            if (!tail_up.divergent && std::fabs(tail_up.value) <= 1e-250) up_complete = true;
        }
    }

    // Integral over (lo, t] for t <= anchor. Includes the lower tail.
    QuadResult lower_at(double t) const {
        QuadResult out;
        if (!down_complete) {
            if (tail_down.divergent) return {kInf, kInf, false, true};
            out.value += tail_down.value;
            out.error += tail_down.error;
        }
        if (t <= std::max(lo, 1e-300)) return out;
        const double jr = std::max(0.0, std::log10(anchor / t));
        const std::size_t j = static_cast<std::size_t>(std::floor(jr));
        for (std::size_t i = j + 1; i < down.size(); ++i) accumulate(out, down[i]);
        if (j < down.size()) {
            const double bot = std::max({edge_down(j + 1), lo, 1e-300});
            const double top = std::min(t, edge_down(j));
            if (top > bot)
                accumulate(out, log_piece(f, bot, top, decade_opt(std::fabs(down[j].value))));
        }
        // If t sits below the deepest computed decade the remainder was either
        // dead (contributes nothing) or is unreachable for callers (t would be
        // below anchor*10^-240).
        return out;
    }

    // Integral over (t, hi) for t >= anchor. Includes the upper tail.
    QuadResult upper_at(double t) const {
        QuadResult out;
        if (!up_complete) {
            if (tail_up.divergent) return {kInf, kInf, false, true};
            out.value += tail_up.value;
            out.error += tail_up.error;
        }
        if (t >= hi) return out;
        const double jr = std::max(0.0, std::log10(t / anchor));
        const std::size_t j = static_cast<std::size_t>(std::floor(jr));
        for (std::size_t i = j + 1; i < up.size(); ++i) accumulate(out, up[i]);
        if (j < up.size()) {
            const double top = std::min({edge_up(j + 1), hi, 1e300});
            const double bot = std::max(t, edge_up(j));
            if (top > bot)
                accumulate(out, log_piece(f, bot, top, decade_opt(std::fabs(up[j].value))));
        }
        return out;
    }

    QuadResult sum_down() const { // (lo, anchor]
        QuadResult out;
        if (!down_complete) {
            if (tail_down.divergent) return {kInf, kInf, false, true};
            out.value += tail_down.value;
            out.error += tail_down.error;
        }
        for (const QuadResult& r : down) accumulate(out, r);
        return out;
    }

    QuadResult sum_up() const { // (anchor, hi)
        QuadResult out;
        if (!up_complete) {
            if (tail_up.divergent) return {kInf, kInf, false, true};
            out.value += tail_up.value;
            out.error += tail_up.error;
        }
        for (const QuadResult& r : up) accumulate(out, r);
        return out;
    }
};

DecadeIntegral::DecadeIntegral(std::function<double(double)> f, double lo, double hi,
                               double anchor, QuadOptions opt)
    : impl_(std::make_shared<Impl>()) {
    assert(anchor > 0.0 && std::isfinite(anchor));
    impl_->f = std::move(f);
    impl_->lo = std::max(lo, 0.0);
    impl_->hi = hi;
    impl_->anchor = anchor;
    impl_->opt = opt;
    impl_->build();
}

bool DecadeIntegral::lower_divergent() const {
    return !impl_->down_complete && impl_->tail_down.divergent;
}

bool DecadeIntegral::upper_divergent() const {
    return !impl_->up_complete && impl_->tail_up.divergent;
}

QuadResult DecadeIntegral::lower(double t) const {
    const Impl& im = *impl_;
    if (t <= im.lo) return {};
    if (lower_divergent()) return {kInf, kInf, false, true};
    if (t <= im.anchor) return im.lower_at(t);
    QuadResult out = im.sum_down();
    // Up-side decades fully below t, plus the partial decade containing t.
    const double jr = std::max(0.0, std::log10(t / im.anchor));
    const std::size_t j = static_cast<std::size_t>(std::floor(jr));
    for (std::size_t i = 0; i < j && i < im.up.size(); ++i) accumulate(out, im.up[i]);
    const double bot = im.edge_up(std::min<std::size_t>(j, im.up.size()));
    const double top = std::min(t, im.hi);
    if (top > bot)
        accumulate(out, log_piece(im.f, bot, top,
                                  im.decade_opt(std::fabs(out.value) + out.error)));
    return out;
}

QuadResult DecadeIntegral::upper(double t) const {
    const Impl& im = *impl_;
    if (t >= im.hi) return {};
    if (upper_divergent()) return {kInf, kInf, false, true};
    if (t >= im.anchor) return im.upper_at(t);
    QuadResult out = im.sum_up();
    const double jr = std::max(0.0, std::log10(im.anchor / t));
    const std::size_t j = static_cast<std::size_t>(std::floor(jr));
    for (std::size_t i = 0; i < j && i < im.down.size(); ++i) accumulate(out, im.down[i]);
    const double top = im.edge_down(std::min<std::size_t>(j, im.down.size()));
    const double bot = std::max({t, im.lo, 1e-300});
    if (top > bot)
        accumulate(out, log_piece(im.f, bot, top,
                                  im.decade_opt(std::fabs(out.value) + out.error)));
    return out;
}

QuadResult DecadeIntegral::total() const {
    QuadResult out = impl_->sum_down();
    accumulate(out, impl_->sum_up());
    if (out.divergent) return {kInf, kInf, false, true};
    return out;
}

QuadResult DecadeIntegral::between(double x, double y) const {
    const Impl& im = *impl_;
    x = std::max(x, im.lo);
    y = std::min(y, im.hi);
    if (!(y > x)) return {};
    if (x <= im.lo && im.lo == 0.0) return lower(y);
    // Fresh adaptive pass in the log coordinate: no tails involved and no
    // cancellation from differencing two large cumulatives.
    return log_piece(im.f, std::max(x, 1e-300), y, im.opt);
}

// ---------------------------------------------------------------------------

SupResult grid_sup(const std::function<double(double)>& f, double lo, double hi,
                   SupOptions opt) {
    assert(lo > 0.0 && hi > lo && std::isfinite(hi));
    const double llo = std::log(lo), lhi = std::log(hi);
    const double decades = (lhi - llo) / std::log(10.0);
    std::size_t n = static_cast<std::size_t>(std::ceil(decades * opt.per_decade)) + 1;
    n = std::clamp<std::size_t>(n, 64, opt.max_points);
    const double step = (lhi - llo) / static_cast<double>(n - 1);
    auto at = [&](std::size_t i) { return std::exp(llo + step * static_cast<double>(i)); };

    const par::MaxLoc best = par::max(n, [&](std::size_t i) { return f(at(i)); });

    SupResult out;
    out.value = best.value;
    out.arg = at(best.index);
    if (!std::isfinite(out.value)) {
        out.finite = false;
        return out;
    }

    // Growth toward an open endpoint means the sup is not attained inside any
    // compact window; declare it infinite. A bounded approach flattens below
    // growth_tol at the far end of the 40-decade clip, a power or log growth
    // does not.
    const double probe = std::log(10.0) / 16.0;
    if (opt.open_lo && best.index == 0) {
        const double inner = f(std::exp(llo + probe));
        if (inner > 0.0 && best.value > inner * (1.0 + opt.growth_tol)) {
            out.finite = false;
            return out;
        }
    }
    if (opt.open_hi && best.index == n - 1) {
        const double inner = f(std::exp(lhi - probe));
        if (inner > 0.0 && best.value > inner * (1.0 + opt.growth_tol)) {
            out.finite = false;
            return out;
        }
    }

    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = llo + step * static_cast<double>(best.index == 0 ? 0 : best.index - 1);
    double b = llo + step * static_cast<double>(std::min(best.index + 1, n - 1));
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(std::exp(x1)), f2 = f(std::exp(x2));
    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = f(std::exp(x2));
        } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = f(std::exp(x1));
        }
    }
    if (std::max(f1, f2) > out.value) {
        out.value = std::max(f1, f2);
        out.arg = std::exp(f1 > f2 ? x1 : x2);
    }
    return out;
}

double bisect(const std::function<double(double)>& f, double a, double b, double tol) {
    double fa = f(a);
    const double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    assert(fa * fb < 0.0);
    for (int it = 0; it < 500; ++it) {
        const double m = 0.5 * (a + b);
        if (b - a <= tol * std::max(1.0, std::fabs(m))) return m;
        const double fm = f(m);
        if (fm == 0.0) return m;
        if (fa * fm < 0.0) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

} // namespace hardy
