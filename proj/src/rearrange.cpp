#include "hardy/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hardy {

// ---------------------------------------------------------------------------
// StepRearrangement

StepRearrangement StepRearrangement::from_cells(std::vector<double> values,
                                                std::vector<double> measures,
                                                double ambient) {
    if (values.size() != measures.size())
        throw std::invalid_argument("step rearrangement: size mismatch");
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
    StepRearrangement out;
    out.ambient = ambient;
    double t = 0.0, Fv = 0.0;
    for (std::size_t i : idx) {
        if (!(values[i] > 0.0)) continue; // zero cells merge into the tail
        if (!(measures[i] > 0.0)) continue;
        t += measures[i];
        Fv += values[i] * measures[i];
        if (!out.val.empty() && out.val.back() == values[i]) {
            out.cum.back() = t;
            out.Fcum.back() = Fv;
        } else {
            out.val.push_back(values[i]);
            out.cum.push_back(t);
            out.Fcum.push_back(Fv);
        }
    }
    return out;
}

double StepRearrangement::f_star(double t) const {
    if (t < 0.0) return val.empty() ? 0.0 : val.front();
    auto it = std::upper_bound(cum.begin(), cum.end(), t);
    if (it == cum.end()) return 0.0;
    return val[static_cast<std::size_t>(it - cum.begin())];
}

double StepRearrangement::F(double t) const {
    if (t <= 0.0 || val.empty()) return 0.0;
    auto it = std::upper_bound(cum.begin(), cum.end(), t);
    if (it == cum.end()) return Fcum.back();
    const std::size_t i = static_cast<std::size_t>(it - cum.begin());
    const double left = i == 0 ? 0.0 : cum[i - 1];
    const double Fleft = i == 0 ? 0.0 : Fcum[i - 1];
    return Fleft + val[i] * (t - left);
}

double StepRearrangement::power_moment(double c, double e, double T) const {
    double out = 0.0;
    double left = 0.0;
    auto seg = [&](double lo, double hi) {
        if (c == -1.0) return std::log(hi / lo);
        return (std::pow(hi, c + 1.0) - std::pow(lo, c + 1.0)) / (c + 1.0);
    };
    for (std::size_t i = 0; i < val.size(); ++i) {
        const double right = std::min(cum[i], T);
        if (right <= left) break;
        if (c <= -1.0 && left == 0.0) return kInf; // t^c not integrable at 0
        out += std::pow(val[i], e) * seg(std::max(left, 1e-300), right);
        left = cum[i];
        if (left >= T) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// distribution

namespace {

// Monotone-branch decomposition of a profile on a fixed window. The interior
// extrema are located once by a sign scan on a log grid plus golden-section
// refinement; a level query then costs one bisection per sign-changing branch
// instead of a fresh grid sweep. Assumes the scan resolution separates the
// extrema, as the old per-level sweep did for its crossings.
class LevelScanner {
public:
    LevelScanner(RadialProfile g, double lo, double hi) : g_(std::move(g)) {
        constexpr int kScan = 4096;
        const double llo = std::log(lo), lhi = std::log(hi);
        std::vector<double> r(kScan + 1), v(kScan + 1);
        for (int i = 0; i <= kScan; ++i) {
            r[i] = std::exp(llo + (lhi - llo) * i / static_cast<double>(kScan));
            v[i] = g_(r[i]);
        }
        edge_.push_back(lo);
        int dir = 0;    // sign of the last nonzero increment
        int dir_at = 0; // grid index where that increment ended
        for (int i = 1; i <= kScan; ++i) {
            const double d = v[i] - v[i - 1];
            const int sd = d > 0.0 ? 1 : d < 0.0 ? -1 : 0;
            if (sd == 0) continue;
            if (dir != 0 && sd != dir)
                edge_.push_back(refine(r[dir_at - 1], r[i], dir > 0));
            dir = sd;
            dir_at = i;
        }
        edge_.push_back(hi);
        val_.reserve(edge_.size());
        for (double e : edge_) val_.push_back(g_(e));
    }

    // All crossings of g = s on the window, ascending.
    std::vector<double> crossings(double s) const {
        std::vector<double> out;
        for (std::size_t i = 0; i + 1 < edge_.size(); ++i) {
            const double da = val_[i] - s, db = val_[i + 1] - s;
            if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)) {
                // log coordinate keeps the root relatively precise at any scale
                const double u = bisect(
                    [&](double x) { return g_(std::exp(x)) - s; },
                    std::log(edge_[i]), std::log(edge_[i + 1]), 1e-13);
                out.push_back(std::exp(u));
            } else if (db == 0.0 && da != 0.0) {
                out.push_back(edge_[i + 1]);
            }
        }
        return out;
    }

private:
    // Extremum of a weakly unimodal stretch, by golden section in log radius.
    double refine(double a, double b, bool want_max) const {
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double la = std::log(a), lb = std::log(b);
        double x1 = lb - gr * (lb - la), x2 = la + gr * (lb - la);
        double f1 = g_(std::exp(x1)), f2 = g_(std::exp(x2));
        for (int it = 0; it < 90 && lb - la > 1e-13; ++it) {
            const bool drop_left = want_max ? f1 < f2 : f1 > f2;
            if (drop_left) {
                la = x1; x1 = x2; f1 = f2;
                x2 = la + gr * (lb - la); f2 = g_(std::exp(x2));
            } else {
                lb = x2; x2 = x1; f2 = f1;
                x1 = lb - gr * (lb - la); f1 = g_(std::exp(x1));
            }
        }
        return std::exp(0.5 * (la + lb));
    }

    RadialProfile g_;
    std::vector<double> edge_; // window ends plus interior extrema, ascending
    std::vector<double> val_;  // g at each edge
};

struct LevelWindow {
    double lo = 0.0, hi = 0.0; // profile domain ∩ spatial domain
    double scan_lo = 0.0, scan_hi = 0.0;
    double shell = 0.0;
    bool empty = true;
};

LevelWindow level_window(const RadialProfile& g, int dim, const Domain& dom) {
    LevelWindow w;
    w.lo = std::max(dom.a, g.a);
    w.hi = std::min(dom.b, g.b);
    if (!(w.hi > w.lo)) return w;
    w.empty = false;
    w.shell = dom.sigma * unit_ball_volume(dim);
    // Scan bounds: clip unbounded ends where a decaying profile stays below s.
    w.scan_lo = w.lo > 0.0 ? w.lo : w.hi < kInf ? w.hi * 1e-24 : 1e-24;
    w.scan_hi = std::isfinite(w.hi) ? w.hi : std::max(1.0, w.scan_lo) * 1e24;
    return w;
}

// Walk the partition induced by the crossings and add up shells where g > s.
MeasureResult measure_above(const RadialProfile& g, int dim, const LevelWindow& w,
                            const LevelScanner& sc, double s) {
    std::vector<double> edges;
    edges.push_back(w.scan_lo);
    for (double c : sc.crossings(s)) edges.push_back(c);
    edges.push_back(w.scan_hi);
    double m = 0.0;
    bool outer_open = false;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double mid = std::sqrt(edges[i] * edges[i + 1]);
        if (g(mid) > s) {
            double l = edges[i], r = edges[i + 1];
            if (i == 0 && w.lo == 0.0) l = 0.0; // open inner end belongs to the set
            if (i + 2 == edges.size() && !std::isfinite(w.hi)) outer_open = true;
            m += w.shell * (std::pow(r, dim) - std::pow(l, dim));
        }
    }
    if (outer_open) return {kInf, false}; // super-level set extends to infinity
    return {m, true};
}

} // namespace

MeasureResult distribution(const RadialProfile& g, int dim, const Domain& dom, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("distribution: level must be positive");
    const LevelWindow w = level_window(g, dim, dom);
    if (w.empty) return {0.0, true};

    if (g.kind == RadialProfile::Kind::Tabulated) {
        double m = 0.0;
        for (std::size_t i = 0; i + 1 < g.tab_r.size(); ++i) {
            const double l = std::max(g.tab_r[i], w.lo), r = std::min(g.tab_r[i + 1], w.hi);
            if (r > l && g.scale * g.tab_v[i] > s)
                m += w.shell * (std::pow(r, dim) - std::pow(l, dim));
        }
        return {m, true};
    }

    const LevelScanner sc(g, w.scan_lo, w.scan_hi);
    return measure_above(g, dim, w, sc, s);
}

// ---------------------------------------------------------------------------
// Rearrangement

const DecadeIntegral& Rearrangement::cumulative() const {
    if (!cumulative_) {
        const double hi = std::isfinite(support_) ? support_ : ambient_;
        auto f = fstar_;
        cumulative_ = std::make_shared<DecadeIntegral>(
            [f](double t) { return f(t); }, 0.0, hi, anchor_, QuadOptions{1e-12, 1e-11, 60});
    }
    return *cumulative_;
}

double Rearrangement::f_star(double t) const { return fstar_(t); }

QuadResult Rearrangement::F(double t) const {
    if (step_) {
        const double v = step_->F(t);
        return {v, 1e-15 * v, true, false};
    }
    return cumulative().lower(std::min(t, std::isfinite(support_) ? support_ : t));
}

double Rearrangement::f_star_star(double t) const {
    if (!(t > 0.0)) return kInf;
    if (step_) return step_->f_star_star(t);
    const QuadResult r = F(t);
    if (r.divergent) return kInf;
    return r.value / t;
}

bool Rearrangement::maximal_divergent() const {
    if (step_) return false;
    return cumulative().lower_divergent();
}

Rearrangement Rearrangement::radial_shortcut(const RadialProfile& g, int dim,
                                             const Domain& dom) {
    const double a = std::max(dom.a, g.a);
    const double b = std::min(dom.b, g.b);
    if (!(b > a)) return steps(StepRearrangement{});
    RadialProfile clip = g.clipped(a, b);
    if (!clip.nonincreasing_hint() && !clip.strictly_decreasing_grid())
        throw std::invalid_argument("radial_shortcut: profile is not decreasing on the domain");
    const double shell = dom.sigma * unit_ball_volume(dim);
    const double aN = std::pow(a, dim);
    const double Tsupp = std::isfinite(b) ? shell * (std::pow(b, dim) - aN) : kInf;

    Rearrangement out;
    out.fstar_ = [clip, shell, aN, dim, Tsupp](double t) {
        if (!(t > 0.0)) t = 0.0;
        if (t >= Tsupp) return 0.0;
        const double r = std::pow(aN + t / shell, 1.0 / dim);
        return clip(r);
    };
    if (clip.has_derivative()) {
        out.deriv_ = [clip, shell, aN, dim, Tsupp](double t) {
            if (!(t > 0.0) || t >= Tsupp) return 0.0;
            const double r = std::pow(aN + t / shell, 1.0 / dim);
            const double drdt = std::pow(aN + t / shell, 1.0 / dim - 1.0) / (dim * shell);
            return clip.deriv(r) * drdt;
        };
    }
    out.ambient_ = dom.measure(dim);
    out.support_ = Tsupp;
    const double r_ref = std::isfinite(b) ? 0.5 * (a + b) : std::max(1.0, 2.0 * a);
    out.anchor_ = std::max(shell * (std::pow(r_ref, dim) - aN), 1e-30);
    return out;
}

Rearrangement Rearrangement::generic(const RadialProfile& g, int dim, const Domain& dom) {
    if (g.kind == RadialProfile::Kind::Tabulated) {
        std::vector<double> values, measures;
        const double shell = dom.sigma * unit_ball_volume(dim);
        for (std::size_t i = 0; i + 1 < g.tab_r.size(); ++i) {
            const double l = std::max(g.tab_r[i], dom.a), r = std::min(g.tab_r[i + 1], dom.b);
            if (r > l) {
                values.push_back(g.scale * g.tab_v[i]);
                measures.push_back(shell * (std::pow(r, dim) - std::pow(l, dim)));
            }
        }
        return steps(StepRearrangement::from_cells(std::move(values), std::move(measures),
                                                   dom.measure(dim)));
    }

    struct LevelCache {
        std::mutex m;
        std::map<double, MeasureResult> mu; // keyed by the log-level probe
    };
    const LevelWindow w = level_window(g, dim, dom);
    const auto scanner =
        w.empty ? nullptr : std::make_shared<LevelScanner>(g, w.scan_lo, w.scan_hi);
    const auto cache = std::make_shared<LevelCache>();
    auto mu = [g, dim, w, scanner, cache](double u) {
        if (w.empty) return MeasureResult{0.0, true};
        {
            std::lock_guard<std::mutex> lk(cache->m);
            const auto it = cache->mu.find(u);
            if (it != cache->mu.end()) return it->second;
        }
        const MeasureResult r = measure_above(g, dim, w, *scanner, std::exp(u));
        std::lock_guard<std::mutex> lk(cache->m);
        cache->mu.emplace(u, r);
        return r;
    };
    Rearrangement out;
    out.fstar_ = [mu](double t) {
        if (t < 0.0) return kNaN;
        if (!(t > 0.0)) t = 0.0;
        double ulo = std::log(1e-300), uhi = std::log(1e300);
        const MeasureResult top = mu(uhi);
        if (!(top.value <= t)) return kInf; // unbounded profile of infinite measure
        const MeasureResult bot = mu(ulo);
        if (bot.finite && bot.value <= t) return 0.0;
        // Smallest level s with mu(s) <= t, by bisection in log s. The probes
        // land on the canonical midpoints of the fixed initial bracket, so
        // queries with nearby values share most of their probe path through
        // the cache; the loop bottoms out where midpoints stop resolving.
        while (uhi - ulo > 1e-13) {
            const double um = 0.5 * (ulo + uhi);
            if (!(um > ulo) || !(um < uhi)) break;
            const MeasureResult m = mu(um);
            if (m.finite && m.value <= t)
                uhi = um;
            else
                ulo = um;
        }
        return std::exp(uhi);
    };
    out.ambient_ = dom.measure(dim);
    const double a = std::max(dom.a, g.a), b = std::min(dom.b, g.b);
    const double shell = dom.sigma * unit_ball_volume(dim);
    out.support_ = std::isfinite(b) && b > a
                       ? shell * (std::pow(b, dim) - std::pow(a, dim))
                       : kInf;
    const double r_ref = std::isfinite(b) ? 0.5 * (a + b) : std::max(1.0, 2.0 * a);
    out.anchor_ = std::max(shell * (std::pow(r_ref, dim) - std::pow(a, dim)), 1e-30);
    return out;
}

CellData shell_cells(const RadialProfile& g, int dim, const Domain& dom,
                     int per_decade, double lo, double hi) {
    if (per_decade < 1) throw std::invalid_argument("shell_cells: per_decade >= 1");
    const double a = std::max({dom.a, g.a, lo});
    const double b = std::min({dom.b, g.b, hi});
    CellData out;
    if (!(b > a)) return out;
    const double shell = dom.sigma * unit_ball_volume(dim);
    const double ulo = std::log(std::max(a, hi * 1e-300)), uhi = std::log(b);
    const std::size_t n =
        static_cast<std::size_t>(std::ceil((uhi - ulo) / std::log(10.0) * per_decade)) + 1;
    double r_prev = a;
    for (std::size_t i = 1; i <= n; ++i) {
        const double r = i == n ? b : std::exp(ulo + (uhi - ulo) * double(i) / double(n));
        const double v = g(std::sqrt(r_prev * r));
        const double m = shell * (std::pow(r, dim) - std::pow(r_prev, dim));
        if (v > 0.0 && m > 0.0) {
            out.value.push_back(v);
            out.measure.push_back(m);
        }
        r_prev = r;
    }
    return out;
}

Rearrangement Rearrangement::steps(StepRearrangement s) {
    Rearrangement out;
    auto sp = std::make_shared<StepRearrangement>(std::move(s));
    out.step_ = sp;
    out.fstar_ = [sp](double t) { return sp->f_star(t); };
    out.ambient_ = sp->ambient;
    out.support_ = sp->support() > 0.0 ? sp->support() : 1.0;
    out.anchor_ = std::max(0.5 * out.support_, 1e-30);
    return out;
}

Rearrangement Rearrangement::custom(std::function<double(double)> f_star, double ambient,
                                    double support_scale, std::function<double(double)> deriv) {
    Rearrangement out;
    out.fstar_ = std::move(f_star);
    out.deriv_ = std::move(deriv);
    out.ambient_ = ambient;
    out.support_ = support_scale;
    out.anchor_ = std::isfinite(support_scale) ? 0.5 * support_scale : 1.0;
    return out;
}

} // namespace hardy
