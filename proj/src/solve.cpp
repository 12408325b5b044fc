#include "hardy/solve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hardy {

void RadialMesh::validate() const {
    if (cells() < 100) throw std::invalid_argument("mesh: need at least 100 cells");
    double prev_h = 0.0;
    for (size_t i = 1; i < r.size(); ++i) {
        const double h = r[i] - r[i - 1];
        if (!(h > 0.0)) throw std::invalid_argument("mesh: nodes must increase");
        if (prev_h > 0.0) {
            const double ratio = std::max(h / prev_h, prev_h / h);
            if (ratio > 1.1000001)
                throw std::invalid_argument("mesh: grading ratio exceeds 1.1");
        }
        prev_h = h;
    }
}

RadialMesh RadialMesh::uniform(double a, double b, int M) {
    if (!(b > a) || !(a >= 0.0)) throw std::invalid_argument("mesh: need 0 <= a < b");
    RadialMesh m;
    m.r.resize(M + 1);
    for (int i = 0; i <= M; ++i) m.r[i] = a + (b - a) * double(i) / M;
    m.dirichlet_left = a > 0.0;
    m.validate();
    return m;
}

RadialMesh RadialMesh::graded(double a, double b, int M, double grading) {
    if (!(b > a) || !(a >= 0.0)) throw std::invalid_argument("mesh: need 0 <= a < b");
    if (!(grading >= 1.0) || !(grading <= 1.1))
        throw std::invalid_argument("mesh: grading in [1, 1.1]");
    // widths grow geometrically from each end toward the middle
    const int Ml = M / 2, Mr = M - Ml;
    std::vector<double> w(M);
    for (int i = 0; i < Ml; ++i) w[i] = std::pow(grading, i);
    for (int i = 0; i < Mr; ++i) w[M - 1 - i] = std::pow(grading, i);
    double sum = 0.0;
    for (double x : w) sum += x;
    RadialMesh m;
    m.r.resize(M + 1);
    m.r[0] = a;
    for (int i = 0; i < M; ++i) m.r[i + 1] = m.r[i] + (b - a) * w[i] / sum;
    m.r[M] = b;
    m.dirichlet_left = a > 0.0;
    m.validate();
    return m;
}

RadialMesh RadialMesh::logarithmic(double rmin, double b, int M) {
    if (!(rmin > 0.0) || !(b > rmin)) throw std::invalid_argument("mesh: need 0 < rmin < b");
    RadialMesh m;
    m.r.resize(M + 1);
    const double q = std::pow(b / rmin, 1.0 / M);
    if (q > 1.1) throw std::invalid_argument("mesh: too few cells for the radial span");
    double x = rmin;
    for (int i = 0; i <= M; ++i, x *= q) m.r[i] = x;
    m.r[M] = b;
    m.dirichlet_left = false; // inner truncation of a domain reaching r = 0
    m.validate();
    return m;
}

namespace {

double signed_pow(double s, double e) {
    return s == 0.0 ? 0.0 : (s > 0.0 ? std::pow(s, e) : -std::pow(-s, e));
}

// Assembled coefficients of the discrete quotient on one mesh.
struct Discrete {
    int M;
    double N, p, q;
    std::vector<double> r, h;
    std::vector<double> c; // cell gradient weights: surf * r_mid^{N-1} * h
    std::vector<double> m; // node volumes: surf * (r_{i+1/2}^N - r_{i-1/2}^N)/N
    std::vector<double> G; // |g| at nodes
    bool dl, dr;

    Discrete(const ExponentContext& ctx, const Domain& dom, const RadialProfile& g,
             const RadialMesh& mesh) {
        mesh.validate();
        M = mesh.cells();
        N = ctx.N;
        p = ctx.p;
        q = ctx.q;
        r = mesh.r;
        dl = mesh.dirichlet_left;
        dr = mesh.dirichlet_right;
        const double surf = N * dom.sigma * unit_ball_volume(ctx.N);
        h.resize(M);
        c.resize(M);
        for (int i = 0; i < M; ++i) {
            h[i] = r[i + 1] - r[i];
            const double mid = 0.5 * (r[i] + r[i + 1]);
            c[i] = surf * std::pow(mid, N - 1.0) * h[i];
        }
        m.assign(M + 1, 0.0);
        G.resize(M + 1);
        double total = 0.0;
        for (int i = 0; i <= M; ++i) {
            const double lo = i == 0 ? r[0] : 0.5 * (r[i - 1] + r[i]);
            const double hi = i == M ? r[M] : 0.5 * (r[i] + r[i + 1]);
            m[i] = surf * (std::pow(hi, N) - std::pow(lo, N)) / N;
            G[i] = std::abs(g(r[i]));
            if (!std::isfinite(G[i])) G[i] = 0.0; // singular node carried by neighbors
            total += m[i] * G[i];
        }
        if (!(total > 0.0))
            throw std::invalid_argument("minimize_rayleigh: weight vanishes on the mesh");
    }

    void enforce_bc(std::vector<double>& u) const {
        if (dl) u.front() = 0.0;
        if (dr) u.back() = 0.0;
    }

    double energy(const std::vector<double>& u) const {
        double J = 0.0;
        for (int i = 0; i < M; ++i) J += c[i] * std::pow(std::abs(u[i + 1] - u[i]) / h[i], p);
        return J;
    }

    double bmass(const std::vector<double>& u) const {
        double B = 0.0;
        for (int i = 0; i <= M; ++i)
            if (u[i] != 0.0) B += m[i] * G[i] * std::pow(std::abs(u[i]), q);
        return B;
    }

    // quotient J / B^{p/q} (scale-invariant)
    double quotient(const std::vector<double>& u) const {
        const double B = bmass(u);
        if (!(B > 0.0)) return kInf;
        return energy(u) / std::pow(B, p / q);
    }

    void grad_energy(const std::vector<double>& u, std::vector<double>& gJ) const {
        gJ.assign(M + 1, 0.0);
        for (int i = 0; i < M; ++i) {
            const double s = (u[i + 1] - u[i]) / h[i];
            const double f = p * c[i] * signed_pow(s, p - 1.0) / h[i];
            gJ[i] -= f;
            gJ[i + 1] += f;
        }
    }

    void grad_bmass(const std::vector<double>& u, std::vector<double>& gB) const {
        gB.assign(M + 1, 0.0);
        for (int i = 0; i <= M; ++i)
            if (u[i] != 0.0) gB[i] = q * m[i] * G[i] * signed_pow(u[i], q - 1.0);
    }

    // Jacobi scale of the energy Hessian, floored to keep the step bounded.
    void diag_scale(const std::vector<double>& u, std::vector<double>& D) const {
        D.assign(M + 1, 0.0);
        double smax = 1e-300;
        for (int i = 0; i < M; ++i)
            smax = std::max(smax, std::abs(u[i + 1] - u[i]) / h[i]);
        const double floor_s = 1e-8 * smax;
        for (int i = 0; i < M; ++i) {
            const double s = std::max(std::abs(u[i + 1] - u[i]) / h[i], floor_s);
            const double w = p * std::max(p - 1.0, 0.1) * c[i] * std::pow(s, p - 2.0) /
                             (h[i] * h[i]);
            D[i] += w;
            D[i + 1] += w;
        }
        double dmax = 0.0;
        for (double x : D) dmax = std::max(dmax, x);
        for (double& x : D) x = std::max(x, 1e-12 * dmax);
    }
};

struct DescentOutcome {
    std::vector<double> u;
    double lambda = kInf;
    int iterations = 0;
    bool converged = false;
    std::vector<double> trajectory;
};

DescentOutcome descend(const Discrete& d, std::vector<double> u, const SolveOptions& opts) {
    d.enforce_bc(u);
    for (double& x : u) x = std::max(x, 0.0);
    double B = d.bmass(u);
    if (!(B > 0.0)) throw std::invalid_argument("minimize_rayleigh: start has zero constraint mass");
    const double inv = std::pow(B, -1.0 / d.q);
    for (double& x : u) x *= inv;

    DescentOutcome out;
    std::vector<double> gJ, gB, D, gR(d.M + 1), trial(d.M + 1);
    double lambda = d.quotient(u);
    out.trajectory.push_back(lambda);
    int stall = 0;
    for (int it = 0; it < opts.max_iters; ++it) {
        d.grad_energy(u, gJ);
        d.grad_bmass(u, gB);
        d.diag_scale(u, D);
        const double J = d.energy(u); // B = 1 after normalization
        double gdot = 0.0, gnorm2 = 0.0;
        for (int i = 0; i <= d.M; ++i) {
            gR[i] = gJ[i] - (d.p / d.q) * J * gB[i];
            if ((d.dl && i == 0) || (d.dr && i == d.M)) gR[i] = 0.0;
            // active-set projection at the nonnegativity bound
            if (u[i] == 0.0 && gR[i] > 0.0) gR[i] = 0.0;
            gdot += gR[i] * gR[i] / D[i];
            gnorm2 += gR[i] * gR[i];
        }
        out.iterations = it + 1;
        if (gdot <= opts.tol * std::max(J, 1e-300)) {
            out.converged = true;
            break;
        }
        double step = opts.step_init;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt, step *= opts.shrink) {
            for (int i = 0; i <= d.M; ++i)
                trial[i] = std::max(u[i] - step * gR[i] / D[i], 0.0);
            d.enforce_bc(trial);
            const double lt = d.quotient(trial);
            if (lt <= lambda - opts.armijo_slope * step * gdot) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            if (++stall >= 3) break; // line search exhausted: stationary to rounding
            continue;
        }
        stall = 0;
        u.swap(trial);
        const double Bn = d.bmass(u);
        const double s = std::pow(Bn, -1.0 / d.q);
        for (double& x : u) x *= s;
        lambda = d.quotient(u);
        if ((out.iterations % opts.trajectory_stride) == 0) out.trajectory.push_back(lambda);
    }
    out.trajectory.push_back(lambda);
    out.lambda = lambda;
    out.u = std::move(u);
    return out;
}

std::vector<double> make_start(int kind, const RadialMesh& mesh) {
    const int M = mesh.cells();
    std::vector<double> u(M + 1);
    const double xc = mesh.dirichlet_left ? 0.5 : 0.25;
    for (int i = 0; i <= M; ++i) {
        const double x = double(i) / M; // index coordinate: log-uniform on log meshes
        switch (kind) {
            case 0: u[i] = mesh.dirichlet_left ? std::min(x, 1.0 - x) : 1.0 - x; break;
            case 1: u[i] = std::exp(-8.0 * (x - xc) * (x - xc)) * (1.0 - x); break;
            default: u[i] = std::sin(M_PI * x); break;
        }
    }
    return u;
}

double residual_impl(const std::vector<double>& u, double lambda, const Discrete& d) {
    double worst = 0.0;
    for (int j = 0; j <= d.M; ++j) {
        if ((d.dl && j == 0) || (d.dr && j == d.M)) continue;
        double a = 0.0, vnorm = 0.0;
        if (j > 0) {
            const double s = (u[j] - u[j - 1]) / d.h[j - 1];
            a += d.c[j - 1] / d.h[j - 1] * signed_pow(s, d.p - 1.0);
            vnorm += d.c[j - 1] * std::pow(1.0 / d.h[j - 1], d.p);
        }
        if (j < d.M) {
            const double s = (u[j + 1] - u[j]) / d.h[j];
            a -= d.c[j] / d.h[j] * signed_pow(s, d.p - 1.0);
            vnorm += d.c[j] * std::pow(1.0 / d.h[j], d.p);
        }
        const double b = d.m[j] * d.G[j] * signed_pow(u[j], d.q - 1.0);
        worst = std::max(worst, std::abs(a - lambda * b) / std::pow(vnorm, 1.0 / d.p));
    }
    return worst;
}

void fill_mass_diagnostics(MinimizerResult& res, const Discrete& d) {
    double total = 0.0;
    std::vector<double> cum(d.M + 1);
    for (int i = 0; i <= d.M; ++i) {
        if (res.u[i] != 0.0) total += d.m[i] * d.G[i] * std::pow(res.u[i], d.q);
        cum[i] = total;
    }
    if (!(total > 0.0)) return;
    const double outer_lo = d.r[d.M] / 10.0;
    double outer = 0.0;
    for (int i = 0; i <= d.M; ++i)
        if (d.r[i] > outer_lo && res.u[i] != 0.0)
            outer += d.m[i] * d.G[i] * std::pow(res.u[i], d.q);
    res.outer_decade_mass = outer / total;
    for (int i = 0; i <= d.M; ++i)
        if (cum[i] >= 0.5 * total) {
            res.half_mass_radius = d.r[i];
            break;
        }
}

} // namespace

MinimizerResult minimize_rayleigh(const ExponentContext& ctx, const Domain& dom,
                                  const RadialProfile& g, const RadialMesh& mesh,
                                  const SolveOptions& opts) {
    validate(ctx);
    if (!(ctx.q > 1.0))
        throw std::invalid_argument("minimize_rayleigh: the Euler-Lagrange form needs q > 1");
    Discrete d(ctx, dom, g, mesh);

    DescentOutcome best;
    std::vector<DescentOutcome> runs(3);
    std::string start_err;
#pragma omp parallel for schedule(static)
    for (int s = 0; s < 3; ++s) {
        try {
            runs[s] = descend(d, make_start(s, mesh), opts);
        } catch (const std::exception& e) {
#pragma omp critical
            start_err = e.what();
        }
    }
    if (!start_err.empty()) throw std::runtime_error("minimize_rayleigh: " + start_err);
    int ibest = 0;
    double lmin = kInf, lmax = 0.0;
    for (int s = 0; s < 3; ++s) {
        lmin = std::min(lmin, runs[s].lambda);
        lmax = std::max(lmax, runs[s].lambda);
        if (runs[s].lambda < runs[ibest].lambda) ibest = s;
    }
    best = std::move(runs[ibest]);

    MinimizerResult res;
    res.r = d.r;
    res.u = std::move(best.u);
    for (double& x : res.u) x = std::abs(x);
    const double B = d.bmass(res.u);
    const double sc = std::pow(B, -1.0 / d.q);
    for (double& x : res.u) x *= sc;
    res.lambda = d.quotient(res.u);
    res.constraint = d.bmass(res.u);
    res.converged = best.converged;
    res.iterations = best.iterations;
    res.trajectory = std::move(best.trajectory);
    res.residual = residual_impl(res.u, res.lambda, d);
    fill_mass_diagnostics(res, d);

    std::ostringstream diag;
    if ((lmax - lmin) > 1e-3 * std::max(lmin, 1e-300))
        diag << "starts disagree by " << (lmax - lmin) / lmin << " relative; ";
    if (!res.converged) diag << "iteration budget reached before stationarity; ";
    const bool truncated = !std::isfinite(dom.b) && std::isfinite(d.r.back());
    if (truncated && res.outer_decade_mass > 0.5) {
        res.attained = false;
        diag << "constraint mass concentrates at the truncation boundary; ";
    }
    res.diagnostics = diag.str();
    return res;
}

double weak_residual(const MinimizerResult& res, const ExponentContext& ctx,
                     const RadialProfile& g, const RadialMesh& mesh) {
    if (res.u.size() != mesh.r.size())
        throw std::invalid_argument("weak_residual: mesh does not match the result");
    Discrete d(ctx, Domain::full(), g, mesh);
    return residual_impl(res.u, res.lambda, d);
}

MinimizerResult homogeneity_rescale(const MinimizerResult& res,
                                    const ExponentContext& ctx, double lambda_target) {
    if (ctx.q == ctx.p)
        throw std::invalid_argument("homogeneity_rescale: q = p is the eigenvalue case");
    if (!(lambda_target > 0.0))
        throw std::invalid_argument("homogeneity_rescale: lambda_target > 0");
    const double c = std::pow(lambda_target / res.lambda, 1.0 / (ctx.p - ctx.q));
    MinimizerResult out = res;
    for (double& x : out.u) x *= c;
    out.lambda = lambda_target;
    out.constraint = res.constraint * std::pow(c, ctx.q);
    out.residual = res.residual * std::pow(c, ctx.p - 1.0);
    out.diagnostics += "rescaled by " + std::to_string(c) + "; ";
    return out;
}

ContinuationResult continuation_solve(const ExponentContext& ctx, const Domain& dom,
                                      const RadialProfile& g,
                                      const std::vector<double>& R_list, int M,
                                      const SolveOptions& opts) {
    if (R_list.empty()) throw std::invalid_argument("continuation_solve: empty radius list");
    if (std::isfinite(dom.b))
        throw std::invalid_argument("continuation_solve: domain is already bounded");
    ContinuationResult out;
    for (double R : R_list) {
        if (!(R > dom.a)) throw std::invalid_argument("continuation_solve: radius inside the domain");
        const double rmin = dom.a > 0.0 ? dom.a : 1e-8;
        RadialMesh mesh = RadialMesh::logarithmic(rmin, R, M);
        mesh.dirichlet_left = dom.a > 0.0;
        out.stages.push_back(minimize_rayleigh(ctx, dom, g, mesh, opts));
        out.R_values.push_back(R);
    }
    out.lambda = out.stages.back().lambda;

    std::ostringstream diag;
    int escapes = 0;
    for (const MinimizerResult& s : out.stages)
        if (s.outer_decade_mass > 0.5) ++escapes;
    if (escapes >= 2 || out.stages.back().outer_decade_mass > 0.5) {
        out.attained = false;
        diag << "outer-decade mass exceeds 1/2 in " << escapes << " stages; ";
    }
    for (size_t i = 1; i < out.stages.size(); ++i) {
        const double drop =
            1.0 - out.stages[i].lambda / std::max(out.stages[i - 1].lambda, 1e-300);
        const double drift = out.stages[i].half_mass_radius /
                             std::max(out.stages[i - 1].half_mass_radius, 1e-300);
        const double Rratio = out.R_values[i] / out.R_values[i - 1];
        if (drop > 2e-3 && drift >= std::pow(Rratio, 0.25)) {
            out.attained = false;
            out.stages[i - 1].attained = false;
            out.stages[i].attained = false;
            diag << "lambda drops " << drop << " with half-mass drift " << drift
                 << " from R=" << out.R_values[i - 1] << " to " << out.R_values[i]
                 << "; ";
        }
    }
    out.diagnostics = diag.str();
    return out;
}

} // namespace hardy
