// Command-line front end: classify / norms / conditions / verify / solve /
// sweep over the weight and domain catalog. JSON reports go to --out, CSV
// tables to --csv. Exit codes: 0 success, 2 validation error, 3 numeric
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hardy/admit.hpp"
#include "hardy/conditions.hpp"
#include "hardy/exponents.hpp"
#include "hardy/profile.hpp"
#include "hardy/rearrange.hpp"
#include "hardy/solve.hpp"
#include "hardy/spaces.hpp"
#include "hardy/verify.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
    std::string subcommand;
    int N = 3;
    int k = -1; // -1: default to N
    double p = 2.0;
    double q = 2.0;
    std::string domain = "full";
    std::string weight;
    std::string space;
    int mesh = 1000;
    std::string rtrunc; // radius or comma list (solve continuation)
    std::string sweep;  // lo:hi:grid
    std::uint64_t seed = 42;
    std::string out;
    std::string csv;
    double tol = 1e-10;
    std::string config_path;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_num(const std::string& s, const std::string& where) {
    if (s == "inf" || s == "+inf") return hardy::kInf;
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(where + ": bad number '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Flat key=value config file; '#' comments. Keys mirror the long flags.
// Values from the file fill only options not given on the command line.
void merge_config(RunConfig& cfg, const std::map<std::string, CLI::Option*>& opts) {
    if (cfg.config_path.empty()) return;
    std::ifstream in(cfg.config_path);
    if (!in) throw ValidationError("--config: cannot open '" + cfg.config_path + "'");

    const auto seen = [&](const std::string& key) {
        auto it = opts.find(key);
        return it != opts.end() && it->second->count() > 0;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("--config: line " + std::to_string(lineno) +
                                  " is not key=value");
        auto strip = [](std::string s) {
            const auto x = s.find_first_not_of(" \t");
            const auto y = s.find_last_not_of(" \t");
            return x == std::string::npos ? std::string{} : s.substr(x, y - x + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string val = strip(line.substr(eq + 1));
        const std::string where = "--config " + key;

        if (key == "N") { if (!seen("N")) cfg.N = int(parse_num(val, where)); }
        else if (key == "k") { if (!seen("k")) cfg.k = int(parse_num(val, where)); }
        else if (key == "p") { if (!seen("p")) cfg.p = parse_num(val, where); }
        else if (key == "q") { if (!seen("q")) cfg.q = parse_num(val, where); }
        else if (key == "domain") { if (!seen("domain")) cfg.domain = val; }
        else if (key == "weight") { if (!seen("weight")) cfg.weight = val; }
        else if (key == "space") { if (!seen("space")) cfg.space = val; }
        else if (key == "mesh") { if (!seen("mesh")) cfg.mesh = int(parse_num(val, where)); }
        else if (key == "rtrunc") { if (!seen("rtrunc")) cfg.rtrunc = val; }
        else if (key == "sweep") { if (!seen("sweep")) cfg.sweep = val; }
        else if (key == "seed") { if (!seen("seed")) cfg.seed = std::uint64_t(parse_num(val, where)); }
        else if (key == "out") { if (!seen("out")) cfg.out = val; }
        else if (key == "csv") { if (!seen("csv")) cfg.csv = val; }
        else if (key == "tol") { if (!seen("tol")) cfg.tol = parse_num(val, where); }
        else throw ValidationError("--config: unknown key '" + key + "'");
    }
}

hardy::ExponentContext make_ctx(const RunConfig& cfg) {
    hardy::ExponentContext ctx;
    ctx.N = cfg.N;
    ctx.k = cfg.k < 0 ? cfg.N : cfg.k;
    ctx.p = cfg.p;
    ctx.q = cfg.q;
    try {
        hardy::validate(ctx);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("--N/--k/--p/--q: ") + ex.what());
    }
    return ctx;
}

hardy::DomainSpec make_domain(const RunConfig& cfg, const hardy::ExponentContext& ctx) {
    hardy::DomainSpec dom;
    try {
        dom.base = hardy::Domain::parse(cfg.domain);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("--domain: ") + ex.what());
    }
    dom.product = ctx.k < ctx.N;
    return dom;
}

hardy::WeightSpec make_weight(const RunConfig& cfg, const hardy::ExponentContext& ctx) {
    if (cfg.weight.empty()) throw ValidationError("--weight: required");
    hardy::Weight w;
    try {
        w = hardy::Weight::parse(cfg.weight);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("--weight: ") + ex.what());
    }
    hardy::WeightSpec spec;
    spec.g1 = w.g1;
    spec.g2 = w.g2;
    spec.form = (w.is_product || ctx.k < ctx.N) ? hardy::WeightSpec::Form::Cylindrical
                                                : hardy::WeightSpec::Form::Radial;
    return spec;
}

void write_json(const RunConfig& cfg, const json& j) {
    if (cfg.out.empty()) return;
    std::ofstream f(cfg.out);
    if (!f) throw ValidationError("--out: cannot open '" + cfg.out + "'");
    f << j.dump(2) << "\n";
}

void write_csv(const RunConfig& cfg, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
    if (cfg.csv.empty()) return;
    std::ofstream f(cfg.csv);
    if (!f) throw ValidationError("--csv: cannot open '" + cfg.csv + "'");
    f << header << "\n";
    f.precision(17);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            f << (i ? "," : "") << row[i];
        f << "\n";
    }
}

json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr; // JSON has no inf; null marks a divergent value
}

hardy::Rearrangement rearrange_weight(const hardy::RadialProfile& g, int dim,
                                      const hardy::Domain& dom) {
    if (g.nonincreasing_hint()) {
        try {
            return hardy::Rearrangement::radial_shortcut(g, dim, dom);
        } catch (const std::exception&) {
            // fall through to the generic inversion
        }
    }
    return hardy::Rearrangement::generic(g, dim, dom);
}

// ---------------------------------------------------------------------- //

int run_classify(const RunConfig& cfg) {
    const auto ctx = make_ctx(cfg);
    const auto dom = make_domain(cfg, ctx);
    const auto w = make_weight(cfg, ctx);

    hardy::AdmissibilityVerdict v;
    try {
        v = hardy::classify(ctx, dom, w);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("classify: ") + ex.what());
    }

    json j;
    if (!v.branches.empty()) {
        const auto& b = v.branches.front();
        j["theorem"] = b.rule;
        j["space"] = b.space;
        double norm = 1.0;
        for (double n : b.norms) norm *= n;
        j["norm"] = finite_or_null(b.norms.size() == 1 ? b.norms[0] : norm);
    } else {
        j["theorem"] = nullptr;
        j["space"] = nullptr;
        j["norm"] = nullptr;
    }
    json checks = json::array();
    for (const auto& b : v.branches) {
        std::ostringstream os;
        os << b.rule << " accepted: space " << b.space << ", constant " << b.constant_form;
        if (!b.params.empty()) os << " [" << b.params << "]";
        checks.push_back(os.str());
    }
    for (const auto& r : v.failure_reasons) checks.push_back(r);
    if (v.admissible == hardy::Admissibility::Unknown)
        checks.push_back("verdict: unknown (no sufficient criterion applies)");
    if (v.admissible == hardy::Admissibility::StructurallyExcluded)
        checks.push_back("verdict: structurally excluded");
    j["range_checks"] = checks;
    j["admissible"] = v.admissible == hardy::Admissibility::Admissible;

    write_json(cfg, j);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_norms(const RunConfig& cfg) {
    const auto ctx = make_ctx(cfg);
    const auto dom = make_domain(cfg, ctx);
    const auto w = make_weight(cfg, ctx);
    if (w.form != hardy::WeightSpec::Form::Radial)
        throw ValidationError("--weight: norms takes a single radial profile");
    if (cfg.space.empty()) throw ValidationError("--space: required");

    const auto parts = split(cfg.space, ':');
    const std::string head = parts[0];
    const auto args = parts.size() > 1 ? split(parts[1], ',') : std::vector<std::string>{};
    auto need = [&](std::size_t n, const char* sig) {
        if (args.size() != n) throw ValidationError(std::string("--space: expected ") + sig);
    };

    hardy::NormResult res;
    if (head == "lorentz" || head == "lorentz_quasi") {
        need(2, "lorentz:P,Q");
        const double P = parse_num(args[0], "--space P");
        const double Q = parse_num(args[1], "--space Q");
        const auto re = rearrange_weight(w.g1, ctx.N, dom.base);
        res = head == "lorentz" ? hardy::lorentz_norm(re, P, Q)
                                : hardy::lorentz_quasinorm(re, P, Q);
    } else if (head == "lorentz_zygmund" || head == "lorentz_zygmund_norm") {
        need(3, "lorentz_zygmund:P,Q,A");
        const double P = parse_num(args[0], "--space P");
        const double Q = parse_num(args[1], "--space Q");
        const double A = parse_num(args[2], "--space A");
        const double omega = dom.base.measure(ctx.N);
        if (!std::isfinite(omega))
            throw ValidationError("--domain: log-refined norms need a finite-measure domain");
        const auto re = rearrange_weight(w.g1, ctx.N, dom.base);
        res = head == "lorentz_zygmund"
                  ? hardy::lorentz_zygmund_quasinorm(re, P, Q, A, omega)
                  : hardy::lorentz_zygmund_norm(re, P, Q, A, omega);
    } else if (head == "lebesgue") {
        need(1, "lebesgue:e");
        const auto re = rearrange_weight(w.g1, ctx.N, dom.base);
        res = hardy::lebesgue_norm(re, parse_num(args[0], "--space e"));
    } else if (head == "weighted_lebesgue") {
        need(3, "weighted_lebesgue:e,theta,kappa");
        const double lo = dom.base.a;
        const double hi = dom.base.b;
        res = hardy::weighted_lebesgue_norm(w.g1, parse_num(args[0], "--space e"), lo, hi,
                                            parse_num(args[1], "--space theta"),
                                            parse_num(args[2], "--space kappa"));
    } else {
        throw ValidationError("--space: unknown space '" + head + "'");
    }

    json j;
    j["space"] = cfg.space;
    j["weight"] = cfg.weight;
    j["value"] = finite_or_null(res.value);
    j["finite"] = res.finite;
    j["error"] = res.error;
    write_json(cfg, j);

    std::cout.precision(10);
    if (res.finite)
        std::cout << res.value << "\n";
    else
        std::cout << "divergent\n";
    return res.finite ? 0 : 3;
}

int run_conditions(const RunConfig& cfg) {
    const auto ctx = make_ctx(cfg);
    const auto dom = make_domain(cfg, ctx);
    const auto w = make_weight(cfg, ctx);

    json reports = json::array();
    bool any_numeric_failure = false;

    // One-dimensional weighted-Hardy characteristic of the rearranged
    // reduction: v = g*, w = t^(p - p/N).
    if (w.form == hardy::WeightSpec::Form::Radial) {
        try {
            const auto re = rearrange_weight(w.g1, ctx.N, dom.base);
            hardy::MuckenhouptInput in;
            in.v = [re](double t) { return re.f_star(t); };
            const double e = ctx.p - ctx.p / ctx.N;
            in.w = [e](double t) { return std::pow(t, e); };
            in.b = dom.base.measure(ctx.N);
            in.p = ctx.p;
            in.q = ctx.q;
            in.anchor = re.anchor();
            const auto rep = hardy::muckenhoupt_constant(in);
            reports.push_back({{"name", "muckenhoupt"},
                               {"regime", rep.regime},
                               {"constant", finite_or_null(rep.constant)},
                               {"implied_inequality_constant",
                                finite_or_null(rep.implied_inequality_constant)},
                               {"finite", rep.finite},
                               {"note", rep.note}});
        } catch (const std::exception& ex) {
            any_numeric_failure = true;
            reports.push_back({{"name", "muckenhoupt"}, {"error", ex.what()}});
        }

        try {
            const auto rep = hardy::sawyer_wheeden_sup(w.g1, 1.0, ctx.N, ctx.p, ctx.q);
            reports.push_back({{"name", "integral_sup"},
                               {"regime", rep.regime},
                               {"constant", finite_or_null(rep.constant)},
                               {"finite", rep.finite},
                               {"note", rep.note}});
        } catch (const std::exception& ex) {
            any_numeric_failure = true;
            reports.push_back({{"name", "integral_sup"}, {"error", ex.what()}});
        }

        const bool ball_like = dom.base.a == 0.0 && dom.base.sigma == 1.0 && !dom.product;
        const bool regime_ok =
            (ctx.N > ctx.p && ctx.q >= ctx.p) ||
            (ctx.N == ctx.p && ctx.q > ctx.p && std::isfinite(dom.base.b));
        if (ball_like && regime_ok && w.g1.nonincreasing_hint()) {
            try {
                const auto rep =
                    hardy::necessary_check_radial(w.g1, ctx.N, ctx.p, ctx.q, dom.base.b);
                reports.push_back({{"name", "necessary_radial"},
                                   {"passes", rep.passes},
                                   {"sup", finite_or_null(rep.sup_value)}});
            } catch (const std::exception& ex) {
                any_numeric_failure = true;
                reports.push_back({{"name", "necessary_radial"}, {"error", ex.what()}});
            }
        }
    }

    // product:g|h on a ball doubles as the (g,h) pair for the ODE positivity
    // test.
    if (w.form == hardy::WeightSpec::Form::Cylindrical && std::isfinite(dom.base.b) &&
        dom.base.a == 0.0 && !dom.product) {
        try {
            const auto rep = hardy::bessel_pair_check(w.g1, w.g2, dom.base.b, ctx.N);
            json samples = json::array();
            for (const auto& [r, phi] : rep.solution_samples)
                samples.push_back({{"r", r}, {"phi", phi}});
            reports.push_back({{"name", "bessel_pair"},
                               {"is_bessel_pair", rep.is_bessel_pair},
                               {"integral_1_infinite", rep.integral_1_infinite},
                               {"integral_2_finite", rep.integral_2_finite},
                               {"failure_radius", finite_or_null(rep.failure_radius)},
                               {"samples", samples},
                               {"note", rep.note}});
        } catch (const std::exception& ex) {
            any_numeric_failure = true;
            reports.push_back({{"name", "bessel_pair"}, {"error", ex.what()}});
        }
    }

    if (reports.empty())
        throw ValidationError("conditions: no applicable condition for this weight/domain");

    json j;
    j["conditions"] = reports;
    write_json(cfg, j);
    std::cout << j.dump(2) << "\n";
    return any_numeric_failure ? 3 : 0;
}

hardy::TestFunction default_test_function(const RunConfig& cfg,
                                          const hardy::ExponentContext& ctx,
                                          const hardy::DomainSpec& dom) {
    double r0 = std::isfinite(dom.base.b) ? dom.base.b : 1.0;
    if (!cfg.rtrunc.empty()) r0 = parse_num(cfg.rtrunc, "--rtrunc");
    if (!(r0 > dom.base.a))
        throw ValidationError("--rtrunc: support radius must exceed the inner radius");
    if (dom.base.a > 0.0) {
        // tent on (a, r0), zero at both ends
        const double a = dom.base.a;
        const double mid = 0.5 * (a + r0);
        return hardy::TestFunction::tabulated({a, mid, r0}, {0.0, mid - a, 0.0});
    }
    if (ctx.k < ctx.N)
        return hardy::TestFunction::product(hardy::TestFunction::cone(r0),
                                            hardy::TestFunction::cone(r0));
    return hardy::TestFunction::cone(r0);
}

int run_verify(const RunConfig& cfg) {
    const auto ctx = make_ctx(cfg);
    const auto dom = make_domain(cfg, ctx);
    const auto w = make_weight(cfg, ctx);
    const auto u = default_test_function(cfg, ctx, dom);

    hardy::RatioReport rep;
    try {
        rep = hardy::hardy_ratio(ctx, dom, w, u);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("verify: ") + ex.what());
    }

    json j;
    j["test_function"] = u.describe();
    j["lhs"] = finite_or_null(rep.lhs);
    j["rhs"] = finite_or_null(rep.rhs);
    j["ratio"] = finite_or_null(rep.ratio);
    j["quadrature_error"] = rep.quadrature_error;
    j["lhs_finite"] = rep.lhs_finite;
    write_json(cfg, j);
    std::cout << j.dump(2) << "\n";

    const bool numeric_ok = rep.lhs_finite && std::isfinite(rep.rhs) && rep.rhs > 0.0;
    return numeric_ok ? 0 : 3;
}

int run_solve(const RunConfig& cfg) {
    const auto ctx = make_ctx(cfg);
    const auto dom = make_domain(cfg, ctx);
    const auto w = make_weight(cfg, ctx);
    if (w.form != hardy::WeightSpec::Form::Radial)
        throw ValidationError("--weight: solve takes a single radial profile");
    if (dom.product) throw ValidationError("--domain: solve is radial only (k = N)");
    if (cfg.mesh < 100) throw ValidationError("--mesh: need at least 100 cells");

    hardy::SolveOptions opts;
    opts.tol = cfg.tol;

    json j;
    std::vector<std::vector<double>> profile_rows;

    try {
        if (std::isfinite(dom.base.b)) {
            hardy::RadialMesh mesh =
                dom.base.a > 0.0
                    ? hardy::RadialMesh::graded(dom.base.a, dom.base.b, cfg.mesh)
                    : hardy::RadialMesh::graded(0.0, dom.base.b, cfg.mesh);
            mesh.dirichlet_left = dom.base.a > 0.0;
            const auto res = hardy::minimize_rayleigh(ctx, dom.base, w.g1, mesh, opts);
            j["lambda"] = finite_or_null(res.lambda);
            j["attained"] = res.attained;
            j["residual"] = finite_or_null(res.residual);
            j["mesh_size"] = cfg.mesh;
            j["R_trunc"] = dom.base.b;
            j["converged"] = res.converged;
            j["diagnostics"] = res.diagnostics;
            for (std::size_t i = 0; i < res.r.size(); ++i)
                profile_rows.push_back({res.r[i], res.u[i]});
            if (!res.converged && res.residual > 1e-4)
                throw NumericError("solve: descent did not converge");
        } else {
            std::vector<double> R_list;
            for (const auto& tok : split(cfg.rtrunc.empty() ? "10,40,160" : cfg.rtrunc, ','))
                R_list.push_back(parse_num(tok, "--rtrunc"));
            const auto res =
                hardy::continuation_solve(ctx, dom.base, w.g1, R_list, cfg.mesh, opts);
            j["lambda"] = finite_or_null(res.lambda);
            j["attained"] = res.attained;
            j["residual"] = finite_or_null(res.stages.back().residual);
            j["mesh_size"] = cfg.mesh;
            j["R_trunc"] = R_list.back();
            j["diagnostics"] = res.diagnostics;
            json stages = json::array();
            for (std::size_t i = 0; i < res.stages.size(); ++i)
                stages.push_back({{"R", res.R_values[i]},
                                  {"lambda", finite_or_null(res.stages[i].lambda)},
                                  {"attained", res.stages[i].attained}});
            j["stages"] = stages;
            const auto& last = res.stages.back();
            for (std::size_t i = 0; i < last.r.size(); ++i)
                profile_rows.push_back({last.r[i], last.u[i]});
        }
    } catch (const NumericError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("solve: ") + ex.what());
    }

    write_json(cfg, j);
    write_csv(cfg, "r,u", profile_rows);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_sweep(const RunConfig& cfg) {
    const auto ctx = make_ctx(cfg);
    const auto dom = make_domain(cfg, ctx);
    const auto w = make_weight(cfg, ctx);

    double lo = 0.01, hi = 0.5;
    int grid = 24;
    if (!cfg.sweep.empty()) {
        const auto parts = split(cfg.sweep, ':');
        if (parts.size() != 3) throw ValidationError("--sweep: expected lo:hi:grid");
        lo = parse_num(parts[0], "--sweep lo");
        hi = parse_num(parts[1], "--sweep hi");
        grid = int(parse_num(parts[2], "--sweep grid"));
    }

    hardy::FamilySweep fam;
    fam.lo = lo;
    fam.hi = hi;
    fam.grid = grid;
    fam.log_scale = true;
    if (ctx.N > ctx.p) {
        const int N = ctx.N;
        const double p = ctx.p;
        const double r2 = std::isfinite(dom.base.b) ? dom.base.b : 1.0;
        fam.param_name = "eps";
        fam.make = [N, p, r2](double eps) {
            return hardy::TestFunction::power_cutoff(N, p, eps, 1e-4 * r2, r2);
        };
    } else if (ctx.N == ctx.p && std::isfinite(dom.base.b)) {
        const double R = dom.base.b;
        fam.param_name = "r0";
        if (cfg.sweep.empty()) {
            fam.lo = 1e-6 * R;
            fam.hi = 0.25 * R;
        }
        fam.make = [R](double r0) { return hardy::TestFunction::log_cutoff(r0, R); };
    } else {
        throw ValidationError("sweep: no built-in family for N < p or unbounded N = p");
    }

    hardy::SweepResult res;
    try {
        res = hardy::empirical_best_constant(ctx, dom, w, fam);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("sweep: ") + ex.what());
    }

    std::vector<std::vector<double>> rows;
    for (const auto& pt : res.points)
        rows.push_back({pt.param, pt.lhs, pt.rhs, pt.ratio, pt.err});
    write_csv(cfg, "param,lhs,rhs,ratio,err", rows);

    json j;
    j["family"] = fam.param_name;
    j["sup_ratio"] = finite_or_null(res.sup_ratio);
    j["argmax_param"] = res.argmax_param;
    j["points"] = res.points.size();
    write_json(cfg, j);

    std::cout.precision(10);
    std::cout << "sup ratio " << res.sup_ratio << " at " << fam.param_name << " = "
              << res.argmax_param << "\n";
    if (!(res.sup_ratio > 0.0) || !std::isfinite(res.sup_ratio))
        throw NumericError("sweep: no finite ratio on the family");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Hardy-Sobolev admissibility toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::map<std::string, CLI::Option*> opts;

    auto add_common = [&](CLI::App* sub) {
        opts["N"] = sub->add_option("--N", cfg.N, "ambient dimension");
        opts["k"] = sub->add_option("--k", cfg.k, "split dimension (default N)");
        opts["p"] = sub->add_option("--p", cfg.p, "gradient exponent");
        opts["q"] = sub->add_option("--q", cfg.q, "weight-side exponent");
        opts["domain"] = sub->add_option("--domain", cfg.domain,
                                         "full | ball:R | annulus:a,b | exterior:a | "
                                         "sector:a,b,sigma");
        opts["weight"] = sub->add_option(
            "--weight", cfg.weight,
            "power:d | power_log:d,kappa,R | shifted_power:d,c | const:c | csv:path | "
            "product:<desc>|<desc>");
        opts["space"] = sub->add_option("--space", cfg.space,
                                        "lorentz:P,Q | lorentz_quasi:P,Q | "
                                        "lorentz_zygmund:P,Q,A | lebesgue:e | "
                                        "weighted_lebesgue:e,theta,kappa");
        opts["mesh"] = sub->add_option("--mesh", cfg.mesh, "mesh cells for solve");
        opts["rtrunc"] = sub->add_option("--rtrunc", cfg.rtrunc,
                                         "truncation radius, or comma list for continuation");
        opts["sweep"] = sub->add_option("--sweep", cfg.sweep, "family range lo:hi:grid");
        opts["seed"] = sub->add_option("--seed", cfg.seed, "seed for randomized families");
        opts["out"] = sub->add_option("--out", cfg.out, "JSON report path");
        opts["csv"] = sub->add_option("--csv", cfg.csv, "CSV table path");
        opts["tol"] = sub->add_option("--tol", cfg.tol, "solver stationarity tolerance");
        sub->add_option("--config", cfg.config_path, "key=value config file (flags win)");
    };

    add_common(app.add_subcommand("classify", "run every sufficient admissibility criterion"));
    add_common(app.add_subcommand("norms", "evaluate a rearrangement-space norm"));
    add_common(app.add_subcommand("conditions", "one-dimensional and cube-family conditions"));
    add_common(app.add_subcommand("verify", "both sides of the inequality on a test function"));
    add_common(app.add_subcommand("solve", "Rayleigh-quotient minimizer"));
    add_common(app.add_subcommand("sweep", "empirical best constant over a family"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        merge_config(cfg, opts);

        if (cfg.subcommand == "classify") return run_classify(cfg);
        if (cfg.subcommand == "norms") return run_norms(cfg);
        if (cfg.subcommand == "conditions") return run_conditions(cfg);
        if (cfg.subcommand == "verify") return run_verify(cfg);
        if (cfg.subcommand == "solve") return run_solve(cfg);
        if (cfg.subcommand == "sweep") return run_sweep(cfg);
        std::cerr << "unknown subcommand\n";
        return 2;
    } catch (const ValidationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const NumericError& ex) {
        std::cerr << "numeric failure: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
