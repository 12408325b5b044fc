#include "hardy/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hardy {

namespace {

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

double to_num(const std::string& s) {
    if (s == "inf" || s == "+inf") return kInf;
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number: '" + s + "'");
    return v;
}

} // namespace

double RadialProfile::operator()(double r) const {
    if (!(r >= a) || !(r < b)) return 0.0;
    switch (kind) {
        case Kind::Zero: return 0.0;
        case Kind::Const: return scale;
        case Kind::Power: return scale * std::pow(r, expo);
        case Kind::PowerLog: {
            const double L = std::log(M_E * logR / r);
            if (L <= 0.0) return 0.0; // past r = e*logR, outside the usable range
            return scale * std::pow(r, -d) * std::pow(L, -kappa);
        }
        case Kind::ShiftedPower: return scale * std::pow(sc + r, -sd);
        case Kind::Tabulated: {
            auto it = std::upper_bound(tab_r.begin(), tab_r.end(), r);
            if (it == tab_r.begin() || it == tab_r.end()) return 0.0;
            return scale * tab_v[static_cast<std::size_t>(it - tab_r.begin()) - 1];
        }
        case Kind::Custom: return scale * fn(r);
    }
    return 0.0;
}

double RadialProfile::log_value(double r) const {
    if (!(r >= a) || !(r < b)) return -kInf;
    switch (kind) {
        case Kind::Zero: return -kInf;
        case Kind::Const: return std::log(scale);
        case Kind::Power: return std::log(scale) + expo * std::log(r);
        case Kind::PowerLog: {
            const double L = std::log(M_E * logR / r);
            if (L <= 0.0) return -kInf;
            return std::log(scale) - d * std::log(r) - kappa * std::log(L);
        }
        case Kind::ShiftedPower: return std::log(scale) - sd * std::log(sc + r);
        case Kind::Tabulated:
        case Kind::Custom: {
            const double v = (*this)(r);
            return v > 0.0 ? std::log(v) : -kInf;
        }
    }
    return -kInf;
}

bool RadialProfile::has_derivative() const {
    switch (kind) {
        case Kind::Zero:
        case Kind::Const:
        case Kind::Power:
        case Kind::PowerLog:
        case Kind::ShiftedPower:
            return true;
        default:
            return false;
    }
}

double RadialProfile::deriv(double r) const {
    if (!(r > a) || !(r < b)) return 0.0;
    switch (kind) {
        case Kind::Zero:
        case Kind::Const:
            return 0.0;
        case Kind::Power:
            return scale * expo * std::pow(r, expo - 1.0);
        case Kind::PowerLog: {
            const double L = std::log(M_E * logR / r);
            if (L <= 0.0) return 0.0;
            // d/dr [ r^-d L^-k ] = r^-d-1 L^-k-1 (kappa - d L)
            return scale * std::pow(r, -d - 1.0) * std::pow(L, -kappa - 1.0) * (kappa - d * L);
        }
        case Kind::ShiftedPower:
            return -scale * sd * std::pow(sc + r, -sd - 1.0);
        default:
            throw std::logic_error("deriv: profile kind has no analytic derivative");
    }
}

bool RadialProfile::nonincreasing_hint() const {
    switch (kind) {
        case Kind::Zero:
        case Kind::Const:
            return true;
        case Kind::Power:
            return expo <= 0.0;
        case Kind::PowerLog:
            // decreasing where d*log(e*logR/r) >= kappa, i.e. r <= e^(1-kappa/d)*logR
            if (d < 0.0 || kappa < 0.0) return false;
            if (d == 0.0) return kappa == 0.0;
            return b <= M_E * logR * std::exp(-kappa / d) * (1.0 + 1e-12);
        case Kind::ShiftedPower:
            return sd >= 0.0;
        default:
            return false;
    }
}

bool RadialProfile::strictly_decreasing_grid(int n, double tol) const {
    const double lo = std::max(a, std::isfinite(b) ? b * 1e-9 : 1e-9);
    const double hi = std::isfinite(b) ? b : std::max(1.0, lo) * 1e9;
    if (!(hi > lo) || n < 2) return false;
    const double llo = std::log(lo + (lo == 0.0 ? hi * 1e-12 : 0.0));
    const double lhi = std::log(hi * (1.0 - 1e-12));
    double prev = (*this)(std::exp(llo));
    for (int i = 1; i < n; ++i) {
        const double r = std::exp(llo + (lhi - llo) * i / (n - 1.0));
        const double v = (*this)(r);
        if (v == 0.0 && prev == 0.0) continue; // exact-zero tail is fine
        if (!(v < prev - tol * std::max(1.0, std::fabs(prev)) ||
              (v < prev && prev < 1e-280)))
            return false;
        prev = v;
    }
    return true;
}

RadialProfile RadialProfile::clipped(double lo, double hi) const {
    RadialProfile p = *this;
    p.a = std::max(a, lo);
    p.b = std::min(b, hi);
    return p;
}

RadialProfile RadialProfile::scaled(double c) const {
    RadialProfile p = *this;
    p.scale *= c;
    return p;
}

RadialProfile RadialProfile::zero() { return RadialProfile{}; }

RadialProfile RadialProfile::constant(double c) {
    RadialProfile p;
    p.kind = Kind::Const;
    p.scale = c;
    return p;
}

RadialProfile RadialProfile::power(double e) {
    RadialProfile p;
    p.kind = Kind::Power;
    p.expo = e;
    return p;
}

RadialProfile RadialProfile::power_log(double d, double kappa, double R) {
    RadialProfile p;
    p.kind = Kind::PowerLog;
    p.d = d;
    p.kappa = kappa;
    p.logR = R;
    p.b = M_E * R; // log factor changes sign there
    return p;
}

RadialProfile RadialProfile::shifted_power(double d, double c) {
    RadialProfile p;
    p.kind = Kind::ShiftedPower;
    p.sd = d;
    p.sc = c;
    return p;
}

RadialProfile RadialProfile::tabulated(std::vector<double> r, std::vector<double> v) {
    if (r.size() != v.size() || r.size() < 2)
        throw std::invalid_argument("tabulated profile needs >= 2 aligned samples");
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        if (!(r[i] < r[i + 1])) throw std::invalid_argument("tabulated radii must increase strictly");
    for (double x : v)
        if (!(x >= 0.0) || !std::isfinite(x))
            throw std::invalid_argument("tabulated values must be finite and >= 0");
    RadialProfile p;
    p.kind = Kind::Tabulated;
    p.a = r.front();
    p.b = r.back();
    p.tab_r = std::move(r);
    p.tab_v = std::move(v);
    return p;
}

RadialProfile RadialProfile::custom(std::function<double(double)> f) {
    RadialProfile p;
    p.kind = Kind::Custom;
    p.fn = std::move(f);
    return p;
}

RadialProfile RadialProfile::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open profile csv: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty profile csv: " + path);
    // header required: "r,value"
    std::vector<double> r, v;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto parts = split(line, ',');
        if (parts.size() != 2) throw std::invalid_argument("bad csv row: '" + line + "'");
        r.push_back(to_num(parts[0]));
        v.push_back(to_num(parts[1]));
    }
    return tabulated(std::move(r), std::move(v));
}

std::string RadialProfile::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Zero: return "zero";
        case Kind::Const: os << "const:" << scale; break;
        case Kind::Power: os << "power:" << expo; if (scale != 1.0) os << " x" << scale; break;
        case Kind::PowerLog:
            os << "power_log:" << d << "," << kappa << "," << logR;
            if (scale != 1.0) os << " x" << scale;
            break;
        case Kind::ShiftedPower:
            os << "shifted_power:" << sd << "," << sc;
            if (scale != 1.0) os << " x" << scale;
            break;
        case Kind::Tabulated: os << "tabulated[" << tab_r.size() << "]"; break;
        case Kind::Custom: os << "custom"; break;
    }
    return os.str();
}

RadialProfile RadialProfile::parse(const std::string& desc) {
    const auto colon = desc.find(':');
    const std::string head = desc.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : desc.substr(colon + 1);
    if (head == "const") return constant(to_num(args));
    if (head == "power") return power(to_num(args));
    if (head == "power_log") {
        const auto p = split(args, ',');
        if (p.size() != 3) throw std::invalid_argument("power_log:d,kappa,R");
        return power_log(to_num(p[0]), to_num(p[1]), to_num(p[2]));
    }
    if (head == "shifted_power") {
        const auto p = split(args, ',');
        if (p.size() != 2) throw std::invalid_argument("shifted_power:d,c");
        return shifted_power(to_num(p[0]), to_num(p[1]));
    }
    if (head == "csv") return from_csv(args);
    throw std::invalid_argument("unknown weight descriptor: '" + desc + "'");
}

// ---------------------------------------------------------------------------

double Domain::measure(int dim) const {
    if (!std::isfinite(b)) return kInf;
    return sigma * unit_ball_volume(dim) *
           (std::pow(b, dim) - std::pow(a, dim));
}

std::string Domain::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Full: return "full";
        case Kind::Ball: os << "ball:" << b; break;
        case Kind::Annulus: os << "annulus:" << a << "," << b; break;
        case Kind::Exterior: os << "exterior:" << a; break;
        case Kind::Sector: os << "sector:" << a << "," << b << "," << sigma; break;
    }
    return os.str();
}

Domain Domain::full() { return Domain{}; }

Domain Domain::ball(double R) {
    if (!(R > 0.0)) throw std::invalid_argument("ball radius must be positive");
    return Domain{Kind::Ball, 0.0, R, 1.0};
}

Domain Domain::annulus(double a, double b) {
    if (!(0.0 < a && a < b)) throw std::invalid_argument("annulus needs 0 < a < b");
    return Domain{Kind::Annulus, a, b, 1.0};
}

Domain Domain::exterior(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("exterior needs a > 0");
    return Domain{Kind::Exterior, a, kInf, 1.0};
}

Domain Domain::sector(double a, double b, double sigma) {
    if (!(0.0 <= a && a < b)) throw std::invalid_argument("sector needs 0 <= a < b");
    if (!(sigma > 0.0 && sigma <= 1.0)) throw std::invalid_argument("sector fraction in (0,1]");
    return Domain{Kind::Sector, a, b, sigma};
}

Domain Domain::parse(const std::string& desc) {
    const auto colon = desc.find(':');
    const std::string head = desc.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : desc.substr(colon + 1);
    if (head == "full") return full();
    if (head == "ball") return ball(to_num(args));
    if (head == "annulus") {
        const auto p = split(args, ',');
        if (p.size() != 2) throw std::invalid_argument("annulus:a,b");
        return annulus(to_num(p[0]), to_num(p[1]));
    }
    if (head == "exterior") return exterior(to_num(args));
    if (head == "sector") {
        const auto p = split(args, ',');
        if (p.size() != 3) throw std::invalid_argument("sector:a,b,sigma");
        return sector(to_num(p[0]), to_num(p[1]), to_num(p[2]));
    }
    throw std::invalid_argument("unknown domain descriptor: '" + desc + "'");
}

// ---------------------------------------------------------------------------

std::string Weight::describe() const {
    if (!is_product) return g1.describe();
    return "product:" + g1.describe() + "|" + g2.describe();
}

Weight Weight::parse(const std::string& desc) {
    Weight w;
    if (desc.rfind("product:", 0) == 0) {
        const std::string rest = desc.substr(8);
        const auto bar = rest.find('|');
        if (bar == std::string::npos)
            throw std::invalid_argument("product weight needs two '|'-separated factors");
        w.g1 = RadialProfile::parse(rest.substr(0, bar));
        w.g2 = RadialProfile::parse(rest.substr(bar + 1));
        w.is_product = true;
        return w;
    }
    w.g1 = RadialProfile::parse(desc);
    return w;
}

} // namespace hardy
