#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hardy/conditions.hpp"
#include "hardy/profile.hpp"

using namespace hardy;

namespace {
const double w3 = unit_ball_volume(3);
}

TEST_CASE("sup-regime characteristic has the closed form") {
    // v = (w3/t)^(2/3), w = t^(4/3), p = q = 2: the product
    // (int_0^t v)^(1/2) (int_t^inf w^(1-p'))^(1/2) = 3 w3^(1/3) for every t
    MuckenhouptInput in;
    in.v = [](double t) { return std::pow(w3 / t, 2.0 / 3.0); };
    in.w = [](double t) { return std::pow(t, 4.0 / 3.0); };
    in.p = 2.0;
    in.q = 2.0;
    in.anchor = w3;
    const auto rep = muckenhoupt_constant(in);
    CHECK(rep.regime == "A3");
    CHECK(rep.finite);
    CHECK(rep.constant == doctest::Approx(3.0 * std::cbrt(w3)).epsilon(1e-6));
    // prefactor (p')^(1/p') p^(1/q) = 2
    CHECK(rep.implied_inequality_constant == doctest::Approx(2.0 * rep.constant));
}

TEST_CASE("averaged-regime characteristics reduce to beta functions") {
    MuckenhouptInput in;
    in.v = [](double) { return 1.0; };
    in.w = [](double) { return 1.0; };
    in.b = 1.0;
    in.p = 2.0;

    // 1 <= q < p: gamma = 6, A^gamma = int t^4 (1-t)^2 = B(5,3)
    in.q = 1.5;
    auto rep = muckenhoupt_constant(in);
    CHECK(rep.regime == "A2");
    CHECK(rep.finite);
    CHECK(rep.constant == doctest::Approx(std::pow(1.0 / 105.0, 1.0 / 6.0)).epsilon(1e-7));

    // q < 1: gamma = 2/3, A^gamma = int t^(1/3) (1-t)^(1/3) = B(4/3, 4/3)
    in.q = 0.5;
    rep = muckenhoupt_constant(in);
    CHECK(rep.regime == "A1");
    CHECK(rep.finite);
    const double B = std::beta(4.0 / 3.0, 4.0 / 3.0);
    CHECK(rep.constant == doctest::Approx(std::pow(B, 1.5)).epsilon(1e-7));
}

TEST_CASE("characteristic blows up when the averaged side diverges") {
    MuckenhouptInput in;
    in.v = [](double t) { return 1.0 / t; }; // int_0^s v infinite for every s
    in.w = [](double) { return 1.0; };
    in.b = 1.0;
    in.p = 2.0;
    in.q = 2.0;
    const auto rep = muckenhoupt_constant(in);
    CHECK_FALSE(rep.finite);
}

TEST_CASE("finite characteristic controls the inequality on test data") {
    MuckenhouptInput in;
    in.b = 1.0;
    in.p = 2.0;
    in.q = 2.0;
    in.w = [](double) { return 1.0; };
    auto f = [](double t) { return t < 1.0 ? 1.0 - t : 0.0; };

    in.v = [](double t) { return std::pow(t, -0.4); };
    auto chk = muckenhoupt_verify(in, f);
    CHECK(chk.rhs_finite);
    CHECK(chk.lhs_finite);
    CHECK(chk.holds);
    CHECK(chk.lhs < chk.rhs);

    in.v = [](double t) { return std::pow(t, -0.9); };
    chk = muckenhoupt_verify(in, f);
    CHECK(chk.holds);
}

TEST_CASE("cube-family sup detects the integrability threshold") {
    // |x|^-2 in R^3: |g|^s locally integrable iff s < 3/2
    const auto g = RadialProfile::power(-2.0);
    const auto ok = sawyer_wheeden_sup(g, 1.2, 3, 2.0, 2.0);
    CHECK(ok.finite);
    CHECK(ok.constant > 0.0);

    const auto bad = sawyer_wheeden_sup(g, 1.5, 3, 2.0, 2.0);
    CHECK_FALSE(bad.finite);
}

TEST_CASE("cube-family sup is scale-balanced for the critical power") {
    // alpha = 3/2: |Q|^(1/alpha-1/s) (int_Q |x|^-2s)^(1/s) is invariant under
    // cube dilation, so widening the window must not move the sup
    const auto g = RadialProfile::power(-2.0);
    CubeFamilySpec narrow, wide;
    narrow.half_width = 2.0;
    wide.half_width = 8.0;
    const auto a = sawyer_wheeden_sup(g, 1.2, 3, 2.0, 2.0, narrow);
    const auto b = sawyer_wheeden_sup(g, 1.2, 3, 2.0, 2.0, wide);
    CHECK(a.finite);
    CHECK(b.finite);
    CHECK(a.constant == doctest::Approx(b.constant).epsilon(1e-6));
    CHECK_THROWS_AS(sawyer_wheeden_sup(g, 1.0, 3, 2.0, 2.0), std::invalid_argument);
}

TEST_CASE("ode positivity distinguishes sub- and supercritical pairs") {
    // (r^2 phi')' + c r^0 * r^... : g = 1, h = c r^-2 on the unit ball, N = 3.
    // The Hardy threshold is c = 1/4.
    const auto g = RadialProfile::constant(1.0);

    const auto sub = bessel_pair_check(g, RadialProfile::power(-2.0).scaled(0.2), 1.0, 3);
    CHECK(sub.is_bessel_pair);
    CHECK(sub.integral_1_infinite);  // int r^(1-N)/g~ = int r^-2 diverges at 0
    CHECK(sub.integral_2_finite);    // int h~ r^(N-1) = int 0.2 dr converges
    CHECK_FALSE(sub.solution_samples.empty());

    const auto super = bessel_pair_check(g, RadialProfile::power(-2.0).scaled(2.0), 1.0, 3);
    CHECK_FALSE(super.is_bessel_pair);
    CHECK(std::isfinite(super.failure_radius));
    CHECK(super.failure_radius > 0.0);
    CHECK(super.failure_radius < 1.0);
}

TEST_CASE("radial necessary condition") {
    // |x|^-2, N = 3, p = q = 2: sup t^(2/3) g**(t) = 3 w3^(2/3)
    auto rep = necessary_check_radial(RadialProfile::power(-2.0), 3, 2.0, 2.0, kInf);
    CHECK(rep.passes);
    CHECK(rep.sup_value == doctest::Approx(3.0 * std::pow(w3, 2.0 / 3.0)).epsilon(1e-4));

    // steeper than the critical power: the sup blows up at t = 0
    rep = necessary_check_radial(RadialProfile::power(-2.5), 3, 2.0, 2.0, kInf);
    CHECK_FALSE(rep.passes);

    // N = p = 2 on the unit disk: mild weight passes, non-integrable one fails
    rep = necessary_check_radial(RadialProfile::power(-1.0), 2, 2.0, 3.0, 1.0);
    CHECK(rep.passes);
    rep = necessary_check_radial(RadialProfile::power(-2.0), 2, 2.0, 3.0, 1.0);
    CHECK_FALSE(rep.passes);
}
