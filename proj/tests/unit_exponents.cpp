#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "hardy/exponents.hpp"

using namespace hardy;

TEST_CASE("conjugate exponents") {
    CHECK(conjugate(2.0) == doctest::Approx(2.0));
    CHECK(conjugate(4.0) == doctest::Approx(4.0 / 3.0));
    CHECK(conjugate(1.0) == kInf);
    CHECK(conjugate(kInf) == doctest::Approx(1.0));
    CHECK_THROWS_AS(conjugate(0.5), std::invalid_argument);
    CHECK_THROWS_AS(conjugate(-1.0), std::invalid_argument);
}

TEST_CASE("conjugate triples") {
    CHECK(is_conjugate_triple(3.0, 3.0, 3.0));
    CHECK(is_conjugate_triple(2.0, 4.0, 4.0));
    CHECK(is_conjugate_triple(2.0, 2.0, kInf));
    CHECK(is_conjugate_triple(1.0, kInf, kInf));
    CHECK_FALSE(is_conjugate_triple(2.0, 3.0, 4.0));
}

TEST_CASE("alpha across the q ranges") {
    // N p / (N(p-q) + qp)
    CHECK(alpha(3, 2.0, 2.0) == doctest::Approx(1.5));
    CHECK(alpha(3, 2.0, 1.0) == doctest::Approx(6.0 / 5.0));
    CHECK(alpha(4, 2.0, 3.0) == doctest::Approx(4.0));
    CHECK(alpha(3, 2.0, 4.0) == doctest::Approx(3.0));

    // pole at q = p*: denominator vanishes
    CHECK(alpha(3, 2.0, 6.0) == kInf);
    CHECK(alpha_admissible(3, 2.0, 6.0));
    CHECK(alpha(3, 2.0, 6.5) < 0.0);
    CHECK_FALSE(alpha_admissible(3, 2.0, 6.5));
}

TEST_CASE("critical Sobolev exponent") {
    CHECK(p_star(3, 2.0) == doctest::Approx(6.0));
    CHECK(p_star(4, 2.0) == doctest::Approx(4.0));
    CHECK(p_star(2, 2.0) == kInf);
    CHECK(p_star(3, 3.5) == kInf);
}

TEST_CASE("restricted-dimension exponent P*") {
    CHECK(p_star_s(3, 2.0, 1.0) == doctest::Approx(4.0));
    CHECK(p_star_s(3, 2.0, 0.0) == doctest::Approx(p_star(3, 2.0)));
    CHECK(p_star_s(3, 2.0, 3.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(p_star_s(2, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("beta and its pole") {
    // (p* - N'p)/(p* - N'q) with N' = 3/2, p* = 6
    CHECK(beta(3, 2.0, 2.0) == doctest::Approx(1.0));
    CHECK(beta(3, 2.0, 3.0) == doctest::Approx(2.0));
    CHECK(beta(3, 2.0, 4.0) == kInf); // q = P*(1)
    CHECK_THROWS_AS(beta(2, 2.0, 2.0), std::invalid_argument);
}

TEST_CASE("derive bundles the family consistently") {
    ExponentContext ctx{3, 3, 2.0, 4.0};
    const auto d = derive(ctx);
    CHECK(d.alpha == doctest::Approx(3.0));
    CHECK(d.alpha_admissible);
    CHECK(d.p_star == doctest::Approx(6.0));
    CHECK(d.p_prime == doctest::Approx(2.0));
    CHECK(d.N_prime == doctest::Approx(1.5));
    CHECK(d.beta == kInf); // pole at q = P*(1) = 4
}

TEST_CASE("identities linking alpha and P*") {
    // alpha(p, P*(s)) = N/s
    for (double s : {0.5, 1.0, 1.7, 2.9}) {
        const double q = p_star_s(3, 2.0, s);
        CHECK(alpha(3, 2.0, q) == doctest::Approx(3.0 / s).epsilon(1e-12));
    }
    // P*(N/alpha(p,q)) = q
    for (double q : {0.5, 2.0, 3.3, 5.9}) {
        const double a = alpha(3, 2.0, q);
        CHECK(p_star_s(3, 2.0, 3.0 / a) == doctest::Approx(q).epsilon(1e-12));
    }
}

TEST_CASE("context validation") {
    CHECK_NOTHROW(validate(ExponentContext{3, 3, 2.0, 2.0}));
    CHECK_NOTHROW(validate(ExponentContext{5, 2, 1.5, 0.5}));
    CHECK_THROWS_AS(validate(ExponentContext{3, 4, 2.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ExponentContext{3, 0, 2.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ExponentContext{3, 3, 1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ExponentContext{3, 3, 2.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ExponentContext{0, 0, 2.0, 2.0}), std::invalid_argument);
}
