#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "hardy/solve.hpp"

using namespace hardy;

TEST_CASE("mesh factories and their guards") {
    RadialMesh u = RadialMesh::uniform(0.0, 1.0, 200);
    CHECK(u.r.size() == 201);
    CHECK(u.r.front() == 0.0);
    CHECK(u.r.back() == doctest::Approx(1.0));
    CHECK_NOTHROW(u.validate());
    CHECK_FALSE(u.dirichlet_left);
    CHECK(u.dirichlet_right);

    RadialMesh g = RadialMesh::graded(0.0, 1.0, 150);
    CHECK_NOTHROW(g.validate());
    CHECK(g.r.size() == 151);

    RadialMesh lg = RadialMesh::logarithmic(1e-8, 10.0, 1000);
    CHECK_NOTHROW(lg.validate());
    CHECK(lg.r.front() == doctest::Approx(1e-8));
    CHECK(lg.r.back() == doctest::Approx(10.0));

    // 100 cells cannot span 9 decades within the width-ratio bound
    CHECK_THROWS_AS(RadialMesh::logarithmic(1e-8, 10.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(RadialMesh::uniform(1.0, 0.5, 200), std::invalid_argument);
    RadialMesh small = RadialMesh::uniform(0.0, 1.0, 50);
    CHECK_THROWS_AS(small.validate(), std::invalid_argument);
}

TEST_CASE("Dirichlet ball eigenvalue lands near pi^2") {
    const ExponentContext ctx{3, 3, 2.0, 2.0};
    const RadialMesh mesh = RadialMesh::uniform(0.0, 1.0, 300);
    const RadialProfile g = RadialProfile::constant(1.0);

    MinimizerResult res = minimize_rayleigh(ctx, Domain::ball(1.0), g, mesh);
    CHECK(res.converged);
    CHECK(res.attained);
    const double pi2 = M_PI * M_PI;
    CHECK(std::abs(res.lambda - pi2) / pi2 < 5e-3);
    CHECK(res.residual < 1e-6);
    CHECK(res.constraint == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(*std::min_element(res.u.begin(), res.u.end()) >= 0.0);
    CHECK(res.half_mass_radius > 0.0);
    CHECK(res.half_mass_radius < 1.0);
    CHECK_FALSE(res.trajectory.empty());

    // recomputing the defect outside the solver agrees with the stored value
    CHECK(weak_residual(res, ctx, g, mesh) == doctest::Approx(res.residual).epsilon(1e-9));

    RadialMesh other = RadialMesh::uniform(0.0, 1.0, 200);
    CHECK_THROWS_AS(weak_residual(res, ctx, g, other), std::invalid_argument);
}

TEST_CASE("solver guards") {
    const RadialMesh mesh = RadialMesh::uniform(0.0, 1.0, 150);
    CHECK_THROWS_AS(minimize_rayleigh({3, 3, 2.0, 1.0}, Domain::ball(1.0),
                                      RadialProfile::constant(1.0), mesh),
                    std::invalid_argument);
    CHECK_THROWS_AS(minimize_rayleigh({3, 3, 2.0, 2.0}, Domain::ball(1.0),
                                      RadialProfile::zero(), mesh),
                    std::invalid_argument);
}

TEST_CASE("doubling the weight halves the quotient") {
    const ExponentContext ctx{3, 3, 2.0, 2.0};
    const RadialMesh mesh = RadialMesh::uniform(0.0, 1.0, 150);
    MinimizerResult one =
        minimize_rayleigh(ctx, Domain::ball(1.0), RadialProfile::constant(1.0), mesh);
    MinimizerResult two =
        minimize_rayleigh(ctx, Domain::ball(1.0), RadialProfile::constant(2.0), mesh);
    CHECK(two.lambda == doctest::Approx(0.5 * one.lambda).epsilon(1e-6));
}

TEST_CASE("homogeneity rescale moves lambda without re-solving") {
    const ExponentContext ctx{3, 3, 2.0, 3.0};
    const RadialMesh mesh = RadialMesh::uniform(0.0, 1.0, 150);
    MinimizerResult res =
        minimize_rayleigh(ctx, Domain::ball(1.0), RadialProfile::constant(1.0), mesh);
    CHECK(res.converged);
    CHECK(res.constraint == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(res.lambda > 0.0);

    const double target = 2.0 * res.lambda;
    MinimizerResult out = homogeneity_rescale(res, ctx, target);
    CHECK(out.lambda == target);
    // c = (target/lambda)^{1/(p-q)} = 1/2 here
    CHECK(out.u[out.u.size() / 2] ==
          doctest::Approx(0.5 * res.u[res.u.size() / 2]).epsilon(1e-12));
    CHECK(out.constraint == doctest::Approx(res.constraint * 0.125).epsilon(1e-12));
    CHECK(out.residual == doctest::Approx(res.residual * 0.5).epsilon(1e-12));

    CHECK_THROWS_AS(homogeneity_rescale(res, {3, 3, 2.0, 2.0}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(homogeneity_rescale(res, ctx, -1.0), std::invalid_argument);
}

TEST_CASE("truncation continuation tracks the non-attained critical quotient") {
    const ExponentContext ctx{3, 3, 2.0, 2.0};
    ContinuationResult out = continuation_solve(ctx, Domain::full(),
                                                RadialProfile::power(-2.0),
                                                {5.0, 20.0}, 400);
    REQUIRE(out.stages.size() == 2);
    CHECK(out.R_values[1] == 20.0);
    CHECK(out.lambda == out.stages[1].lambda);
    CHECK(out.stages[1].lambda < out.stages[0].lambda);
    CHECK(out.stages[1].lambda > 0.24); // continuum infimum is 1/4
    CHECK_FALSE(out.attained);
    CHECK_FALSE(out.stages[0].attained);
    CHECK_FALSE(out.stages[1].attained);

    CHECK_THROWS_AS(continuation_solve(ctx, Domain::ball(1.0),
                                       RadialProfile::power(-2.0), {5.0}, 400),
                    std::invalid_argument);
    CHECK_THROWS_AS(continuation_solve(ctx, Domain::exterior(2.0),
                                       RadialProfile::power(-2.0), {1.0}, 400),
                    std::invalid_argument);
}
