#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hardy/admit.hpp"

using namespace hardy;

namespace {

const BranchRecord* find_rule(const AdmissibilityVerdict& v, const std::string& rule) {
    for (const auto& b : v.branches)
        if (b.rule == rule) return &b;
    return nullptr;
}

bool has_reason(const AdmissibilityVerdict& v, const std::string& needle) {
    for (const auto& r : v.failure_reasons)
        if (r.find(needle) != std::string::npos) return true;
    return false;
}

DomainSpec on(Domain d) { return {d, false}; }
DomainSpec on_product(Domain base) { return {base, true}; }

WeightSpec radial(RadialProfile g) {
    WeightSpec w;
    w.form = WeightSpec::Form::Radial;
    w.g1 = std::move(g);
    return w;
}

WeightSpec cylindrical(RadialProfile g1, RadialProfile g2) {
    WeightSpec w;
    w.form = WeightSpec::Form::Cylindrical;
    w.g1 = std::move(g1);
    w.g2 = std::move(g2);
    return w;
}

const double w3 = unit_ball_volume(3);

} // namespace

TEST_CASE("scale-critical power weight lands in the weak Lorentz branch") {
    AdmissibilityVerdict v = classify({3, 3, 2.0, 2.0}, on(Domain::full()),
                                      radial(RadialProfile::power(-2.0)));
    REQUIRE(v.admissible == Admissibility::Admissible);
    const BranchRecord* b = find_rule(v, "lorentz_rearrangement");
    REQUIRE(b != nullptr);
    CHECK(b->space == "L^{1.5,inf}");
    REQUIRE(b->norms.size() == 1);
    // sup t^{2/3} f**: f* = (t/w3)^{-2/3} so f** = 3 f*.
    CHECK(b->norms[0] == doctest::Approx(3.0 * std::pow(w3, 2.0 / 3.0)).epsilon(1e-8));
    CHECK(b->constant_form == "C(N,p,q) * ||g||_X");
}

TEST_CASE("q < p on a ball: finite second index, plus the weighted-L1 branch") {
    AdmissibilityVerdict v = classify({3, 3, 2.0, 1.0}, on(Domain::ball(1.0)),
                                      radial(RadialProfile::power(-2.0)));
    REQUIRE(v.admissible == Admissibility::Admissible);

    const BranchRecord* lz = find_rule(v, "lorentz_rearrangement");
    REQUIRE(lz != nullptr);
    CHECK(lz->space == "L^{1.2,2}");
    // (int_0^w3 (t^{5/6} 3 (w3/t)^{2/3})^2 dt/t)^{1/2} = sqrt(27) w3^{5/6}
    CHECK(lz->norms[0] ==
          doctest::Approx(std::sqrt(27.0) * std::pow(w3, 5.0 / 6.0)).epsilon(1e-6));

    const BranchRecord* wl = find_rule(v, "radial_majorant_lebesgue");
    REQUIRE(wl != nullptr);
    CHECK(wl->space == "L^1((a,b), r^{1.5})");
    CHECK(wl->norms[0] == doctest::Approx(2.0).epsilon(1e-8)); // int_0^1 r^{-1/2}
}

TEST_CASE("N = p needs a bounded domain and a log-refined quasinorm") {
    const ExponentContext ctx{2, 2, 2.0, 2.0};
    const RadialProfile g = RadialProfile::power_log(2.0, 2.0, 1.0);

    AdmissibilityVerdict unb = classify(ctx, on(Domain::full()), radial(g));
    CHECK(unb.admissible == Admissibility::Unknown);
    CHECK(has_reason(unb, "bounded domain"));

    AdmissibilityVerdict v = classify(ctx, on(Domain::ball(1.0)), radial(g));
    REQUIRE(v.admissible == Admissibility::Admissible);
    const BranchRecord* b = find_rule(v, "lorentz_rearrangement");
    REQUIRE(b != nullptr);
    CHECK(b->space == "L^{1,inf;1}");
    // sup_t t log(e pi / t) f*(t) on the unit disk peaks at the domain measure.
    CHECK(b->norms[0] == doctest::Approx(M_PI).epsilon(2e-4));
}

TEST_CASE("N = p, q = 1: both boundary indices are tried") {
    AdmissibilityVerdict v = classify({2, 2, 2.0, 1.0}, on(Domain::ball(1.0)),
                                      radial(RadialProfile::constant(1.0)));
    REQUIRE(v.admissible == Admissibility::Admissible);
    const BranchRecord* b = find_rule(v, "lorentz_rearrangement");
    REQUIRE(b != nullptr);
    CHECK(b->space == "L^{1,2;0}"); // A = q-1 accepts first
    // (int_0^pi t^2 dt/t)^{1/2} for the constant weight
    CHECK(b->norms[0] == doctest::Approx(M_PI / std::sqrt(2.0)).epsilon(1e-7));
}

TEST_CASE("N < p reduces to a plain L^1 bound with the sectorial factor") {
    AdmissibilityVerdict v = classify({1, 1, 2.0, 1.0}, on(Domain::ball(1.0)),
                                      radial(RadialProfile::constant(1.0)));
    REQUIRE(v.admissible == Admissibility::Admissible);
    const BranchRecord* b = find_rule(v, "lorentz_rearrangement");
    REQUIRE(b != nullptr);
    CHECK(b->space == "L^1");
    CHECK(b->norms[0] == doctest::Approx(2.0).epsilon(1e-9)); // N sigma w_N * ||1||
    CHECK(b->constant_form == "C(N,p,q) * ||g||_1");
    // the weighted-L1 route refuses domains containing the origin here
    CHECK(has_reason(v, "0 outside the domain"));
}

TEST_CASE("shifted power weight passes both radial criteria") {
    AdmissibilityVerdict v = classify({3, 3, 2.0, 2.0}, on(Domain::full()),
                                      radial(RadialProfile::shifted_power(3.0, 1.0)));
    REQUIRE(v.admissible == Admissibility::Admissible);
    CHECK(find_rule(v, "lorentz_rearrangement") != nullptr);
    const BranchRecord* wl = find_rule(v, "radial_majorant_lebesgue");
    REQUIRE(wl != nullptr);
    CHECK(wl->space == "L^1((a,b), r^{1})");
    CHECK(wl->norms[0] == doctest::Approx(0.5).epsilon(1e-8)); // int (1+r)^{-3} r dr
}

TEST_CASE("monotonicity gate on the weighted-L1 criterion near the critical range") {
    // bands 1,2,1 on (0.5,2.5): integrable but not decreasing
    const RadialProfile g =
        RadialProfile::tabulated({0.5, 1.5, 2.0, 2.5}, {1.0, 2.0, 1.0});

    AdmissibilityVerdict lo = classify({3, 3, 2.0, 3.0}, on(Domain::full()), radial(g));
    const BranchRecord* b = find_rule(lo, "radial_majorant_lebesgue");
    REQUIRE(b != nullptr); // q = 3 < P*(1) = 4: no gate
    const double s32 = 1.5;
    const double expect =
        (2.0 / 3.0) * ((std::pow(1.5, s32) - std::pow(0.5, s32)) +
                       2.0 * (std::pow(2.0, s32) - std::pow(1.5, s32)) +
                       (std::pow(2.5, s32) - std::pow(2.0, s32)));
    CHECK(b->norms[0] == doctest::Approx(expect).epsilon(1e-6));

    AdmissibilityVerdict hi = classify({3, 3, 2.0, 5.0}, on(Domain::full()), radial(g));
    CHECK(find_rule(hi, "radial_majorant_lebesgue") == nullptr);
    CHECK(has_reason(hi, "strictly decreasing"));
    CHECK(hi.admissible == Admissibility::Admissible); // rearrangement route still works
}

TEST_CASE("structural obstructions defeat every branch") {
    AdmissibilityVerdict ni = classify({3, 3, 2.0, 2.0}, on(Domain::full()),
                                       radial(RadialProfile::power(-4.0)));
    CHECK(ni.admissible == Admissibility::StructurallyExcluded);
    CHECK(has_reason(ni, "not locally integrable"));

    AdmissibilityVerdict sc = classify({3, 3, 2.0, 7.0}, on(Domain::full()),
                                       radial(RadialProfile::constant(1.0)));
    CHECK(sc.admissible == Admissibility::StructurallyExcluded);
    CHECK(has_reason(sc, "rescaling"));

    // on a ball the scaling argument does not apply: merely out of range
    AdmissibilityVerdict bl = classify({3, 3, 2.0, 7.0}, on(Domain::ball(1.0)),
                                       radial(RadialProfile::constant(1.0)));
    CHECK(bl.admissible == Admissibility::Unknown);
    CHECK(has_reason(bl, "q > p*"));
}

TEST_CASE("cylindrical weights: exact power vs dominated profile") {
    const ExponentContext ctx{4, 3, 2.0, 2.0};
    const DomainSpec dom = on_product(Domain::full());

    AdmissibilityVerdict v = classify(
        ctx, dom, cylindrical(RadialProfile::power(-2.0), RadialProfile::constant(1.0)));
    const BranchRecord* b = find_rule(v, "cylindrical_power");
    REQUIRE(b != nullptr);
    CHECK(b->space == "L^inf((a,b), r^{2})");
    REQUIRE(b->norms.size() == 2);
    CHECK(b->norms[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(b->norms[1] == 1.0);
    CHECK(b->params == "k > p");

    const RadialProfile table = RadialProfile::tabulated({0.5, 1.0, 2.0}, {4.0, 1.0});
    AdmissibilityVerdict d =
        classify(ctx, dom, cylindrical(table, RadialProfile::constant(1.0)));
    const BranchRecord* db = find_rule(d, "cylindrical_dominated");
    REQUIRE(db != nullptr);
    CHECK(db->norms[0] == doctest::Approx(4.0).epsilon(0.05)); // sup r^2 g~ sampled

    AdmissibilityVerdict nc = classify(
        ctx, dom,
        cylindrical(RadialProfile::power(-2.0), RadialProfile::shifted_power(1.0, 1.0)));
    CHECK(find_rule(nc, "cylindrical_power") == nullptr);
    CHECK(has_reason(nc, "second factor is not constant"));
}

TEST_CASE("lorentz pair: diagonal branch below p") {
    AdmissibilityVerdict v =
        classify({4, 3, 2.0, 1.0}, on_product(Domain::full()),
                 cylindrical(RadialProfile::shifted_power(3.0, 1.0),
                             RadialProfile::shifted_power(1.0, 1.0)));
    REQUIRE(v.admissible == Admissibility::Admissible);
    REQUIRE(v.branches.size() == 1);
    const BranchRecord& b = v.branches[0];
    CHECK(b.rule == "lorentz_pair");
    CHECK(b.space == "L^{1.2,2} x L^{2}");
    CHECK(b.params == "st=0.5");
    REQUIRE(b.norms.size() == 2);
    CHECK(b.norms[0] > 0.0);
    CHECK(std::isfinite(b.norms[0]));
    // L^2(R) norm of (1+|z|)^{-1}: f* = 2/(2+t), integral 2
    CHECK(b.norms[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));

    // same q with k = 1: the side condition k > p fails and nothing applies
    AdmissibilityVerdict side =
        classify({4, 1, 2.0, 1.0}, on_product(Domain::full()),
                 cylindrical(RadialProfile::shifted_power(3.0, 1.0),
                             RadialProfile::shifted_power(1.0, 1.0)));
    CHECK(side.admissible == Admissibility::Unknown);
    CHECK(has_reason(side, "k > p"));
}

TEST_CASE("lorentz pair: weak-norm branch walks the (s,t) segment") {
    AdmissibilityVerdict v = classify(
        {4, 3, 2.0, 3.0}, on_product(Domain::full()),
        cylindrical(RadialProfile::power(-1.0), RadialProfile::constant(1.0)));
    REQUIRE(v.admissible == Admissibility::Admissible);
    const BranchRecord* b = find_rule(v, "lorentz_pair");
    REQUIRE(b != nullptr);
    // N-k = 1 <= p forces t = 1, so s = st = (q-p)/(p*-p) = 1/2
    CHECK(b->params == "s=0.5,t=1");
    CHECK(b->space == "L^{3,inf} x L^{inf,inf}");
    CHECK(b->norms[0] == doctest::Approx(std::pow(w3, 1.0 / 3.0)).epsilon(1e-8));
    CHECK(b->norms[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("weighted lebesgue pair on a punctured product") {
    const DomainSpec dom = on_product(Domain::exterior(1.0));

    AdmissibilityVerdict v =
        classify({3, 1, 2.0, 1.5}, dom,
                 cylindrical(RadialProfile::power(-2.0),
                             RadialProfile::shifted_power(1.0, 1.0)));
    REQUIRE(v.admissible == Admissibility::Admissible);
    REQUIRE(v.branches.size() == 1);
    const BranchRecord& b = v.branches[0];
    CHECK(b.rule == "weighted_lebesgue_pair");
    CHECK(b.space == "L^1((a,b), r^{0.75}) x L^{4}((0,inf), r^{1})");
    CHECK(b.norms[0] == doctest::Approx(4.0).epsilon(1e-7)); // int_1^inf r^{-1.25}
    CHECK(b.norms[1] == doctest::Approx(std::pow(1.0 / 6.0, 0.25)).epsilon(1e-7));

    // q = p sits at beta = 1: conjugate factor degrades to a sup
    AdmissibilityVerdict f =
        classify({3, 1, 2.0, 2.0}, dom,
                 cylindrical(RadialProfile::power(-3.0),
                             RadialProfile::shifted_power(1.0, 1.0)));
    const BranchRecord* fb = find_rule(f, "weighted_lebesgue_pair");
    REQUIRE(fb != nullptr);
    CHECK(fb->space == "L^{1}((a,b), r^{1}) x L^{inf}((0,inf))");
    CHECK(fb->norms[0] == doctest::Approx(1.0).epsilon(1e-7)); // int_1^inf r^{-2}
    CHECK(fb->norms[1] == doctest::Approx(1.0).epsilon(1e-6)); // sup (1+r)^{-1}

    AdmissibilityVerdict kp =
        classify({3, 2, 2.0, 2.0}, dom,
                 cylindrical(RadialProfile::power(-1.0),
                             RadialProfile::shifted_power(1.0, 1.0)));
    CHECK(kp.admissible == Admissibility::Unknown);
    CHECK(has_reason(kp, "k != p"));
}

TEST_CASE("cylindrical local integrability is checked factor by factor") {
    AdmissibilityVerdict g1bad = classify(
        {4, 1, 2.0, 2.0}, on_product(Domain::full()),
        cylindrical(RadialProfile::power(-2.0), RadialProfile::constant(1.0)));
    CHECK(g1bad.admissible == Admissibility::StructurallyExcluded);
    CHECK(has_reason(g1bad, "g_1 is not locally integrable"));

    AdmissibilityVerdict g2bad = classify(
        {4, 3, 2.0, 2.0}, on_product(Domain::full()),
        cylindrical(RadialProfile::constant(1.0), RadialProfile::power(-1.0)));
    CHECK(g2bad.admissible == Admissibility::StructurallyExcluded);
    CHECK(has_reason(g2bad, "g_2 is not locally integrable"));
}

TEST_CASE("classify validates the domain/weight shape") {
    CHECK_THROWS_AS(classify({3, 3, 2.0, 2.0}, on_product(Domain::full()),
                             radial(RadialProfile::constant(1.0))),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify({4, 3, 2.0, 2.0}, on(Domain::full()),
                             cylindrical(RadialProfile::constant(1.0),
                                         RadialProfile::constant(1.0))),
                    std::invalid_argument);
}

TEST_CASE("abstract weights carry their own norm through the verdict") {
    WeightSpec w;
    w.form = WeightSpec::Form::Abstract;
    w.abstract_norm = 7.5;
    w.abstract_space = "L^{1.5,inf} (given)";
    AdmissibilityVerdict v = classify({3, 3, 2.0, 2.0}, on(Domain::full()), w);
    REQUIRE(v.admissible == Admissibility::Admissible);
    REQUIRE(v.branches.size() == 1);
    CHECK(v.branches[0].space == "L^{1.5,inf} (given)");
    CHECK(v.branches[0].norms[0] == 7.5);
}

TEST_CASE("certificate interpolation") {
    Certificate a{2.0, 2.0, 4.0, "ga", "", false};
    Certificate b{2.0, 3.0, 8.0, "gb", "", false};

    Certificate m = interpolate_potentials(a, b, 0.5);
    CHECK(m.q == doctest::Approx(2.5));
    CHECK(m.constant == doctest::Approx(std::sqrt(32.0)));
    CHECK(interpolate_potentials(a, b, 1.0).constant == 4.0);
    CHECK(interpolate_potentials(a, b, 0.0).constant == 8.0);

    Certificate l1{2.0, 2.0, 4.0, "h", "", true};
    Certificate a9{2.0, 2.0, 9.0, "ga", "", false};
    Certificate g = interpolate_potentials(a9, l1, 0.5);
    CHECK(g.q == doctest::Approx(1.0)); // q = t p
    CHECK(g.constant == doctest::Approx(6.0));

    Certificate bad_p{3.0, 3.0, 8.0, "gb", "", false};
    CHECK_THROWS_AS(interpolate_potentials(a, bad_p, 0.5), std::invalid_argument);
    Certificate aq{2.0, 1.5, 4.0, "ga", "", false};
    CHECK_THROWS_AS(interpolate_potentials(aq, l1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(interpolate_potentials(a, b, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(interpolate_potentials(a9, l1, 0.0), std::invalid_argument);
}

TEST_CASE("product lift multiplies constants") {
    Certificate c1{2.0, 2.0, 3.0, "g1", "", false};
    Certificate out = product_lift(c1, 2.0);
    CHECK(out.constant == doctest::Approx(6.0));
    CHECK(out.q == 2.0);

    Certificate bad{2.0, 3.0, 3.0, "g1", "", false};
    CHECK_THROWS_AS(product_lift(bad, 2.0), std::invalid_argument);
}

TEST_CASE("sectorial lift combines a weighted L^1 slice with a conjugate factor") {
    SectorialLiftInput in;
    in.ctx = {3, 1, 2.0, 2.0};
    in.domain = on_product(Domain::annulus(1.0, 2.0));
    in.g1 = RadialProfile::power(-2.0);
    in.g2 = RadialProfile::shifted_power(1.0, 1.0);
    in.h = [](double) { return 1.0; };
    in.gamma = 0.5;
    in.delta = 0.5;
    in.hypothesis = "slice_bound";

    Certificate c = sectorial_lift(in);
    CHECK(c.q == doctest::Approx(0.5 * 2.0 + 0.5 * 6.0)); // delta p + gamma p*
    // int_1^2 r^{-2} dr  *  sup (1+r)^{-1}
    CHECK(c.constant == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(c.derivation.find("slice_bound") != std::string::npos);

    SectorialLiftInput cj = in;
    cj.gamma = 0.25;
    cj.delta = 0.25;
    cj.g2 = RadialProfile::shifted_power(2.0, 1.0);
    Certificate c2 = sectorial_lift(cj);
    CHECK(c2.q == doctest::Approx(0.25 * 2.0 + 0.25 * 6.0));
    // conjugate exponent 2: (int (1+r)^{-4} r dr)^{1/2} = (1/6)^{1/2}
    CHECK(c2.constant == doctest::Approx(0.5 * std::sqrt(1.0 / 6.0)).epsilon(1e-6));

    SectorialLiftInput bad = in;
    bad.delta = 0.0;
    CHECK_THROWS_AS(sectorial_lift(bad), std::invalid_argument);
    SectorialLiftInput bad2 = in;
    bad2.domain = on_product(Domain::full());
    CHECK_THROWS_AS(sectorial_lift(bad2), std::invalid_argument);
}
