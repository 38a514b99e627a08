#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghsd/construct.hpp"
#include "ghsd/registry.hpp"
#include "ghsd/splines.hpp"

#include <nlohmann/json.hpp>

using namespace ghsd;

TEST_CASE("cardinal B-splines") {
    PiecewisePoly b1 = bspline(1);
    CHECK(b1.eval(Q(1) / 2) == Q(1));
    CHECK(b1.eval(Q(0)) == Q(0));
    CHECK(b1.eval(Q(1)) == Q(1));
    CHECK(b1.eval(Q(3) / 2) == Q(0));
    CHECK(b1.degree() == 0);
    CHECK(b1.derivative().is_zero());

    PiecewisePoly b2 = bspline(2);
    CHECK(b2.lo == 0);
    CHECK(b2.hi == 2);
    CHECK(b2.degree() == 1);
    CHECK(b2.eval(Q(1)) == Q(1));
    CHECK(b2.eval(Q(1) / 2) == Q(1) / 2);
    CHECK(b2.eval(Q(-1) / 4) == Q(0));
    CHECK(b2.eval(Q(2)) == Q(0));

    PiecewisePoly b3 = bspline(3);
    CHECK(b3.derivative().eval(Q(1)) == Q(1));
    // B_3'' = B_1 - 2 B_1(.-1) + B_1(.-2), piecewise constant.
    PiecewisePoly dd = b3.derivative(2);
    CHECK(dd.eval(Q(1) / 2) == Q(1));
    CHECK(dd.eval(Q(3) / 2) == Q(-2));
    CHECK(dd.eval(Q(5) / 2) == Q(1));

    // Partition of unity at a non-dyadic point.
    for (int n = 2; n <= 5; ++n) {
        PiecewisePoly b = bspline(n);
        Q s = 0;
        for (long long k = -8; k <= 8; ++k) s += b.eval(Q(7) / 5 - k);
        CHECK(s == Q(1));
    }
}

TEST_CASE("B-spline refinement identity certified exactly") {
    for (int n = 1; n <= 6; ++n) {
        SplineVector phi = {bspline(n)};
        SplineResidual res = refinement_residual(phi, bspline_mask(n));
        CHECK(res.value == Q(0));
    }
    // A perturbed coefficient is caught with a witness point.
    Mask bad = bspline_mask(2);
    QMatrix v(1, 1);
    v(0, 0) = Q(1) / 3;
    bad.set({0}, v);
    SplineResidual res = refinement_residual({bspline(2)}, bad);
    CHECK(res.value != Q(0));
    CHECK(res.comp == 1);
}

TEST_CASE("Hermite basis on [-1,1] interpolates jets") {
    for (int m = 1; m <= 4; ++m) {
        SplineVector th = hermite_theta(m);
        REQUIRE(th.size() == size_t(m) + 1);
        for (int l = 0; l <= m; ++l) {
            CHECK(th[size_t(l)].lo == -1);
            CHECK(th[size_t(l)].hi == 1);
            for (int j = 0; j <= m; ++j)
                for (long long k = -2; k <= 2; ++k) {
                    Q want = (l == j && k == 0) ? Q(1) : Q(0);
                    CHECK(th[size_t(l)].derivative(j).eval(Q(k)) == want);
                }
        }
    }
    // Frozen closed forms for m = 1: (1-x)^2 (1+2x) and (1-x)^2 x.
    SplineVector t1 = hermite_theta(1);
    CHECK(t1[0].eval(Q(1) / 4) == Q(27) / 32);
    CHECK(t1[1].eval(Q(1) / 4) == Q(9) / 64);
    CHECK(t1[0].eval(Q(-1) / 4) == Q(27) / 32);
    CHECK(t1[1].eval(Q(-1) / 4) == Q(-9) / 64);

    CHECK(hermite_theta(2)[2].derivative(2).eval(Q(0)) == Q(1));
}

TEST_CASE("tensor fixtures carry one unit jet") {
    TensorSpline f = f_mu_fixture({1, 0}, 1);
    CHECK(f.deriv_eval({1, 0}, {Q(0), Q(0)}) == Q(1));
    CHECK(f.deriv_eval({0, 1}, {Q(0), Q(0)}) == Q(0));
    CHECK(f.eval({Q(0), Q(0)}) == Q(0));
    CHECK(f.deriv_eval({1, 0}, {Q(1), Q(0)}) == Q(0));
    CHECK(f.deriv_eval({1, 1}, {Q(1) / 3, Q(1) / 3}) ==
          f.factor[0].derivative(1).eval(Q(1) / 3) * f.factor[1].derivative(1).eval(Q(1) / 3));
}

TEST_CASE("node interpolants: hat function") {
    Example12 ex = example12_interpolant(0, 1);
    REQUIRE(ex.phi.size() == 1);
    CHECK(ex.type.nu == std::vector<MIdx>{MIdx{0}});
    CHECK(ex.type.tau_all_zero());
    CHECK(ex.phi[0].eval(Q(0)) == Q(1));
    CHECK(ex.phi[0].eval(Q(1) / 2) == Q(1) / 2);
    CHECK(ex.phi[0].eval(Q(-1) / 2) == Q(1) / 2);
    CHECK(ex.phi[0].eval(Q(1)) == Q(0));

    MaskFile mf = interpolant_to_mask(ex.phi, ex.type);
    CHECK(mf.mask.at({0})(0, 0) == Q(1) / 2);
    CHECK(mf.mask.at({1})(0, 0) == Q(1) / 4);
    CHECK(mf.mask.at({-1})(0, 0) == Q(1) / 4);
}

TEST_CASE("node interpolants: cubic Hermite pair") {
    Example12 ex = example12_interpolant(1, 1);
    REQUIRE(ex.phi.size() == 2);
    CHECK(ex.phi[0].eval(Q(1) / 2) == Q(1) / 2);
    CHECK(ex.phi[1].eval(Q(1) / 2) == Q(1) / 8);

    MaskFile mf = interpolant_to_mask(ex.phi, ex.type);
    QMatrix am1(2, 2), a0(2, 2), a1(2, 2);
    am1(0, 0) = Q(1) / 4;
    am1(0, 1) = Q(3) / 8;
    am1(1, 0) = Q(-1) / 16;
    am1(1, 1) = Q(-1) / 16;
    a0(0, 0) = Q(1) / 2;
    a0(1, 1) = Q(1) / 4;
    a1(0, 0) = Q(1) / 4;
    a1(0, 1) = Q(-3) / 8;
    a1(1, 0) = Q(1) / 16;
    a1(1, 1) = Q(-1) / 16;
    CHECK(mf.mask.at({-1}) == am1);
    CHECK(mf.mask.at({0}) == a0);
    CHECK(mf.mask.at({1}) == a1);
    CHECK(mf.mask.a.size() == 3);

    CHECK(refinement_residual(ex.phi, mf.mask).value == Q(0));
    CHECK(interpolatory_check(mf.mask, mf.type).ok);
}

TEST_CASE("node interpolants: two nodes per interval") {
    Example12 ex = example12_interpolant(1, 2);
    REQUIRE(ex.phi.size() == 4);
    REQUIRE(ex.type.size() == 4);
    // Full jet interpolation at the half-integer nodes.
    for (size_t i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int order = ex.type.nu[size_t(j)][0];
            Q tau = ex.type.tau_of(j)[0];
            for (long long k = -2; k <= 2; ++k) {
                Q want = (int(i) == j && k == 0) ? Q(1) : Q(0);
                CHECK(ex.phi[i].derivative(order).eval(Q(k) + tau) == want);
            }
        }

    MaskFile mf = interpolant_to_mask(ex.phi, ex.type);
    CHECK(refinement_residual(ex.phi, mf.mask).value == Q(0));
    InterpVerdict v = interpolatory_check(mf.mask, mf.type);
    CHECK(v.applicable);
    CHECK(v.ok);
}

TEST_CASE("printed bases satisfy their refinement identities") {
    for (const char* id : {"ex6.4c", "ex6.4d"}) {
        SplineVector phi = registry_spline(id);
        MaskFile mf = build_example(id);
        SplineResidual res = refinement_residual(phi, mf.mask);
        CHECK(res.value == Q(0));
    }
    // Reflection structure of the dual pair's basis.
    SplineVector phi = registry_spline("ex6.3b");
    REQUIRE(phi.size() == 2);
    for (int j = 0; j <= 21; ++j) {
        Q x = Q(-1) + Q(j) / 7;
        CHECK(phi[0].eval(x) == phi[0].eval(Q(1) - x));
        CHECK(phi[1].eval(x) == -phi[1].eval(Q(1) - x));
    }
    CHECK_THROWS_AS(registry_spline("bogus"), ParseError);
}

TEST_CASE("spline JSON dump") {
    nlohmann::json j = nlohmann::json::parse(spline_to_json(registry_spline("ex6.3b")));
    REQUIRE(j.contains("components"));
    REQUIRE(j["components"].size() == 2);
    auto& c0 = j["components"][0];
    CHECK(c0["support"][0] == -1);
    CHECK(c0["support"][1] == 2);
    CHECK(c0["pieces"].size() == 3);
    for (auto& piece : c0["pieces"])
        for (auto& coef : piece["coeffs"]) CHECK_NOTHROW(parse_rational(coef.get<std::string>()));
}
