#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghsd/construct.hpp"
#include "ghsd/registry.hpp"
#include "ghsd/smoothness.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

using namespace ghsd;

namespace {

MaskFile scalar_file(const Mask& m) {
    MaskFile mf;
    mf.mask = m;
    mf.type.nu = {MIdx(size_t(m.d), 0)};
    return mf;
}

SeqMatrix unit_column(int r, int at, const Lat& k) {
    SeqMatrix s;
    QMatrix e(r, 1);
    e(at, 0) = 1;
    s[k] = e;
    return s;
}

}  // namespace

TEST_CASE("autocorrelation of a two-point column") {
    SeqMatrix u = unit_column(2, 0, {0});
    QMatrix e2(2, 1);
    e2(1, 0) = 1;
    u[{1}] = e2;
    SeqMatrix F = autocorrelation(u);
    CHECK(F.at({0}) == QMatrix::identity(2));
    QMatrix f1(2, 2);
    f1(1, 0) = 1;
    CHECK(F.at({1}) == f1);
    CHECK(F.at({-1}) == f1.transpose());
}

TEST_CASE("transition operator on the hat autocorrelation") {
    Mask hat = bspline_mask(2);
    SeqMatrix F0 = autocorrelation(unit_column(1, 0, {0}));
    SeqMatrix F1 = transfer_apply(hat, F0);
    // (T F)(j) = 2 (a * a~)(2j), frozen: 3/4 at 0, 1/8 at +-1.
    CHECK(F1.at({0})(0, 0) == Q(3) / 4);
    CHECK(F1.at({1})(0, 0) == Q(1) / 8);
    CHECK(F1.at({-1})(0, 0) == Q(1) / 8);
}

TEST_CASE("trace identity for mask iterates") {
    // ||a_n * u||_2^2 = 2^{-dn} tr((T^n F_u)(0)), exactly in Q.
    for (int n = 1; n <= 4; ++n) {
        Mask b3 = bspline_mask(3);
        SeqMatrix u = unit_column(1, 0, {0});
        CHECK(iterate_norm_sq(b3, u, n) == transfer_trace(b3, autocorrelation(u), n) / q_pow(Q(2), n));
    }
    MaskFile mf = build_example("ex6.3a");
    for (int at = 0; at < 2; ++at) {
        SeqMatrix u = unit_column(2, at, {0});
        u[{1}] = QMatrix(2, 1);
        u.at({1})(1 - at, 0) = Q(1) / 3;
        SeqMatrix F0 = autocorrelation(u);
        for (int n = 1; n <= 3; ++n)
            CHECK(iterate_norm_sq(mf.mask, u, n) == transfer_trace(mf.mask, F0, n) / q_pow(Q(2), n));
    }
}

TEST_CASE("B-spline critical exponents") {
    for (int n = 2; n <= 4; ++n) {
        SmoothnessReport rep = critical_sm2(scalar_file(bspline_mask(n)));
        CHECK(rep.converged);
        CHECK(rep.sr_order == n);
        CHECK(rep.m_used == n - 1);
        CHECK(std::fabs(rep.sm2 - (n - 0.5)) < 1e-3);
        CHECK(std::fabs(rep.sminf_lower - (rep.sm2 - 0.5)) < 1e-12);
        CHECK(rep.generators >= 1);
        CHECK(rep.rho2 > 0.0);
    }
}

TEST_CASE("frozen smoothness values for printed masks") {
    SmoothnessReport b = critical_sm2(build_example("ex6.3b"));
    CHECK(b.converged);
    CHECK(std::fabs(b.sm2 - 4.5) < 1e-3);

    SmoothnessReport c = critical_sm2(build_example("ex6.4c"));
    CHECK(std::fabs(c.sm2 - 3.5) < 1e-3);
}

TEST_CASE("convergence verdicts") {
    ConvergenceVerdict hat = convergence_verdict(scalar_file(bspline_mask(2)));
    CHECK(hat.verdict == "convergent in C^0");
    CHECK(hat.m == 0);
    CHECK(hat.margin > 0.0);

    ConvergenceVerdict h = convergence_verdict(build_example("ex6.3a"));
    CHECK(h.verdict == "convergent in C^1");
    CHECK(h.m == 1);
    CHECK(h.margin > 0.0);
}

TEST_CASE("report serialization and non-convergence flag") {
    SmoothnessReport rep = critical_sm2(scalar_file(bspline_mask(3)));
    nlohmann::json j = nlohmann::json::parse(smoothness_to_json(rep));
    CHECK(j["sr_order"] == 3);
    CHECK(j["converged"] == true);
    CHECK(j["lambda_per_generator"].size() == size_t(rep.generators));
    CHECK(std::fabs(j["sm2"].get<double>() - rep.sm2) < 1e-15);

    SmoothnessOptions tight;
    tight.max_iters = 1;
    SmoothnessReport partial = critical_sm2(build_example("ex6.2a"), tight);
    CHECK(!partial.converged);
}

TEST_CASE("sup-norm radius heuristic stays sane") {
    double rho = rho_inf_estimate(scalar_file(bspline_mask(3)), 8);
    CHECK(std::isfinite(rho));
    CHECK(rho > 0.0);
    CHECK(rho < 1.0);
    CHECK_THROWS_AS(rho_inf_estimate(scalar_file(bspline_mask(2)), 50), CapError);
}
