#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghsd/analysis.hpp"
#include "ghsd/construct.hpp"
#include "ghsd/registry.hpp"
#include "ghsd/splines.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

using namespace ghsd;

TEST_CASE("left unit eigenvector") {
    // The cubic Hermite mask has symbol-at-zero diag(1, 1/8).
    MaskFile mf = interpolant_to_mask(example12_interpolant(1, 1).phi,
                                      example12_interpolant(1, 1).type);
    std::vector<Q> y = left_unit_eigenvector(mf.mask);
    REQUIRE(y.size() == 2);
    CHECK(y[0] == Q(1));
    CHECK(y[1] == Q(0));

    // Eigenvalue 1 with multiplicity two is rejected.
    Mask id2;
    id2.d = 1;
    id2.r = 2;
    id2.set({0}, QMatrix::identity(2));
    CHECK_THROWS_AS(left_unit_eigenvector(id2), AnalysisError);
}

TEST_CASE("B-spline sum rules are sharp") {
    for (int n = 1; n <= 6; ++n) {
        SumRuleResult sr = sum_rule_order(bspline_mask(n), 10);
        CHECK(sr.order == n);
        REQUIRE(sr.filter.has_value());
        CHECK(sr.filter->jets.at(MIdx{0})(0, 0) == Q(1));
    }
}

TEST_CASE("hat matching filter is the frozen jet triple") {
    FilterResult f = matching_filter(bspline_mask(2), 3);
    CHECK(f.order == 3);
    CHECK(f.unique);
    CHECK(f.resonant_degrees.empty());
    CHECK(f.jets.at({0})(0, 0) == Q(1));
    CHECK(f.jets.at({1})(0, 0) == Q(-1));
    CHECK(f.jets.at({2})(0, 0) == Q(5) / 6);
}

TEST_CASE("filter pins force a chosen normalization") {
    FilterOptions opt;
    opt.with_omega = false;
    opt.pins.push_back({MIdx{1}, 0, Q(0)});
    // Pinning N_1 = 0 on the hat mask contradicts the refinement identity.
    CHECK(!try_filter(bspline_mask(2), 3, opt).has_value());
}

TEST_CASE("resonant degree is solved globally") {
    // The cubic Hermite mask has symbol eigenvalue 1/8 = 2^{-3}, so the
    // one-step recursion breaks at degree 3 while the global system stays
    // consistent (the mask reproduces cubics).
    Example12 ex = example12_interpolant(1, 1);
    MaskFile mf = interpolant_to_mask(ex.phi, ex.type);
    FilterResult f = matching_filter(mf.mask, 4);
    CHECK(std::count(f.resonant_degrees.begin(), f.resonant_degrees.end(), 3) == 1);
    CHECK(!f.unique);
    SumRuleResult sr = sum_rule_order(mf.mask, 8);
    CHECK(sr.order == 4);
}

TEST_CASE("degree-six resonance in the Birkhoff family") {
    MaskFile mf = build_example("ex6.2b");
    SumRuleResult sr = sum_rule_order(mf.mask, 12);
    CHECK(sr.order == 8);
    REQUIRE(sr.filter.has_value());
    CHECK(std::count(sr.filter->resonant_degrees.begin(), sr.filter->resonant_degrees.end(), 6) ==
          1);
}

TEST_CASE("spectral condition flags dyadic eigenvalues") {
    Example12 ex = example12_interpolant(1, 1);
    MaskFile mf = interpolant_to_mask(ex.phi, ex.type);
    SpectralVerdict ok = spectral_condition(mf.mask, 2);
    CHECK(ok.ok);
    CHECK(ok.one_simple);
    // 1/8 is an eigenvalue, so extending the band to degree 3 must fail.
    SpectralVerdict bad = spectral_condition(mf.mask, 3);
    CHECK(!bad.pow_free);
    CHECK(!bad.ok);
}

TEST_CASE("generalized Hermite verdict with type pins") {
    MaskFile mf = build_example("ex6.3a");
    HermiteVerdict v = is_generalized_hermite(mf.mask, mf.type, 6);
    CHECK(v.ok);
    CHECK(v.max_order >= 4);
    REQUIRE(v.filter.has_value());
    // The pinned jets reproduce the type's phase monomials.
    Jet target = hermite_target_jet(mf.type, 1);
    CHECK(v.filter->jets.at({0}) == target.at({0}));
    CHECK(v.filter->jets.at({1}) == target.at({1}));
}

TEST_CASE("linear-phase moment orders") {
    // Hat with nodes at k: only constants carry flat phase.
    HermiteType plain;
    plain.nu = {MIdx{0}};
    CHECK(lpm_order(bspline_mask(2), plain, 6) == 1);
    // Hat with nodes at k+1 reproduces linear data exactly.
    HermiteType shifted;
    shifted.nu = {MIdx{0}};
    shifted.tau = {{Q(1)}};
    CHECK(lpm_order(bspline_mask(2), shifted, 6) == 2);

    MaskFile mf = build_example("ex6.2a");
    CHECK(lpm_order(mf.mask, mf.type, 8) == 6);
}

TEST_CASE("theta pairing for shifted components") {
    HermiteType t;
    t.nu = {MIdx{0}, MIdx{0}};
    t.tau = {{Q(0)}, {Q(1) / 2}};
    ThetaResult th = derive_theta(t);
    REQUIRE(th.theta.size() == 2);
    CHECK(th.theta[0] == 0);
    CHECK(th.theta[1] == 0);
    CHECK(th.beta[0] == Lat{0});
    CHECK(th.beta[1] == Lat{1});

    // No integral pairing exists for an isolated third-shift component.
    HermiteType bad;
    bad.nu = {MIdx{0}};
    bad.tau = {{Q(1) / 3}};
    CHECK_THROWS_AS(derive_theta(bad), AnalysisError);
}

TEST_CASE("interpolatory verdicts") {
    HermiteType shifted;
    shifted.nu = {MIdx{0}};
    shifted.tau = {{Q(1)}};
    InterpVerdict hat = interpolatory_check(bspline_mask(2), shifted);
    CHECK(hat.applicable);
    CHECK(hat.ok);

    MaskFile yes = build_example("ex6.4b");
    InterpVerdict v1 = interpolatory_check(yes.mask, yes.type);
    CHECK(v1.applicable);
    CHECK(v1.ok);

    MaskFile no = build_example("ex6.2a");
    InterpVerdict v2 = interpolatory_check(no.mask, no.type);
    CHECK(!v2.ok);
}

TEST_CASE("classification report serializes") {
    MaskFile mf = build_example("ex6.4b");
    ClassificationReport rep = classify(mf, 8);
    CHECK(rep.sr_order == 4);
    CHECK(rep.lpm_order == 4);
    CHECK(rep.hermite_type_ok);
    CHECK(rep.interpolatory_ok);
    CHECK(rep.spectral_ok);

    nlohmann::json j = nlohmann::json::parse(report_to_json(rep, mf.mask.d, mf.mask.r));
    CHECK(j["sr_order"] == 4);
    CHECK(j["interpolatory_ok"] == true);
    CHECK(j.contains("matching_filter"));
}

TEST_CASE("registry lookup") {
    CHECK(find_example("ex6.2a") != nullptr);
    CHECK(find_example("nope") == nullptr);
    CHECK(example_registry().size() == 16);
    CHECK_THROWS_AS(build_example("ex6.2a", {{"bogus", Q(1)}}), ParseError);
    // Overriding a family parameter changes the mask.
    MaskFile base = build_example("ex6.2b");
    MaskFile moved = build_example("ex6.2b", {{"t", Q(1)}});
    CHECK(!(base.mask == moved.mask));
}
