#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghsd/mask.hpp"

#include <sstream>

using namespace ghsd;

TEST_CASE("rational parse and format round trip") {
    CHECK(parse_rational("3/4") == Q(3) / 4);
    CHECK(parse_rational("-7/2") == Q(-7) / 2);
    CHECK(parse_rational("0") == Q(0));
    CHECK(format_rational(Q(6) / 4) == "3/2");
    CHECK(format_rational(Q(-5)) == "-5");
    CHECK(format_rational(Q(0)) == "0");
    CHECK(parse_rational(format_rational(Q(-91) / 1024)) == Q(-91) / 1024);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("+2"), ParseError);
    CHECK_THROWS_AS(parse_rational("2/-3"), ParseError);
}

TEST_CASE("rational helpers") {
    CHECK(q_pow(Q(2), 10) == Q(1024));
    CHECK(q_pow(Q(2), -3) == Q(1) / 8);
    CHECK(q_pow(Q(1) / 3, 2) == Q(1) / 9);
    CHECK(factorial(0) == Q(1));
    CHECK(factorial(6) == Q(720));
    CHECK(binomial(5, 2) == Q(10));
    CHECK(binomial(4, 0) == Q(1));
    CHECK(binomial(3, 5) == Q(0));
    CHECK(to_double(Q(1) / 2) == doctest::Approx(0.5));
}

TEST_CASE("multi-index enumeration and arithmetic") {
    auto deg2 = multi_indices_of_degree(2, 2);
    REQUIRE(deg2.size() == 3);
    CHECK(mi_abs(deg2[0]) == 2);
    auto upto = multi_indices_up_to(2, 2);
    CHECK(upto.size() == 6);  // 1 + 2 + 3
    CHECK(upto[0] == MIdx{0, 0});
    auto below = multi_indices_below(MIdx{1, 1});
    CHECK(below.size() == 4);

    CHECK(mi_factorial(MIdx{3, 2}) == Q(12));
    CHECK(mi_binomial(MIdx{2, 1}, MIdx{1, 1}) == Q(2));
    CHECK(mi_binomial(MIdx{1, 0}, MIdx{0, 1}) == Q(0));
    CHECK(power(Lat{2, 3}, MIdx{2, 1}) == Q(12));
    CHECK(power(std::vector<Q>{Q(1) / 2}, MIdx{3}) == Q(1) / 8);
    CHECK(mi_leq(MIdx{1, 0}, MIdx{2, 0}));
    CHECK(!mi_leq(MIdx{1, 1}, MIdx{2, 0}));
    CHECK(mi_sub(MIdx{3, 2}, MIdx{1, 2}) == MIdx{2, 0});
}

TEST_CASE("QMatrix linear algebra") {
    QMatrix A(2, 2);
    A(0, 0) = 1;
    A(0, 1) = 2;
    A(1, 0) = 3;
    A(1, 1) = 4;
    QMatrix I = QMatrix::identity(2);
    CHECK(A * inverse(A) == I);
    CHECK(rank(A) == 2);

    QMatrix S(2, 2);  // singular
    S(0, 0) = 1;
    S(0, 1) = 2;
    S(1, 0) = 2;
    S(1, 1) = 4;
    CHECK(rank(S) == 1);
    CHECK_THROWS_AS(inverse(S), AnalysisError);
    auto lk = left_kernel(S);
    REQUIRE(lk.size() == 1);
    CHECK(lk[0][0] * S(0, 0) + lk[0][1] * S(1, 0) == Q(0));
    CHECK(lk[0][0] * S(0, 1) + lk[0][1] * S(1, 1) == Q(0));

    auto sol = solve_linear(A, {Q(5), Q(11)});
    REQUIRE(sol.has_value());
    CHECK(sol->particular == std::vector<Q>{Q(1), Q(2)});
    CHECK(sol->nullspace.empty());

    // Inconsistent system.
    auto bad = solve_linear(S, {Q(1), Q(0)});
    CHECK(!bad.has_value());

    // Underdetermined: nullspace captures the free direction.
    auto under = solve_linear(S, {Q(1), Q(2)});
    REQUIRE(under.has_value());
    CHECK(under->nullspace.size() == 1);
}

namespace {

// Minimal well-formed mask file for the hat mask a = {1/4, 1/2, 1/4}.
const char* kHatJson = R"({
  "version": 1,
  "dim": 1,
  "multiplicity": 1,
  "type": [[0]],
  "coeffs": [
    {"k": [0], "rows": [["1/4"]]},
    {"k": [1], "rows": [["1/2"]]},
    {"k": [2], "rows": [["1/4"]]}
  ]
})";

}  // namespace

TEST_CASE("mask JSON round trip") {
    MaskFile mf = parse_mask(kHatJson);
    CHECK(mf.mask.d == 1);
    CHECK(mf.mask.r == 1);
    CHECK(mf.mask.at({1})(0, 0) == Q(1) / 2);
    CHECK(mf.mask.symbol_at_zero()(0, 0) == Q(1));
    CHECK(!mf.symmetry.has_value());
    CHECK(mf.type.tau_all_zero());

    MaskFile again = parse_mask(serialize_mask(mf));
    CHECK(again.mask == mf.mask);
    CHECK(again.type.nu == mf.type.nu);

    // Translations and symmetry survive the round trip too.
    MaskFile full = mf;
    full.type.nu = {MIdx{0}};
    full.type.tau = {{Q(1) / 2}};
    full.symmetry = SymmetryDescriptor{"Z2", {Q(1)}, false};
    MaskFile back = parse_mask(serialize_mask(full));
    REQUIRE(back.symmetry.has_value());
    CHECK(back.symmetry->group == "Z2");
    CHECK(back.symmetry->center == std::vector<Q>{Q(1)});
    CHECK(back.type.tau_of(0) == std::vector<Q>{Q(1) / 2});
}

TEST_CASE("mask JSON rejects malformed input") {
    CHECK_THROWS_AS(parse_mask("not json"), ParseError);
    CHECK_THROWS_AS(parse_mask("{}"), ParseError);
    // First differentiation order must be zero.
    CHECK_THROWS_AS(parse_mask(R"({"version":1,"dim":1,"multiplicity":1,"type":[[1]],
        "coeffs":[{"k":[0],"rows":[["1"]]}]})"),
                    ParseError);
    // Duplicate lattice keys.
    CHECK_THROWS_AS(parse_mask(R"({"version":1,"dim":1,"multiplicity":1,"type":[[0]],
        "coeffs":[{"k":[0],"rows":[["1/2"]]},{"k":[0],"rows":[["1/2"]]}]})"),
                    ParseError);
    // Row count must match the multiplicity.
    CHECK_THROWS_AS(parse_mask(R"({"version":1,"dim":1,"multiplicity":2,"type":[[0],[1]],
        "coeffs":[{"k":[0],"rows":[["1/2"]]}]})"),
                    ParseError);
    // Malformed rational entry.
    CHECK_THROWS_AS(parse_mask(R"({"version":1,"dim":1,"multiplicity":1,"type":[[0]],
        "coeffs":[{"k":[0],"rows":[["a"]]}]})"),
                    ParseError);
}

TEST_CASE("mask accessors") {
    MaskFile mf = parse_mask(kHatJson);
    Lat lo, hi;
    mf.mask.fsupp(lo, hi);
    CHECK(lo == Lat{0});
    CHECK(hi == Lat{2});
    CHECK(mf.mask.at({5}).is_zero());

    SeqMatrix even = mf.mask.coset({0});
    SeqMatrix odd = mf.mask.coset({1});
    CHECK(even.size() == 2);  // k = 0, 2
    CHECK(odd.size() == 1);   // k = 1
    CHECK(odd.at({0})(0, 0) == Q(1) / 2);

    // set() drops exact zeros so supports stay tight.
    Mask m = mf.mask;
    QMatrix z(1, 1);
    m.set({7}, z);
    CHECK(m.a.find(Lat{7}) == m.a.end());
}

TEST_CASE("sequence utilities") {
    QMatrix one(1, 1);
    one(0, 0) = 1;
    SeqMatrix d0 = seq_delta(1, one);
    MaskFile mf = parse_mask(kHatJson);

    SeqMatrix conv = seq_conv(d0, mf.mask.a);
    CHECK(conv == mf.mask.a);

    SeqMatrix up = seq_upsample(mf.mask.a, 2);
    CHECK(up.at({4})(0, 0) == Q(1) / 4);
    CHECK(up.find(Lat{1}) == up.end());

    SeqMatrix neg = seq_scale(mf.mask.a, Q(-1));
    SeqMatrix zero = seq_add(mf.mask.a, neg);
    seq_prune(zero);
    CHECK(zero.empty());
}

TEST_CASE("mask iterate of the Haar mask") {
    // a = {1/2, 1/2}: the n-fold iterate is 2^{-n} on 0..2^n - 1.
    Mask m;
    m.d = 1;
    m.r = 1;
    QMatrix h(1, 1);
    h(0, 0) = Q(1) / 2;
    m.set({0}, h);
    m.set({1}, h);
    for (int n = 1; n <= 4; ++n) {
        SeqMatrix an = mask_iterate(m, n);
        REQUIRE(an.size() == size_t(1) << n);
        for (long long k = 0; k < (1LL << n); ++k)
            CHECK(an.at({k})(0, 0) == q_pow(Q(2), -n));
    }
}

TEST_CASE("gamma cosets enumerate {0,1}^d") {
    auto g1 = gamma_cosets(1);
    REQUIRE(g1.size() == 2);
    CHECK(g1[0] == Lat{0});
    auto g2 = gamma_cosets(2);
    REQUIRE(g2.size() == 4);
    CHECK(g2[0] == Lat{0, 0});
    CHECK(g2[3] == Lat{1, 1});
}
