#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghsd/construct.hpp"
#include "ghsd/jets.hpp"

#include <functional>
#include <random>

using namespace ghsd;

namespace {

SeqMatrix scalar_seq(const std::vector<std::pair<Lat, Q>>& entries) {
    SeqMatrix s;
    for (const auto& [k, v] : entries) {
        QMatrix m(1, 1);
        m(0, 0) = v;
        s[k] = m;
    }
    return s;
}

}  // namespace

TEST_CASE("sequence jet matches the defining sum") {
    // N_mu = sum_k u(k) (-1)^{k.omega} k^mu, computed by hand for a toy sequence.
    SeqMatrix u = scalar_seq({{{0, 0}, Q(1)}, {{1, 1}, Q(2)}});
    Jet j = sequence_jet(u, 2, 2, {1, 0});
    CHECK(j.at({0, 0})(0, 0) == Q(-1));
    CHECK(j.at({1, 0})(0, 0) == Q(-2));
    CHECK(j.at({0, 1})(0, 0) == Q(-2));
    CHECK(j.at({2, 0})(0, 0) == Q(-2));
    CHECK(j.at({1, 1})(0, 0) == Q(-2));

    Jet j0 = sequence_jet(u, 2, 1, {0, 0});
    CHECK(j0.at({0, 0})(0, 0) == Q(3));
    CHECK(j0.at({1, 0})(0, 0) == Q(2));
}

TEST_CASE("hat mask jets on both cosets") {
    Mask hat = bspline_mask(2);
    Jet even = sequence_jet(hat, 2, {0});
    CHECK(even.at({0})(0, 0) == Q(1));
    CHECK(even.at({1})(0, 0) == Q(1));
    CHECK(even.at({2})(0, 0) == Q(3) / 2);

    Jet odd = sequence_jet(hat, 2, {1});
    CHECK(odd.at({0})(0, 0) == Q(0));
    CHECK(odd.at({1})(0, 0) == Q(0));
    CHECK(odd.at({2})(0, 0) == Q(1) / 2);
    CHECK(odd.vanishes_up_to(1));
    CHECK(!odd.vanishes_up_to(2));
}

TEST_CASE("germ product is the jet of the convolution") {
    std::mt19937 rng(1234u);
    std::uniform_int_distribution<int> num(-4, 4);
    auto rand_seq = [&](int d) {
        SeqMatrix s;
        std::vector<long long> k(size_t(d), 0);
        // Small box [-1,1]^d with random rational entries.
        std::function<void(int)> rec = [&](int i) {
            if (i == d) {
                QMatrix m(1, 1);
                m(0, 0) = Q(num(rng)) / (1 + std::abs(num(rng)));
                s[Lat(k)] = m;
                return;
            }
            for (k[size_t(i)] = -1; k[size_t(i)] <= 1; ++k[size_t(i)]) rec(i + 1);
        };
        rec(0);
        return s;
    };
    for (int d = 1; d <= 2; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            SeqMatrix u = rand_seq(d), v = rand_seq(d);
            Lat omega(size_t(d), 0);
            for (auto& w : omega) w = rng() % 2;
            Jet ju = sequence_jet(u, d, 3, omega);
            Jet jv = sequence_jet(v, d, 3, omega);
            Jet jc = sequence_jet(seq_conv(u, v), d, 3, omega);
            Jet prod = germ_product(ju, jv);
            for (const MIdx& mu : multi_indices_up_to(d, 3))
                CHECK(prod.at(mu) == jc.at(mu));
        }
    }
}

TEST_CASE("germ add, scale and truncate") {
    SeqMatrix u = scalar_seq({{{1}, Q(2)}});
    Jet j = sequence_jet(u, 1, 3, {0});
    Jet sum = germ_add(j, germ_scale(j, Q(-1)));
    CHECK(sum.vanishes_up_to(3));
    Jet cut = germ_truncate(j, 1);
    CHECK(cut.order == 1);
    CHECK(cut.at({1}) == j.at({1}));
}

TEST_CASE("phase monomial jet closed form") {
    // (i xi)^1 e^{i xi / 2}: N_mu = (-1)^|mu| mu! tau^{mu-1} / (mu-1)!.
    Jet p = phase_monomial_jet({1}, {Q(1) / 2}, 3);
    CHECK(p.at({0})(0, 0) == Q(0));
    CHECK(p.at({1})(0, 0) == Q(-1));
    CHECK(p.at({2})(0, 0) == Q(1));
    CHECK(p.at({3})(0, 0) == Q(-3) / 4);

    // Pure phase: jets of e^{i tau xi} agree with the sequence delta_{-tau}
    // when tau is an integer.
    Jet ph = phase_monomial_jet({0}, {Q(-1)}, 3);
    SeqMatrix d1 = scalar_seq({{{1}, Q(1)}});
    Jet jd = sequence_jet(d1, 1, 3, {0});
    for (const MIdx& mu : multi_indices_up_to(1, 3)) CHECK(ph.at(mu) == jd.at(mu));
}

TEST_CASE("hermite target jet rows") {
    HermiteType t;
    t.nu = {MIdx{0}, MIdx{1}};
    Jet row = hermite_target_jet(t, 2);
    CHECK(row.rows == 1);
    CHECK(row.cols == 2);
    CHECK(row.at({0})(0, 0) == Q(1));
    CHECK(row.at({0})(0, 1) == Q(0));
    CHECK(row.at({1})(0, 0) == Q(0));
    CHECK(row.at({1})(0, 1) == Q(-1));
    CHECK(row.at({2})(0, 1) == Q(0));

    // With a shift the zeroth component picks up the phase factors.
    HermiteType ts;
    ts.nu = {MIdx{0}};
    ts.tau = {{Q(1) / 2}};
    Jet rs = hermite_target_jet(ts, 2);
    CHECK(rs.at({1})(0, 0) == Q(-1) / 2);
    CHECK(rs.at({2})(0, 0) == Q(1) / 4);
}

TEST_CASE("germ phase and dilation") {
    SeqMatrix u = scalar_seq({{{0}, Q(1)}, {{1}, Q(3)}});
    Jet j = sequence_jet(u, 1, 3, {0});
    Jet shifted = germ_phase(j, {Q(-2)});
    // e^{-2 i xi} u^(xi) is the symbol of u shifted by 2.
    SeqMatrix us = scalar_seq({{{2}, Q(1)}, {{3}, Q(3)}});
    Jet js = sequence_jet(us, 1, 3, {0});
    for (const MIdx& mu : multi_indices_up_to(1, 3)) CHECK(shifted.at(mu) == js.at(mu));

    Jet half = germ_dilate(j, Q(1) / 2);
    CHECK(half.at({0}) == j.at({0}));
    CHECK(half.at({2})(0, 0) == j.at({2})(0, 0) / 4);

    Jet axes = germ_dilate_axes(sequence_jet(scalar_seq({{{1, 1}, Q(1)}}), 2, 2, {0, 0}),
                                {Q(1), Q(1) / 2});
    CHECK(axes.at({1, 0})(0, 0) == Q(1));
    CHECK(axes.at({0, 1})(0, 0) == Q(1) / 2);
    CHECK(axes.at({1, 1})(0, 0) == Q(1) / 2);
}

TEST_CASE("germ reciprocal inverts up to the jet order") {
    SeqMatrix u = scalar_seq({{{0}, Q(2)}, {{1}, Q(1) / 3}, {{-1}, Q(5)}});
    Jet j = sequence_jet(u, 1, 4, {0});
    Jet rec = germ_reciprocal(j);
    Jet prod = germ_product(j, rec);
    CHECK(prod.at({0})(0, 0) == Q(1));
    for (int k = 1; k <= 4; ++k) CHECK(prod.at({k})(0, 0) == Q(0));
}

TEST_CASE("printed coefficient conversion") {
    // N_mu = (-1)^|mu| mu! c_mu in one or more variables.
    CHECK(coeff_to_njet({2}, Q(5) / 6) == Q(5) / 3);
    CHECK(coeff_to_njet({1}, Q(1)) == Q(-1));
    CHECK(coeff_to_njet({1, 1}, Q(3)) == Q(3));
    CHECK(njet_to_coeff({2}, coeff_to_njet({2}, Q(-17) / 12096)) == Q(-17) / 12096);
    std::mt19937 rng(7u);
    for (int trial = 0; trial < 10; ++trial) {
        Q c = Q(int(rng() % 19) - 9) / int(1 + rng() % 12);
        MIdx mu{int(rng() % 4), int(rng() % 4)};
        CHECK(njet_to_coeff(mu, coeff_to_njet(mu, c)) == c);
    }
}

TEST_CASE("jet container semantics") {
    Jet j;
    j.d = 1;
    j.order = 2;
    j.rows = 2;
    j.cols = 2;
    QMatrix missing = j.at({1});
    CHECK(missing.rows() == 2);
    CHECK(missing.cols() == 2);
    CHECK(missing.is_zero());
    QMatrix v(2, 2);
    v(0, 1) = Q(1) / 7;
    j.set({1}, v);
    CHECK(j.at({1})(0, 1) == Q(1) / 7);
}
