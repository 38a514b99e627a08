#include "ghsd/registry.hpp"

#include "ghsd/construct.hpp"

#include <stdexcept>

namespace ghsd {

namespace {

QMatrix m2(Q a00, Q a01, Q a10, Q a11) {
    QMatrix M(2, 2);
    M(0, 0) = a00;
    M(0, 1) = a01;
    M(1, 0) = a10;
    M(1, 1) = a11;
    return M;
}

QMatrix m3(Q a00, Q a01, Q a02, Q a10, Q a11, Q a12, Q a20, Q a21, Q a22) {
    QMatrix M(3, 3);
    M(0, 0) = a00;
    M(0, 1) = a01;
    M(0, 2) = a02;
    M(1, 0) = a10;
    M(1, 1) = a11;
    M(1, 2) = a12;
    M(2, 0) = a20;
    M(2, 1) = a21;
    M(2, 2) = a22;
    return M;
}

HermiteType type_1d(std::vector<int> orders, std::vector<Q> shifts) {
    HermiteType t;
    for (int o : orders) t.nu.push_back({o});
    bool all_zero = true;
    for (const Q& s : shifts)
        if (s != 0) all_zero = false;
    if (!all_zero)
        for (const Q& s : shifts) t.tau.push_back({s});
    return t;
}

// Mirror-symmetric 1D mask about 0: a(-k) = a(k).
void set_sym(Mask& m, long long k, const QMatrix& M) {
    m.set({k}, M);
    if (k != 0) m.set({-k}, M);
}

MaskFile birkhoff_62(const std::vector<Q>& t) {
    const Q t1 = t[0], t2 = t[1], t3 = t[2], t4 = t[3];
    Mask m;
    m.d = 1;
    m.r = 2;
    set_sym(m, 3, m2(Q(5, 128) - t1, Q(-3, 32) - t2, t1 / 12, t2 / 12));
    set_sym(m, 2, m2(-t3, -t4, t3 / 12, t4 / 12));
    set_sym(m, 1, m2(Q(27, 128) + t1, Q(3, 32) + t2,
                     Q(-9, 128) + Q(11, 12) * t1, Q(5, 32) + Q(11, 12) * t2));
    set_sym(m, 0, m2(Q(1, 2) + 2 * t3, 2 * t4, Q(5, 6) * t3, Q(1, 8) + Q(5, 6) * t4));
    MaskFile mf;
    mf.mask = m;
    mf.type = type_1d({0, 2}, {Q(0), Q(0)});
    SymmetryDescriptor sd;
    sd.group = "Z2";
    sd.center = {Q(0)};
    mf.symmetry = sd;
    return mf;
}

MaskFile birkhoff_62b(const std::vector<Q>& ts) {
    const Q t = ts[0];
    Mask m;
    m.d = 1;
    m.r = 2;
    set_sym(m, 2, m2(Q(151, 3136) + Q(5, 56) * t, Q(15, 64),
                     Q(-1887, 307328) - Q(321, 10976) * t - Q(5, 147) * t * t,
                     Q(-359, 12544) - Q(5, 56) * t));
    set_sym(m, 1, m2(Q(1, 4), Q(0), Q(-31, 1568) - t / 14, Q(1, 16)));
    set_sym(m, 0, m2(Q(633, 1568) - Q(5, 28) * t, Q(-15, 32),
                     Q(-31, 2401) - Q(953, 5488) * t + Q(10, 147) * t * t,
                     Q(-327, 6272) + Q(5, 28) * t));
    MaskFile mf;
    mf.mask = m;
    mf.type = type_1d({0, 2}, {Q(0), Q(0)});
    SymmetryDescriptor sd;
    sd.group = "Z2";
    sd.center = {Q(0)};
    mf.symmetry = sd;
    return mf;
}

MaskFile hermite_63a(const std::vector<Q>&) {
    Mask m;
    m.d = 1;
    m.r = 2;
    m.set({-1}, m2(Q(5, 64), Q(9, 32), Q(-3, 128), Q(-5, 64)));
    m.set({0}, m2(Q(27, 64), Q(9, 32), Q(-9, 128), Q(3, 64)));
    m.set({1}, m2(Q(27, 64), Q(-9, 32), Q(9, 128), Q(3, 64)));
    m.set({2}, m2(Q(5, 64), Q(-9, 32), Q(3, 128), Q(-5, 64)));
    MaskFile mf;
    mf.mask = m;
    mf.type = type_1d({0, 1}, {Q(1, 2), Q(1, 2)});
    SymmetryDescriptor sd;
    sd.group = "Z2";
    sd.center = {Q(1, 2)};
    mf.symmetry = sd;
    return mf;
}

MaskFile hermite_63b(const std::vector<Q>&) {
    Mask m;
    m.d = 1;
    m.r = 2;
    m.set({-1}, m2(Q(13, 128), Q(15, 64), Q(-33, 1280), Q(-7, 128)));
    m.set({0}, m2(Q(51, 128), Q(15, 64), Q(-63, 1280), Q(9, 128)));
    m.set({1}, m2(Q(51, 128), Q(-15, 64), Q(63, 1280), Q(9, 128)));
    m.set({2}, m2(Q(13, 128), Q(-15, 64), Q(33, 1280), Q(-7, 128)));
    MaskFile mf;
    mf.mask = m;
    mf.type = type_1d({0, 1}, {Q(1, 2), Q(1, 2)});
    SymmetryDescriptor sd;
    sd.group = "Z2";
    sd.center = {Q(1, 2)};
    mf.symmetry = sd;
    return mf;
}

MaskFile lagrange_64(const std::vector<Q>& t) {
    const Q t1 = t[0], t2 = t[1], t3 = t[2];
    Mask m;
    m.d = 1;
    m.r = 2;
    m.set({-2}, m2(t3 / 4, Q(-1, 32) - t1, Q(0), t1 / 4));
    m.set({-1}, m2(-t2, Q(9, 32) - t1, t2 / 4, Q(-1, 32) + t1 / 4));
    m.set({0}, m2(Q(1, 2) + Q(3, 2) * t3, Q(9, 32) - t1, -t3, Q(9, 32) + Q(3, 2) * t1));
    m.set({1}, m2(-t2, Q(-1, 32) - t1, Q(1, 2) + Q(3, 2) * t2, Q(9, 32) + Q(3, 2) * t1));
    m.set({2}, m2(t3 / 4, Q(0), -t3, Q(-1, 32) + t1 / 4));
    m.set({3}, m2(Q(0), Q(0), t2 / 4, t1 / 4));
    MaskFile mf;
    mf.mask = m;
    mf.type = type_1d({0, 0}, {Q(0), Q(1, 2)});
    return mf;
}

MaskFile lagrange_64c(const std::vector<Q>&) {
    Mask m;
    m.d = 1;
    m.r = 2;
    m.set({-1}, m2(Q(1, 32), Q(1, 8), Q(0), Q(1, 16)));
    m.set({0}, m2(Q(1, 4), Q(1, 8), Q(1, 8), Q(5, 16)));
    m.set({1}, m2(Q(1, 32), Q(0), Q(7, 16), Q(5, 16)));
    m.set({2}, m2(Q(0), Q(0), Q(1, 8), Q(1, 16)));
    MaskFile mf;
    mf.mask = m;
    mf.type = type_1d({0, 0}, {Q(0), Q(1, 2)});
    return mf;
}

MaskFile lagrange_64d(const std::vector<Q>&) {
    Mask m;
    m.d = 1;
    m.r = 2;
    m.set({-1}, m2(Q(1, 16), Q(3, 16), Q(0), Q(1, 32)));
    m.set({0}, m2(Q(5, 16), Q(3, 16), Q(3, 32), Q(9, 32)));
    m.set({1}, m2(Q(1, 16), Q(0), Q(3, 8), Q(9, 32)));
    m.set({2}, m2(Q(0), Q(0), Q(3, 32), Q(1, 32)));
    MaskFile mf;
    mf.mask = m;
    mf.type = type_1d({0, 0}, {Q(0), Q(1, 2)});
    return mf;
}

HermiteType full_jet_type_2d(std::vector<Q> center) {
    HermiteType t;
    t.nu = {{0, 0}, {1, 0}, {0, 1}};
    bool all_zero = true;
    for (const Q& q : center)
        if (q != 0) all_zero = false;
    if (!all_zero) t.tau = {center, center, center};
    return t;
}

MaskFile hermite_65(const std::vector<Q>& t) {
    const Q t1 = t[0], t2 = t[1], t3 = t[2], t4 = t[3];
    Mask reps;
    reps.d = 2;
    reps.r = 3;
    reps.set({0, 0}, m3(Q(1, 4) - 12 * t2, Q(0), Q(0),
                        Q(0), Q(1, 8) + 6 * t3 + 6 * t4, Q(0),
                        Q(0), Q(0), Q(1, 8) + 6 * t3 + 6 * t4));
    reps.set({1, 0}, m3(-4 * t1, Q(-3, 16), Q(3, 32),
                        -t1, Q(-1, 32), Q(1, 64),
                        Q(0), Q(0), Q(0)));
    reps.set({2, 0}, m3(2 * t2, 2 * t3 + 4 * t4, -t3 - 2 * t4,
                        t2, t3 + t4, -t3,
                        Q(0), Q(0), -t3 + t4));
    reps.set({2, 1}, m3(Q(1, 8) + 4 * t1, Q(-3, 32), Q(0),
                        Q(1, 16) + 2 * t1, Q(-1, 32), Q(0),
                        Q(1, 32) + t1, Q(-1, 64), Q(0)));
    MaskFile mf;
    mf.type = full_jet_type_2d({Q(0), Q(0)});
    SymmetryDescriptor sd;
    sd.group = "D6";
    sd.center = {Q(0), Q(0)};
    mf.symmetry = sd;
    mf.mask = symmetry_complete(reps, mf.type, sd);
    return mf;
}

MaskFile hermite_65c(const std::vector<Q>& t) {
    const Q t1 = t[0], t2 = t[1], t3 = t[2];
    Mask reps;
    reps.d = 2;
    reps.r = 3;
    reps.set({0, 0}, m3(Q(47, 128) - Q(27, 8) * t3, Q(0), Q(0),
                        Q(0), Q(1, 8) - 6 * t1 - 6 * t2, Q(0),
                        Q(0), Q(0), Q(1, 8) - 6 * t1 - 6 * t2));
    reps.set({1, 0}, m3(Q(21, 128) - Q(9, 8) * t3, Q(-3, 8) + Q(9, 2) * t3, Q(3, 16) - Q(9, 4) * t3,
                        Q(3, 64) - Q(9, 16) * t3, Q(-7, 64) + Q(15, 8) * t3, Q(1, 32) - Q(3, 8) * t3,
                        Q(0), Q(0), Q(-3, 64) + Q(9, 8) * t3));
    reps.set({2, 0}, m3(Q(-5, 256) + Q(9, 16) * t3, -2 * t1, t1,
                        Q(-1, 128) + Q(3, 16) * t3,
                        Q(-5, 4) * t1 - t2 + Q(3, 16) * t3,
                        Q(5, 4) * t1 + 2 * t2 - Q(3, 16) * t3,
                        Q(0), Q(0), Q(5, 4) * t1 + 3 * t2 - Q(3, 16) * t3));
    reps.set({2, 1}, m3(Q(-5, 128) + Q(9, 8) * t3, Q(-3, 16) + Q(9, 4) * t3, Q(0),
                        Q(-1, 64) + Q(3, 8) * t3, Q(-5, 64) + Q(9, 8) * t3, Q(0),
                        Q(-1, 128) + Q(3, 16) * t3, Q(-1, 32) + Q(3, 8) * t3,
                        Q(-1, 64) + Q(3, 8) * t3));
    MaskFile mf;
    mf.type = full_jet_type_2d({Q(0), Q(0)});
    SymmetryDescriptor sd;
    sd.group = "D6";
    sd.center = {Q(0), Q(0)};
    mf.symmetry = sd;
    mf.mask = symmetry_complete(reps, mf.type, sd);
    return mf;
}

MaskFile hermite_66(const std::vector<Q>& t) {
    const Q t1 = t[0], t2 = t[1], t3 = t[2];
    Mask reps;
    reps.d = 2;
    reps.r = 3;
    reps.set({1, 1}, m3(Q(21, 128) - 4 * t3, Q(-9, 64) + t2, Q(-9, 64) + t2,
                        Q(3, 128) - t3, Q(-3, 256) + t1 + t2 / 2, -t1,
                        Q(3, 128) - t3, -t1, Q(-3, 256) + t1 + t2 / 2));
    reps.set({2, 1}, m3(Q(3, 64) + 4 * t3, Q(-9, 64) + t2, -t2,
                        Q(3, 256) + t3, Q(-15, 256) + t1 + t2 / 2, Q(-3, 128) + t1,
                        Q(3, 256) + t3, -t1, Q(9, 256) - t1 - t2 / 2));
    reps.set({2, 2}, m3(Q(-1, 128) - 4 * t3, -t2, -t2,
                        -t3, Q(5, 256) - t1 - t2 / 2, Q(-3, 128) + t1,
                        -t3, Q(-3, 128) + t1, Q(5, 256) - t1 - t2 / 2));
    MaskFile mf;
    mf.type = full_jet_type_2d({Q(1, 2), Q(1, 2)});
    SymmetryDescriptor sd;
    sd.group = "D4";
    sd.center = {Q(1, 2), Q(1, 2)};
    mf.symmetry = sd;
    mf.mask = symmetry_complete(reps, mf.type, sd);
    return mf;
}

MaskFile hermite_66b(const std::vector<Q>& t) {
    const Q t1 = t[0], t2 = t[1];
    Mask reps;
    reps.d = 2;
    reps.r = 3;
    reps.set({1, 1}, m3(Q(5, 32) + 4 * t1, Q(-5, 128) - 4 * t2, Q(-5, 128) - 4 * t2,
                        Q(1, 64) + t1, Q(11, 256) - t2, -t2,
                        Q(1, 64) + t1, -t2, Q(11, 256) - t2));
    reps.set({2, 1}, m3(Q(1, 32) - 4 * t1, Q(-5, 128) - 4 * t2, Q(-7, 128) + 4 * t2,
                        Q(1, 128) - t1, Q(-1, 256) - t2, Q(-1, 64) + t2,
                        -t1, -t2, Q(1, 256) + t2));
    reps.set({2, 2}, m3(Q(1, 32) + 4 * t1, Q(-7, 128) + 4 * t2, Q(-7, 128) + 4 * t2,
                        Q(1, 128) + t1, Q(-3, 256) + t2, Q(-1, 64) + t2,
                        Q(1, 128) + t1, Q(-1, 64) + t2, Q(-3, 256) + t2));
    MaskFile mf;
    mf.type = full_jet_type_2d({Q(1, 2), Q(1, 2)});
    SymmetryDescriptor sd;
    sd.group = "D4";
    sd.center = {Q(1, 2), Q(1, 2)};
    mf.symmetry = sd;
    mf.mask = symmetry_complete(reps, mf.type, sd);
    return mf;
}

HermiteType birkhoff_type_2d() {
    HermiteType t;
    t.nu = {{0, 0}, {1, 1}};
    t.tau = {{Q(1, 2), Q(1, 2)}, {Q(1, 2), Q(1, 2)}};
    return t;
}

MaskFile birkhoff_67a(const std::vector<Q>& t) {
    const Q t1 = t[0], t2 = t[1], t3 = t[2];
    Mask reps;
    reps.d = 2;
    reps.r = 2;
    // The (2,2) constant must be +3/256: with -3/256 the completed mask drops
    // to sr = 2 for every t, while +3/256 is the unique single-entry value
    // consistent with order-5 sum rules and the family's matching filter.
    reps.set({1, 1}, m2(Q(17, 256) - 6 * t3, Q(3, 32) - 6 * t2,
                        t1, Q(3, 256) - Q(5, 2) * t2));
    reps.set({2, 1}, m2(Q(19, 256) + 6 * t3, Q(3, 32) - 6 * t2,
                        Q(-1, 512) + t1, Q(-3, 256) + Q(5, 2) * t2));
    reps.set({2, 2}, m2(Q(1, 256) - 6 * t3, Q(3, 32) - 6 * t2,
                        Q(1, 128) + t1 + 4 * t3, Q(-5, 256) + Q(3, 2) * t2));
    reps.set({3, 1}, m2(Q(1, 64), Q(0), t3, t2));
    MaskFile mf;
    mf.type = birkhoff_type_2d();
    SymmetryDescriptor sd;
    sd.group = "D4";
    sd.center = {Q(1, 2), Q(1, 2)};
    mf.symmetry = sd;
    mf.mask = symmetry_complete(reps, mf.type, sd);
    return mf;
}

MaskFile birkhoff_67b(const std::vector<Q>& t) {
    const Q t1 = t[0], t2 = t[1], t3 = t[2];
    Mask reps;
    reps.d = 2;
    reps.r = 2;
    reps.set({1, 1}, m2(Q(21, 256) - 2 * t2 - 2 * t3, Q(1, 64) - 4 * t1,
                        t3, t1));
    reps.set({2, 1}, m2(Q(15, 256) + 2 * t2 + 2 * t3, Q(1, 64) - 4 * t1,
                        -t2, Q(1, 64) + t1));
    reps.set({2, 2}, m2(Q(5, 256) - 2 * t2 - 2 * t3, Q(1, 64) - 4 * t1,
                        t3, t1));
    reps.set({3, 1}, m2(Q(1, 64), Q(0), Q(-1, 512), Q(1, 128)));
    MaskFile mf;
    mf.type = birkhoff_type_2d();
    SymmetryDescriptor sd;
    sd.group = "D4";
    sd.center = {Q(1, 2), Q(1, 2)};
    mf.symmetry = sd;
    mf.mask = symmetry_complete(reps, mf.type, sd);
    return mf;
}

std::vector<ExampleRecord> make_registry() {
    std::vector<ExampleRecord> reg;

    {
        ExampleRecord r;
        r.id = "ex6.2a";
        r.note = "interval-[-3,3] Birkhoff family (orders 0,2), high-sum-rule member";
        r.params = {"t1", "t2", "t3", "t4"};
        r.defaults = {Q(91, 1024), Q(-15, 64), Q(-17, 512), Q(-9, 64)};
        r.build = birkhoff_62;
        r.expected.sr_exact = 10;
        r.expected.lpm_exact = 6;
        r.expected.sm2 = 2.53079;
        r.expected.sm2_tol = 0.01;
        r.expected.interpolatory = 0;
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.2b";
        r.note = "interval-[-2,2] Birkhoff family (orders 0,2) with closed-form basis";
        r.params = {"t"};
        r.defaults = {Q(0)};
        r.build = birkhoff_62b;
        r.expected.sr_exact = 8;
        r.expected.sm2 = 5.5;
        r.expected.sm2_tol = 1e-3;
        r.expected.interpolatory = 0;
        r.expected.spline_id = "ex6.2b";
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.2c";
        r.note = "interpolatory member of the [-3,3] Birkhoff family";
        r.params = {"t1", "t2", "t3", "t4"};
        r.defaults = {Q(25, 256), Q(-1, 4), Q(0), Q(0)};
        r.build = birkhoff_62;
        r.expected.sr_at_least = 6;
        r.expected.lpm_exact = 6;
        r.expected.sm2 = 2.6943;
        r.expected.sm2_tol = 0.01;
        r.expected.interpolatory = 1;
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.3a";
        r.note = "dual Hermite pair (orders 0,1) at shift 1/2, moment order 4";
        r.build = hermite_63a;
        r.expected.sr_at_least = 4;
        r.expected.lpm_exact = 4;
        r.expected.sm2 = 3.33904;
        r.expected.sm2_tol = 0.01;
        r.expected.interpolatory = 0;
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.3b";
        r.note = "dual Hermite pair (orders 0,1) at shift 1/2 with closed-form basis";
        r.build = hermite_63b;
        r.expected.sr_exact = 6;
        r.expected.sm2 = 4.5;
        r.expected.sm2_tol = 1e-3;
        r.expected.interpolatory = 0;
        r.expected.spline_id = "ex6.3b";
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.4a";
        r.note = "two-shift Lagrange family (shifts 0 and 1/2), sum-rule-6 member";
        r.params = {"t1", "t2", "t3"};
        r.defaults = {Q(-3, 256), Q(-33, 512), Q(-25, 448)};
        r.build = lagrange_64;
        r.expected.sr_exact = 6;
        r.expected.lpm_exact = 4;
        r.expected.sm2 = 5.06179;
        r.expected.sm2_tol = 0.01;
        r.expected.interpolatory = 0;
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.4b";
        r.note = "interpolatory member of the two-shift Lagrange family";
        r.params = {"t1", "t2", "t3"};
        r.defaults = {Q(-3, 128), Q(0), Q(0)};
        r.build = lagrange_64;
        r.expected.sr_exact = 4;
        r.expected.lpm_exact = 4;
        r.expected.sm2 = 2.47369;
        r.expected.sm2_tol = 0.01;
        r.expected.interpolatory = 1;
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.4c";
        r.note = "two-shift Lagrange mask with piecewise-polynomial basis, variant 1";
        r.build = lagrange_64c;
        r.expected.sr_exact = 5;
        r.expected.sm2 = 3.5;
        r.expected.sm2_tol = 1e-3;
        r.expected.interpolatory = 0;
        r.expected.spline_id = "ex6.4c";
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.4d";
        r.note = "two-shift Lagrange mask with piecewise-polynomial basis, variant 2";
        r.build = lagrange_64d;
        r.expected.sr_exact = 5;
        r.expected.sm2 = 3.5;
        r.expected.sm2_tol = 1e-3;
        r.expected.interpolatory = 0;
        r.expected.spline_id = "ex6.4d";
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.5a";
        r.note = "bivariate full-jet family on [-2,2]^2 with sixfold symmetry, moment member";
        r.params = {"t1", "t2", "t3", "t4"};
        r.defaults = {Q(-15, 512), Q(1, 512), Q(-1, 128), Q(1, 256)};
        r.build = hermite_65;
        r.expected.sr_at_least = 4;
        r.expected.lpm_at_least = 4;
        r.expected.sm2 = 3.13452;
        r.expected.sm2_tol = 0.05;
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.5b";
        r.note = "interpolatory member of the sixfold-symmetric full-jet family";
        r.params = {"t1", "t2", "t3", "t4"};
        r.defaults = {Q(-1, 32), Q(0), Q(0), Q(0)};
        r.build = hermite_65;
        r.expected.sr_at_least = 4;
        r.expected.lpm_at_least = 4;
        r.expected.sm2 = 2.71094;
        r.expected.sm2_tol = 0.05;
        r.expected.interpolatory = 1;
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.5c";
        r.note = "sixfold-symmetric full-jet family with sum rules of order 5";
        r.params = {"t1", "t2", "t3"};
        r.defaults = {Q(5, 256), Q(-1, 256), Q(29, 512)};
        r.build = hermite_65c;
        r.expected.sr_exact = 5;
        r.expected.sm2 = 4.81514;
        r.expected.sm2_tol = 0.05;
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.6a";
        r.note = "bivariate full-jet family on [-1,2]^2 about (1/2,1/2), moment member";
        r.params = {"t1", "t2", "t3"};
        r.defaults = {Q(1, 64), Q(5, 128), Q(0)};
        r.build = hermite_66;
        r.expected.sr_at_least = 4;
        r.expected.lpm_at_least = 4;
        r.expected.sm2 = 3.33904;
        r.expected.sm2_tol = 0.05;
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.6b";
        r.note = "fourfold-symmetric full-jet family with sum rules of order 5";
        r.params = {"t1", "t2"};
        r.defaults = {Q(0), Q(1, 64)};
        r.build = hermite_66b;
        r.expected.sr_exact = 5;
        r.expected.sm2 = 3.0;
        r.expected.sm2_tol = 0.05;
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.7a";
        r.note = "bivariate Birkhoff family (orders (0,0),(1,1)) about (1/2,1/2), variant 1";
        r.params = {"t1", "t2", "t3"};
        r.defaults = {Q(1, 512), Q(1, 128), Q(-1, 256)};
        r.build = birkhoff_67a;
        r.expected.sr_exact = 5;
        r.expected.sm2 = 3.41080;
        r.expected.sm2_tol = 0.05;
        reg.push_back(std::move(r));
    }
    {
        ExampleRecord r;
        r.id = "ex6.7b";
        r.note = "bivariate Birkhoff family (orders (0,0),(1,1)) about (1/2,1/2), variant 2";
        r.params = {"t1", "t2", "t3"};
        r.defaults = {Q(-1, 128), Q(1, 256), Q(-1, 256)};
        r.build = birkhoff_67b;
        r.expected.sr_exact = 5;
        r.expected.sm2 = 3.59632;
        r.expected.sm2_tol = 0.05;
        reg.push_back(std::move(r));
    }

    return reg;
}

}  // namespace

const std::vector<ExampleRecord>& example_registry() {
    static const std::vector<ExampleRecord> reg = make_registry();
    return reg;
}

const ExampleRecord* find_example(const std::string& id) {
    for (const auto& r : example_registry())
        if (r.id == id) return &r;
    return nullptr;
}

MaskFile build_example(const std::string& id,
                       const std::vector<std::pair<std::string, Q>>& overrides) {
    const ExampleRecord* rec = find_example(id);
    if (!rec) throw ParseError("unknown example id: " + id);
    std::vector<Q> args = rec->defaults;
    for (const auto& [name, value] : overrides) {
        bool found = false;
        for (size_t i = 0; i < rec->params.size(); ++i) {
            if (rec->params[i] == name) {
                args[i] = value;
                found = true;
                break;
            }
        }
        if (!found) throw ParseError("example " + id + " has no parameter " + name);
    }
    return rec->build(args);
}

}  // namespace ghsd
