#include "ghsd/splines.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace ghsd {

namespace {

using P = std::vector<Q>;  // ascending coefficients

void trim(P& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

P padd(const P& a, const P& b) {
    P c(std::max(a.size(), b.size()), Q(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    trim(c);
    return c;
}

P pscale(const P& a, const Q& s) {
    P c = a;
    for (Q& v : c) v *= s;
    trim(c);
    return c;
}

P psub(const P& a, const P& b) { return padd(a, pscale(b, Q(-1))); }

P pmul(const P& a, const P& b) {
    if (a.empty() || b.empty()) return {};
    P c(a.size() + b.size() - 1, Q(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

P ppow(const P& a, int n) {
    P c = {Q(1)};
    for (int i = 0; i < n; ++i) c = pmul(c, a);
    return c;
}

Q peval(const P& p, const Q& x) {
    Q v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// p(x + s) via Horner in (x + s).
P pshift(const P& p, const Q& s) {
    P c;
    for (size_t i = p.size(); i-- > 0;) {
        c = pmul(c, P{s, Q(1)});
        c = padd(c, P{p[i]});
    }
    return c;
}

P pmirror(const P& p) {
    P c = p;
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return c;
}

P pderiv(const P& p) {
    if (p.size() <= 1) return {};
    P c(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) c[i - 1] = p[i] * Q(long(i));
    return c;
}

P pantideriv(const P& p) {
    P c(p.size() + 1, Q(0));
    for (size_t i = 0; i < p.size(); ++i) c[i + 1] = p[i] / Q(long(i + 1));
    return c;
}

long long qceil(const Q& x) {
    Z n = numerator(x), d = denominator(x);
    Z q = n / d;
    if (q * d < n) q += 1;
    return q.convert_to<long long>();
}

}  // namespace

Q PiecewisePoly::eval(const Q& x) const {
    if (x <= Q(lo) || x > Q(hi)) return Q(0);
    long long idx = qceil(x) - 1 - lo;
    return peval(piece[size_t(idx)], x);
}

PiecewisePoly PiecewisePoly::derivative(int order) const {
    PiecewisePoly out = *this;
    for (int s = 0; s < order; ++s)
        for (auto& p : out.piece) p = pderiv(p);
    return out;
}

int PiecewisePoly::degree() const {
    int deg = -1;
    for (const auto& p : piece) {
        for (size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) {
                deg = std::max(deg, int(i));
                break;
            }
    }
    return deg;
}

bool PiecewisePoly::is_zero() const { return degree() < 0; }

Q TensorSpline::eval(const std::vector<Q>& x) const {
    Q v(1);
    for (size_t i = 0; i < factor.size(); ++i) v *= factor[i].eval(x[i]);
    return v;
}

Q TensorSpline::deriv_eval(const MIdx& order, const std::vector<Q>& x) const {
    Q v(1);
    for (size_t i = 0; i < factor.size(); ++i)
        v *= factor[i].derivative(order[i]).eval(x[i]);
    return v;
}

PiecewisePoly bspline(int n) {
    if (n < 1) throw AnalysisError("bspline order must be >= 1");
    PiecewisePoly b;
    b.lo = 0;
    b.hi = 1;
    b.piece = {{Q(1)}};
    for (int k = 1; k < n; ++k) {
        // Continuous antiderivative G with G(0) = 0, extended by its total
        // integral to the right of the support.
        size_t np = b.piece.size();
        std::vector<P> G(np);
        Q carry(0);
        for (size_t i = 0; i < np; ++i) {
            P F = pantideriv(b.piece[i]);
            Q c = carry - peval(F, Q(long(b.lo) + long(i)));
            G[i] = padd(F, P{c});
            carry = peval(G[i], Q(long(b.lo) + long(i) + 1));
        }
        PiecewisePoly nb;
        nb.lo = 0;
        nb.hi = b.hi + 1;
        for (long long i = 0; i <= b.hi; ++i) {
            P A = i < b.hi ? G[size_t(i)] : P{carry};
            P B;
            if (i - 1 >= 0) B = i - 1 < b.hi ? pshift(G[size_t(i - 1)], Q(-1)) : P{carry};
            nb.piece.push_back(psub(A, B));
        }
        b = nb;
    }
    return b;
}

SplineVector hermite_theta(int m) {
    SplineVector out;
    for (int l = 0; l <= m; ++l) {
        P tail;
        for (int j = 0; j <= m - l; ++j) {
            P term(size_t(j) + 1, Q(0));
            term[size_t(j)] = binomial(m + j, j);
            tail = padd(tail, term);
        }
        P xl(size_t(l) + 1, Q(0));
        xl[size_t(l)] = 1 / factorial(l);
        P right = pmul(ppow(P{Q(1), Q(-1)}, m + 1), pmul(xl, tail));
        P left = pscale(pmirror(right), l % 2 == 0 ? Q(1) : Q(-1));
        PiecewisePoly th;
        th.lo = -1;
        th.hi = 1;
        th.piece = {left, right};
        out.push_back(th);
    }
    return out;
}

TensorSpline f_mu_fixture(const MIdx& mu, int m) {
    SplineVector th = hermite_theta(m);
    TensorSpline f;
    for (int mi : mu) {
        if (mi > m) throw AnalysisError("f_mu component order exceeds m");
        f.factor.push_back(th[size_t(mi)]);
    }
    return f;
}

Example12 example12_interpolant(int m, int N) {
    if (m < 0 || N < 1) throw AnalysisError("example12 requires m >= 0, N >= 1");
    Example12 out;
    int r = (m + 1) * N;
    bool any_shift = false;
    for (int L = 0; L < r; ++L) {
        int nu = L % (m + 1);
        Q tau(L / (m + 1), N);
        out.type.nu.push_back({nu});
        if (tau != 0) any_shift = true;

        P p = {Q(1)};
        for (int k = 0; k <= N; ++k) {
            if (k == L / (m + 1)) continue;
            p = pmul(p, ppow(P{-Q(k, N), Q(1)}, m + 1));
        }
        // Truncated reciprocal series of p about tau feeds the degree-m
        // polynomial q with q(tau + y) = y^nu / (nu! p(tau + y)) + O(y^{m+1}).
        P pt = pshift(p, tau);
        std::vector<Q> rec(size_t(m) + 1, Q(0));
        rec[0] = 1 / pt[0];
        for (int s = 1; s <= m; ++s) {
            Q acc(0);
            for (int j = 1; j <= s; ++j)
                if (size_t(j) < pt.size()) acc += pt[size_t(j)] * rec[size_t(s - j)];
            rec[size_t(s)] = -acc / pt[0];
        }
        P qy(size_t(m) + 1, Q(0));
        for (int s = 0; nu + s <= m; ++s) qy[size_t(nu + s)] = rec[size_t(s)] / factorial(nu);
        P q = pshift(qy, -tau);

        P right = pmul(p, q);
        PiecewisePoly phi;
        if (L < m + 1) {
            P left = pscale(pmirror(right), nu % 2 == 0 ? Q(1) : Q(-1));
            phi.lo = -1;
            phi.hi = 1;
            phi.piece = {left, right};
        } else {
            phi.lo = 0;
            phi.hi = 1;
            phi.piece = {right};
        }
        out.phi.push_back(phi);
    }
    if (any_shift)
        for (int L = 0; L < r; ++L) out.type.tau.push_back({Q((L / (m + 1)), N)});
    return out;
}

MaskFile interpolant_to_mask(const SplineVector& phi, const HermiteType& type) {
    if (int(phi.size()) != type.size())
        throw AnalysisError("spline vector and type sizes disagree");
    int r = int(phi.size());
    long long lo = phi[0].lo, hi = phi[0].hi;
    for (const auto& f : phi) {
        lo = std::min(lo, f.lo);
        hi = std::max(hi, f.hi);
    }
    Mask m;
    m.d = 1;
    m.r = r;
    for (long long k = 2 * lo - 1; k <= 2 * hi; ++k) {
        QMatrix A(r, r);
        bool nonzero = false;
        for (int l = 0; l < r; ++l) {
            Q x = (Q(k) + type.tau_of(l)[0]) / 2;
            int nl = type.nu[size_t(l)][0];
            Q scale = Q(1) / q_pow(Q(2), 1 + nl);
            for (int i = 0; i < r; ++i) {
                Q v = scale * phi[size_t(i)].derivative(nl).eval(x);
                A(i, l) = v;
                if (v != 0) nonzero = true;
            }
        }
        if (nonzero) m.set({k}, A);
    }
    MaskFile mf;
    mf.mask = m;
    mf.type = type;
    return mf;
}

SplineResidual refinement_residual(const SplineVector& phi, const Mask& m) {
    if (m.d != 1 || int(phi.size()) != m.r)
        throw AnalysisError("refinement residual needs a univariate mask matching the spline vector");
    long long lo = phi[0].lo, hi = phi[0].hi;
    int deg = 0;
    for (const auto& f : phi) {
        lo = std::min(lo, f.lo);
        hi = std::max(hi, f.hi);
        deg = std::max(deg, f.degree());
    }
    int probes = deg + 1;
    for (long long s = 0; s < 2 * (hi - lo); ++s) {
        Q c = Q(lo) + Q(s, 2);
        for (int t = 0; t < probes; ++t) {
            Q x = c + Q(t + 1, 2 * (probes + 1));
            for (int i = 0; i < m.r; ++i) {
                Q acc = phi[size_t(i)].eval(x);
                for (const auto& [k, A] : m.a)
                    for (int j = 0; j < m.r; ++j)
                        if (A(i, j) != 0) acc -= 2 * A(i, j) * phi[size_t(j)].eval(2 * x - Q(k[0]));
                if (acc != 0) return {acc, x, i + 1};
            }
        }
    }
    return {Q(0), Q(0), 0};
}

namespace {

PiecewisePoly even_extend(const P& p01, const P& p12) {
    PiecewisePoly f;
    f.lo = -2;
    f.hi = 2;
    f.piece = {pmirror(p12), pmirror(p01), p01, p12};
    return f;
}

SplineVector birkhoff2_spline(const Q& t) {
    P r1 = {Q(16, 21), Q(0), Q(-4, 3), Q(0), Q(5, 3), Q(-3, 2), Q(2, 3), Q(-1, 7)};
    P r2 = pscale(pmul(ppow(P{Q(-2), Q(1)}, 5), P{Q(1), Q(-8), Q(2)}), Q(1, 42));
    P s1 = {-Q(152, 5145) - Q(128, 441) * t, Q(0),     -Q(4, 49) + Q(32, 63) * t,
            Q(0),                            Q(64, 147) - Q(40, 63) * t,
            -Q(386, 735) + Q(4, 7) * t,      Q(61, 294) - Q(16, 63) * t,
            -Q(85, 4116) + Q(8, 147) * t};
    P s2 = pscale(pmul(ppow(P{Q(2), Q(-1)}, 5),
                       P{Q(792) + 560 * t, -(Q(2220) + 4480 * t), Q(555) + 1120 * t}),
                  Q(1, 61740));
    return {even_extend(r1, r2), even_extend(s1, s2)};
}

PiecewisePoly three_piece(const P& a, const P& b, const P& c) {
    PiecewisePoly f;
    f.lo = -1;
    f.hi = 2;
    f.piece = {a, b, c};
    return f;
}

SplineVector ex63b_spline() {
    P a1 = pscale(pmul(ppow(P{Q(1), Q(1)}, 4), P{Q(2), Q(-3)}), Q(1, 4));
    P b1 = {Q(1, 2), Q(5, 4), Q(0), Q(-5, 2), Q(5, 4)};
    P c1 = pscale(pmul(ppow(P{Q(-2), Q(1)}, 4), P{Q(-1), Q(3)}), Q(1, 4));
    P a2 = pscale(pmul(ppow(P{Q(1), Q(1)}, 4), P{Q(-4), Q(11)}), Q(1, 40));
    P b2 = pscale(pmul(P{Q(-1), Q(2)}, P{Q(4), Q(13), Q(6), Q(-38), Q(19)}), Q(1, 40));
    P c2 = pscale(pmul(ppow(P{Q(-2), Q(1)}, 4), P{Q(-7), Q(11)}), Q(1, 40));
    return {three_piece(a1, b1, c1), three_piece(a2, b2, c2)};
}

SplineVector ex64c_spline() {
    P a1 = pscale(pmul(ppow(P{Q(1), Q(1)}, 3), P{Q(1), Q(-3)}), Q(5, 4));
    P b1 = pscale(pmul(ppow(P{Q(1), Q(-1)}, 3), P{Q(1), Q(3)}), Q(5, 4));
    P a2 = pscale(ppow(P{Q(1), Q(1)}, 3), Q(5, 4));
    P b2 = {Q(5, 4), Q(15, 4), Q(15, 4), Q(-15), Q(15, 2)};
    P c2 = pscale(ppow(P{Q(2), Q(-1)}, 3), Q(5, 4));
    return {three_piece(a1, b1, {}), three_piece(a2, b2, c2)};
}

SplineVector ex64d_spline() {
    P a1 = pscale(pmul(ppow(P{Q(1), Q(1)}, 3), P{Q(1), Q(-3)}), Q(5, 4));
    P b1 = pscale(pmul(ppow(P{Q(1), Q(-1)}, 3), P{Q(1), Q(3)}), Q(5, 4));
    P a2 = pscale(ppow(P{Q(1), Q(1)}, 4), Q(5, 8));
    P b2 = {Q(5, 8), Q(5, 2), Q(15, 4), Q(-25, 2), Q(25, 4)};
    P c2 = pscale(ppow(P{Q(-2), Q(1)}, 4), Q(5, 8));
    return {three_piece(a1, b1, {}), three_piece(a2, b2, c2)};
}

}  // namespace

SplineVector registry_spline(const std::string& id, const std::vector<Q>& params) {
    if (id == "ex6.2b" || id == "ex6.2c")
        return birkhoff2_spline(params.empty() ? Q(0) : params[0]);
    if (id == "ex6.3b") return ex63b_spline();
    if (id == "ex6.4c") return ex64c_spline();
    if (id == "ex6.4d") return ex64d_spline();
    throw ParseError("unknown spline id: " + id);
}

std::string spline_to_json(const SplineVector& phi) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& f : phi) {
        nlohmann::json pieces = nlohmann::json::array();
        for (size_t i = 0; i < f.piece.size(); ++i) {
            nlohmann::json pc;
            pc["interval"] = {f.lo + (long long)i, f.lo + (long long)i + 1};
            nlohmann::json coeffs = nlohmann::json::array();
            for (const Q& c : f.piece[i]) coeffs.push_back(format_rational(c));
            pc["coeffs"] = coeffs;
            pieces.push_back(pc);
        }
        nlohmann::json comp;
        comp["support"] = {f.lo, f.hi};
        comp["pieces"] = pieces;
        comps.push_back(comp);
    }
    nlohmann::json j;
    j["components"] = comps;
    return j.dump(2);
}

}  // namespace ghsd
