#include "ghsd/polysub.hpp"

#include <algorithm>
#include <ostream>

namespace ghsd {

Q Poly::eval(const std::vector<Q>& x) const {
    Q acc(0);
    for (const auto& [mu, c] : coef) acc += c * power(x, mu);
    return acc;
}

Poly Poly::derivative(const MIdx& mu) const {
    Poly out;
    out.d = d;
    for (const auto& [al, c] : coef) {
        if (!mi_leq(mu, al)) continue;
        MIdx be = mi_sub(al, mu);
        // d^mu x^al = al! / be! x^be
        Q f = c * mi_factorial(al) / mi_factorial(be);
        if (f != 0) out.coef[be] += f;
    }
    for (auto it = out.coef.begin(); it != out.coef.end();)
        it = (it->second == 0) ? out.coef.erase(it) : std::next(it);
    return out;
}

int Poly::degree() const {
    int deg = -1;  // zero polynomial
    for (const auto& [mu, c] : coef)
        if (c != 0) deg = std::max(deg, mi_abs(mu));
    return deg;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [mu, c] : o.coef) {
        out.coef[mu] += c;
        if (out.coef[mu] == 0) out.coef.erase(mu);
    }
    return out;
}

Poly Poly::operator*(const Q& s) const {
    Poly out;
    out.d = d;
    if (s == 0) return out;
    for (const auto& [mu, c] : coef) out.coef[mu] = c * s;
    return out;
}

Poly monomial(const MIdx& mu, const Q& c) {
    Poly p;
    p.d = int(mu.size());
    if (c != 0) p.coef[mu] = c;
    return p;
}

std::vector<Q> VectorPoly::eval(const std::vector<Q>& x) const {
    std::vector<Q> out;
    for (const Poly& p : comp) out.push_back(p.eval(x));
    return out;
}

Poly conv_poly(const Poly& p, const Jet& v, int component) {
    Poly out;
    out.d = p.d;
    for (const MIdx& mu : multi_indices_up_to(p.d, std::min(p.degree(), v.order))) {
        Q n = v.at(mu)(0, component);
        if (n == 0) continue;
        Q s = n / mi_factorial(mu);
        if (mi_abs(mu) % 2 != 0) s = -s;
        out = out + p.derivative(mu) * s;
    }
    return out;
}

VectorPoly pmu_poly(const MIdx& mu, const Jet& filter) {
    VectorPoly vp;
    vp.d = int(mu.size());
    Poly xmu = monomial(mu, Q(1) / mi_factorial(mu));
    for (int l = 0; l < filter.cols; ++l) vp.comp.push_back(conv_poly(xmu, filter, l));
    return vp;
}

DataGrid delta_data(int d, int r) {
    DataGrid w;
    w.d = d;
    w.rows = r;
    w.cols = r;
    w.v[Lat(size_t(d), 0)] = QMatrix::identity(r);
    return w;
}

DataGrid subdivide(const Mask& m, const DataGrid& w) {
    DataGrid out;
    out.d = w.d;
    out.rows = w.rows;
    out.cols = w.cols;
    out.level = w.level + 1;
    Q scale = q_pow(Q(2), m.d);
    for (const auto& [k, wv] : w.v)
        for (const auto& [s, av] : m.a) {
            Lat j(k.size());
            for (size_t i = 0; i < k.size(); ++i) j[i] = 2 * k[i] + s[i];
            QMatrix t = (wv * av) * scale;
            auto it = out.v.find(j);
            if (it == out.v.end())
                out.v.emplace(std::move(j), std::move(t));
            else
                it->second += t;
        }
    for (auto it = out.v.begin(); it != out.v.end();)
        it = it->second.is_zero() ? out.v.erase(it) : std::next(it);
    return out;
}

namespace {

// D^{n-1} a(k) D^{-n} entrywise: row i scaled by 2^{-|nu_i|(n-1)}, column l by 2^{|nu_l| n}.
Mask scaled_mask(const Mask& m, const HermiteType& type, int n) {
    Mask out = m;
    for (auto& [k, v] : out.a) {
        for (int i = 0; i < m.r; ++i) {
            Q ri = q_pow(Q(1, 2), mi_abs(type.nu[size_t(i)]) * (n - 1));
            for (int l = 0; l < m.r; ++l)
                v(i, l) *= ri * q_pow(Q(2), mi_abs(type.nu[size_t(l)]) * n);
        }
    }
    return out;
}

}  // namespace

DataGrid refine_step(const Mask& m, const HermiteType& type, const DataGrid& w) {
    return subdivide(scaled_mask(m, type, w.level + 1), w);
}

DataGrid refine(const Mask& m, const HermiteType& type, const DataGrid& w0, int levels) {
    DataGrid w = w0;
    for (int i = 0; i < levels; ++i) w = refine_step(m, type, w);
    return w;
}

DataGrid basis_samples(const Mask& m, const HermiteType& type, int level) {
    return refine(m, type, delta_data(m.d, m.r), level);
}

namespace {

std::vector<Lat> box_points(const Lat& lo, const Lat& hi) {
    std::vector<Lat> out;
    Lat cur = lo;
    while (true) {
        out.push_back(cur);
        int i = int(cur.size()) - 1;
        while (i >= 0) {
            if (++cur[size_t(i)] <= hi[size_t(i)]) break;
            cur[size_t(i)] = lo[size_t(i)];
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace

bool eigenpoly_check(const Mask& m, const HermiteType& type, const Jet& filter, const MIdx& mu) {
    (void)type;
    VectorPoly p = pmu_poly(mu, filter);
    const int w = mi_abs(mu) + 2;
    Lat lo(size_t(m.d), -w), hi(size_t(m.d), w);
    Q scale = q_pow(Q(2), m.d);
    Q lam = q_pow(Q(1, 2), mi_abs(mu));
    Lat alo, ahi;
    m.fsupp(alo, ahi);
    for (const Lat& j : box_points(lo, hi)) {
        // (S_a p)(j) = 2^d sum_k p(k) a(j - 2k); k ranges over (j - fsupp)/2.
        std::vector<Q> acc(size_t(m.r), Q(0));
        Lat klo(size_t(m.d)), khi(size_t(m.d));
        for (int i = 0; i < m.d; ++i) {
            long long a = j[size_t(i)] - ahi[size_t(i)];
            long long b = j[size_t(i)] - alo[size_t(i)];
            klo[size_t(i)] = (a >= 0) ? (a + 1) / 2 : a / 2;  // ceil(a/2)
            khi[size_t(i)] = (b >= 0) ? b / 2 : -((-b + 1) / 2);  // floor(b/2)
        }
        for (const Lat& k : box_points(klo, khi)) {
            Lat s(size_t(m.d));
            for (int i = 0; i < m.d; ++i) s[size_t(i)] = j[size_t(i)] - 2 * k[size_t(i)];
            auto it = m.a.find(s);
            if (it == m.a.end()) continue;
            std::vector<Q> kk(k.begin(), k.end());
            std::vector<Q> pk = p.eval(kk);
            for (int c = 0; c < m.r; ++c)
                for (int i = 0; i < m.r; ++i) acc[size_t(c)] += pk[size_t(i)] * it->second(i, c);
        }
        std::vector<Q> jj(j.begin(), j.end());
        std::vector<Q> pj = p.eval(jj);
        for (int c = 0; c < m.r; ++c)
            if (acc[size_t(c)] * scale != lam * pj[size_t(c)]) return false;
    }
    return true;
}

bool poly_interp_check(const Mask& m, const HermiteType& type, const Jet& filter, const Poly& p,
                       int levels) {
    const int d = m.d;
    const int r = m.r;
    Lat alo, ahi;
    m.fsupp(alo, ahi);

    // Target window at the finest level, then its backward orbit.
    Lat lo(size_t(d), -2), hi(size_t(d), 2);
    std::vector<std::pair<Lat, Lat>> windows(size_t(levels) + 1);
    windows[size_t(levels)] = {lo, hi};
    for (int n = levels; n >= 1; --n) {
        Lat plo(size_t(d), 0), phi(size_t(d), 0);
        for (int i = 0; i < d; ++i) {
            long long a = windows[size_t(n)].first[size_t(i)] - ahi[size_t(i)];
            long long b = windows[size_t(n)].second[size_t(i)] - alo[size_t(i)];
            plo[size_t(i)] = (a >= 0) ? (a + 1) / 2 : a / 2;
            phi[size_t(i)] = (b >= 0) ? b / 2 : -((-b + 1) / 2);
        }
        windows[size_t(n) - 1] = {plo, phi};
    }

    DataGrid w;
    w.d = d;
    w.rows = 1;
    w.cols = r;
    for (const Lat& k : box_points(windows[0].first, windows[0].second)) {
        QMatrix row(1, r);
        std::vector<Q> kk(k.begin(), k.end());
        for (int l = 0; l < r; ++l) row(0, l) = conv_poly(p, filter, l).eval(kk);
        w.v[k] = row;
    }

    for (int n = 1; n <= levels; ++n) {
        w = refine_step(m, type, w);
        // Discard points whose value depends on data outside the initial window.
        for (auto it = w.v.begin(); it != w.v.end();) {
            bool inside = true;
            for (int i = 0; i < d; ++i)
                if (it->first[size_t(i)] < windows[size_t(n)].first[size_t(i)] ||
                    it->first[size_t(i)] > windows[size_t(n)].second[size_t(i)]) {
                    inside = false;
                    break;
                }
            it = inside ? std::next(it) : w.v.erase(it);
        }
    }

    Q h = q_pow(Q(1, 2), levels);
    for (const auto& [k, row] : w.v)
        for (int l = 0; l < r; ++l) {
            std::vector<Q> x;
            for (int i = 0; i < d; ++i) x.push_back(h * (Q(k[size_t(i)]) + type.tau_of(l)[size_t(i)]));
            if (row(0, l) != p.derivative(type.nu[size_t(l)]).eval(x)) return false;
        }
    return !w.v.empty();
}

void export_refinement(std::ostream& os, const DataGrid& w, const HermiteType& type) {
    os << "component";
    for (int i = 1; i <= w.d; ++i) os << ",position_" << i;
    os << ",value_exact,value_float\n";
    Q h = q_pow(Q(1, 2), w.level);
    for (const auto& [k, m] : w.v)
        for (int i = 0; i < w.rows; ++i)
            for (int l = 0; l < w.cols; ++l) {
                os << i * w.cols + l + 1;
                for (int t = 0; t < w.d; ++t)
                    os << ',' << format_rational(h * (Q(k[size_t(t)]) + type.tau_of(l)[size_t(t)]));
                const Q& val = m(i, l);
                os << ',' << format_rational(val) << ',' << format_double17(to_double(val)) << "\n";
            }
}

}  // namespace ghsd
