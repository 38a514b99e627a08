#include "ghsd/jets.hpp"

namespace ghsd {

QMatrix Jet::at(const MIdx& mu) const {
    auto it = c.find(mu);
    if (it != c.end()) return it->second;
    return QMatrix(rows, cols);
}

void Jet::set(const MIdx& mu, const QMatrix& v) {
    if (v.is_zero())
        c.erase(mu);
    else
        c[mu] = v;
}

bool Jet::vanishes_up_to(int k) const {
    for (const auto& [mu, v] : c)
        if (mi_abs(mu) <= k && !v.is_zero()) return false;
    return true;
}

Jet sequence_jet(const SeqMatrix& u, int d, int order, const Lat& omega) {
    Jet j;
    j.d = d;
    j.order = order;
    if (!u.empty()) {
        j.rows = u.begin()->second.rows();
        j.cols = u.begin()->second.cols();
    }
    for (const MIdx& mu : multi_indices_up_to(d, order)) {
        QMatrix acc(j.rows, j.cols);
        for (const auto& [k, v] : u) {
            long long dot = 0;
            for (int i = 0; i < d; ++i) dot += k[size_t(i)] * omega[size_t(i)];
            Q w = power(k, mu);
            if (dot % 2 != 0) w = -w;
            acc += v * w;
        }
        j.set(mu, acc);
    }
    return j;
}

Jet sequence_jet(const Mask& m, int order, const Lat& omega) {
    Jet j = sequence_jet(m.a, m.d, order, omega);
    j.rows = m.r;
    j.cols = m.r;
    return j;
}

Jet germ_product(const Jet& f, const Jet& g) {
    if (f.cols != g.rows) throw AnalysisError("germ_product: dimension mismatch");
    Jet j;
    j.d = f.d;
    j.order = std::min(f.order, g.order);
    j.rows = f.rows;
    j.cols = g.cols;
    for (const MIdx& mu : multi_indices_up_to(j.d, j.order)) {
        QMatrix acc(j.rows, j.cols);
        for (const MIdx& b : multi_indices_below(mu))
            acc += (f.at(b) * g.at(mi_sub(mu, b))) * mi_binomial(mu, b);
        j.set(mu, acc);
    }
    return j;
}

Jet germ_add(const Jet& f, const Jet& g) {
    Jet j = f;
    j.order = std::min(f.order, g.order);
    for (const auto& [mu, v] : g.c) {
        if (mi_abs(mu) > j.order) continue;
        j.set(mu, j.at(mu) + v);
    }
    for (auto it = j.c.begin(); it != j.c.end();)
        it = (mi_abs(it->first) > j.order) ? j.c.erase(it) : std::next(it);
    return j;
}

Jet germ_scale(const Jet& f, const Q& s) {
    Jet j = f;
    j.c.clear();
    if (s == 0) return j;
    for (const auto& [mu, v] : f.c) j.c[mu] = v * s;
    return j;
}

Jet germ_dilate(const Jet& f, const Q& lambda) {
    return germ_dilate_axes(f, std::vector<Q>(size_t(f.d), lambda));
}

Jet germ_dilate_axes(const Jet& f, const std::vector<Q>& lambda) {
    Jet j = f;
    j.c.clear();
    for (const auto& [mu, v] : f.c) {
        Q s(1);
        for (size_t i = 0; i < mu.size(); ++i) s *= q_pow(lambda[i], mu[i]);
        j.set(mu, v * s);
    }
    return j;
}

Jet phase_monomial_jet(const MIdx& nu, const std::vector<Q>& tau, int order) {
    Jet j;
    j.d = int(nu.size());
    j.order = order;
    j.rows = 1;
    j.cols = 1;
    for (const MIdx& mu : multi_indices_up_to(j.d, order)) {
        if (!mi_leq(nu, mu)) continue;
        MIdx rest = mi_sub(mu, nu);
        Q val = mi_factorial(mu) / mi_factorial(rest) * power(tau, rest);
        if (mi_abs(mu) % 2 != 0) val = -val;
        QMatrix m(1, 1);
        m(0, 0) = val;
        j.set(mu, m);
    }
    return j;
}

Jet hermite_target_jet(const HermiteType& type, int order) {
    const int r = type.size();
    Jet j;
    j.d = int(type.nu[0].size());
    j.order = order;
    j.rows = 1;
    j.cols = r;
    for (int l = 0; l < r; ++l) {
        Jet comp = phase_monomial_jet(type.nu[size_t(l)], type.tau_of(l), order);
        for (const auto& [mu, v] : comp.c) {
            QMatrix row = j.at(mu);
            row(0, l) = v(0, 0);
            j.set(mu, row);
        }
    }
    return j;
}

Jet germ_phase(const Jet& f, const std::vector<Q>& tau) {
    MIdx zero(size_t(f.d), 0);
    Jet ph = phase_monomial_jet(zero, tau, f.order);
    // Scalar phase times matrix jet: promote via Leibniz with scalar on the left.
    Jet j = f;
    j.c.clear();
    for (const MIdx& mu : multi_indices_up_to(f.d, f.order)) {
        QMatrix acc(f.rows, f.cols);
        for (const MIdx& b : multi_indices_below(mu))
            acc += f.at(mi_sub(mu, b)) * (ph.at(b)(0, 0) * mi_binomial(mu, b));
        j.set(mu, acc);
    }
    return j;
}

Jet germ_reciprocal(const Jet& f) {
    if (f.rows != 1 || f.cols != 1) throw AnalysisError("germ_reciprocal: scalar germ required");
    Q f0 = f.at(MIdx(size_t(f.d), 0))(0, 0);
    if (f0 == 0) throw AnalysisError("germ_reciprocal: germ vanishes at the origin");
    Jet j;
    j.d = f.d;
    j.order = f.order;
    j.rows = 1;
    j.cols = 1;
    QMatrix lead(1, 1);
    lead(0, 0) = Q(1) / f0;
    j.set(MIdx(size_t(f.d), 0), lead);
    for (int deg = 1; deg <= f.order; ++deg)
        for (const MIdx& mu : multi_indices_of_degree(f.d, deg)) {
            // 0 = N_mu(f * 1/f) = sum_b binom N_b(f) N_{mu-b}(1/f); solve for b = 0 term.
            Q acc(0);
            for (const MIdx& b : multi_indices_below(mu)) {
                if (mi_abs(b) == 0) continue;
                acc += mi_binomial(mu, b) * f.at(b)(0, 0) * j.at(mi_sub(mu, b))(0, 0);
            }
            QMatrix v(1, 1);
            v(0, 0) = -acc / f0;
            j.set(mu, v);
        }
    return j;
}

Jet germ_truncate(const Jet& f, int order) {
    Jet j = f;
    j.order = order;
    for (auto it = j.c.begin(); it != j.c.end();)
        it = (mi_abs(it->first) > order) ? j.c.erase(it) : std::next(it);
    return j;
}

Q coeff_to_njet(const MIdx& mu, const Q& c) {
    Q v = mi_factorial(mu) * c;
    return (mi_abs(mu) % 2 == 0) ? v : -v;
}

Q njet_to_coeff(const MIdx& mu, const Q& n) {
    Q v = n / mi_factorial(mu);
    return (mi_abs(mu) % 2 == 0) ? v : -v;
}

}  // namespace ghsd
