#include "ghsd/normalform.hpp"

#include <algorithm>

namespace ghsd {

namespace {

bool seq_equal(const SeqMatrix& A, const SeqMatrix& B) {
    SeqMatrix diff = seq_add(A, seq_scale(B, Q(-1)));
    return diff.empty();
}

// Scalar sequences are stored as SeqMatrix with 1x1 entries.
Q scalar_at(const SeqMatrix& s, const Lat& k) {
    auto it = s.find(k);
    return it == s.end() ? Q(0) : it->second(0, 0);
}

SeqMatrix scalar_delta(int d, const Q& v) {
    QMatrix m(1, 1);
    m(0, 0) = v;
    return seq_delta(d, m);
}

SeqMatrix scalar_conv_pow(const SeqMatrix& s, int n, int d) {
    SeqMatrix acc = scalar_delta(d, Q(1));
    for (int i = 0; i < n; ++i) acc = seq_conv(acc, s);
    return acc;
}

// Assemble an r x r sequence from an r x r grid of scalar sequences.
SeqMatrix assemble(int d, int r, const std::vector<std::vector<SeqMatrix>>& grid) {
    SeqMatrix out;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (const auto& [k, v] : grid[size_t(i)][size_t(j)]) {
                auto it = out.find(k);
                if (it == out.end()) it = out.emplace(k, QMatrix(r, r)).first;
                it->second(i, j) += v(0, 0);
            }
    seq_prune(out);
    return out;
}

Jet row_jet_of_seq(const SeqMatrix& u, int d, int order) {
    return sequence_jet(u, d, order, Lat(size_t(d), 0));
}

}  // namespace

SeqMatrix nabla_delta(const MIdx& nu) {
    const int d = int(nu.size());
    SeqMatrix out;
    // Iterate over the box 0 <= j <= nu.
    MIdx j(size_t(d), 0);
    while (true) {
        Q v(1);
        for (int i = 0; i < d; ++i) v *= binomial(nu[size_t(i)], j[size_t(i)]);
        if (mi_abs(j) % 2 != 0) v = -v;
        if (v != 0) {
            QMatrix m(1, 1);
            m(0, 0) = v;
            out[Lat(j.begin(), j.end())] = m;
        }
        int i = d - 1;
        while (i >= 0) {
            if (++j[size_t(i)] <= nu[size_t(i)]) break;
            j[size_t(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

SeqMatrix realize_from_jets(const Jet& scalar, int m) {
    if (scalar.rows != 1 || scalar.cols != 1)
        throw AnalysisError("realize_from_jets: scalar germ required");
    const int d = scalar.d;
    std::vector<MIdx> mus = multi_indices_up_to(d, m);
    // Principal lattice: the same index set viewed as lattice points.
    const int n = int(mus.size());
    QMatrix V(n, n);
    std::vector<Q> b(size_t(n), Q(0));
    for (int row = 0; row < n; ++row) {
        const MIdx& mu = mus[size_t(row)];
        for (int col = 0; col < n; ++col) {
            Lat k(mus[size_t(col)].begin(), mus[size_t(col)].end());
            V(row, col) = power(k, mu);
        }
        b[size_t(row)] = scalar.at(mu)(0, 0);
    }
    auto sol = solve_linear(V, b);
    if (!sol || !sol->nullspace.empty())
        throw AnalysisError("realize_from_jets: principal lattice system not uniquely solvable");
    SeqMatrix out;
    for (int col = 0; col < n; ++col) {
        if (sol->particular[size_t(col)] == 0) continue;
        QMatrix v(1, 1);
        v(0, 0) = sol->particular[size_t(col)];
        out[Lat(mus[size_t(col)].begin(), mus[size_t(col)].end())] = v;
    }
    return out;
}

LaurentPair build_normalizer(const Jet& u_row, int m) {
    const int d = u_row.d;
    const int r = u_row.cols;
    if (u_row.rows != 1) throw AnalysisError("build_normalizer: row germ required");
    if (u_row.order < m) throw AnalysisError("build_normalizer: germ order too small");

    LaurentPair out;
    out.d = d;
    out.r = r;
    if (r == 1) {
        out.U = seq_delta(d, QMatrix::identity(1));
        out.Uinv = out.U;
        return out;
    }

    const MIdx zero(size_t(d), 0);
    QMatrix n0 = u_row.at(zero);
    int pivot = -1;
    Q best(0);
    for (int l = 0; l < r; ++l) {
        Q mag = abs(n0(0, l));
        if (mag > best) {
            best = mag;
            pivot = l;
        }
    }
    if (pivot < 0) throw AnalysisError("build_normalizer: germ vanishes at the origin");

    // Permutation swapping component 1 and the pivot (self-inverse).
    QMatrix P = QMatrix::identity(r);
    if (pivot != 0) {
        P(0, 0) = P(pivot, pivot) = 0;
        P(0, pivot) = P(pivot, 0) = 1;
    }
    Jet uperm;
    uperm.d = d;
    uperm.order = u_row.order;
    uperm.rows = 1;
    uperm.cols = r;
    for (const auto& [mu, v] : u_row.c) uperm.set(mu, v * P);

    // c_1 = 1/u_1 + O, c_l = u_l/u_1 + O, realized on the principal lattice.
    Jet comp1;
    comp1.d = d;
    comp1.order = m;
    comp1.rows = comp1.cols = 1;
    for (const MIdx& mu : multi_indices_up_to(d, m)) {
        QMatrix v(1, 1);
        v(0, 0) = uperm.at(mu)(0, 0);
        comp1.set(mu, v);
    }
    Jet c1_jet = germ_reciprocal(comp1);
    SeqMatrix c1 = realize_from_jets(c1_jet, m);
    std::vector<SeqMatrix> cl(size_t(r), SeqMatrix{});  // index 1..r-1 used
    for (int l = 1; l < r; ++l) {
        Jet compl_;
        compl_.d = d;
        compl_.order = m;
        compl_.rows = compl_.cols = 1;
        for (const MIdx& mu : multi_indices_up_to(d, m)) {
            QMatrix v(1, 1);
            v(0, 0) = uperm.at(mu)(0, l);
            compl_.set(mu, v);
        }
        cl[size_t(l)] = realize_from_jets(germ_product(compl_, c1_jet), m);
    }

    // U_1 is unitriangular with first row [1, -c_2, ..., -c_r].
    std::vector<std::vector<SeqMatrix>> g1(size_t(r), std::vector<SeqMatrix>(size_t(r), SeqMatrix{}));
    std::vector<std::vector<SeqMatrix>> g1i(size_t(r), std::vector<SeqMatrix>(size_t(r), SeqMatrix{}));
    for (int i = 0; i < r; ++i) {
        g1[size_t(i)][size_t(i)] = scalar_delta(d, Q(1));
        g1i[size_t(i)][size_t(i)] = scalar_delta(d, Q(1));
    }
    for (int l = 1; l < r; ++l) {
        g1[0][size_t(l)] = seq_scale(cl[size_t(l)], Q(-1));
        g1i[0][size_t(l)] = cl[size_t(l)];
    }
    SeqMatrix U1 = assemble(d, r, g1);
    SeqMatrix U1inv = assemble(d, r, g1i);

    // U_2 mixes the first two components; w = (1 - c_1/c_1(0))^{m+1} and g is the
    // unique Laurent polynomial with c_1 g + w^2 = 1.
    Q c10 = c1_jet.at(zero)(0, 0);
    SeqMatrix w0 = seq_add(scalar_delta(d, Q(1)), seq_scale(c1, Q(-1) / c10));
    SeqMatrix wm = scalar_conv_pow(w0, m + 1, d);
    SeqMatrix x = seq_scale(c1, Q(1) / c10);
    SeqMatrix g = scalar_delta(d, Q(0));
    SeqMatrix xpow = scalar_delta(d, Q(1));
    for (int j = 1; j <= 2 * m + 2; ++j) {
        Q coef = binomial(2 * m + 2, j);
        if (j % 2 == 0) coef = -coef;
        g = seq_add(g, seq_scale(xpow, coef));
        xpow = seq_conv(xpow, x);
    }
    g = seq_scale(g, Q(1) / c10);

    std::vector<std::vector<SeqMatrix>> g2(size_t(r), std::vector<SeqMatrix>(size_t(r), SeqMatrix{}));
    std::vector<std::vector<SeqMatrix>> g2i(size_t(r), std::vector<SeqMatrix>(size_t(r), SeqMatrix{}));
    g2[0][0] = c1;
    g2[0][1] = seq_scale(wm, Q(-1));
    g2[1][0] = wm;
    g2[1][1] = g;
    g2i[0][0] = g;
    g2i[0][1] = wm;
    g2i[1][0] = seq_scale(wm, Q(-1));
    g2i[1][1] = c1;
    for (int i = 2; i < r; ++i) {
        g2[size_t(i)][size_t(i)] = scalar_delta(d, Q(1));
        g2i[size_t(i)][size_t(i)] = scalar_delta(d, Q(1));
    }
    SeqMatrix U2 = assemble(d, r, g2);
    SeqMatrix U2inv = assemble(d, r, g2i);

    SeqMatrix Pseq = seq_delta(d, P);
    out.U = seq_conv(Pseq, seq_conv(U1, U2));
    out.Uinv = seq_conv(seq_conv(U2inv, U1inv), Pseq);

    // Exact strong invertibility and the normal-form property.
    if (!seq_equal(seq_conv(out.U, out.Uinv), seq_delta(d, QMatrix::identity(r))))
        throw AnalysisError("build_normalizer: inverse verification failed");
    Jet check = germ_product(germ_truncate(u_row, m), row_jet_of_seq(out.U, d, m));
    for (const auto& [mu, v] : check.c) {
        bool ok = true;
        if (mu == zero) {
            for (int l = 0; l < r; ++l)
                if (v(0, l) != (l == 0 ? Q(1) : Q(0))) ok = false;
        } else {
            for (int l = 1; l < r; ++l)
                if (v(0, l) != 0) ok = false;
        }
        if (!ok) throw AnalysisError("build_normalizer: normal form verification failed");
    }
    return out;
}

LaurentPair general_normalizer(const Jet& u_row, const Jet& v_row, int m) {
    LaurentPair Uu = build_normalizer(u_row, m);
    LaurentPair Uv = build_normalizer(v_row, m);
    LaurentPair out;
    out.d = Uu.d;
    out.r = Uu.r;
    out.U = seq_conv(Uu.U, Uv.Uinv);
    out.Uinv = seq_conv(Uv.U, Uu.Uinv);

    Jet got = germ_product(germ_truncate(u_row, m), row_jet_of_seq(out.U, out.d, m));
    Jet want = germ_truncate(v_row, m);
    for (const MIdx& mu : multi_indices_up_to(out.d, m))
        if (!(got.at(mu) == want.at(mu)))
            throw AnalysisError("general_normalizer: target germ verification failed");
    return out;
}

Mask transform_mask(const Mask& m, const LaurentPair& U) {
    Mask out;
    out.d = m.d;
    out.r = m.r;
    out.a = seq_conv(seq_conv(seq_upsample(U.Uinv, 2), m.a), U.U);
    return out;
}

Jet transform_filter(const Jet& u_row, const LaurentPair& U) {
    return germ_product(u_row, row_jet_of_seq(U.U, U.d, u_row.order));
}

bool normalform_verify(const Mask& m, int order) {
    const int r = m.r;
    for (const Lat& w : gamma_cosets(m.d)) {
        bool even = true;
        for (long long x : w)
            if (x) even = false;
        Jet j = sequence_jet(m, order, w);
        for (const MIdx& mu : multi_indices_up_to(m.d, order)) {
            QMatrix v = j.at(mu);
            for (int c = 1; c < r; ++c)
                if (v(0, c) != 0) return false;
            if (!even && v(0, 0) != 0) return false;
            if (even && mi_abs(mu) == 0 && v(0, 0) != 1) return false;
        }
    }
    return true;
}

std::vector<SeqMatrix> generator_set(const LaurentPair& U, int m) {
    const int d = U.d;
    const int r = U.r;
    std::vector<SeqMatrix> out;
    for (const MIdx& nu : multi_indices_of_degree(d, m + 1)) {
        SeqMatrix nd = nabla_delta(nu);
        SeqMatrix col;
        for (const auto& [k, v] : nd) {
            QMatrix c(r, 1);
            c(0, 0) = v(0, 0);
            col[k] = c;
        }
        out.push_back(seq_conv(U.U, col));
    }
    for (int j = 1; j < r; ++j) {
        QMatrix ej(r, 1);
        ej(j, 0) = 1;
        out.push_back(seq_conv(U.U, seq_delta(d, ej)));
    }
    return out;
}

bool generator_membership(const Jet& filter, const SeqMatrix& u_col, int m) {
    Jet uj = sequence_jet(u_col, filter.d, m, Lat(size_t(filter.d), 0));
    Jet prod = germ_product(germ_truncate(filter, m), uj);
    return prod.vanishes_up_to(m);
}

}  // namespace ghsd
