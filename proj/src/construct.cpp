#include "ghsd/construct.hpp"

#include <map>
#include <sstream>

namespace ghsd {

namespace {

QMatrix kron(const QMatrix& A, const QMatrix& B) {
    QMatrix out(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            if (A(i, j) == 0) continue;
            for (int p = 0; p < B.rows(); ++p)
                for (int q = 0; q < B.cols(); ++q)
                    out(i * B.rows() + p, j * B.cols() + q) = A(i, j) * B(p, q);
        }
    return out;
}

std::string lat_str(const Lat& k) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << ")";
    return os.str();
}

// E(k - c) + c; nullopt when the image leaves the lattice.
std::optional<Lat> orbit_image(const IMat& E, const Lat& k, const std::vector<Q>& c) {
    const size_t d = k.size();
    Lat out(d);
    for (size_t i = 0; i < d; ++i) {
        Q x = c[i];
        for (size_t j = 0; j < d; ++j) x += Q(E[i][j]) * (Q(k[j]) - c[j]);
        if (denominator(x) != 1) return std::nullopt;
        out[i] = numerator(x).convert_to<long long>();
    }
    return out;
}

}  // namespace

Mask bspline_mask(int n) {
    if (n < 1) throw AnalysisError("bspline_mask: order must be positive");
    Mask m;
    m.d = 1;
    m.r = 1;
    const Q scale = q_pow(Q(1, 2), n);
    for (int k = 0; k <= n; ++k) {
        QMatrix v(1, 1);
        v(0, 0) = binomial(n, k) * scale;
        m.set({k}, v);
    }
    return m;
}

Mask tensor_mask(const Mask& A, const Mask& B) {
    Mask out;
    out.d = A.d + B.d;
    out.r = A.r * B.r;
    for (const auto& [ja, va] : A.a)
        for (const auto& [jb, vb] : B.a) {
            Lat k = ja;
            k.insert(k.end(), jb.begin(), jb.end());
            out.set(k, kron(va, vb));
        }
    return out;
}

VectorizeResult vectorize_mask(const Mask& A, const std::vector<long long>& Ndiag, int order,
                               int cap) {
    const int d = A.d;
    if (int(Ndiag.size()) != d) throw AnalysisError("vectorize_mask: dilation size mismatch");
    for (long long n : Ndiag)
        if (n < 1) throw AnalysisError("vectorize_mask: dilation entries must be positive");

    if (order <= 0) {
        SumRuleResult sr = sum_rule_order(A, cap);
        if (sr.order < 1) throw AnalysisError("vectorize_mask: input mask has no sum rules");
        order = sr.order;
    }
    Jet filtA = matching_filter(A, order).jets;

    // Cosets of N Z^d, lexicographic so gamma_1 = 0.
    std::vector<Lat> gammas;
    {
        Lat g(d, 0);
        while (true) {
            gammas.push_back(g);
            int i = d - 1;
            while (i >= 0 && g[i] + 1 == Ndiag[i]) g[i--] = 0;
            if (i < 0) break;
            ++g[i];
        }
    }
    const int R = int(gammas.size());
    const int L = A.r;

    Mask out;
    out.d = d;
    out.r = R * L;
    for (const auto& [s, v] : A.a)
        for (int j = 0; j < R; ++j)
            for (int k = 0; k < R; ++k) {
                Lat n(d);
                bool onlat = true;
                for (int i = 0; i < d && onlat; ++i) {
                    long long t = s[i] + 2 * gammas[j][i] - gammas[k][i];
                    if (t % Ndiag[i] != 0) onlat = false;
                    // round toward -inf is irrelevant: exact divisibility required
                    else n[i] = t / Ndiag[i];
                }
                if (!onlat) continue;
                QMatrix blk = out.at(n);
                if (blk.rows() == 0) blk = QMatrix(out.r, out.r);
                for (int a = 0; a < L; ++a)
                    for (int b = 0; b < L; ++b) blk(j * L + a, k * L + b) = v(a, b);
                out.set(n, blk);
            }

    // upsilon(xi) blocks: e^{i (N^{-1} gamma_j) . xi} upsilon_A(N^{-T} xi).
    std::vector<Q> invN(d);
    for (int i = 0; i < d; ++i) invN[i] = Q(1, Ndiag[i]);
    Jet dil = germ_dilate_axes(filtA, invN);
    Jet filt;
    filt.d = d;
    filt.order = filtA.order;
    filt.rows = 1;
    filt.cols = R * L;
    for (int j = 0; j < R; ++j) {
        std::vector<Q> tau(d);
        for (int i = 0; i < d; ++i) tau[i] = Q(gammas[j][i], Ndiag[i]);
        Jet ph = germ_phase(dil, tau);
        for (const auto& [mu, v] : ph.c) {
            QMatrix row = filt.at(mu);
            if (row.rows() == 0) row = QMatrix(1, R * L);
            for (int b = 0; b < L; ++b) row(0, j * L + b) = v(0, b);
            filt.set(mu, row);
        }
    }
    return {std::move(out), std::move(filt)};
}

Mask hermite_convert(const Mask& ring, const HermiteType& type, int cap) {
    if (ring.r != type.size())
        throw AnalysisError("hermite_convert: multiplicity does not match the type size");
    SumRuleResult sr = sum_rule_order(ring, cap);
    const int need = type.max_deg() + 1;
    if (sr.order < need)
        throw AnalysisError("hermite_convert: sum-rule order " + std::to_string(sr.order) +
                            " is below the required " + std::to_string(need));
    const int m = sr.order - 1;
    HermiteType plain = type;
    plain.tau.clear();  // target is the pure monomial row
    Jet target = hermite_target_jet(plain, m);
    Jet u = germ_truncate(sr.filter->jets, m);
    LaurentPair U = general_normalizer(u, target, m);
    return transform_mask(ring, U);
}

MaskFile existence_pipeline(const HermiteType& type) {
    if (type.size() < 1) throw AnalysisError("existence_pipeline: empty type");
    const int d = int(type.nu[0].size());
    const int m = type.max_deg();
    const int r = type.size();
    Mask A = bspline_mask(m + 2);
    for (int i = 1; i < d; ++i) A = tensor_mask(A, bspline_mask(m + 2));
    std::vector<long long> Ndiag(d, 1);
    Ndiag[0] = r;
    VectorizeResult vec = vectorize_mask(A, Ndiag, m + 2);
    MaskFile out;
    out.mask = hermite_convert(vec.mask, type);
    out.type = type;
    return out;
}

std::vector<IMat> symmetry_group(const std::string& name, int d) {
    std::vector<IMat> half;
    if (name == "Z2" && d == 1) {
        half = {{{1}}};
    } else if (name == "D4" && d == 2) {
        half = {{{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}, {{0, 1}, {1, 0}}, {{0, 1}, {-1, 0}}};
    } else if (name == "D6" && d == 2) {
        half = {{{1, 0}, {0, 1}},  {{0, -1}, {1, -1}}, {{-1, 1}, {-1, 0}},
                {{0, 1}, {1, 0}},  {{1, -1}, {0, -1}}, {{-1, 0}, {-1, 1}}};
    } else {
        throw AnalysisError("symmetry_group: unknown group " + name + " in dimension " +
                            std::to_string(d));
    }
    std::vector<IMat> full;
    for (const IMat& E : half) {
        full.push_back(E);
        IMat neg = E;
        for (auto& row : neg)
            for (int& x : row) x = -x;
        full.push_back(neg);
    }
    return full;
}

QMatrix symmetry_matrix(const IMat& E, const HermiteType& type) {
    const int r = type.size();
    const int d = int(type.nu[0].size());
    if (int(E.size()) != d) throw AnalysisError("symmetry_matrix: dimension mismatch");
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (type.nu[i] == type.nu[j])
                throw AnalysisError(
                    "symmetry_matrix: ambiguous for repeated type entries (left open)");

    QMatrix S(r, r);
    for (int l = 0; l < r; ++l) {
        // expand (E^T xi)^{nu_l} = prod_i (sum_j E[j][i] xi_j)^{nu_l[i]}
        std::map<MIdx, Q> poly;
        poly[MIdx(d, 0)] = 1;
        for (int i = 0; i < d; ++i)
            for (int rep = 0; rep < type.nu[l][i]; ++rep) {
                std::map<MIdx, Q> next;
                for (const auto& [mu, c] : poly)
                    for (int j = 0; j < d; ++j) {
                        if (E[j][i] == 0) continue;
                        MIdx nu = mu;
                        ++nu[j];
                        next[nu] += c * E[j][i];
                    }
                poly.swap(next);
            }
        for (const auto& [mu, c] : poly) {
            if (c == 0) continue;
            int hit = -1;
            for (int j = 0; j < r; ++j)
                if (type.nu[j] == mu) {
                    hit = j;
                    break;
                }
            if (hit < 0)
                throw AnalysisError("symmetry_matrix: type is not closed under the transform");
            S(hit, l) = c;
        }
    }
    return S;
}

Mask symmetry_complete(const Mask& reps, const HermiteType& type, const SymmetryDescriptor& sym) {
    const int d = reps.d;
    std::vector<Q> c = sym.center;
    if (c.empty()) c.assign(d, Q(0));
    if (int(c.size()) != d) throw AnalysisError("symmetry_complete: bad center size");

    std::vector<IMat> G = symmetry_group(sym.group, d);
    std::vector<QMatrix> S, Sinv;
    for (const IMat& E : G) {
        S.push_back(symmetry_matrix(E, type));
        Sinv.push_back(inverse(S.back()));
    }

    Mask full;
    full.d = d;
    full.r = reps.r;
    for (const auto& [k, v] : reps.a)
        for (size_t e = 0; e < G.size(); ++e) {
            auto k2 = orbit_image(G[e], k, c);
            if (!k2)
                throw AnalysisError("symmetry_complete: image of " + lat_str(k) +
                                    " leaves the lattice");
            QMatrix v2 = S[e] * v * Sinv[e];
            auto it = full.a.find(*k2);
            if (it == full.a.end()) {
                if (!v2.is_zero()) full.a[*k2] = v2;
            } else if (!(it->second == v2)) {
                throw AnalysisError("symmetry_complete: orbit conflict at " + lat_str(*k2));
            }
        }
    return full;
}

SymmetryVerdict symmetry_check(const MaskFile& mf) {
    if (!mf.symmetry) throw AnalysisError("symmetry_check: no symmetry descriptor");
    const HermiteType& type = mf.type;
    if (!type.tau_all_zero()) {
        const std::vector<Q> t0 = type.tau_of(0);
        for (int l = 1; l < type.size(); ++l)
            if (type.tau_of(l) != t0)
                throw AnalysisError("symmetry_check: unsupported symmetry form (mixed translations)");
    }
    const Mask& m = mf.mask;
    std::vector<Q> c = mf.symmetry->center;
    if (c.empty()) c.assign(m.d, Q(0));

    std::vector<IMat> G = symmetry_group(mf.symmetry->group, m.d);
    for (size_t e = 0; e < G.size(); ++e) {
        QMatrix S = symmetry_matrix(G[e], type);
        QMatrix Sinv = inverse(S);
        for (const auto& [k, v] : m.a) {
            auto k2 = orbit_image(G[e], k, c);
            if (!k2) return {false, "element " + std::to_string(e) + " maps " + lat_str(k) +
                                        " off the lattice"};
            if (!(m.at(*k2) == S * v * Sinv))
                return {false, "element " + std::to_string(e) + " at " + lat_str(k)};
        }
    }
    return {true, ""};
}

}  // namespace ghsd
