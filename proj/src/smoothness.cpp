#include "ghsd/smoothness.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ghsd {

SeqMatrix autocorrelation(const SeqMatrix& u_col) {
    SeqMatrix out;
    for (const auto& [k1, v1] : u_col)
        for (const auto& [k2, v2] : u_col) {
            Lat k(k1.size());
            for (size_t i = 0; i < k1.size(); ++i) k[i] = k1[i] - k2[i];
            QMatrix t = v1 * v2.transpose();
            auto it = out.find(k);
            if (it == out.end())
                out.emplace(std::move(k), std::move(t));
            else
                it->second += t;
        }
    seq_prune(out);
    return out;
}

namespace {

SeqMatrix reversed_transposed(const SeqMatrix& A) {
    SeqMatrix out;
    for (const auto& [k, v] : A) {
        Lat nk(k.size());
        for (size_t i = 0; i < k.size(); ++i) nk[i] = -k[i];
        out[nk] = v.transpose();
    }
    return out;
}

SeqMatrix even_downsample(const SeqMatrix& A) {
    SeqMatrix out;
    for (const auto& [k, v] : A) {
        bool even = true;
        Lat j(k.size());
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] % 2 != 0) { even = false; break; }
            j[i] = k[i] / 2;
        }
        if (even) out[j] = v;
    }
    return out;
}

// Integer image of a matrix sequence: row-major r x r blocks with the scalar
// denominator tracked by the caller. Exact like SeqMatrix, but arithmetic
// avoids the per-entry rational canonicalization that dominates long orbits.
struct ZSeq {
    std::map<Lat, std::vector<Z>> v;
    int r = 1;
};

Z common_denominator(const SeqMatrix& A) {
    Z l(1);
    for (const auto& [k, m] : A)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                l = boost::multiprecision::lcm(l, denominator(m(i, j)));
    return l;
}

ZSeq to_zseq(const SeqMatrix& A, const Z& scale, int r) {
    ZSeq out;
    out.r = r;
    for (const auto& [k, m] : A) {
        std::vector<Z> b(size_t(r) * size_t(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) b[size_t(i) * size_t(r) + size_t(j)] = numerator(m(i, j) * Q(scale));
        out.v[k] = std::move(b);
    }
    return out;
}

ZSeq zreversed_transposed(const ZSeq& A) {
    const int r = A.r;
    ZSeq out;
    out.r = r;
    for (const auto& [k, b] : A.v) {
        Lat nk(k.size());
        for (size_t i = 0; i < k.size(); ++i) nk[i] = -k[i];
        std::vector<Z> t(size_t(r) * size_t(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) t[size_t(j) * size_t(r) + size_t(i)] = b[size_t(i) * size_t(r) + size_t(j)];
        out.v[std::move(nk)] = std::move(t);
    }
    return out;
}

ZSeq zconv(const ZSeq& A, const ZSeq& B) {
    const int r = A.r;
    ZSeq out;
    out.r = r;
    for (const auto& [ka, va] : A.v)
        for (const auto& [kb, vb] : B.v) {
            Lat k(ka.size());
            for (size_t i = 0; i < ka.size(); ++i) k[i] = ka[i] + kb[i];
            auto& acc = out.v[std::move(k)];
            if (acc.empty()) acc.assign(size_t(r) * size_t(r), Z(0));
            for (int i = 0; i < r; ++i)
                for (int l = 0; l < r; ++l) {
                    const Z& x = va[size_t(i) * size_t(r) + size_t(l)];
                    if (x == 0) continue;
                    for (int j = 0; j < r; ++j)
                        acc[size_t(i) * size_t(r) + size_t(j)] += x * vb[size_t(l) * size_t(r) + size_t(j)];
                }
        }
    return out;
}

ZSeq zdownsample(const ZSeq& A) {
    ZSeq out;
    out.r = A.r;
    for (const auto& [k, b] : A.v) {
        bool even = true;
        Lat j(k.size());
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] % 2 != 0) { even = false; break; }
            j[i] = k[i] / 2;
        }
        if (!even) continue;
        bool nonzero = false;
        for (const Z& e : b)
            if (e != 0) { nonzero = true; break; }
        if (nonzero) out.v[std::move(j)] = b;
    }
    return out;
}

Z zcontent(const ZSeq& A) {
    Z g(0);
    for (const auto& [k, b] : A.v) {
        for (const Z& e : b) {
            if (e == 0) continue;
            g = boost::multiprecision::gcd(g, e);
            if (g == 1) return g;
        }
    }
    return g;
}

// Double-precision mirror of the exact transfer step.
struct DSeq {
    std::map<Lat, std::vector<double>> v;  // row-major r x r blocks
    int r = 1;
};

DSeq to_dseq(const SeqMatrix& A, int r) {
    DSeq out;
    out.r = r;
    for (const auto& [k, m] : A) {
        std::vector<double> b(size_t(r) * size_t(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) b[size_t(i) * size_t(r) + size_t(j)] = to_double(m(i, j));
        out.v[k] = std::move(b);
    }
    return out;
}

struct GeneratorData {
    std::vector<SeqMatrix> cols;
    Jet filter;
    int sr = 0;
    int m_used = 0;
};

GeneratorData build_generators(const MaskFile& mf, int sr_cap) {
    GeneratorData g;
    SumRuleResult sr = sum_rule_order(mf.mask, sr_cap);
    if (sr.order == 0)
        throw AnalysisError("smoothness: mask has no sum rules, generators undefined");
    g.sr = sr.order;
    g.m_used = sr.order - 1;
    g.filter = sr.filter->jets;
    LaurentPair U = build_normalizer(g.filter, g.m_used);
    g.cols = generator_set(U, g.m_used);
    for (const SeqMatrix& u : g.cols)
        if (!generator_membership(g.filter, u, g.m_used))
            throw AnalysisError("smoothness: generator membership verification failed");
    return g;
}

}  // namespace

SeqMatrix transfer_apply(const Mask& m, const SeqMatrix& F) {
    SeqMatrix G = seq_conv(seq_conv(m.a, F), reversed_transposed(m.a));
    return seq_scale(even_downsample(G), q_pow(Q(2), m.d));
}

Q transfer_trace(const Mask& m, const SeqMatrix& F0, int n) {
    SeqMatrix F = F0;
    for (int i = 0; i < n; ++i) F = transfer_apply(m, F);
    auto it = F.find(Lat(size_t(m.d), 0));
    if (it == F.end()) return Q(0);
    Q t(0);
    for (int i = 0; i < m.r; ++i) t += it->second(i, i);
    return t;
}

Q iterate_norm_sq(const Mask& m, const SeqMatrix& u_col, int n) {
    SeqMatrix v = seq_conv(mask_iterate(m, n), u_col);
    Q s(0);
    for (const auto& [k, c] : v)
        for (int i = 0; i < m.r; ++i) s += c(i, 0) * c(i, 0);
    return s;
}

SmoothnessReport critical_sm2(const MaskFile& mf, const SmoothnessOptions& opt) {
    SmoothnessReport rep;
    GeneratorData g = build_generators(mf, opt.sr_cap);
    rep.sr_order = g.sr;
    rep.m_used = g.m_used;
    rep.generators = int(g.cols.size());

    const int d = mf.mask.d;
    const int r = mf.mask.r;
    const Lat zero(size_t(d), 0);
    auto ztrace0 = [&](const ZSeq& F) {
        auto it = F.v.find(zero);
        Z t(0);
        if (it != F.v.end())
            for (int i = 0; i < r; ++i) t += it->second[size_t(i) * size_t(r) + size_t(i)];
        return t;
    };

    // The orbit must stay inside the invariant subspace cut out by the
    // vanishing filter jets; floating arithmetic would leak back onto the
    // dominant eigenvalue 1, so the transfer step runs exactly. The iterate
    // lives as an integer block sequence with its scalar factored out (content
    // division bounds entry growth) and only trace ratios reach binary64.
    const Z la = common_denominator(mf.mask.a);
    const ZSeq az = to_zseq(mf.mask.a, la, r);
    const ZSeq azr = zreversed_transposed(az);
    const Q step_scale = q_pow(Q(2), d) / Q(la * la);

    rep.converged = true;
    int worst_iters = 0;
    for (const SeqMatrix& u : g.cols) {
        SeqMatrix F0 = autocorrelation(u);
        ZSeq F = to_zseq(F0, common_denominator(F0), r);
        Z tprev = ztrace0(F);
        double lambda = 0.0;
        int stable = 0;
        bool conv = false;
        int it = 0;
        for (; it < opt.max_iters; ++it) {
            if (tprev == 0) { lambda = 0.0; conv = true; break; }
            ZSeq W = zdownsample(zconv(zconv(az, F), azr));
            Z gc = zcontent(W);
            if (gc > 1)
                for (auto& [k, b] : W.v)
                    for (Z& e : b) e /= gc;
            if (gc == 0) gc = 1;
            Z tnext = ztrace0(W);
            // lambda is the trace ratio of consecutive exact iterates.
            double next = to_double(Q(tnext * gc) * step_scale / Q(tprev));
            double rel = std::abs(next - lambda) / std::max(std::abs(next), 1e-300);
            lambda = next;
            F = std::move(W);
            tprev = std::move(tnext);
            if (rel < opt.tol) {
                if (++stable >= 3) { conv = true; ++it; break; }
            } else {
                stable = 0;
            }
        }
        if (!conv) rep.converged = false;
        worst_iters = std::max(worst_iters, it);
        rep.lambda_per_generator.push_back(lambda);
    }
    rep.iterations = worst_iters;

    double lmax = 0.0;
    for (double l : rep.lambda_per_generator) lmax = std::max(lmax, l);
    rep.rho2 = std::pow(2.0, d / 2.0) * std::sqrt(lmax);
    rep.sm2 = -0.5 * std::log2(lmax);
    rep.sminf_lower = rep.sm2 - d / 2.0;
    return rep;
}

std::string smoothness_to_json(const SmoothnessReport& rep) {
    nlohmann::json j;
    j["sr_order"] = rep.sr_order;
    j["m_used"] = rep.m_used;
    j["generators"] = rep.generators;
    j["lambda_per_generator"] = rep.lambda_per_generator;
    j["rho2"] = rep.rho2;
    j["sm2"] = rep.sm2;
    j["sminf_lower"] = rep.sminf_lower;
    j["iterations"] = rep.iterations;
    j["converged"] = rep.converged;
    return j.dump(2) + "\n";
}

ConvergenceVerdict convergence_verdict(const MaskFile& mf, const SmoothnessOptions& opt) {
    ConvergenceVerdict v;
    v.m = mf.type.max_deg();
    SmoothnessReport rep = critical_sm2(mf, opt);
    v.margin = rep.sminf_lower - v.m;
    if (rep.converged && v.margin > 0) {
        std::ostringstream os;
        os << "convergent in C^" << v.m;
        v.verdict = os.str();
    } else {
        v.verdict = "inconclusive";
    }
    return v;
}

double rho_inf_estimate(const MaskFile& mf, int levels, const SmoothnessOptions& opt) {
    const int d = mf.mask.d;
    const int cap = (d == 1) ? 20 : 9;
    if (levels < 2) levels = 2;
    if (levels > cap)
        throw CapError("rho_inf_estimate: level cap exceeded (" + std::to_string(cap) + ")");

    GeneratorData g = build_generators(mf, opt.sr_cap);
    const int r = mf.mask.r;
    DSeq A = to_dseq(mf.mask.a, r);
    double best = 0.0;
    for (const SeqMatrix& u : g.cols) {
        // w_n = a_n * u computed incrementally: w_{n+1} = (a up 2^n) * w_n.
        DSeq w;
        w.r = r;
        for (const auto& [k, v] : u) {
            std::vector<double> col(size_t(r), 0.0);
            for (int i = 0; i < r; ++i) col[size_t(i)] = to_double(v(i, 0));
            w.v[k] = std::move(col);
        }
        auto sup = [&](const DSeq& s) {
            double m = 0.0;
            for (const auto& [k, v] : s.v)
                for (double x : v) m = std::max(m, std::abs(x));
            return m;
        };
        double prev = 0.0, ratio = 0.0;
        long long up = 1;
        for (int n = 0; n < levels; ++n) {
            // (a up 2^n) * w, with w storing r x 1 columns.
            DSeq next;
            next.r = r;
            for (const auto& [ka, va] : A.v)
                for (const auto& [kw, vw] : w.v) {
                    Lat k(ka.size());
                    for (size_t i = 0; i < ka.size(); ++i) k[i] = ka[i] * up + kw[i];
                    auto& acc = next.v[k];
                    if (acc.empty()) acc.assign(size_t(r), 0.0);
                    for (int i = 0; i < r; ++i)
                        for (int l = 0; l < r; ++l)
                            acc[size_t(i)] += va[size_t(i) * size_t(r) + size_t(l)] * vw[size_t(l)];
                }
            double cur = sup(next);
            if (prev > 0.0) ratio = cur / prev;
            prev = cur;
            w = std::move(next);
            up *= 2;
        }
        best = std::max(best, std::ldexp(ratio, d));
    }
    return best;
}

}  // namespace ghsd
