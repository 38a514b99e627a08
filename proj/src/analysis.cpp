#include "ghsd/analysis.hpp"

#include <nlohmann/json.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace ghsd {

std::vector<Q> left_unit_eigenvector(const Mask& m) {
    QMatrix s = m.symbol_at_zero() - QMatrix::identity(m.r);
    auto ker = left_kernel(s);
    if (ker.empty())
        throw AnalysisError("left_unit_eigenvector: 1 is not an eigenvalue of the symbol at zero");
    if (ker.size() > 1)
        throw AnalysisError("left_unit_eigenvector: eigenvalue 1 is not simple");
    std::vector<Q> v = ker[0];
    if (v[0] == 0)
        throw AnalysisError("left_unit_eigenvector: first entry vanishes, cannot normalize");
    Q inv = Q(1) / v[0];
    for (Q& x : v) x *= inv;
    return v;
}

SpectralVerdict spectral_condition(const Mask& m, int mdeg) {
    SpectralVerdict v;
    const int r = m.r;
    QMatrix a0 = m.symbol_at_zero();

    Eigen::MatrixXd A(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) A(i, j) = to_double(a0(i, j));
    Eigen::EigenSolver<Eigen::MatrixXd> es(A);
    for (int i = 0; i < r; ++i)
        v.eigenvalues.emplace_back(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());

    constexpr double band = 1e-9;
    int near_one = 0;
    for (const auto& [re, im] : v.eigenvalues)
        if (std::hypot(re - 1.0, im) < band) ++near_one;
    bool exact_one = rank(a0 - QMatrix::identity(r)) == r - 1;
    v.one_simple = exact_one && near_one == 1;

    v.pow_free = true;
    Q p(1);
    for (int k = 1; k <= mdeg; ++k) {
        p /= 2;
        bool exact_hit = rank(a0 - QMatrix::identity(r) * p) < r;
        if (exact_hit) v.pow_free = false;
        double pd = to_double(p);
        for (const auto& [re, im] : v.eigenvalues)
            if (!exact_hit && std::hypot(re - pd, im) < band) v.warning_band = true;
    }
    v.ok = v.one_simple && v.pow_free;
    return v;
}

namespace {

// Jets of the mask symbol at every coset base frequency pi*omega.
std::map<Lat, Jet> coset_jets(const Mask& m, int order) {
    std::map<Lat, Jet> out;
    for (const Lat& w : gamma_cosets(m.d)) out[w] = sequence_jet(m, order, w);
    return out;
}

bool is_zero_lat(const Lat& w) {
    for (long long x : w)
        if (x != 0) return false;
    return true;
}

}  // namespace

std::optional<FilterResult> try_filter(const Mask& m, int s, const FilterOptions& opt) {
    if (s < 1) throw AnalysisError("try_filter: order must be >= 1");
    const int d = m.d;
    const int r = m.r;
    const int jet_order = s - 1;

    std::vector<Q> n0;
    try {
        n0 = left_unit_eigenvector(m);
    } catch (const AnalysisError&) {
        return std::nullopt;
    }
    // Degree-zero pins must agree with the eigenvector.
    for (const auto& pin : opt.pins)
        if (mi_abs(pin.mu) == 0 && n0[size_t(pin.component)] != pin.value) return std::nullopt;

    auto jets = coset_jets(m, jet_order);
    const QMatrix a0 = m.symbol_at_zero();

    // Unknown layout: graded-lex multi-indices of degree 1..s-1, r entries each.
    std::vector<MIdx> idx;
    std::map<MIdx, int> pos;
    for (const MIdx& mu : multi_indices_up_to(d, jet_order))
        if (mi_abs(mu) >= 1) {
            pos[mu] = int(idx.size());
            idx.push_back(mu);
        }
    const int nunk = int(idx.size()) * r;

    std::vector<std::vector<Q>> rows;
    std::vector<Q> rhs;
    auto add_row = [&](std::vector<Q>&& row, Q&& b) {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(b));
    };

    for (const Lat& w : gamma_cosets(d)) {
        const bool even = is_zero_lat(w);
        if (!even && !opt.with_omega) continue;
        const Jet& J = jets.at(w);
        for (const MIdx& mu : multi_indices_up_to(d, jet_order)) {
            // Row vector equation sum_{b <= mu} binom(mu,b) 2^|b| N_b J_{mu-b} = (even ? N_mu : 0),
            // one scalar row per target component j.
            for (int j = 0; j < r; ++j) {
                std::vector<Q> row(size_t(nunk), Q(0));
                Q b(0);
                for (const MIdx& be : multi_indices_below(mu)) {
                    Q c = mi_binomial(mu, be) * q_pow(Q(2), mi_abs(be));
                    QMatrix Jm = J.at(mi_sub(mu, be));
                    if (mi_abs(be) == 0) {
                        for (int i = 0; i < r; ++i) b -= c * n0[size_t(i)] * Jm(i, j);
                    } else {
                        int base = pos.at(be) * r;
                        for (int i = 0; i < r; ++i) row[size_t(base + i)] += c * Jm(i, j);
                    }
                }
                if (even && mi_abs(mu) >= 1) row[size_t(pos.at(mu) * r + j)] -= 1;
                // even, mu = 0: fully determined consistency row (N_0 a0 = N_0).
                if (even && mi_abs(mu) == 0) b += n0[size_t(j)];
                add_row(std::move(row), std::move(b));
            }
        }
    }

    for (const auto& pin : opt.pins) {
        if (mi_abs(pin.mu) == 0) continue;
        if (mi_abs(pin.mu) > jet_order) continue;
        std::vector<Q> row(size_t(nunk), Q(0));
        row[size_t(pos.at(pin.mu) * r + pin.component)] = 1;
        add_row(std::move(row), Q(pin.value));
    }

    QMatrix A(int(rows.size()), nunk);
    std::vector<Q> b(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < nunk; ++j) A(int(i), j) = rows[i][size_t(j)];
        b[i] = rhs[i];
    }
    auto sol = solve_linear(A, b);
    if (!sol) return std::nullopt;

    FilterResult res;
    res.order = s;
    res.unique = sol->nullspace.empty();
    res.jets.d = d;
    res.jets.order = jet_order;
    res.jets.rows = 1;
    res.jets.cols = r;
    QMatrix lead(1, r);
    for (int j = 0; j < r; ++j) lead(0, j) = n0[size_t(j)];
    res.jets.set(MIdx(size_t(d), 0), lead);
    for (size_t p = 0; p < idx.size(); ++p) {
        QMatrix v(1, r);
        for (int j = 0; j < r; ++j) v(0, j) = sol->particular[p * size_t(r) + size_t(j)];
        res.jets.set(idx[p], v);
    }
    for (int k = 1; k <= jet_order; ++k)
        if (rank(QMatrix::identity(r) - a0 * q_pow(Q(2), k)) < r) res.resonant_degrees.push_back(k);
    return res;
}

FilterResult matching_filter(const Mask& m, int order) {
    FilterOptions opt;
    opt.with_omega = false;
    auto res = try_filter(m, order, opt);
    if (!res) {
        // Identify the smallest inconsistent degree for the error message.
        int k_bad = order - 1;
        for (int s = 1; s <= order; ++s)
            if (!try_filter(m, s, opt)) { k_bad = s - 1; break; }
        std::ostringstream os;
        os << "matching_filter: no order-" << order
           << " matching filter; the identity is inconsistent at degree " << k_bad
           << " (resonant eigenvalue 2^-" << k_bad << " of the symbol at zero)";
        throw AnalysisError(os.str());
    }
    return *res;
}

SumRuleResult sum_rule_order(const Mask& m, int cap) {
    SumRuleResult out;
    FilterOptions opt;
    for (int s = 1; s <= cap; ++s) {
        auto res = try_filter(m, s, opt);
        if (!res) break;
        out.order = s;
        out.filter = std::move(res);
    }
    return out;
}

HermiteVerdict is_generalized_hermite(const Mask& m, const HermiteType& type, int cap) {
    HermiteVerdict out;
    const int mdeg = type.max_deg();
    FilterOptions opt;
    for (int l = 0; l < type.size(); ++l) {
        const MIdx& nu = type.nu[size_t(l)];
        // Component l must be (i xi)^{nu_l} + O(|xi|^{|nu_l|+1}).
        for (const MIdx& mu : multi_indices_up_to(m.d, mi_abs(nu))) {
            Q val(0);
            if (mu == nu) val = (mi_abs(nu) % 2 == 0) ? mi_factorial(nu) : -mi_factorial(nu);
            opt.pins.push_back({mu, l, val});
        }
    }
    for (int s = 1; s <= cap; ++s) {
        auto res = try_filter(m, s, opt);
        if (!res) break;
        out.max_order = s;
        out.filter = std::move(res);
    }
    out.ok = out.max_order >= mdeg + 1;
    return out;
}

int lpm_order(const Mask& m, const HermiteType& type, int cap) {
    const int d = m.d;
    const int r = m.r;
    const int jet_order = cap - 1;
    Jet target = hermite_target_jet(type, jet_order);
    auto jets = coset_jets(m, jet_order);

    int best = 0;
    for (int s = 1; s <= cap; ++s) {
        bool ok = true;
        for (const Lat& w : gamma_cosets(d)) {
            const bool even = is_zero_lat(w);
            const Jet& J = jets.at(w);
            for (const MIdx& mu : multi_indices_of_degree(d, s - 1)) {
                QMatrix acc(1, r);
                for (const MIdx& be : multi_indices_below(mu)) {
                    Q c = mi_binomial(mu, be) * q_pow(Q(2), mi_abs(be));
                    acc += (target.at(be) * J.at(mi_sub(mu, be))) * c;
                }
                if (even) acc = acc - target.at(mu);
                if (!acc.is_zero()) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (!ok) break;
        best = s;
    }
    return best;
}

ThetaResult derive_theta(const HermiteType& type) {
    ThetaResult out;
    const int r = type.size();
    for (int l = 0; l < r; ++l) {
        std::vector<int> candidates;
        for (int j = 0; j < r; ++j) {
            if (type.nu[size_t(j)] != type.nu[size_t(l)]) continue;
            bool integral = true;
            for (size_t i = 0; i < type.tau_of(l).size(); ++i) {
                Q b = 2 * type.tau_of(l)[i] - type.tau_of(j)[i];
                if (boost::multiprecision::denominator(b) != 1) { integral = false; break; }
            }
            if (integral) candidates.push_back(j);
        }
        if (candidates.empty())
            throw AnalysisError("derive_theta: component " + std::to_string(l + 1) +
                                " admits no partner with integral 2 tau_l - tau_j");
        if (candidates.size() > 1) out.ambiguous = true;
        int j = candidates[0];
        out.theta.push_back(j);
        Lat beta;
        for (size_t i = 0; i < type.tau_of(l).size(); ++i) {
            Q b = 2 * type.tau_of(l)[i] - type.tau_of(j)[i];
            beta.push_back(b.convert_to<long long>());
        }
        out.beta.push_back(beta);
    }
    return out;
}

InterpVerdict interpolatory_check(const Mask& m, const HermiteType& type) {
    InterpVerdict v;
    ThetaResult th;
    try {
        th = derive_theta(type);
    } catch (const AnalysisError& e) {
        v.detail = e.what();
        return v;
    }
    v.applicable = true;
    v.ok = true;
    const int r = m.r;
    for (int l = 0; l < r && v.ok; ++l) {
        Q want = q_pow(Q(1, 2), m.d + mi_abs(type.nu[size_t(l)]));
        for (const auto& [k, a] : m.a) {
            // Only lattice points on the beta_l coset constrain column theta(l).
            bool on_coset = true;
            bool at_beta = true;
            for (int i = 0; i < m.d; ++i) {
                long long t = k[size_t(i)] - th.beta[size_t(l)][size_t(i)];
                if (t % 2 != 0) on_coset = false;
                if (t != 0) at_beta = false;
            }
            if (!on_coset) continue;
            for (int i = 0; i < r; ++i) {
                Q expect = (at_beta && i == l) ? want : Q(0);
                if (a(i, th.theta[size_t(l)]) != expect) {
                    std::ostringstream os;
                    os << "column " << th.theta[size_t(l)] + 1 << " violates the delta condition at k = (";
                    for (int t = 0; t < m.d; ++t) os << (t ? "," : "") << k[size_t(t)];
                    os << ")";
                    v.detail = os.str();
                    v.ok = false;
                    break;
                }
            }
            if (!v.ok) break;
        }
    }
    return v;
}

ClassificationReport classify(const MaskFile& mf, int cap) {
    ClassificationReport rep;
    SumRuleResult sr = sum_rule_order(mf.mask, cap);
    rep.sr_order = sr.order;
    rep.filter = sr.filter;
    rep.lpm_order = lpm_order(mf.mask, mf.type, cap);
    rep.hermite_type_ok = is_generalized_hermite(mf.mask, mf.type, cap).ok;
    InterpVerdict iv = interpolatory_check(mf.mask, mf.type);
    rep.interpolatory_ok = iv.applicable && iv.ok;
    rep.spectral_ok = spectral_condition(mf.mask, mf.type.max_deg()).ok;
    return rep;
}

std::string report_to_json(const ClassificationReport& rep, int d, int r) {
    nlohmann::json j;
    j["sr_order"] = rep.sr_order;
    j["lpm_order"] = rep.lpm_order;
    j["hermite_type_ok"] = rep.hermite_type_ok;
    j["interpolatory_ok"] = rep.interpolatory_ok;
    j["spectral_ok"] = rep.spectral_ok;
    if (rep.filter) {
        nlohmann::json f;
        f["order"] = rep.filter->order;
        f["unique"] = rep.filter->unique;
        f["resonant_degrees"] = rep.filter->resonant_degrees;
        nlohmann::json entries = nlohmann::json::array();
        for (const MIdx& mu : multi_indices_up_to(d, rep.filter->order - 1)) {
            QMatrix v = rep.filter->jets.at(mu);
            nlohmann::json e;
            e["mu"] = mu;
            nlohmann::json vals = nlohmann::json::array();
            for (int c = 0; c < r; ++c) vals.push_back(format_rational(v(0, c)));
            e["value"] = vals;
            entries.push_back(e);
        }
        f["entries"] = entries;
        j["matching_filter"] = f;
    } else {
        j["matching_filter"] = nullptr;
    }
    return j.dump(2) + "\n";
}

}  // namespace ghsd
