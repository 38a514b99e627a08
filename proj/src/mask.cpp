#include "ghsd/mask.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace ghsd {

using nlohmann::json;

int HermiteType::max_deg() const {
    int m = 0;
    for (const auto& v : nu) m = std::max(m, mi_abs(v));
    return m;
}

std::vector<Q> HermiteType::tau_of(int l) const {
    if (tau.empty()) return std::vector<Q>(nu.empty() ? 0 : nu[0].size(), Q(0));
    return tau[size_t(l)];
}

bool HermiteType::tau_all_zero() const {
    for (const auto& t : tau)
        for (const Q& x : t)
            if (x != 0) return false;
    return true;
}

QMatrix Mask::at(const Lat& k) const {
    auto it = a.find(k);
    if (it != a.end()) return it->second;
    return QMatrix(r, r);
}

void Mask::set(const Lat& k, const QMatrix& v) {
    if (v.is_zero())
        a.erase(k);
    else
        a[k] = v;
}

void Mask::fsupp(Lat& lo, Lat& hi) const {
    if (a.empty()) throw AnalysisError("fsupp: empty mask");
    lo.assign(size_t(d), 0);
    hi.assign(size_t(d), 0);
    bool first = true;
    for (const auto& [k, v] : a) {
        if (v.is_zero()) continue;
        if (first) {
            lo = k;
            hi = k;
            first = false;
            continue;
        }
        for (int i = 0; i < d; ++i) {
            lo[size_t(i)] = std::min(lo[size_t(i)], k[size_t(i)]);
            hi[size_t(i)] = std::max(hi[size_t(i)], k[size_t(i)]);
        }
    }
    if (first) throw AnalysisError("fsupp: zero mask");
}

SeqMatrix Mask::coset(const Lat& gamma) const {
    SeqMatrix out;
    for (const auto& [k, v] : a) {
        Lat j(size_t(d), 0);
        bool ok = true;
        for (int i = 0; i < d; ++i) {
            long long t = k[size_t(i)] - gamma[size_t(i)];
            if (t % 2 != 0) { ok = false; break; }
            j[size_t(i)] = t / 2;
        }
        if (ok) out[j] = v;
    }
    return out;
}

QMatrix Mask::symbol_at_zero() const {
    QMatrix s(r, r);
    for (const auto& [k, v] : a) s += v;
    return s;
}

namespace {

std::vector<Q> parse_rational_vector(const json& arr, int d, const char* what) {
    if (!arr.is_array() || int(arr.size()) != d)
        throw ParseError(std::string(what) + ": expected array of length " + std::to_string(d));
    std::vector<Q> out;
    for (const auto& e : arr) {
        if (!e.is_string()) throw ParseError(std::string(what) + ": entries must be rational strings");
        out.push_back(parse_rational(e.get<std::string>()));
    }
    return out;
}

// Field extraction; json access errors (missing keys, wrong kinds) are
// rethrown as ParseError by parse_mask so malformed files surface as parse
// failures rather than internal ones.
MaskFile parse_mask_fields(const json& j) {
    if (!j.is_object()) throw ParseError("mask file must be a JSON object");
    if (j.value("version", 0) != 1) throw ParseError("unsupported version (expected 1)");

    MaskFile mf;
    mf.mask.d = j.at("dim").get<int>();
    mf.mask.r = j.at("multiplicity").get<int>();
    if (mf.mask.d < 1 || mf.mask.r < 1) throw ParseError("dim and multiplicity must be positive");
    const int d = mf.mask.d;
    const int r = mf.mask.r;

    const json& type = j.at("type");
    if (!type.is_array() || int(type.size()) != r)
        throw ParseError("type: expected " + std::to_string(r) + " multi-indices");
    for (const auto& nu : type) {
        if (!nu.is_array() || int(nu.size()) != d)
            throw ParseError("type: each multi-index must have dim entries");
        MIdx m;
        for (const auto& e : nu) {
            int v = e.get<int>();
            if (v < 0) throw ParseError("type: negative multi-index entry");
            m.push_back(v);
        }
        mf.type.nu.push_back(m);
    }
    if (mi_abs(mf.type.nu[0]) != 0)
        throw ParseError("type: first component must be the zero multi-index");

    if (j.contains("translation")) {
        const json& tr = j.at("translation");
        if (!tr.is_array() || int(tr.size()) != r)
            throw ParseError("translation: expected one vector per component");
        for (const auto& t : tr) mf.type.tau.push_back(parse_rational_vector(t, d, "translation"));
    }

    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array()) throw ParseError("coeffs: expected array");
    for (const auto& c : coeffs) {
        const json& kj = c.at("k");
        if (!kj.is_array() || int(kj.size()) != d) throw ParseError("coeffs: bad lattice key");
        Lat k;
        for (const auto& e : kj) k.push_back(e.get<long long>());
        if (mf.mask.a.count(k)) throw ParseError("coeffs: duplicate lattice key");
        const json& rows = c.at("rows");
        if (!rows.is_array() || int(rows.size()) != r)
            throw ParseError("coeffs: expected " + std::to_string(r) + " rows");
        QMatrix m(r, r);
        for (int i = 0; i < r; ++i) {
            std::vector<Q> row = parse_rational_vector(rows[size_t(i)], r, "coeffs row");
            for (int jj = 0; jj < r; ++jj) m(i, jj) = row[size_t(jj)];
        }
        mf.mask.a[k] = m;
    }

    if (j.contains("symmetry")) {
        const json& s = j.at("symmetry");
        SymmetryDescriptor sd;
        sd.group = s.at("group").get<std::string>();
        if (sd.group != "Z2" && sd.group != "D4" && sd.group != "D6")
            throw ParseError("symmetry: unknown group '" + sd.group + "'");
        sd.center = parse_rational_vector(s.at("center"), d, "symmetry center");
        sd.representatives = s.value("representatives", false);
        mf.symmetry = sd;
    }
    return mf;
}

}  // namespace

MaskFile parse_mask(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_mask_fields(j);
    } catch (const json::exception& e) {
        throw ParseError(std::string("mask file: ") + e.what());
    }
}

std::string serialize_mask(const MaskFile& mf) {
    json j;
    j["version"] = 1;
    j["dim"] = mf.mask.d;
    j["multiplicity"] = mf.mask.r;
    json type = json::array();
    for (const auto& nu : mf.type.nu) type.push_back(nu);
    j["type"] = type;
    if (!mf.type.tau.empty()) {
        json tr = json::array();
        for (const auto& t : mf.type.tau) {
            json v = json::array();
            for (const Q& x : t) v.push_back(format_rational(x));
            tr.push_back(v);
        }
        j["translation"] = tr;
    }
    json coeffs = json::array();
    for (const auto& [k, m] : mf.mask.a) {  // std::map iterates lexicographically
        json c;
        c["k"] = k;
        json rows = json::array();
        for (int i = 0; i < mf.mask.r; ++i) {
            json row = json::array();
            for (int jj = 0; jj < mf.mask.r; ++jj) row.push_back(format_rational(m(i, jj)));
            rows.push_back(row);
        }
        c["rows"] = rows;
        coeffs.push_back(c);
    }
    j["coeffs"] = coeffs;
    if (mf.symmetry) {
        json s;
        s["group"] = mf.symmetry->group;
        json c = json::array();
        for (const Q& x : mf.symmetry->center) c.push_back(format_rational(x));
        s["center"] = c;
        if (mf.symmetry->representatives) s["representatives"] = true;
        j["symmetry"] = s;
    }
    return j.dump(2) + "\n";
}

SeqMatrix seq_conv(const SeqMatrix& A, const SeqMatrix& B) {
    SeqMatrix out;
    for (const auto& [ka, va] : A)
        for (const auto& [kb, vb] : B) {
            Lat k(ka.size());
            for (size_t i = 0; i < ka.size(); ++i) k[i] = ka[i] + kb[i];
            QMatrix prod = va * vb;
            auto it = out.find(k);
            if (it == out.end())
                out.emplace(std::move(k), std::move(prod));
            else
                it->second += prod;
        }
    seq_prune(out);
    return out;
}

SeqMatrix seq_upsample(const SeqMatrix& A, long long factor) {
    SeqMatrix out;
    for (const auto& [k, v] : A) {
        Lat j(k.size());
        for (size_t i = 0; i < k.size(); ++i) j[i] = k[i] * factor;
        out[j] = v;
    }
    return out;
}

SeqMatrix seq_add(const SeqMatrix& A, const SeqMatrix& B) {
    SeqMatrix out = A;
    for (const auto& [k, v] : B) {
        auto it = out.find(k);
        if (it == out.end())
            out[k] = v;
        else
            it->second += v;
    }
    seq_prune(out);
    return out;
}

SeqMatrix seq_scale(const SeqMatrix& A, const Q& s) {
    SeqMatrix out;
    if (s == 0) return out;
    for (const auto& [k, v] : A) out[k] = v * s;
    return out;
}

SeqMatrix seq_delta(int d, const QMatrix& v) {
    SeqMatrix out;
    out[Lat(size_t(d), 0)] = v;
    return out;
}

void seq_prune(SeqMatrix& A) {
    for (auto it = A.begin(); it != A.end();)
        it = it->second.is_zero() ? A.erase(it) : std::next(it);
}

SeqMatrix mask_iterate(const Mask& m, int n) {
    if (n < 1) throw AnalysisError("mask_iterate: n must be >= 1");
    SeqMatrix an = m.a;
    long long up = 2;
    for (int i = 2; i <= n; ++i) {
        an = seq_conv(seq_upsample(m.a, up), an);
        up *= 2;
    }
    return an;
}

std::vector<Lat> gamma_cosets(int d) {
    std::vector<Lat> out;
    for (long long bits = 0; bits < (1LL << d); ++bits) {
        Lat g(size_t(d), 0);
        for (int i = 0; i < d; ++i) g[size_t(i)] = (bits >> (d - 1 - i)) & 1;
        out.push_back(g);
    }
    return out;
}

}  // namespace ghsd
