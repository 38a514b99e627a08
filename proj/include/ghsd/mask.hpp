#pragma once

#include "ghsd/multiindex.hpp"
#include "ghsd/qmatrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ghsd {

// Finitely supported sequence of r x c rational matrices on Z^d.
using SeqMatrix = std::map<Lat, QMatrix>;

// Hermite type: differentiation orders nu_l plus translations tau_l.
// nu_1 must be the zero multi-index.
struct HermiteType {
    std::vector<MIdx> nu;
    std::vector<std::vector<Q>> tau;  // empty means tau = 0 for all components

    int size() const { return int(nu.size()); }
    int max_deg() const;
    std::vector<Q> tau_of(int l) const;  // 0-based component index
    bool tau_all_zero() const;
};

struct SymmetryDescriptor {
    std::string group;       // "Z2", "D4" or "D6"
    std::vector<Q> center;   // length d
    bool representatives = false;
};

// Matrix mask a: Z^d -> Q^{r x r} with finite support.
struct Mask {
    int d = 1;
    int r = 1;
    SeqMatrix a;

    QMatrix at(const Lat& k) const;
    void set(const Lat& k, const QMatrix& v);  // drops exact zeros
    // Componentwise support bounds [lo, hi]; throws if the mask is empty.
    void fsupp(Lat& lo, Lat& hi) const;
    // Coset submask a^{[gamma]}(k) = a(gamma + 2k) for gamma in {0,1}^d.
    SeqMatrix coset(const Lat& gamma) const;
    QMatrix symbol_at_zero() const;  // sum_k a(k)
    bool operator==(const Mask& o) const { return d == o.d && r == o.r && a == o.a; }
};

struct MaskFile {
    Mask mask;
    HermiteType type;
    std::optional<SymmetryDescriptor> symmetry;
};

// JSON round trip. parse_mask validates the schema and throws ParseError on
// malformed rationals, matrix size mismatches, nu_1 != 0 or duplicate lattice keys.
MaskFile parse_mask(const std::string& json_text);
std::string serialize_mask(const MaskFile& mf);

// Sequence utilities shared by multiple modules.
SeqMatrix seq_conv(const SeqMatrix& A, const SeqMatrix& B);
SeqMatrix seq_upsample(const SeqMatrix& A, long long factor);
SeqMatrix seq_add(const SeqMatrix& A, const SeqMatrix& B);
SeqMatrix seq_scale(const SeqMatrix& A, const Q& s);
SeqMatrix seq_delta(int d, const QMatrix& v);
void seq_prune(SeqMatrix& A);

// n-fold mask iterate a_n with a_1 = a, a_{n+1} = (a_n upsampled by 2) * a.
SeqMatrix mask_iterate(const Mask& m, int n);

std::vector<Lat> gamma_cosets(int d);  // {0,1}^d in lexicographic order

}  // namespace ghsd
