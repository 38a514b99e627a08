#pragma once

#include "ghsd/jets.hpp"

namespace ghsd {

// Laurent polynomial matrix together with its exact Laurent inverse
// (U * Uinv = Uinv * U = delta I, verified on construction).
struct LaurentPair {
    int d = 1;
    int r = 1;
    SeqMatrix U;
    SeqMatrix Uinv;
};

// Scalar sequence supported on the principal lattice {k >= 0, |k| <= m} whose
// jets at the origin match the given scalar germ up to order m. The
// Vandermonde system on that lattice is invertible, so the result is unique.
SeqMatrix realize_from_jets(const Jet& scalar, int m);

// Strongly invertible normalizer for a row germ u with u(0) != 0:
// u_hat * U_hat = [1, 0, ..., 0] + O(|xi|^{m+1}). The pivot component (largest
// |N_0| entry, ties to the smallest index) is permuted to the front first.
LaurentPair build_normalizer(const Jet& u_row, int m);

// U with u_hat * U_hat = v_hat + O(|xi|^{m+1}), built as U_u * U_v^{-1}.
LaurentPair general_normalizer(const Jet& u_row, const Jet& v_row, int m);

// a_new(xi) = U(2 xi)^{-1} a(xi) U(xi), i.e. (Uinv upsampled by 2) * a * U.
Mask transform_mask(const Mask& m, const LaurentPair& U);

// Row jet of the transformed filter: v = u * U.
Jet transform_filter(const Jet& u_row, const LaurentPair& U);

// Normal-form structure of a ring mask: entry (1,1) equals 1 at the origin,
// vanishes to order m on the odd cosets; entries (1,j), j >= 2, vanish to
// order m on every coset.
bool normalform_verify(const Mask& m, int order);

// Generator columns of B_{m,upsilon} in the original coordinates:
// U * (nabla^nu delta e_1) for all |nu| = m+1, plus the columns U e_j, j >= 2.
// Each returned sequence is r x 1.
std::vector<SeqMatrix> generator_set(const LaurentPair& U, int m);

// Membership test: jets of upsilon_hat u_hat vanish for |mu| <= m.
bool generator_membership(const Jet& filter, const SeqMatrix& u_col, int m);

// nabla^nu delta as a scalar sequence: (-1)^|j| prod_i binom(nu_i, j_i) on 0 <= j <= nu.
SeqMatrix nabla_delta(const MIdx& nu);

}  // namespace ghsd
