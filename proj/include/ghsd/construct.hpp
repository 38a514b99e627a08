#pragma once

#include "ghsd/analysis.hpp"
#include "ghsd/normalform.hpp"

#include <string>
#include <vector>

namespace ghsd {

// Integer lattice transform, stored as rows: (E k)_i = sum_j E[i][j] k_j.
using IMat = std::vector<std::vector<int>>;

// B-spline mask of order n (d = 1, r = 1): a(k) = binom(n, k) / 2^n on k = 0..n.
Mask bspline_mask(int n);

// Tensor product: dimensions add, multiplicities multiply. The coefficient at
// the concatenated point (j, k) is the Kronecker product A(j) (x) B(k).
Mask tensor_mask(const Mask& A, const Mask& B);

// Coset vectorization with a diagonal dilation N = diag(n_1..n_d). The cosets
// Gamma_N = (N [0,1)^d) cap Z^d are enumerated lexicographically, so gamma_1 = 0.
// Block (j, k) of a(n) is A(N n - 2 gamma_j + gamma_k); the companion filter
// has component (j, beta) = e^{i (N^{-1} gamma_j) . xi} [upsilon_A(N^{-T} xi)]_beta,
// which is a matching filter of the vectorized mask of the same order.
struct VectorizeResult {
    Mask mask;
    Jet filter;
};
// order = 0 lets the sum-rule search (capped at `cap`) pick the filter order.
VectorizeResult vectorize_mask(const Mask& A, const std::vector<long long>& Ndiag, int order = 0,
                               int cap = 12);

// Similarity transform onto generalized Hermite form: with s the sum-rule order
// of the ring mask, builds U with upsilon_ring * U = [(i xi)^{nu_1}, ...] + O(|xi|^s)
// and returns the transformed mask. Requires s >= max |nu_l| + 1.
Mask hermite_convert(const Mask& ring, const HermiteType& type, int cap = 12);

// A = (x)^d B-spline(m+2) with m = max |nu_l|, N = diag(r, 1, .., 1), then
// vectorize and hermite-convert. Output carries the requested type.
MaskFile existence_pipeline(const HermiteType& type);

// Symmetry groups on the lattice: "Z2" (d = 1, {1, -1}), "D4" and "D6" (d = 2).
std::vector<IMat> symmetry_group(const std::string& name, int d);

// Exact representation matrix: S_{j,l} = coefficient of xi^{nu_j} in (E^T xi)^{nu_l}.
// Throws if the type has repeated entries (the distribution over equal monomials
// is ambiguous) or the monomial span is not closed under E.
QMatrix symmetry_matrix(const IMat& E, const HermiteType& type);

// Orbit completion about the center c: a(E(k - c) + c) = S_E a(k) S_E^{-1}.
// Conflicting assignments along different orbit routes raise an error naming
// the clashing point.
Mask symmetry_complete(const Mask& reps, const HermiteType& type, const SymmetryDescriptor& sym);

struct SymmetryVerdict {
    bool ok = true;
    std::string witness;  // offending (E, k) when ok is false
};
// Verifies the centered orbit relation for every group element on the full
// support. Only uniform translation types are supported.
SymmetryVerdict symmetry_check(const MaskFile& mf);

}  // namespace ghsd
