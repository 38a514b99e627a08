#pragma once

#include "ghsd/rational.hpp"

#include <vector>

namespace ghsd {

// Multi-index in Z^d with nonnegative entries.
using MIdx = std::vector<int>;
// Lattice point in Z^d (entries may be negative).
using Lat = std::vector<long long>;

inline int mi_abs(const MIdx& mu) {
    int s = 0;
    for (int e : mu) s += e;
    return s;
}

inline bool mi_leq(const MIdx& b, const MIdx& mu) {
    for (size_t i = 0; i < mu.size(); ++i)
        if (b[i] > mu[i]) return false;
    return true;
}

inline MIdx mi_sub(const MIdx& mu, const MIdx& b) {
    MIdx r(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) r[i] = mu[i] - b[i];
    return r;
}

Q mi_factorial(const MIdx& mu);

// Product of per-coordinate binomials; zero unless b <= mu.
Q mi_binomial(const MIdx& mu, const MIdx& b);

// k^mu as an exact rational (k may be any rational vector).
Q power(const std::vector<Q>& k, const MIdx& mu);
Q power(const Lat& k, const MIdx& mu);

// All multi-indices with |mu| = k, lexicographic within the degree.
std::vector<MIdx> multi_indices_of_degree(int d, int k);

// All multi-indices with |mu| <= order, graded lexicographic.
std::vector<MIdx> multi_indices_up_to(int d, int order);

// All b with b <= mu, in graded lexicographic order.
std::vector<MIdx> multi_indices_below(const MIdx& mu);

}  // namespace ghsd
