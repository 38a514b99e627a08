#pragma once

#include "ghsd/mask.hpp"

#include <map>

namespace ghsd {

// Jet of a matrix-valued trigonometric germ at a base frequency, stored in
// normalized coordinates N_mu(f) = f^(mu)(0) / (-i)^|mu|. For sequences
// u evaluated at xi + pi*omega this gives the real numbers
// N_mu = sum_k u(k) (-1)^{k . omega} k^mu, so the whole calculus stays in Q.
struct Jet {
    int d = 1;
    int order = 0;
    int rows = 1;
    int cols = 1;
    std::map<MIdx, QMatrix> c;

    QMatrix at(const MIdx& mu) const;
    void set(const MIdx& mu, const QMatrix& v);
    bool vanishes_up_to(int k) const;  // all N_mu = 0 for |mu| <= k
};

// Jet of the 2pi-periodic symbol of a finitely supported sequence at xi = pi*omega.
Jet sequence_jet(const SeqMatrix& u, int d, int order, const Lat& omega);
Jet sequence_jet(const Mask& m, int order, const Lat& omega);

// Leibniz product. In N-coordinates the (-i) powers cancel, so the rule is the
// plain convolution N_mu(fg) = sum_{b <= mu} binom(mu, b) N_b(f) N_{mu-b}(g).
Jet germ_product(const Jet& f, const Jet& g);

Jet germ_add(const Jet& f, const Jet& g);
Jet germ_scale(const Jet& f, const Q& s);

// f(lambda .): N_mu scales by lambda^|mu|.
Jet germ_dilate(const Jet& f, const Q& lambda);
// f(L .) for a diagonal matrix L = diag(lambda_1..lambda_d).
Jet germ_dilate_axes(const Jet& f, const std::vector<Q>& lambda);

// Jet of (i xi)^nu e^{i tau . xi} at the origin:
// N_mu = (-1)^|mu| mu! tau^{mu-nu} / (mu-nu)! when nu <= mu, else 0.
Jet phase_monomial_jet(const MIdx& nu, const std::vector<Q>& tau, int order);

// Row germ [(i xi)^{nu_l} e^{i tau_l . xi}]_l for a Hermite type.
Jet hermite_target_jet(const HermiteType& type, int order);

// Multiplication by e^{i tau . xi} (phase shift).
Jet germ_phase(const Jet& f, const std::vector<Q>& tau);

// Reciprocal of a scalar germ with N_0 != 0, by the triangular Leibniz recursion.
Jet germ_reciprocal(const Jet& f);

// Truncate or zero-extend to a new order.
Jet germ_truncate(const Jet& f, int order);

// Printed-coefficient conversion: coefficient c_mu of (i xi)^mu <-> N-coordinates
// N_mu = (-1)^|mu| mu! c_mu.
Q coeff_to_njet(const MIdx& mu, const Q& c);
Q njet_to_coeff(const MIdx& mu, const Q& n);

}  // namespace ghsd
