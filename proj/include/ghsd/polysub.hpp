#pragma once

#include "ghsd/jets.hpp"

#include <iosfwd>

namespace ghsd {

// Polynomial over Q in d variables, coefficients indexed by monomial.
struct Poly {
    int d = 1;
    std::map<MIdx, Q> coef;

    Q eval(const std::vector<Q>& x) const;
    Poly derivative(const MIdx& mu) const;
    int degree() const;
    Poly operator+(const Poly& o) const;
    Poly operator*(const Q& s) const;
};

Poly monomial(const MIdx& mu, const Q& c);

// Row of r polynomials, used as exact polynomial sequence data p(k).
struct VectorPoly {
    int d = 1;
    std::vector<Poly> comp;

    std::vector<Q> eval(const std::vector<Q>& x) const;
};

// Discrete convolution of a polynomial with a finitely supported sequence whose
// jets are given: (p * v)(x) = sum_mu ((-1)^|mu| / mu!) p^(mu)(x) N_mu(v).
// Exact whenever deg p <= jet order of v.
Poly conv_poly(const Poly& p, const Jet& v, int component);

// p_mu = ((.)^mu / mu!) * upsilon, one polynomial per filter component.
VectorPoly pmu_poly(const MIdx& mu, const Jet& filter);

// Matrix-valued grid data w: Z^d -> Q^{rows x cols} at a refinement level.
struct DataGrid {
    int d = 1;
    int rows = 1;
    int cols = 1;
    int level = 0;
    std::map<Lat, QMatrix> v;
};

DataGrid delta_data(int d, int r);  // w_0 = delta I_r

// One application of the subdivision operator, (S_a w)(j) = 2^d sum_k w(k) a(j - 2k).
DataGrid subdivide(const Mask& m, const DataGrid& w);

// One normalized refinement step w_n = (S_a w_{n-1} D^{n-1}) D^{-n} with
// D = diag(2^{-|nu_l|}); n is taken from w.level + 1.
DataGrid refine_step(const Mask& m, const HermiteType& type, const DataGrid& w);
DataGrid refine(const Mask& m, const HermiteType& type, const DataGrid& w0, int levels);

// Refined delta data; column l of w_n(k) approximates phi^(nu_l) at 2^{-n}(k + tau_l).
DataGrid basis_samples(const Mask& m, const HermiteType& type, int level);

// Exact eigen-relation (S_a p_mu)(j) = 2^{-|mu|} p_mu(j) on the window
// [-(|mu|+2), |mu|+2]^d. The filter must carry jets to order >= |mu|.
bool eigenpoly_check(const Mask& m, const HermiteType& type, const Jet& filter, const MIdx& mu);

// Starting from w_0 = (p * upsilon)|_{Z^d}, refined data must reproduce
// w_n(k) e_l = p^(nu_l)(2^{-n}(k + tau_l)) exactly. Verified on a window
// whose backward orbit stays inside the computed region.
bool poly_interp_check(const Mask& m, const HermiteType& type, const Jet& filter, const Poly& p,
                       int levels);

// CSV export: component,position_1..d,value_exact,value_float. Matrix data
// flattens component (i,l) to (i-1) r + l; positions are 2^{-level}(k + tau_l).
void export_refinement(std::ostream& os, const DataGrid& w, const HermiteType& type);

}  // namespace ghsd
