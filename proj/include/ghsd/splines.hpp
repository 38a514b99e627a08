#pragma once

#include "ghsd/mask.hpp"

#include <string>
#include <vector>

namespace ghsd {

// Univariate piecewise polynomial with integer knots.  piece[i] stores the
// ascending coefficients, in the global coordinate, of the polynomial valid
// on (lo+i, lo+i+1]; evaluation outside (lo, hi] yields 0.
struct PiecewisePoly {
    long long lo = 0;
    long long hi = 0;
    std::vector<std::vector<Q>> piece;

    Q eval(const Q& x) const;
    PiecewisePoly derivative(int order = 1) const;
    int degree() const;  // max piece degree, -1 when identically zero
    bool is_zero() const;
};

using SplineVector = std::vector<PiecewisePoly>;

// Lazily tensored multivariate spline: one univariate factor per axis.
struct TensorSpline {
    std::vector<PiecewisePoly> factor;
    Q eval(const std::vector<Q>& x) const;
    Q deriv_eval(const MIdx& order, const std::vector<Q>& x) const;
};

// Cardinal B-spline B_n, support [0, n], degree n-1.  B_1 = indicator of (0,1].
PiecewisePoly bspline(int n);

// Hermite interpolation basis theta_0..theta_m on [-1,1]:
// theta_l^(j)(k) = delta(l-j) delta(k) for 0 <= j <= m, k integer.
SplineVector hermite_theta(int m);

// Tensor fixture f_mu = theta_{mu_1} x ... x theta_{mu_d} with
// D^nu f_mu(k) = delta(mu-nu) delta(k) for |nu| <= m.
TensorSpline f_mu_fixture(const MIdx& mu, int m);

struct Example12 {
    SplineVector phi;
    HermiteType type;
};

// Compactly supported generalized Hermite interpolant with r = (m+1)N
// components: derivative orders cycle through 0..m at the shifts j/N.
Example12 example12_interpolant(int m, int N);

// a(k) column l = 2^{-1-|nu_l|} phi^(nu_l)((k + tau_l)/2), evaluated exactly.
MaskFile interpolant_to_mask(const SplineVector& phi, const HermiteType& type);

struct SplineResidual {
    Q value;  // 0 when the refinement identity holds on every piece
    Q x;
    int comp = 0;
};

// Probes phi(x) - 2 sum_k a(k) phi(2x - k) at degree+1 interior rational
// points per half-integer piece, enough to certify the identity exactly.
SplineResidual refinement_residual(const SplineVector& phi, const Mask& m);

// Printed closed-form basis functions; params feed the free parameter of the
// parameterized families (defaults to 0 when omitted).
SplineVector registry_spline(const std::string& id, const std::vector<Q>& params = {});

// JSON dump (breakpoints plus rational coefficient strings) for plotting.
std::string spline_to_json(const SplineVector& phi);

}  // namespace ghsd
