#pragma once

#include "ghsd/analysis.hpp"
#include "ghsd/normalform.hpp"

namespace ghsd {

// Autocorrelation F_u(k) = sum_l u(k + l) u(l)^T of a generator column.
SeqMatrix autocorrelation(const SeqMatrix& u_col);

// One application of the transition operator, (T F)(j) = 2^d (a * F * a~)(2j),
// where a~(k) = a(-k)^T. Exact rational version.
SeqMatrix transfer_apply(const Mask& m, const SeqMatrix& F);

// Rational trace t_n = tr((T^n F)(0)); used by the oracle identity
// ||a_n * u||_2^2 = 2^{-dn} t_n.
Q transfer_trace(const Mask& m, const SeqMatrix& F0, int n);

// Exact squared l2 norm of a_n * u.
Q iterate_norm_sq(const Mask& m, const SeqMatrix& u_col, int n);

struct SmoothnessOptions {
    int sr_cap = 12;
    int max_iters = 200;
    double tol = 1e-10;
};

struct SmoothnessReport {
    int sr_order = 0;
    int m_used = 0;
    int generators = 0;
    std::vector<double> lambda_per_generator;
    double rho2 = 0.0;
    double sm2 = 0.0;
    double sminf_lower = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Power iteration on the transition operator restricted to the generator
// autocorrelations, in double precision with per-step trace normalization.
// lambda converged when the relative change stays below tol for 3 steps.
SmoothnessReport critical_sm2(const MaskFile& mf, const SmoothnessOptions& opt = {});

std::string smoothness_to_json(const SmoothnessReport& rep);

struct ConvergenceVerdict {
    std::string verdict;  // "convergent in C^m" or "inconclusive"
    int m = 0;
    double margin = 0.0;  // sminf_lower - m
};
ConvergenceVerdict convergence_verdict(const MaskFile& mf, const SmoothnessOptions& opt = {});

// Heuristic sup-norm ratio estimate of the restricted l_infinity radius,
// rho_est = 2^d ||a_{n+1} * u||_inf / ||a_n * u||_inf at the final step.
// Levels are capped at 20 (d = 1) or 9 (d >= 2).
double rho_inf_estimate(const MaskFile& mf, int levels, const SmoothnessOptions& opt = {});

}  // namespace ghsd
