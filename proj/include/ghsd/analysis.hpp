#pragma once

#include "ghsd/jets.hpp"

#include <optional>
#include <tuple>

namespace ghsd {

// Left eigenvector of the symbol at zero for eigenvalue 1, first entry
// normalized to 1. Throws AnalysisError if the eigenvalue is absent, not
// geometrically simple, or the eigenvector's first entry vanishes.
std::vector<Q> left_unit_eigenvector(const Mask& m);

struct SpectralVerdict {
    bool ok = false;           // simple eigenvalue 1 and no eigenvalue 2^{-k}, k = 1..mdeg
    bool one_simple = false;
    bool pow_free = false;
    bool warning_band = false; // a float eigenvalue sits within 1e-9 of some 2^{-k}
                               // that the exact rank test rules out
    std::vector<std::pair<double, double>> eigenvalues;
};
SpectralVerdict spectral_condition(const Mask& m, int mdeg);

// Pinned value for a filter jet entry: component l (0-based) of N_mu.
struct FilterPin {
    MIdx mu;
    int component;
    Q value;
};

struct FilterOptions {
    bool with_omega = true;  // include the vanishing conditions on the odd cosets
    std::vector<FilterPin> pins;
};

struct FilterResult {
    Jet jets;  // 1 x r row jet with N_mu for |mu| <= order - 1
    int order = 0;
    bool unique = true;
    std::vector<int> resonant_degrees;  // degrees k with det(I - 2^k a^(0)) = 0
};

// Solve the order-s filter constraint system exactly. The unknown jets N_mu,
// 1 <= |mu| <= s-1, satisfy the refinement identity on the even coset, the
// vanishing conditions on the odd cosets (when requested), and any pins.
// N_0 is the left unit eigenvector. Returns nullopt if inconsistent. At
// degrees where I - 2^k a^(0) is invertible and no pins apply, the solution
// coincides with the usual one-step recursion.
std::optional<FilterResult> try_filter(const Mask& m, int s, const FilterOptions& opt);

// Order-`order` matching filter (even-coset identity only). Throws
// AnalysisError mentioning the resonant eigenvalue if no filter exists.
FilterResult matching_filter(const Mask& m, int order);

struct SumRuleResult {
    int order = 0;  // largest s <= cap with order-s sum rules
    std::optional<FilterResult> filter;
};
SumRuleResult sum_rule_order(const Mask& m, int cap);

struct HermiteVerdict {
    bool ok = false;
    int max_order = 0;  // largest solvable order <= cap with type pins
    std::optional<FilterResult> filter;
};
HermiteVerdict is_generalized_hermite(const Mask& m, const HermiteType& type, int cap);

// Largest s <= cap such that the phase-monomial row for (type.nu, type.tau)
// satisfies all order-s sum-rule conditions. Zero if none.
int lpm_order(const Mask& m, const HermiteType& type, int cap);

struct ThetaResult {
    std::vector<int> theta;  // 0-based component indices
    std::vector<Lat> beta;
    bool ambiguous = false;
};
// Pairing theta(l) with nu_{theta(l)} = nu_l and beta_l = 2 tau_l - tau_{theta(l)}
// integral; smallest admissible index wins. Throws if some component has none.
ThetaResult derive_theta(const HermiteType& type);

struct InterpVerdict {
    bool ok = false;
    bool applicable = false;
    std::string detail;
};
InterpVerdict interpolatory_check(const Mask& m, const HermiteType& type);

struct ClassificationReport {
    int sr_order = 0;
    int lpm_order = 0;
    bool hermite_type_ok = false;
    bool interpolatory_ok = false;
    bool spectral_ok = false;
    std::optional<FilterResult> filter;
};
ClassificationReport classify(const MaskFile& mf, int cap);
std::string report_to_json(const ClassificationReport& rep, int d, int r);

}  // namespace ghsd
