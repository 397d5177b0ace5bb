#pragma once

namespace mn {

/// Rate arithmetic for the DM / inner-code / overall-code chain.
/// All rates are in bits per (channel or code) bit.
struct RateTriple {
    double outer_rate;    // R_O in [0,1]
    double inner_rate;    // R_I = h0/n0
    double overall_rate;  // R = R_O * R_I
};

// H_b(omega) = -w log2 w - (1-w) log2 (1-w); endpoints map to 0.
// Throws std::domain_error outside [0,1].
double binary_entropy(double omega);

// Unique omega in [0, 0.5] with H_b(omega) = r, bisected to |d omega| <= 1e-12.
double binary_entropy_inverse(double r);

// log2 C(h, w) via lgamma; no overflow up to h ~ 1e6.
double log2_binomial(long long h, long long w);

// R_O for a constant-composition code of length h and weight w:
// h^-1 log2 C(h, w).
double outer_rate_finite(long long h, long long w);

// Resolve the rate triple for a target overall rate given the inner rate.
// Throws std::domain_error if target is not in (0, inner_rate].
RateTriple rates_for_target(double overall_rate, double inner_rate);

}  // namespace mn
