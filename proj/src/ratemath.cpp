#include "mn/ratemath.hpp"

#include <cmath>
#include <stdexcept>

namespace mn {

double binary_entropy(double omega) {
    if (!(omega >= 0.0 && omega <= 1.0))
        throw std::domain_error("binary_entropy: omega outside [0,1]");
    if (omega == 0.0 || omega == 1.0) return 0.0;
    return -omega * std::log2(omega) - (1.0 - omega) * std::log2(1.0 - omega);
}

double binary_entropy_inverse(double r) {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::domain_error("binary_entropy_inverse: r outside [0,1]");
    if (r == 0.0) return 0.0;
    if (r == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    // H_b is strictly increasing on [0, 0.5]
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < r)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double log2_binomial(long long h, long long w) {
    if (w < 0 || w > h) throw std::domain_error("log2_binomial: w outside [0,h]");
    static const double kLn2 = std::log(2.0);
    return (std::lgamma(double(h) + 1.0) - std::lgamma(double(w) + 1.0) -
            std::lgamma(double(h - w) + 1.0)) /
           kLn2;
}

double outer_rate_finite(long long h, long long w) {
    if (h <= 0) throw std::domain_error("outer_rate_finite: h must be positive");
    return log2_binomial(h, w) / double(h);
}

RateTriple rates_for_target(double overall_rate, double inner_rate) {
    if (!(inner_rate > 0.0 && inner_rate < 1.0))
        throw std::domain_error("rates_for_target: inner rate outside (0,1)");
    // R = R_I is the asymptotic limit (R_O = 1, omega = 0.5) and is a valid
    // analysis point; anything above R_I is unreachable.
    if (!(overall_rate > 0.0 && overall_rate <= inner_rate))
        throw std::domain_error("rates_for_target: overall rate outside (0, R_I]");
    return RateTriple{overall_rate / inner_rate, inner_rate, overall_rate};
}

}  // namespace mn
