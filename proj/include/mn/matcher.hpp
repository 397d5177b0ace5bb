#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mn {

struct CompositionViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Constant-composition distribution matcher: exact bijection between
/// indices in [0, C(h,w)) and length-h binary vectors of Hamming weight w,
/// in colexicographic order. Immutable after construction; safe to share
/// across threads.
class MatcherSpec {
public:
    MatcherSpec(int h, int w);

    int h() const { return h_; }
    int w() const { return w_; }
    double omega() const { return double(w_) / double(h_); }
    const mpz_class& codebook_size() const { return m_; }  // M = C(h,w)
    int payload_bits() const { return k_; }                // k = floor(log2 M)

    // Delta = ln((1-omega)/omega); +inf for w = 0, -inf for w = h.
    double prior_llr() const;

    // index-th weight-w vector in colex order. Throws std::out_of_range.
    std::vector<uint8_t> match(const mpz_class& index) const;

    // Exact inverse of match. Throws CompositionViolation if weight(v) != w.
    mpz_class dematch(const std::vector<uint8_t>& v) const;

    // Big-endian bit vector of length payload_bits() <-> integer in [0, 2^k).
    mpz_class bits_to_index(const std::vector<uint8_t>& bits) const;
    std::vector<uint8_t> index_to_bits(const mpz_class& index) const;

    const mpz_class& binom(int n, int k) const;  // C(n,k) for n <= h, k <= w

private:
    int h_, w_, k_;
    mpz_class m_;
    std::vector<mpz_class> choose_;  // (h+1) x (w+1) Pascal table
};

}  // namespace mn
