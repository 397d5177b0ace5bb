#include "mn/matcher.hpp"

#include <cmath>

namespace mn {

MatcherSpec::MatcherSpec(int h, int w) : h_(h), w_(w) {
    if (h <= 0) throw std::invalid_argument("MatcherSpec: h must be positive");
    if (w < 0 || w > h) throw std::invalid_argument("MatcherSpec: w outside [0,h]");
    // Pascal table C(n,k), n in [0,h], k in [0,w]; colex ranking only ever
    // needs k <= w.
    choose_.assign(std::size_t(h + 1) * (w + 1), 0);
    for (int n = 0; n <= h; ++n) {
        choose_[std::size_t(n) * (w + 1)] = 1;
        for (int k = 1; k <= std::min(n, w); ++k) {
            const mpz_class& up = choose_[std::size_t(n - 1) * (w + 1) + k];
            const mpz_class& upleft = choose_[std::size_t(n - 1) * (w + 1) + k - 1];
            choose_[std::size_t(n) * (w + 1) + k] = up + upleft;
        }
    }
    m_ = binom(h, w);
    k_ = std::max(0, int(mpz_sizeinbase(m_.get_mpz_t(), 2)) - 1);
}

const mpz_class& MatcherSpec::binom(int n, int k) const {
    static const mpz_class zero = 0;
    if (k < 0 || k > w_ || n < 0) return zero;
    if (k > n) return zero;
    return choose_[std::size_t(n) * (w_ + 1) + k];
}

double MatcherSpec::prior_llr() const {
    if (w_ == 0) return std::numeric_limits<double>::infinity();
    if (w_ == h_) return -std::numeric_limits<double>::infinity();
    double omega = double(w_) / double(h_);
    return std::log((1.0 - omega) / omega);
}

std::vector<uint8_t> MatcherSpec::match(const mpz_class& index) const {
    if (index < 0 || index >= m_) throw std::out_of_range("match: index outside [0, M)");
    std::vector<uint8_t> v(h_, 0);
    mpz_class rem = index;
    // Colex unranking: support {p_1 < ... < p_w} has rank sum C(p_t, t);
    // peel from the largest position down.
    int hi = h_ - 1;
    for (int t = w_; t >= 1; --t) {
        // largest p in [t-1, hi] with C(p,t) <= rem; binary search on the
        // monotone Pascal column.
        int lo = t - 1, up = hi;
        while (lo < up) {
            int mid = (lo + up + 1) / 2;
            if (binom(mid, t) <= rem)
                lo = mid;
            else
                up = mid - 1;
        }
        v[lo] = 1;
        rem -= binom(lo, t);
        hi = lo - 1;
    }
    return v;
}

mpz_class MatcherSpec::dematch(const std::vector<uint8_t>& v) const {
    if (int(v.size()) != h_) throw std::invalid_argument("dematch: length mismatch");
    mpz_class rank = 0;
    int t = 0;
    for (int p = 0; p < h_; ++p) {
        if (!v[p]) continue;
        ++t;
        if (t > w_) throw CompositionViolation("dematch: weight exceeds composition");
        rank += binom(p, t);
    }
    if (t != w_) throw CompositionViolation("dematch: weight below composition");
    return rank;
}

mpz_class MatcherSpec::bits_to_index(const std::vector<uint8_t>& bits) const {
    if (int(bits.size()) != k_) throw std::invalid_argument("bits_to_index: length mismatch");
    mpz_class x = 0;
    for (uint8_t b : bits) {
        x <<= 1;
        if (b) x |= 1;
    }
    return x;
}

std::vector<uint8_t> MatcherSpec::index_to_bits(const mpz_class& index) const {
    if (index < 0) throw std::out_of_range("index_to_bits: negative");
    mpz_class limit = mpz_class(1) << k_;
    if (index >= limit) throw std::out_of_range("index_to_bits: index exceeds 2^k");
    std::vector<uint8_t> bits(k_, 0);
    for (int i = 0; i < k_; ++i)
        bits[std::size_t(k_ - 1 - i)] = mpz_tstbit(index.get_mpz_t(), i) ? 1 : 0;
    return bits;
}

}  // namespace mn
