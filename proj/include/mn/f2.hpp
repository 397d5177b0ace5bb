#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

namespace mn {

/// Dense bit matrix over F2, row-major 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * wpr_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        uint64_t& w = bits_[i * wpr_ + j / 64];
        uint64_t m = uint64_t(1) << (j % 64);
        w = v ? (w | m) : (w & ~m);
    }
    void flip(std::size_t i, std::size_t j) { bits_[i * wpr_ + j / 64] ^= uint64_t(1) << (j % 64); }

    const uint64_t* row(std::size_t i) const { return bits_.data() + i * wpr_; }
    uint64_t* row(std::size_t i) { return bits_.data() + i * wpr_; }
    std::size_t words_per_row() const { return wpr_; }

    void xor_rows(std::size_t dst, std::size_t src) {
        uint64_t* d = row(dst);
        const uint64_t* s = row(src);
        for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        uint64_t* pa = row(a);
        uint64_t* pb = row(b);
        for (std::size_t k = 0; k < wpr_; ++k) std::swap(pa[k], pb[k]);
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> bits_;
};

// y = x * M over F2 (x is 1 x rows, y is 1 x cols): XOR of rows selected by x.
std::vector<uint8_t> gf2_vecmat(const std::vector<uint8_t>& x, const BitMatrix& m);

std::size_t gf2_rank(BitMatrix a);

// Solve A X = B over F2 for square A; nullopt if A is singular.
std::optional<BitMatrix> gf2_solve(BitMatrix a, BitMatrix b);

BitMatrix gf2_transpose(const BitMatrix& a);

// C = A * B over F2.
BitMatrix gf2_matmul(const BitMatrix& a, const BitMatrix& b);

}  // namespace mn
