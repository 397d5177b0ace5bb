#include "mn/f2.hpp"

#include <stdexcept>

namespace mn {

std::vector<uint8_t> gf2_vecmat(const std::vector<uint8_t>& x, const BitMatrix& m) {
    if (x.size() != m.rows()) throw std::invalid_argument("gf2_vecmat: size mismatch");
    std::size_t wpr = m.words_per_row();
    std::vector<uint64_t> acc(wpr, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        const uint64_t* r = m.row(i);
        for (std::size_t k = 0; k < wpr; ++k) acc[k] ^= r[k];
    }
    std::vector<uint8_t> y(m.cols());
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = (acc[j / 64] >> (j % 64)) & 1u;
    return y;
}

std::size_t gf2_rank(BitMatrix a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && !a.get(pivot, col)) ++pivot;
        if (pivot == a.rows()) continue;
        a.swap_rows(rank, pivot);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != rank && a.get(i, col)) a.xor_rows(i, rank);
        ++rank;
    }
    return rank;
}

std::optional<BitMatrix> gf2_solve(BitMatrix a, BitMatrix b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw std::invalid_argument("gf2_solve: dimension mismatch");
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !a.get(pivot, col)) ++pivot;
        if (pivot == n) return std::nullopt;
        a.swap_rows(col, pivot);
        b.swap_rows(col, pivot);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != col && a.get(i, col)) {
                a.xor_rows(i, col);
                b.xor_rows(i, col);
            }
        }
    }
    return b;
}

BitMatrix gf2_transpose(const BitMatrix& a) {
    BitMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) t.set(j, i, true);
    return t;
}

BitMatrix gf2_matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("gf2_matmul: dimension mismatch");
    BitMatrix c(a.rows(), b.cols());
    std::size_t wpr = b.words_per_row();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        uint64_t* ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) continue;
            const uint64_t* bk = b.row(k);
            for (std::size_t w = 0; w < wpr; ++w) ci[w] ^= bk[w];
        }
    }
    return c;
}

}  // namespace mn
