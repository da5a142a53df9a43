#pragma once

#include <cstdint>
#include <vector>

namespace tda {

// Dense bit matrix over the two-element field. Rows are packed into 64-bit
// words; elimination works row-wise. Sized for verification oracles (a few
// thousand rows/columns), not for the main reduction pipeline.
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1ULL;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = bits_[r * words_per_row_ + c / 64];
        const std::uint64_t mask = 1ULL << (c % 64);
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }
    void xor_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = &bits_[dst * words_per_row_];
        const std::uint64_t* s = &bits_[src * words_per_row_];
        for (std::size_t k = 0; k < words_per_row_; ++k) d[k] ^= s[k];
    }

    // Rank by Gaussian elimination (destructive on a copy).
    std::size_t rank() const;

    // True when `target` lies in the row span of this matrix.
    bool row_span_contains(const std::vector<std::uint64_t>& target_row_bits) const;

    std::size_t words_per_row() const { return words_per_row_; }

private:
    std::size_t rows_, cols_, words_per_row_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace tda
