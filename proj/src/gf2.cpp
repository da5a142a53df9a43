#include "tda/gf2.hpp"

namespace tda {

namespace {

// In-place elimination of a packed row-major bit matrix; returns rank.
// When `extra` is non-null it is reduced alongside and the function also
// reports whether `extra` ended up zero (= inside the row span).
std::size_t eliminate(std::vector<std::uint64_t>& bits, std::size_t rows, std::size_t cols,
                      std::size_t wpr, std::vector<std::uint64_t>* extra, bool* extra_in_span) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t mask = 1ULL << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows && !(bits[pivot * wpr + word] & mask)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < wpr; ++k) std::swap(bits[pivot * wpr + k], bits[rank * wpr + k]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && (bits[r * wpr + word] & mask))
                for (std::size_t k = 0; k < wpr; ++k) bits[r * wpr + k] ^= bits[rank * wpr + k];
        }
        if (extra && ((*extra)[word] & mask))
            for (std::size_t k = 0; k < wpr; ++k) (*extra)[k] ^= bits[rank * wpr + k];
        ++rank;
    }
    if (extra && extra_in_span) {
        bool zero = true;
        for (std::uint64_t w : *extra)
            if (w) zero = false;
        *extra_in_span = zero;
    }
    return rank;
}

}  // namespace

std::size_t Gf2Matrix::rank() const {
    std::vector<std::uint64_t> copy = bits_;
    return eliminate(copy, rows_, cols_, words_per_row_, nullptr, nullptr);
}

bool Gf2Matrix::row_span_contains(const std::vector<std::uint64_t>& target_row_bits) const {
    std::vector<std::uint64_t> copy = bits_;
    std::vector<std::uint64_t> target = target_row_bits;
    target.resize(words_per_row_, 0);
    bool in_span = false;
    eliminate(copy, rows_, cols_, words_per_row_, &target, &in_span);
    return in_span;
}

}  // namespace tda
