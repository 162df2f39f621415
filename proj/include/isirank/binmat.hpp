#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "isirank/errors.hpp"

namespace isirank {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BinMat {
public:
    BinMat() = default;
    BinMat(std::size_t rows, std::size_t cols);
    static BinMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int get(std::size_t r, std::size_t c) const {
        return static_cast<int>((word(r, c / 64) >> (c % 64)) & 1);
    }
    void set(std::size_t r, std::size_t c, int v) {
        std::uint64_t& w = bits_[r * wpr_ + c / 64];
        const std::uint64_t m = std::uint64_t{1} << (c % 64);
        w = v ? (w | m) : (w & ~m);
    }

    void xor_row_into(std::size_t src, std::size_t dst);
    BinMat operator^(const BinMat& o) const;
    bool operator==(const BinMat& o) const;
    bool is_zero() const;

    /// True when columns cols-k .. cols-1 are all zero.
    bool tail_is_zero(std::size_t k) const;

    std::size_t rank() const;

    /// Reduced row echelon form; optionally reports pivot columns.
    BinMat rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

    /// Canonical basis of {x : Mx = 0}, one row per basis vector, ordered by
    /// ascending free-column index.
    BinMat right_kernel_basis() const;

    /// Canonical basis of {b : b^t M = 0}, one row per basis vector.
    BinMat left_kernel_basis() const;

    BinMat transposed() const;

    /// Row r packed as a little-endian word vector (cols <= 64*words).
    const std::uint64_t* row_words(std::size_t r) const { return &bits_[r * wpr_]; }
    std::uint64_t* row_words(std::size_t r) { return &bits_[r * wpr_]; }
    std::size_t words_per_row() const { return wpr_; }

    /// Row-major bits packed into a hex string (bit index r*cols+c, little-
    /// endian; printed as one big-endian hex integer, fixed width).
    std::string to_hex() const;
    static BinMat from_hex(std::size_t rows, std::size_t cols, const std::string& hex);

private:
    std::uint64_t word(std::size_t r, std::size_t wi) const { return bits_[r * wpr_ + wi]; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

std::size_t binary_rank(const BinMat& m);

} // namespace isirank
