#include "isirank/binmat.hpp"

#include <algorithm>
#include <cassert>

namespace isirank {

BinMat::BinMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

BinMat BinMat::identity(std::size_t n) {
    BinMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void BinMat::xor_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t w = 0; w < wpr_; ++w) bits_[dst * wpr_ + w] ^= bits_[src * wpr_ + w];
}

BinMat BinMat::operator^(const BinMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("xor of mismatched shapes");
    BinMat r = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] ^= o.bits_[i];
    return r;
}

bool BinMat::operator==(const BinMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

bool BinMat::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BinMat::tail_is_zero(std::size_t k) const {
    if (k > cols_) return is_zero();
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = cols_ - k; c < cols_; ++c)
            if (get(r, c)) return false;
    return true;
}

std::size_t BinMat::rank() const {
    BinMat m = *this;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
        std::size_t p = rk;
        while (p < rows_ && !m.get(p, c)) ++p;
        if (p == rows_) continue;
        if (p != rk)
            for (std::size_t w = 0; w < wpr_; ++w)
                std::swap(m.bits_[rk * wpr_ + w], m.bits_[p * wpr_ + w]);
        for (std::size_t r = rk + 1; r < rows_; ++r)
            if (m.get(r, c)) m.xor_row_into(rk, r);
        ++rk;
    }
    return rk;
}

BinMat BinMat::rref(std::vector<std::size_t>* pivot_cols) const {
    BinMat m = *this;
    if (pivot_cols) pivot_cols->clear();
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
        std::size_t p = rk;
        while (p < rows_ && !m.get(p, c)) ++p;
        if (p == rows_) continue;
        if (p != rk)
            for (std::size_t w = 0; w < wpr_; ++w)
                std::swap(m.bits_[rk * wpr_ + w], m.bits_[p * wpr_ + w]);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != rk && m.get(r, c)) m.xor_row_into(rk, r);
        if (pivot_cols) pivot_cols->push_back(c);
        ++rk;
    }
    return m;
}

BinMat BinMat::right_kernel_basis() const {
    std::vector<std::size_t> pivots;
    BinMat r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    BinMat basis(free_cols.size(), cols_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis.set(k, fc, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (r.get(i, fc)) basis.set(k, pivots[i], 1);
    }
    return basis;
}

BinMat BinMat::left_kernel_basis() const {
    return transposed().right_kernel_basis();
}

BinMat BinMat::transposed() const {
    BinMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, 1);
    return t;
}

std::string BinMat::to_hex() const {
    const std::size_t nbits = rows_ * cols_;
    const std::size_t nnib = std::max<std::size_t>(1, (nbits + 3) / 4);
    std::string s(nnib, '0');
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!get(r, c)) continue;
            const std::size_t b = r * cols_ + c;
            const std::size_t nib = b / 4;
            char& ch = s[nnib - 1 - nib];
            int v = (ch <= '9') ? ch - '0' : ch - 'a' + 10;
            v |= 1 << (b % 4);
            ch = v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
        }
    return s;
}

BinMat BinMat::from_hex(std::size_t rows, std::size_t cols, const std::string& hex) {
    const std::size_t nbits = rows * cols;
    const std::size_t nnib = std::max<std::size_t>(1, (nbits + 3) / 4);
    if (hex.size() != nnib) throw ParseError("codeword hex width mismatch");
    BinMat m(rows, cols);
    for (std::size_t i = 0; i < nnib; ++i) {
        const char ch = hex[nnib - 1 - i];
        int v;
        if (ch >= '0' && ch <= '9') v = ch - '0';
        else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
        else throw ParseError("invalid hex digit in codeword");
        for (int j = 0; j < 4; ++j) {
            const std::size_t b = i * 4 + j;
            if (b >= nbits) {
                if ((v >> j) & 1) throw ParseError("stray bits beyond matrix size");
                continue;
            }
            if ((v >> j) & 1) m.set(b / cols, b % cols, 1);
        }
    }
    return m;
}

std::size_t binary_rank(const BinMat& m) { return m.rank(); }

} // namespace isirank
