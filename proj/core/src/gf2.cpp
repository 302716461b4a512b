#include "lpfc/gf2.hpp"

#include <stdexcept>

namespace lpfc {

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Gf2Matrix: negative dimension");
    words_ = (cols + 63) / 64;
    bits_.assign(static_cast<std::size_t>(rows) * words_, 0);
}

bool Gf2Matrix::get(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(int r, int c, bool v) {
    auto& w = bits_[static_cast<std::size_t>(r) * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (v)
        w |= mask;
    else
        w &= ~mask;
}

namespace {

void xor_row(std::vector<std::uint64_t>& bits, int words, int dst, int src) {
    for (int w = 0; w < words; ++w) bits[static_cast<std::size_t>(dst) * words + w] ^= bits[static_cast<std::size_t>(src) * words + w];
}

} // namespace

int Gf2Matrix::rank() const {
    auto work = bits_;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i) {
            if ((work[static_cast<std::size_t>(i) * words_ + c / 64] >> (c % 64)) & 1u) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        for (int w = 0; w < words_; ++w)
            std::swap(work[static_cast<std::size_t>(piv) * words_ + w], work[static_cast<std::size_t>(r) * words_ + w]);
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            if ((work[static_cast<std::size_t>(i) * words_ + c / 64] >> (c % 64)) & 1u) xor_row(work, words_, i, r);
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<std::uint8_t>> Gf2Matrix::nullspace_basis() const {
    // reduce to RREF, tracking pivot columns
    auto work = bits_;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i) {
            if ((work[static_cast<std::size_t>(i) * words_ + c / 64] >> (c % 64)) & 1u) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        for (int w = 0; w < words_; ++w)
            std::swap(work[static_cast<std::size_t>(piv) * words_ + w], work[static_cast<std::size_t>(r) * words_ + w]);
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            if ((work[static_cast<std::size_t>(i) * words_ + c / 64] >> (c % 64)) & 1u) xor_row(work, words_, i, r);
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_col) is_pivot[c] = true;

    auto at = [&](int i, int c) -> bool {
        return (work[static_cast<std::size_t>(i) * words_ + c / 64] >> (c % 64)) & 1u;
    };

    std::vector<std::vector<std::uint8_t>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint8_t> v(cols_, 0);
        v[free] = 1;
        for (std::size_t p = 0; p < pivot_col.size(); ++p) {
            if (at(static_cast<int>(p), free)) v[pivot_col[p]] = 1;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::uint8_t> Gf2Matrix::multiply(const std::vector<std::uint8_t>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Gf2Matrix::multiply: size mismatch");
    std::vector<std::uint8_t> out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        unsigned acc = 0;
        for (int c = 0; c < cols_; ++c) acc ^= (get(i, c) & x[c]);
        out[i] = static_cast<std::uint8_t>(acc & 1u);
    }
    return out;
}

} // namespace lpfc
