#pragma once

#include <cstdint>
#include <vector>

namespace lpfc {

/// Dense GF(2) matrix with bit-packed rows. Sized for code-length scale
/// (hundreds of columns), which is all the decoder toolkit needs.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);

    /// rank over GF(2) by Gaussian elimination (on a copy)
    int rank() const;

    /// k = cols - rank independent vectors x with H*x = 0
    std::vector<std::vector<std::uint8_t>> nullspace_basis() const;

    /// H*x over GF(2); x.size() == cols
    std::vector<std::uint8_t> multiply(const std::vector<std::uint8_t>& x) const;

private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace lpfc
