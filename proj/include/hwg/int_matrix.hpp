#pragma once

#include <cstddef>
#include <vector>

#include "hwg/exact.hpp"

namespace hwg {

// Rectangular integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    // Throws std::invalid_argument on ragged input.
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>> &rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += f * row[src]
    void add_row(std::size_t dst, std::size_t src, const BigInt &f);
    void add_col(std::size_t dst, std::size_t src, const BigInt &f);

    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
    friend bool operator==(const IntMatrix &a, const IntMatrix &b) = default;

  private:
    std::size_t rows_, cols_;
    std::vector<BigInt> data_;
};

struct SmithForm {
    // Positive diagonal entries d_1 | d_2 | ... | d_rank.
    std::vector<BigInt> invariant_factors;
    std::size_t rank = 0;
    // cols - rank: the free rank of Z^cols / (row span).
    std::size_t free_rank = 0;
};

SmithForm smith_normal_form(IntMatrix m);

} // namespace hwg
