#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hwg {

// Packed vector over F_2.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true)
    {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector &operator^=(const BitVector &o);
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }

    bool any() const;
    std::size_t count() const;
    // Index of the lowest set bit, or size() if none.
    std::size_t first_set() const;
    // Index of the highest set bit, or size() if none.
    std::size_t last_set() const;
    // Parity of the bitwise AND with o.
    bool dot(const BitVector &o) const;

    friend bool operator==(const BitVector &a, const BitVector &b)
    {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    std::string str() const;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense matrix over F_2 stored as packed rows. Acts on column vectors
// of length n_cols.
class F2Matrix {
  public:
    F2Matrix(std::size_t n_rows, std::size_t n_cols);

    static F2Matrix identity(std::size_t n);

    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_cols() const { return n_cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

    const BitVector &row(std::size_t r) const { return rows_[r]; }
    // Throws std::invalid_argument if the length differs from n_cols.
    void set_row(std::size_t r, BitVector v);

    F2Matrix transpose() const;
    BitVector apply(const BitVector &v) const;

  private:
    std::size_t n_cols_;
    std::vector<BitVector> rows_;
};

struct F2RankKernel {
    std::size_t rank = 0;
    std::vector<BitVector> kernel_basis;
};

// Plain Gaussian elimination; kernel basis indexed by free columns.
F2RankKernel f2_rank_kernel(const F2Matrix &m);

std::size_t f2_rank(const F2Matrix &m);

// Reduced row-echelon basis of span(rows) where each pivot is the HIGHEST
// set bit of its row; reduce() returns the canonical representative
// of a vector modulo the span, supported on non-pivot coordinates only.
class F2Reducer {
  public:
    explicit F2Reducer(std::size_t dim) : dim_(dim) {}

    // Returns false if v was already in the span.
    bool insert(BitVector v);
    BitVector reduce(BitVector v) const;

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    bool is_pivot(std::size_t coord) const;

  private:
    std::size_t dim_;
    std::vector<BitVector> basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace hwg
