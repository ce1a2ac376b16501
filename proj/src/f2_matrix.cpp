#include "hwg/f2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace hwg {

BitVector &BitVector::operator^=(const BitVector &o)
{
    if (o.size_ != size_) throw std::invalid_argument("BitVector: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool BitVector::any() const
{
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const
{
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVector::first_set() const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return size_;
}

std::size_t BitVector::last_set() const
{
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i]));
    return size_;
}

bool BitVector::dot(const BitVector &o) const
{
    if (o.size_ != size_) throw std::invalid_argument("BitVector: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
}

std::string BitVector::str() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

F2Matrix::F2Matrix(std::size_t n_rows, std::size_t n_cols)
    : n_cols_(n_cols), rows_(n_rows, BitVector(n_cols))
{
}

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

void F2Matrix::set_row(std::size_t r, BitVector v)
{
    if (v.size() != n_cols_) throw std::invalid_argument("F2Matrix: row length mismatch");
    rows_[r] = std::move(v);
}

F2Matrix F2Matrix::transpose() const
{
    F2Matrix t(n_cols_, n_rows());
    for (std::size_t r = 0; r < n_rows(); ++r)
        for (std::size_t c = 0; c < n_cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

BitVector F2Matrix::apply(const BitVector &v) const
{
    if (v.size() != n_cols_) throw std::invalid_argument("F2Matrix: vector length mismatch");
    BitVector out(n_rows());
    for (std::size_t r = 0; r < n_rows(); ++r)
        if (rows_[r].dot(v)) out.set(r);
    return out;
}

F2RankKernel f2_rank_kernel(const F2Matrix &m)
{
    const std::size_t cols = m.n_cols();
    std::vector<BitVector> rows;
    rows.reserve(m.n_rows());
    for (std::size_t r = 0; r < m.n_rows(); ++r) rows.push_back(m.row(r));

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i].get(c)) rows[i] ^= rows[rank];
        pivot_cols.push_back(c);
        ++rank;
    }

    F2RankKernel out;
    out.rank = rank;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVector k(cols);
        k.set(f);
        for (std::size_t i = 0; i < rank; ++i)
            if (rows[i].get(f)) k.set(pivot_cols[i]);
        out.kernel_basis.push_back(std::move(k));
    }
    return out;
}

std::size_t f2_rank(const F2Matrix &m) { return f2_rank_kernel(m).rank; }

bool F2Reducer::insert(BitVector v)
{
    if (v.size() != dim_) throw std::invalid_argument("F2Reducer: length mismatch");
    v = reduce(std::move(v));
    if (!v.any()) return false;
    const std::size_t p = v.last_set();
    // Keep the basis fully reduced: clear p from every existing row.
    for (auto &b : basis_)
        if (b.get(p)) b ^= v;
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

BitVector F2Reducer::reduce(BitVector v) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (v.get(pivots_[i])) v ^= basis_[i];
    return v;
}

bool F2Reducer::is_pivot(std::size_t coord) const
{
    return std::find(pivots_.begin(), pivots_.end(), coord) != pivots_.end();
}

} // namespace hwg
