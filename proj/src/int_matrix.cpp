#include "hwg/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hwg {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>> &rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const BigInt &f)
{
    if (f == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += f * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const BigInt &f)
{
    if (f == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += f * (*this)(r, src);
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

SmithForm smith_normal_form(IntMatrix m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t s = 0;
    bool exhausted = false;
    for (; s < rows && s < cols && !exhausted; ++s) {
        for (;;) {
            // Smallest nonzero |entry| in the lower-right block becomes the pivot.
            bool found = false;
            std::size_t pr = s, pc = s;
            BigInt best;
            for (std::size_t r = s; r < rows; ++r)
                for (std::size_t c = s; c < cols; ++c) {
                    if (m(r, c) == 0) continue;
                    BigInt a = abs(m(r, c));
                    if (!found || a < best) {
                        best = a;
                        pr = r;
                        pc = c;
                        found = true;
                    }
                }
            if (!found) {
                exhausted = true;
                break;
            }
            m.swap_rows(s, pr);
            m.swap_cols(s, pc);

            bool clean = true;
            for (std::size_t r = s + 1; r < rows; ++r) {
                if (m(r, s) == 0) continue;
                m.add_row(r, s, -(m(r, s) / m(s, s)));
                if (m(r, s) != 0) clean = false;
            }
            for (std::size_t c = s + 1; c < cols; ++c) {
                if (m(s, c) == 0) continue;
                m.add_col(c, s, -(m(s, c) / m(s, s)));
                if (m(s, c) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the block; otherwise fold the
            // offending row in and repeat.
            std::size_t bad = rows;
            for (std::size_t r = s + 1; r < rows && bad == rows; ++r)
                for (std::size_t c = s + 1; c < cols; ++c)
                    if (m(r, c) % m(s, s) != 0) {
                        bad = r;
                        break;
                    }
            if (bad == rows) break;
            m.add_row(s, bad, 1);
        }
    }
    if (exhausted) --s;
    SmithForm out;
    for (std::size_t i = 0; i < s; ++i) out.invariant_factors.push_back(abs(m(i, i)));
    out.rank = out.invariant_factors.size();
    out.free_rank = cols - out.rank;
    return out;
}

} // namespace hwg
