#include "hwg/exact.hpp"

#include <stdexcept>
#include <utility>

namespace hwg {

BigInt binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt pow2(std::size_t k)
{
    BigInt r = 1;
    r <<= k;
    return r;
}

std::string to_string(const BigInt &v) { return v.str(); }

std::string to_string(const Rational &v)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

long long mod_floor(const BigInt &v, long long m)
{
    if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
    BigInt r = v % m;
    if (r < 0) r += m;
    return r.convert_to<long long>();
}

namespace {

// Reduces m (and the optional right-hand side) to row echelon form in place.
// Returns the pivot column of each pivot row.
std::vector<std::size_t> echelon(RationalMatrix &m, std::vector<Rational> *rhs)
{
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        const Rational inv = 1 / m[r][c];
        for (auto &e : m[r]) e *= inv;
        if (rhs) (*rhs)[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            if (rhs) (*rhs)[i] -= f * (*rhs)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(RationalMatrix m) { return echelon(m, nullptr).size(); }

std::optional<std::vector<Rational>> solve_linear(RationalMatrix a,
                                                  std::vector<Rational> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("solve_linear: row count mismatch");
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    const auto pivots = echelon(a, &b);
    for (std::size_t i = pivots.size(); i < b.size(); ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> v(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = b[i];
    return v;
}

} // namespace hwg
