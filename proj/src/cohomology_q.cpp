#include "hwg/cohomology_q.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "hwg/cohomology_f2.hpp"

namespace hwg {

Character::Character(std::vector<int> eps) : eps_(std::move(eps))
{
    for (int v : eps_)
        if (v != 1 && v != -1) throw std::invalid_argument("Character: entries must be +-1");
}

Character Character::e(int n, std::uint32_t a)
{
    std::vector<int> eps(n, 1);
    for (int k = 0; k < n; ++k)
        if (a & (std::uint32_t{1} << k)) eps[k] = -1;
    return Character(std::move(eps));
}

int Character::weight() const { return static_cast<int>(std::count(eps_.begin(), eps_.end(), -1)); }

Character Character::operator-() const
{
    Character r = *this;
    for (auto &v : r.eps_) v = -v;
    return r;
}

Character operator*(const Character &a, const Character &b)
{
    if (a.rank() != b.rank()) throw std::invalid_argument("Character: rank mismatch");
    Character r = a;
    for (std::size_t k = 0; k < r.eps_.size(); ++k) r.eps_[k] *= b.eps_[k];
    return r;
}

std::string Character::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < eps_.size(); ++k) os << (k ? "," : "") << (eps_[k] > 0 ? "+1" : "-1");
    os << ')';
    return os.str();
}

Character wedge_character(int n, std::uint32_t a)
{
    const Character ea = Character::e(n, a);
    return std::popcount(a) % 2 ? -ea : ea;
}

int h0(const Character &eps) { return eps.is_trivial() ? 1 : 0; }

int h1(const Character &eps) { return eps.is_trivial() ? 0 : eps.weight() - 1; }

int h0_oracle(const Character &eps)
{
    // Invariants: m with (eps_k - 1) m = 0 for every generator.
    const int n = eps.rank();
    RationalMatrix a(n, std::vector<Rational>(1));
    for (int k = 0; k < n; ++k) a[k][0] = eps.eps()[k] - 1;
    return 1 - static_cast<int>(rank(a));
}

int h1_oracle(const Character &eps)
{
    // A crossed homomorphism on *Z_2 is free on its generator values c_k,
    // subject to c(x_k^2) = (1 + eps_k) c_k = 0.
    const int n = eps.rank();
    RationalMatrix constraints(n, std::vector<Rational>(n));
    for (int k = 0; k < n; ++k) constraints[k][k] = 1 + eps.eps()[k];
    const int cocycles = n - static_cast<int>(rank(constraints));

    // Principal crossed homomorphisms c_k = (eps_k - 1) m.
    RationalMatrix principal(n, std::vector<Rational>(1));
    for (int k = 0; k < n; ++k) principal[k][0] = eps.eps()[k] - 1;
    const int coboundaries = static_cast<int>(rank(principal));
    return cocycles - coboundaries;
}

QParts q_spectral_parts(int n, int max_rank)
{
    if (n < 0) throw std::invalid_argument("poincare_q_spectral: n must be >= 0");
    if (n > max_rank) throw std::length_error("poincare_q_spectral: n exceeds bound " + std::to_string(max_rank));
    std::vector<BigInt> c0(n + 2, BigInt(0)), c1(n + 2, BigInt(0));
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a) {
        const Character chi = wedge_character(n, a);
        const int q = std::popcount(a);
        c0[q] += h0(chi);
        c1[q + 1] += h1(chi);
    }
    return {IntPolynomial(std::move(c0)), IntPolynomial(std::move(c1))};
}

IntPolynomial poincare_q_spectral(int n, int max_rank)
{
    const auto parts = q_spectral_parts(n, max_rank);
    return parts.f0 + parts.f1;
}

IntPolynomial poincare_q_closed(int n)
{
    if (n < 0) throw std::invalid_argument("poincare_q_closed: n must be >= 0");
    if (n == 0) return IntPolynomial{1};
    const RationalPolynomial x = RationalPolynomial::monomial(1, 1);
    const RationalPolynomial one_plus_x{1, 1};
    const RationalPolynomial one_minus_x{1, -1};
    const Rational odd = n % 2 ? 1 : 0;
    const RationalPolynomial inner = Rational(n - 2, 2) * one_plus_x.pow(n - 1) - Rational(n, 2) * one_minus_x.pow(n - 1);
    const RationalPolynomial p =
        one_plus_x * (RationalPolynomial{1} + odd * RationalPolynomial::monomial(1, n) + x * inner);
    return to_integer(p);
}

bool mod2_compare(int n)
{
    if (n < 0 || n % 2) throw std::invalid_argument("mod2_compare: n must be even and >= 0");
    return reduce_mod2(poincare_q_closed(n)) == reduce_mod2(poincare_f2_closed(n));
}

} // namespace hwg
