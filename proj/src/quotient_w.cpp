#include "hwg/quotient_w.hpp"

#include <sstream>
#include <stdexcept>

#include "hwg/f2_matrix.hpp"

namespace hwg {

ReducedWord reduce_w(std::span<const int> letters)
{
    ReducedWord out;
    out.reserve(letters.size());
    for (int l : letters) {
        if (!out.empty() && out.back() == l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

ReducedWord w_multiply(std::span<const int> a, std::span<const int> b)
{
    ReducedWord out = reduce_w(a);
    for (int l : b) {
        if (!out.empty() && out.back() == l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

std::string format_word(std::span<const int> w)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << 'x' << w[k];
    return os.str();
}

TorusAutomorphism TorusAutomorphism::identity(int n)
{
    return {std::vector<int>(n, 1), std::vector<bool>(n, false)};
}

bool TorusAutomorphism::is_identity() const
{
    for (std::size_t k = 0; k < sign.size(); ++k)
        if (sign[k] != 1 || conjugate[k]) return false;
    return true;
}

TorusAutomorphism operator*(const TorusAutomorphism &a, const TorusAutomorphism &b)
{
    if (a.sign.size() != b.sign.size()) throw std::invalid_argument("torus: rank mismatch");
    TorusAutomorphism r = a;
    for (std::size_t k = 0; k < r.sign.size(); ++k) {
        r.sign[k] *= b.sign[k];
        r.conjugate[k] = a.conjugate[k] != b.conjugate[k];
    }
    return r;
}

TorusAutomorphism torus_action(int n, std::span<const int> w)
{
    TorusAutomorphism acc = TorusAutomorphism::identity(n);
    for (int l : w) {
        if (l < 1 || l > n) throw std::out_of_range("torus_action: letter out of range");
        TorusAutomorphism letter = TorusAutomorphism::identity(n);
        for (int k = 1; k <= n; ++k) {
            if (k == l)
                letter.sign[k - 1] = -1;
            else
                letter.conjugate[k - 1] = true;
        }
        acc = acc * letter;
    }
    return acc;
}

KleinFourVector KleinFourVector::zero(int n) { return {std::vector<std::array<int, 2>>(n, {0, 0})}; }

KleinFourVector operator+(const KleinFourVector &a, const KleinFourVector &b)
{
    if (a.parts.size() != b.parts.size()) throw std::invalid_argument("psi: rank mismatch");
    KleinFourVector r = a;
    for (std::size_t k = 0; k < r.parts.size(); ++k) {
        r.parts[k][0] ^= b.parts[k][0];
        r.parts[k][1] ^= b.parts[k][1];
    }
    return r;
}

KleinFourVector psi(int n, std::span<const int> w)
{
    // Component k sees x_k as xi*eta and every other letter as xi.
    KleinFourVector acc = KleinFourVector::zero(n);
    for (int l : w) {
        if (l < 1 || l > n) throw std::out_of_range("psi: letter out of range");
        for (int k = 1; k <= n; ++k) {
            acc.parts[k - 1][0] ^= 1;
            if (k == l) acc.parts[k - 1][1] ^= 1;
        }
    }
    return acc;
}

Rational euler_wn(int n)
{
    if (n < 1) throw std::invalid_argument("euler_wn: n must be >= 1");
    return Rational(1) - Rational(n, 2);
}

BigInt commutator_rank(int n)
{
    if (n < 2) throw std::invalid_argument("commutator_rank: n must be >= 2");
    return 1 + BigInt(n - 2) * pow2(n - 1);
}

KernelRankReport kernel_rank_h(int n)
{
    if (n < 2) throw std::invalid_argument("kernel_rank_h: n must be >= 2");
    KernelRankReport r;
    r.n = n;
    r.s = 2 * (n / 2);

    // h(x_i) has -1 off position i; as an F_2 vector that is 1 + e_i.
    F2Matrix images(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (k != i) images.set(i, k);
    r.image_order = pow2(f2_rank(images));

    r.euler_kernel = euler_wn(n) * Rational(pow2(r.s));
    r.rank = 1 + BigInt(n - 2) * pow2(r.s - 1);
    return r;
}

} // namespace hwg
