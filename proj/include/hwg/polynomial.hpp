#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hwg/exact.hpp"

namespace hwg {

// Dense univariate polynomial; coefficient index is the degree.
// Canonical form carries no trailing zero coefficient, so the zero
// polynomial has an empty coefficient vector and degree() == -1.
template <typename Coeff> class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Coeff> c) : coeffs_(c) { trim(); }
    explicit Polynomial(std::vector<Coeff> c) : coeffs_(std::move(c)) { trim(); }

    static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

    static Polynomial monomial(Coeff c, std::size_t degree)
    {
        std::vector<Coeff> v(degree + 1, Coeff(0));
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }

    // (a + b·x)^k
    static Polynomial binomial_power(const Coeff &a, const Coeff &b, std::size_t k)
    {
        return Polynomial{a, b}.pow(k);
    }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Coeff> &coeffs() const { return coeffs_; }

    Coeff coefficient(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : Coeff(0);
    }

    Coeff leading() const { return coeffs_.empty() ? Coeff(0) : coeffs_.back(); }

    Polynomial pow(std::size_t k) const
    {
        Polynomial result = constant(Coeff(1));
        Polynomial base = *this;
        while (k) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return result;
    }

    template <typename Arg> Arg eval(const Arg &x) const
    {
        Arg acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Arg(*it);
        return acc;
    }

    Polynomial &operator+=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial &operator-=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial &operator*=(const Polynomial &o)
    {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }

    friend Polynomial operator-(Polynomial a)
    {
        for (auto &c : a.coeffs_) c = -c;
        return a;
    }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Coeff &s, Polynomial p)
    {
        for (auto &c : p.coeffs_) c *= s;
        p.trim();
        return p;
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.coeffs_ == b.coeffs_; }

    // Human-readable form, lowest degree first: "1 + 2x + 2x^2 + x^3".
    std::string str() const
    {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Coeff &c = coeffs_[k];
            if (c == 0) continue;
            const bool negative = c < 0;
            Coeff mag = negative ? Coeff(-c) : c;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            if (k == 0 || mag != 1) os << mag;
            if (k >= 1) os << 'x';
            if (k >= 2) os << '^' << k;
        }
        return os.str();
    }

  private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

// Exact conversion; throws std::domain_error on a non-integral coefficient.
inline IntPolynomial to_integer(const RationalPolynomial &p)
{
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        if (boost::multiprecision::denominator(c) != 1)
            throw std::domain_error("non-integral coefficient " + to_string(c));
        out.push_back(boost::multiprecision::numerator(c));
    }
    return IntPolynomial(std::move(out));
}

inline RationalPolynomial to_rational(const IntPolynomial &p)
{
    std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
    return RationalPolynomial(std::move(out));
}

// Coefficientwise reduction into {0, 1}.
inline IntPolynomial reduce_mod2(const IntPolynomial &p)
{
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) out.emplace_back(mod_floor(c, 2));
    return IntPolynomial(std::move(out));
}

} // namespace hwg
