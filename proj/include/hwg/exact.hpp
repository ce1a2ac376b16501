#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hwg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero when k > n.
BigInt binomial(std::size_t n, std::size_t k);

// 2^k as an exact integer.
BigInt pow2(std::size_t k);

std::string to_string(const BigInt &v);
std::string to_string(const Rational &v);

// Non-negative residue of v modulo m (m > 0).
long long mod_floor(const BigInt &v, long long m);

// Dense matrix over Q, row-major rows.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank of a rational matrix by fraction-exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

// Some solution of a·v = b, or nullopt when the system is inconsistent.
// Free variables are set to zero.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix a,
                                                  std::vector<Rational> b);

} // namespace hwg
