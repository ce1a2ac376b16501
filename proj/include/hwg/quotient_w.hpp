#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hwg/exact.hpp"

namespace hwg {

// Word in the free product of n copies of Z_2 with no two adjacent
// letters equal. Letters are 1-based generator indices.
using ReducedWord = std::vector<int>;

// Cancels adjacent equal letters until none remain.
ReducedWord reduce_w(std::span<const int> letters);

// Concatenation followed by free cancellation.
ReducedWord w_multiply(std::span<const int> a, std::span<const int> b);

std::string format_word(std::span<const int> w);

// Per-coordinate map z -> sign * (conjugate ? conj(z) : z) of the n-torus.
struct TorusAutomorphism {
    std::vector<int> sign;       // +1 or -1
    std::vector<bool> conjugate;

    static TorusAutomorphism identity(int n);
    bool is_identity() const;

    // Composition; the law is commutative so order is irrelevant.
    friend TorusAutomorphism operator*(const TorusAutomorphism &a, const TorusAutomorphism &b);
    friend bool operator==(const TorusAutomorphism &, const TorusAutomorphism &) = default;
};

// Letter i negates coordinate i and conjugates every other coordinate.
TorusAutomorphism torus_action(int n, std::span<const int> w);

// Element of (Z_2 + Z_2)^n; component k is (xi-parity, eta-parity) of the
// image in the k-th infinite dihedral factor.
struct KleinFourVector {
    std::vector<std::array<int, 2>> parts;

    static KleinFourVector zero(int n);
    friend KleinFourVector operator+(const KleinFourVector &a, const KleinFourVector &b);
    friend bool operator==(const KleinFourVector &, const KleinFourVector &) = default;
};

KleinFourVector psi(int n, std::span<const int> w);

// Fractional Euler characteristic of W_n: 1 - n/2.
Rational euler_wn(int n);

// Rank of the commutator subgroup of W_n (free): 1 + (n-2) 2^(n-1).
BigInt commutator_rank(int n);

struct KernelRankReport {
    int n = 0;
    int s = 0;             // 2 * floor(n/2); the kernel has index 2^s
    BigInt image_order;    // order of h(W_n), computed from the sign vectors
    Rational euler_kernel; // e(W_n) * 2^s
    BigInt rank;           // closed form 1 + (n-2) 2^(s-1)
};

// Kernel of W_n -> diagonal sign matrices.
KernelRankReport kernel_rank_h(int n);

} // namespace hwg
