#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hwg/polynomial.hpp"

namespace hwg {

// One-dimensional rational W_n-module: generator k acts by eps[k-1].
class Character {
  public:
    explicit Character(std::vector<int> eps);
    static Character trivial(int n) { return Character(std::vector<int>(n, 1)); }
    // e^A: -1 exactly on the positions of A (bit k-1 for position k).
    static Character e(int n, std::uint32_t a);

    int rank() const { return static_cast<int>(eps_.size()); }
    const std::vector<int> &eps() const { return eps_; }
    // Number of -1 entries.
    int weight() const;
    bool is_trivial() const { return weight() == 0; }

    Character operator-() const;
    friend Character operator*(const Character &a, const Character &b);
    friend bool operator==(const Character &, const Character &) = default;

    std::string str() const;

  private:
    std::vector<int> eps_;
};

// Character of the wedge monomial g_A: (-1)^|A| e^A.
Character wedge_character(int n, std::uint32_t a);

int h0(const Character &eps);
int h1(const Character &eps);

// dim H^0 and H^1 of W_n = *Z_2 with coefficients Q_eps from exact linear
// algebra on crossed homomorphisms.
int h0_oracle(const Character &eps);
int h1_oracle(const Character &eps);

inline constexpr int default_subset_sum_bound = 24;

// f_0 + f_1 from the subset sum over all 2^n wedge characters.
IntPolynomial poincare_q_spectral(int n, int max_rank = default_subset_sum_bound);
struct QParts {
    IntPolynomial f0, f1;
};
QParts q_spectral_parts(int n, int max_rank = default_subset_sum_bound);

// (1+x)(1 + ((1-(-1)^n)/2) x^n + x((n-2)/2 (1+x)^(n-1) - n/2 (1-x)^(n-1)))
// expanded over Q; throws std::domain_error if a coefficient is not integral.
IntPolynomial poincare_q_closed(int n);

// Coefficientwise congruence mod 2 of the rational and F_2 closed forms.
// Only even n is accepted.
bool mod2_compare(int n);

} // namespace hwg
