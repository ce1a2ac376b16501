#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hwg/exact.hpp"
#include "hwg/quotient_w.hpp"

namespace hwg {

// Exponents of x_1^2, ..., x_n^2 in the translation lattice.
using LatticeVector = std::vector<BigInt>;

// Diagonal +-1 matrix; image of a W_n element acting on the lattice by
// conjugation.
struct SignVector {
    std::vector<int> s;

    static SignVector identity(int n) { return {std::vector<int>(n, 1)}; }
    bool is_identity() const;
    friend SignVector operator*(const SignVector &a, const SignVector &b);
    friend bool operator==(const SignVector &, const SignVector &) = default;
};

// h(x_i) = diag(+1 at i, -1 elsewhere).
SignVector letter_signs(int n, int i);
SignVector word_signs(int n, std::span<const int> w);

// Canonical element lift(w) * tau(t) of G_n, where lift maps a reduced
// W_n word letterwise and tau(t) = prod x_i^(2 t_i).
class GroupElement {
  public:
    explicit GroupElement(int n);
    // Throws if w is not reduced or t has the wrong length.
    GroupElement(int n, ReducedWord w, LatticeVector t);

    static GroupElement identity(int n) { return GroupElement(n); }
    static GroupElement generator(int n, int i);
    static GroupElement lattice(int n, LatticeVector t);

    int rank() const { return n_; }
    const ReducedWord &word() const { return w_; }
    const LatticeVector &lattice() const { return t_; }
    bool is_identity() const;

    // "w = x1 x2 | t = (0,1)"
    std::string str() const;

    friend bool operator==(const GroupElement &, const GroupElement &) = default;
    friend bool operator<(const GroupElement &a, const GroupElement &b);

  private:
    friend GroupElement append_letter(const GroupElement &, int, int);
    int n_;
    ReducedWord w_;
    LatticeVector t_;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Coordinate i kept, all others negated. i is 1-based.
LatticeVector sign_action(int i, const LatticeVector &t);

// g * x_i^exp for exp = +1 or -1.
GroupElement append_letter(const GroupElement &g, int i, int exp);

GroupElement multiply(const GroupElement &a, const GroupElement &b);
GroupElement inverse(const GroupElement &a);
GroupElement power(const GroupElement &a, long long k);

// Product of a free word given as (generator, exponent) pairs.
struct Syllable {
    int gen;
    long long exp;
};
GroupElement evaluate(int n, std::span<const Syllable> word);

// Whitespace-separated atoms x<k> or x<k>^<e>, e != 0.
std::vector<Syllable> parse_word(std::string_view s, int n);
GroupElement parse_element(std::string_view s, int n);

// The defining relator x_i^-1 x_j^2 x_i x_j^2 as a free word.
std::vector<Syllable> relator(int i, int j);

ReducedWord project_w(const GroupElement &a);

// phi_i: G_n -> W_2 with x_i -> xi eta, x_j -> xi. Letters of the result:
// 1 = xi, 2 = eta.
ReducedWord phi(int i, const GroupElement &a);

// Image in Z_4^n: coordinate j is 2 t_j + #(j in w) mod 4. Requires n >= 2.
std::vector<int> abelianize(const GroupElement &a);
// G_1 = Z: the integer exponent of x_1.
BigInt abelianize_rank1(const GroupElement &a);

// Exponent sums of a free word; rows of the abelianized relation matrix.
std::vector<BigInt> exponent_sums(int n, std::span<const Syllable> word);

class ResourceLimit : public std::length_error {
  public:
    using std::length_error::length_error;
};

inline constexpr std::size_t default_ball_cap = 1'000'000;

// Elements of word length <= r over {x_i^+-1}, in breadth-first order.
std::vector<GroupElement> ball(int n, int r, std::size_t cap = default_ball_cap);

struct TorsionHit {
    GroupElement element;
    int order;
};

struct TorsionReport {
    int n, radius, kmax;
    std::size_t checked = 0;
    std::vector<TorsionHit> hits;
};

TorsionReport torsion_probe(int n, int r, int kmax, std::size_t cap = default_ball_cap);

struct CenterReport {
    int n, radius;
    std::size_t checked = 0;
    std::vector<GroupElement> central;
};

CenterReport center_probe(int n, int r, std::size_t cap = default_ball_cap);

// True iff a lies in the subgroup generated by x_i and the lattice.
bool klein_membership(const GroupElement &a, int i);

} // namespace hwg
