#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hwg/f2_matrix.hpp"
#include "hwg/polynomial.hpp"

namespace hwg {

// Subsets of {1..n} as bitmasks; bit k-1 stands for g_k.
using GSet = std::uint32_t;
inline constexpr int max_f2_rank = 24;

std::string format_gset(GSet a);

// z_i^p g_A in E_2^{p,|A|}. z_index == 0 iff p == 0.
struct E2Monomial {
    int z_index = 0;
    int z_power = 0;
    GSet g_set = 0;

    int p() const { return z_power; }
    int q() const;
    std::string str() const;

    // Order: p, then z_index, then the mask of A.
    friend auto operator<=>(const E2Monomial &, const E2Monomial &) = default;
};

// Sum over F_2: a set of monomials.
using F2Combination = std::set<E2Monomial>;

void add_to(F2Combination &acc, const E2Monomial &m);

std::vector<E2Monomial> e2_basis(int n, int p, int q);

// Derivation with d2(g_i) = z_i^2 and d2(z_i) = 0; z_i z_j = 0 for i != j.
F2Combination d2(const E2Monomial &m);
F2Combination d2(const F2Combination &c);

// z_i * m, honouring z_i z_j = 0.
F2Combination z_multiply(int i, const E2Monomial &m);

// d_2^{p,q}: E_2^{p,q} -> E_2^{p+2,q-1}, columns indexed by e2_basis(n,p,q).
F2Matrix d2_matrix(int n, int p, int q);

struct E3Block {
    int p = 0, q = 0;
    std::size_t e2 = 0;         // dim E_2^{p,q}
    std::size_t cycles = 0;     // dim ker d_2^{p,q}
    std::size_t boundaries = 0; // dim im d_2^{p-2,q+1}
    std::size_t e3 = 0;         // cycles - boundaries
};

// (p,q) -> dimension.
using BigradedDims = std::map<std::pair<int, int>, std::size_t>;

// All blocks with 0 <= p <= max_p and 0 <= q <= n, computed blockwise from
// explicit d_2 matrices.
std::vector<E3Block> e3_blocks(int n, int max_p = 4);

// E_3 dimensions for p in {0,1,2}. Columns 3 and 4 are computed as well
// and must vanish; throws std::logic_error otherwise.
BigradedDims e3_dims(int n);

IntPolynomial poincare_f2_spectral(int n);
IntPolynomial poincare_f2_closed(int n);

struct FParts {
    IntPolynomial f0, f1, f2;
};

// Closed forms f_0 = 1, f_1 = n x (1+x)^(n-1),
// f_2 = n x^2 (1+x)^(n-1) - x((1+x)^n - 1).
FParts lemma_f_parts(int n);
// sum_q dim E_3^{p,q} x^{p+q} for p = 0, 1, 2 from the spectral computation.
FParts spectral_f_parts(int n);

// Symbols of the bigraded algebra E^(n): the unit (grade 0), z_i g_A
// (grade 1) and z_i^2 g_A (grade 2), always with i not in A.
struct EnSymbol {
    int grade = 0;
    int z_index = 0;
    GSet g_set = 0;

    int p() const { return grade; }
    int q() const;
    std::string str() const;
    friend auto operator<=>(const EnSymbol &, const EnSymbol &) = default;
};

using EnElement = std::set<EnSymbol>;

struct EnBasisElement {
    EnSymbol symbol; // for grade 2, the representative of its class
    int p = 0, q = 0;
};

class EnAlgebra {
  public:
    explicit EnAlgebra(int n);

    int rank() const { return n_; }

    const std::vector<EnBasisElement> &basis() const { return basis_; }
    BigradedDims dims() const;

    // Canonical form: grade-2 part reduced modulo span{r_A}.
    EnElement reduce(const EnElement &e) const;
    EnElement multiply(const EnElement &u, const EnElement &v) const;

    static EnSymbol unit() { return {}; }
    EnSymbol z_g(int i, GSet a) const;  // grade 1
    EnSymbol z2_g(int i, GSet a) const; // grade 2, unreduced

  private:
    struct Row {
        std::vector<EnSymbol> monomials;
        std::map<EnSymbol, std::size_t> index;
        F2Reducer relations{0};
    };

    EnElement multiply_symbols(const EnSymbol &a, const EnSymbol &b) const;

    int n_;
    std::vector<Row> rows_; // grade-2 monomials and relations per q
    std::vector<EnBasisElement> basis_;
};

std::vector<EnBasisElement> en_basis(int n);

struct EnComparison {
    int p, q;
    std::size_t en_dim, e3_dim;
};

struct EnVsE3Report {
    int n = 0;
    bool pass = true;
    std::vector<EnComparison> rows;
};

EnVsE3Report en_vs_e3(int n);

} // namespace hwg
