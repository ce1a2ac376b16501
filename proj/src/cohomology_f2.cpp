#include "hwg/cohomology_f2.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace hwg {

namespace {

void check_rank(int n)
{
    if (n < 0 || n > max_f2_rank) throw std::invalid_argument("rank outside 0.." + std::to_string(max_f2_rank));
}

int popcount(GSet a) { return std::popcount(a); }

GSet bit(int i) { return GSet{1} << (i - 1); }

std::vector<GSet> subsets_of_size(int n, int q)
{
    std::vector<GSet> out;
    if (q < 0 || q > n) return out;
    for (GSet a = 0; a < (GSet{1} << n); ++a)
        if (popcount(a) == q) out.push_back(a);
    return out;
}

} // namespace

std::string format_gset(GSet a)
{
    if (a == 0) return "g_{}";
    std::ostringstream os;
    os << "g_{";
    bool first = true;
    for (int k = 1; k <= 32; ++k)
        if (a & bit(k)) {
            os << (first ? "" : ",") << k;
            first = false;
        }
    os << '}';
    return os.str();
}

int E2Monomial::q() const { return popcount(g_set); }

std::string E2Monomial::str() const
{
    std::ostringstream os;
    if (z_power > 0) os << "z" << z_index << "^" << z_power << " ";
    os << format_gset(g_set);
    return os.str();
}

void add_to(F2Combination &acc, const E2Monomial &m)
{
    auto [it, inserted] = acc.insert(m);
    if (!inserted) acc.erase(it);
}

std::vector<E2Monomial> e2_basis(int n, int p, int q)
{
    check_rank(n);
    std::vector<E2Monomial> out;
    if (p < 0) return out;
    const auto sets = subsets_of_size(n, q);
    if (p == 0) {
        for (GSet a : sets) out.push_back({0, 0, a});
        return out;
    }
    for (int i = 1; i <= n; ++i)
        for (GSet a : sets) out.push_back({i, p, a});
    return out;
}

F2Combination d2(const E2Monomial &m)
{
    F2Combination out;
    if (m.z_power == 0) {
        for (int i = 1; i <= 32; ++i)
            if (m.g_set & bit(i)) add_to(out, {i, 2, m.g_set & ~bit(i)});
        return out;
    }
    // z_i^p z_j^2 = 0 unless j == i.
    if (m.g_set & bit(m.z_index)) add_to(out, {m.z_index, m.z_power + 2, m.g_set & ~bit(m.z_index)});
    return out;
}

F2Combination d2(const F2Combination &c)
{
    F2Combination out;
    for (const auto &m : c)
        for (const auto &t : d2(m)) add_to(out, t);
    return out;
}

F2Combination z_multiply(int i, const E2Monomial &m)
{
    if (m.z_power > 0 && m.z_index != i) return {};
    return {{i, m.z_power + 1, m.g_set}};
}

F2Matrix d2_matrix(int n, int p, int q)
{
    const auto domain = e2_basis(n, p, q);
    const auto codomain = e2_basis(n, p + 2, q - 1);
    std::map<E2Monomial, std::size_t> row_of;
    for (std::size_t r = 0; r < codomain.size(); ++r) row_of[codomain[r]] = r;
    F2Matrix m(codomain.size(), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c)
        for (const auto &t : d2(domain[c])) m.flip(row_of.at(t), c);
    return m;
}

std::vector<E3Block> e3_blocks(int n, int max_p)
{
    check_rank(n);
    std::vector<E3Block> out;
    for (int p = 0; p <= max_p; ++p)
        for (int q = 0; q <= n; ++q) {
            E3Block b;
            b.p = p;
            b.q = q;
            const auto outgoing = d2_matrix(n, p, q);
            b.e2 = outgoing.n_cols();
            b.cycles = b.e2 - f2_rank(outgoing);
            b.boundaries = p >= 2 ? f2_rank(d2_matrix(n, p - 2, q + 1)) : 0;
            b.e3 = b.cycles - b.boundaries;
            out.push_back(b);
        }
    return out;
}

BigradedDims e3_dims(int n)
{
    BigradedDims out;
    for (const auto &b : e3_blocks(n, 4)) {
        if (b.p >= 3) {
            if (b.e3 != 0)
                throw std::logic_error("E_3^{" + std::to_string(b.p) + "," + std::to_string(b.q) + "} nonzero");
            continue;
        }
        out[{b.p, b.q}] = b.e3;
    }
    return out;
}

IntPolynomial poincare_f2_spectral(int n)
{
    IntPolynomial out;
    for (const auto &[pq, dim] : e3_dims(n))
        if (dim) out += IntPolynomial::monomial(BigInt(dim), pq.first + pq.second);
    return out;
}

IntPolynomial poincare_f2_closed(int n)
{
    if (n < 0) throw std::invalid_argument("poincare_f2_closed: n must be >= 0");
    if (n == 0) return IntPolynomial{1};
    const IntPolynomial one_plus_x{1, 1};
    const IntPolynomial x = IntPolynomial::monomial(1, 1);
    return one_plus_x * (IntPolynomial{1} + BigInt(n - 1) * (x * one_plus_x.pow(n - 1)));
}

FParts lemma_f_parts(int n)
{
    if (n < 1) throw std::invalid_argument("lemma_f_parts: n must be >= 1");
    const IntPolynomial one_plus_x{1, 1};
    const IntPolynomial x = IntPolynomial::monomial(1, 1);
    const IntPolynomial b = one_plus_x.pow(n - 1);
    FParts f;
    f.f0 = IntPolynomial{1};
    f.f1 = BigInt(n) * (x * b);
    f.f2 = BigInt(n) * (x * x * b) - x * (one_plus_x.pow(n) - IntPolynomial{1});
    return f;
}

FParts spectral_f_parts(int n)
{
    FParts f;
    for (const auto &[pq, dim] : e3_dims(n)) {
        if (!dim) continue;
        const auto term = IntPolynomial::monomial(BigInt(dim), pq.first + pq.second);
        if (pq.first == 0)
            f.f0 += term;
        else if (pq.first == 1)
            f.f1 += term;
        else
            f.f2 += term;
    }
    return f;
}

int EnSymbol::q() const { return popcount(g_set); }

std::string EnSymbol::str() const
{
    if (grade == 0) return "1";
    std::ostringstream os;
    os << "z" << z_index;
    if (grade == 2) os << "^2";
    os << " " << format_gset(g_set);
    return grade == 2 ? "[" + os.str() + "]" : os.str();
}

EnAlgebra::EnAlgebra(int n) : n_(n)
{
    check_rank(n);
    basis_.push_back({unit(), 0, 0});
    for (int q = 0; q <= n; ++q)
        for (int i = 1; i <= n; ++i)
            for (GSet a : subsets_of_size(n, q))
                if (!(a & bit(i))) basis_.push_back({z_g(i, a), 1, q});

    rows_.resize(static_cast<std::size_t>(n) + 1);
    for (int q = 0; q <= n; ++q) {
        Row &row = rows_[q];
        for (int i = 1; i <= n; ++i)
            for (GSet a : subsets_of_size(n, q))
                if (!(a & bit(i))) {
                    row.index[z2_g(i, a)] = row.monomials.size();
                    row.monomials.push_back(z2_g(i, a));
                }
        row.relations = F2Reducer(row.monomials.size());
        // r_B = sum_{i in B} z_i^2 g_{B \ i}, one relation per |B| = q + 1.
        for (GSet b : subsets_of_size(n, q + 1)) {
            BitVector v(row.monomials.size());
            for (int i = 1; i <= n; ++i)
                if (b & bit(i)) v.flip(row.index.at(z2_g(i, b & ~bit(i))));
            row.relations.insert(std::move(v));
        }
        for (std::size_t k = 0; k < row.monomials.size(); ++k)
            if (!row.relations.is_pivot(k)) basis_.push_back({row.monomials[k], 2, q});
    }
}

EnSymbol EnAlgebra::z_g(int i, GSet a) const
{
    if (i < 1 || i > n_ || (a & bit(i))) throw std::invalid_argument("z_g: need 1 <= i <= n and i not in A");
    return {1, i, a};
}

EnSymbol EnAlgebra::z2_g(int i, GSet a) const
{
    if (i < 1 || i > n_ || (a & bit(i))) throw std::invalid_argument("z2_g: need 1 <= i <= n and i not in A");
    return {2, i, a};
}

BigradedDims EnAlgebra::dims() const
{
    BigradedDims out;
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= n_; ++q) out[{p, q}] = 0;
    for (const auto &b : basis_) ++out[{b.p, b.q}];
    return out;
}

EnElement EnAlgebra::reduce(const EnElement &e) const
{
    EnElement out;
    std::vector<BitVector> grade2(rows_.size());
    for (std::size_t q = 0; q < rows_.size(); ++q) grade2[q] = BitVector(rows_[q].monomials.size());
    for (const auto &s : e) {
        if (s.grade == 2)
            grade2[s.q()].flip(rows_[s.q()].index.at(s));
        else
            out.insert(s);
    }
    for (std::size_t q = 0; q < rows_.size(); ++q) {
        const BitVector r = rows_[q].relations.reduce(grade2[q]);
        for (std::size_t k = 0; k < r.size(); ++k)
            if (r.get(k)) out.insert(rows_[q].monomials[k]);
    }
    return out;
}

EnElement EnAlgebra::multiply_symbols(const EnSymbol &a, const EnSymbol &b) const
{
    if (a.grade == 0) return {b};
    if (b.grade == 0) return {a};
    if (a.grade == 1 && b.grade == 1 && a.z_index == b.z_index && (a.g_set & b.g_set) == 0)
        return {z2_g(a.z_index, a.g_set | b.g_set)};
    return {};
}

EnElement EnAlgebra::multiply(const EnElement &u, const EnElement &v) const
{
    EnElement acc;
    for (const auto &a : u)
        for (const auto &b : v)
            for (const auto &s : multiply_symbols(a, b)) {
                auto [it, inserted] = acc.insert(s);
                if (!inserted) acc.erase(it);
            }
    return reduce(acc);
}

std::vector<EnBasisElement> en_basis(int n) { return EnAlgebra(n).basis(); }

EnVsE3Report en_vs_e3(int n)
{
    EnVsE3Report rep;
    rep.n = n;
    const auto en = EnAlgebra(n).dims();
    const auto e3 = e3_dims(n);
    for (const auto &[pq, dim] : e3) {
        const auto it = en.find(pq);
        const std::size_t ed = it == en.end() ? 0 : it->second;
        rep.rows.push_back({pq.first, pq.second, ed, dim});
        if (ed != dim) rep.pass = false;
    }
    return rep;
}

} // namespace hwg
