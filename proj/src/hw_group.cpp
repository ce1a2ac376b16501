#include "hwg/hw_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace hwg {

namespace {

void check_index(int n, int i, const char *what)
{
    if (i < 1 || i > n) throw std::out_of_range(std::string(what) + ": generator index out of range");
}

void check_same_rank(const GroupElement &a, const GroupElement &b)
{
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
}

} // namespace

bool SignVector::is_identity() const
{
    return std::all_of(s.begin(), s.end(), [](int v) { return v == 1; });
}

SignVector operator*(const SignVector &a, const SignVector &b)
{
    if (a.s.size() != b.s.size()) throw std::invalid_argument("SignVector: rank mismatch");
    SignVector r = a;
    for (std::size_t k = 0; k < r.s.size(); ++k) r.s[k] *= b.s[k];
    return r;
}

SignVector letter_signs(int n, int i)
{
    check_index(n, i, "letter_signs");
    SignVector r{std::vector<int>(n, -1)};
    r.s[i - 1] = 1;
    return r;
}

SignVector word_signs(int n, std::span<const int> w)
{
    SignVector r = SignVector::identity(n);
    for (int l : w) r = r * letter_signs(n, l);
    return r;
}

GroupElement::GroupElement(int n) : n_(n), t_(static_cast<std::size_t>(n), BigInt(0))
{
    if (n < 0) throw std::invalid_argument("GroupElement: negative rank");
}

GroupElement::GroupElement(int n, ReducedWord w, LatticeVector t) : n_(n), w_(std::move(w)), t_(std::move(t))
{
    if (n < 0) throw std::invalid_argument("GroupElement: negative rank");
    if (t_.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("GroupElement: lattice length");
    for (std::size_t k = 0; k < w_.size(); ++k) {
        check_index(n, w_[k], "GroupElement");
        if (k && w_[k] == w_[k - 1]) throw std::invalid_argument("GroupElement: word not reduced");
    }
}

GroupElement GroupElement::generator(int n, int i)
{
    check_index(n, i, "generator");
    return GroupElement(n, {i}, LatticeVector(n, BigInt(0)));
}

GroupElement GroupElement::lattice(int n, LatticeVector t) { return GroupElement(n, {}, std::move(t)); }

bool GroupElement::is_identity() const
{
    return w_.empty() && std::all_of(t_.begin(), t_.end(), [](const BigInt &v) { return v == 0; });
}

std::string GroupElement::str() const
{
    std::ostringstream os;
    os << "w = " << format_word(w_) << " | t = (";
    for (std::size_t k = 0; k < t_.size(); ++k) os << (k ? "," : "") << t_[k];
    os << ')';
    return os.str();
}

bool operator<(const GroupElement &a, const GroupElement &b)
{
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.w_.size() != b.w_.size()) return a.w_.size() < b.w_.size();
    if (a.w_ != b.w_) return a.w_ < b.w_;
    return a.t_ < b.t_;
}

LatticeVector sign_action(int i, const LatticeVector &t)
{
    const int n = static_cast<int>(t.size());
    check_index(n, i, "sign_action");
    LatticeVector r = t;
    for (int k = 0; k < n; ++k)
        if (k != i - 1) r[k] = -r[k];
    return r;
}

GroupElement append_letter(const GroupElement &g, int i, int exp)
{
    check_index(g.n_, i, "append_letter");
    if (exp != 1 && exp != -1) throw std::invalid_argument("append_letter: exponent must be +-1");
    // lift(w) tau(t) x_i = lift(w) x_i tau(h_i t)
    GroupElement r = g;
    r.t_ = sign_action(i, g.t_);
    if (!r.w_.empty() && r.w_.back() == i) {
        r.w_.pop_back();
        r.t_[i - 1] += 1;
    } else {
        r.w_.push_back(i);
    }
    // x_i^-1 = x_i tau(-e_i)
    if (exp == -1) r.t_[i - 1] -= 1;
    return r;
}

GroupElement multiply(const GroupElement &a, const GroupElement &b)
{
    check_same_rank(a, b);
    GroupElement r = a;
    for (int l : b.word()) r = append_letter(r, l, 1);
    LatticeVector t = r.lattice();
    for (std::size_t k = 0; k < t.size(); ++k) t[k] += b.lattice()[k];
    return GroupElement(a.rank(), r.word(), std::move(t));
}

GroupElement inverse(const GroupElement &a)
{
    // (lift(w) tau(t))^-1 = tau(-t) lift(w)^-1
    LatticeVector neg = a.lattice();
    for (auto &v : neg) v = -v;
    GroupElement r = GroupElement::lattice(a.rank(), std::move(neg));
    const auto &w = a.word();
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = append_letter(r, *it, -1);
    return r;
}

GroupElement power(const GroupElement &a, long long k)
{
    GroupElement base = k < 0 ? inverse(a) : a;
    unsigned long long e = k < 0 ? 0ull - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
    GroupElement r = GroupElement::identity(a.rank());
    while (e) {
        if (e & 1) r = multiply(r, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return r;
}

GroupElement evaluate(int n, std::span<const Syllable> word)
{
    GroupElement r = GroupElement::identity(n);
    for (const auto &s : word) {
        check_index(n, s.gen, "evaluate");
        const int step = s.exp > 0 ? 1 : -1;
        const long long count = s.exp > 0 ? s.exp : -s.exp;
        for (long long k = 0; k < count; ++k) r = append_letter(r, s.gen, step);
    }
    return r;
}

std::vector<Syllable> parse_word(std::string_view s, int n)
{
    std::vector<Syllable> out;
    std::size_t pos = 0;
    auto parse_int = [&](const char *what) {
        const std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        long long v = 0;
        const char *first = s.data() + start + (start < s.size() && s[start] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, s.data() + pos, v);
        if (ec != std::errc() || ptr != s.data() + pos) throw ParseError(std::string("expected ") + what, start);
        return v;
    };
    while (true) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == s.size()) break;
        if (s[pos] != 'x') throw ParseError("expected 'x'", pos);
        ++pos;
        const std::size_t idx_pos = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) throw ParseError("expected generator index", pos);
        const long long gen = parse_int("generator index");
        if (gen < 1 || gen > n)
            throw ParseError("generator index " + std::to_string(gen) + " outside 1.." + std::to_string(n), idx_pos);
        long long exp = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            const std::size_t exp_pos = pos;
            exp = parse_int("exponent");
            if (exp == 0) throw ParseError("zero exponent", exp_pos);
        }
        if (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])))
            throw ParseError("unexpected character '" + std::string(1, s[pos]) + "'", pos);
        out.push_back({static_cast<int>(gen), exp});
    }
    return out;
}

GroupElement parse_element(std::string_view s, int n)
{
    const auto word = parse_word(s, n);
    return evaluate(n, word);
}

std::vector<Syllable> relator(int i, int j) { return {{i, -1}, {j, 2}, {i, 1}, {j, 2}}; }

ReducedWord project_w(const GroupElement &a) { return a.word(); }

ReducedWord phi(int i, const GroupElement &a)
{
    check_index(a.rank(), i, "phi");
    constexpr int xi = 1, eta = 2;
    std::vector<int> image;
    for (int l : a.word()) {
        image.push_back(xi);
        if (l == i) image.push_back(eta);
    }
    // phi_i(x_i^2) = (xi eta)^2; phi_i(x_j^2) = 1 for j != i.
    const BigInt &ti = a.lattice()[i - 1];
    const bool neg = ti < 0;
    const BigInt reps = neg ? BigInt(-ti) : ti;
    for (BigInt k = 0; k < reps; ++k) {
        if (neg)
            image.insert(image.end(), {eta, xi, eta, xi});
        else
            image.insert(image.end(), {xi, eta, xi, eta});
    }
    return reduce_w(image);
}

std::vector<int> abelianize(const GroupElement &a)
{
    const int n = a.rank();
    if (n < 2) throw std::invalid_argument("abelianize: n >= 2 required (G_1 = Z)");
    std::vector<int> out(n);
    for (int j = 1; j <= n; ++j) {
        const auto occ = std::count(a.word().begin(), a.word().end(), j);
        out[j - 1] = static_cast<int>(mod_floor(2 * a.lattice()[j - 1] + occ, 4));
    }
    return out;
}

BigInt abelianize_rank1(const GroupElement &a)
{
    if (a.rank() != 1) throw std::invalid_argument("abelianize_rank1: n must be 1");
    return 2 * a.lattice()[0] + static_cast<long long>(a.word().size());
}

std::vector<BigInt> exponent_sums(int n, std::span<const Syllable> word)
{
    std::vector<BigInt> out(n, BigInt(0));
    for (const auto &s : word) {
        check_index(n, s.gen, "exponent_sums");
        out[s.gen - 1] += s.exp;
    }
    return out;
}

std::vector<GroupElement> ball(int n, int r, std::size_t cap)
{
    if (r < 0) throw std::invalid_argument("ball: radius must be >= 0");
    std::vector<GroupElement> out{GroupElement::identity(n)};
    std::set<GroupElement> seen{out.front()};
    std::size_t frontier_begin = 0;
    for (int layer = 0; layer < r; ++layer) {
        const std::size_t frontier_end = out.size();
        for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
            for (int i = 1; i <= n; ++i)
                for (int e : {1, -1}) {
                    GroupElement g = append_letter(out[k], i, e);
                    if (seen.insert(g).second) {
                        if (out.size() >= cap)
                            throw ResourceLimit("ball: more than " + std::to_string(cap) + " elements");
                        out.push_back(std::move(g));
                    }
                }
        }
        frontier_begin = frontier_end;
    }
    return out;
}

TorsionReport torsion_probe(int n, int r, int kmax, std::size_t cap)
{
    if (r < 1 || kmax < 1) throw std::invalid_argument("torsion_probe: bounds must be >= 1");
    TorsionReport rep{n, r, kmax, 0, {}};
    for (const auto &g : ball(n, r, cap)) {
        if (g.is_identity()) continue;
        ++rep.checked;
        GroupElement p = g;
        for (int k = 1; k <= kmax; ++k) {
            if (p.is_identity()) {
                rep.hits.push_back({g, k});
                break;
            }
            p = multiply(p, g);
        }
    }
    return rep;
}

CenterReport center_probe(int n, int r, std::size_t cap)
{
    if (n < 2) throw std::invalid_argument("center_probe: n must be >= 2");
    CenterReport rep{n, r, 0, {}};
    std::vector<GroupElement> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(GroupElement::generator(n, i));
    for (const auto &g : ball(n, r, cap)) {
        if (g.is_identity()) continue;
        ++rep.checked;
        const bool central = std::all_of(gens.begin(), gens.end(),
                                         [&](const GroupElement &x) { return multiply(g, x) == multiply(x, g); });
        if (central) rep.central.push_back(g);
    }
    return rep;
}

bool klein_membership(const GroupElement &a, int i)
{
    check_index(a.rank(), i, "klein_membership");
    return std::all_of(a.word().begin(), a.word().end(), [i](int l) { return l == i; });
}

} // namespace hwg
