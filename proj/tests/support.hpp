#pragma once

#include <random>
#include <vector>

#include "hwg/hw_group.hpp"

namespace hwg::testing {

// Faithful image of G_n computed without the library's normal form: the
// free reduction of the letters in W_n, paired with the affine action on
// R^n (translations stored doubled so every entry is an integer). The
// kernel of the affine action only contains words with nontrivial W_n
// image, so the pair separates elements.
struct OracleImage {
    std::vector<int> w;
    std::vector<int> sign;
    std::vector<long long> shift2;

    explicit OracleImage(int n) : sign(n, 1), shift2(n, 0) {}

    void push(int i, int exp)
    {
        const int n = static_cast<int>(sign.size());
        // (A, a) o (B, b) = (AB, A b + a); the letter x_i is B = diag(+1 at
        // i, -1 elsewhere), b = e_i / 2, and its inverse is (B, -b).
        shift2[i - 1] += sign[i - 1] * exp;
        for (int k = 0; k < n; ++k)
            if (k != i - 1) sign[k] = -sign[k];
        if (!w.empty() && w.back() == i)
            w.pop_back();
        else
            w.push_back(i);
    }

    friend bool operator==(const OracleImage &, const OracleImage &) = default;
};

inline OracleImage oracle(int n, const std::vector<Syllable> &word)
{
    OracleImage img(n);
    for (const auto &s : word) {
        const int e = s.exp > 0 ? 1 : -1;
        for (long long k = 0; k < (s.exp > 0 ? s.exp : -s.exp); ++k) img.push(s.gen, e);
    }
    return img;
}

// The canonical element spelled out as a free word.
inline std::vector<Syllable> as_word(const GroupElement &g)
{
    std::vector<Syllable> out;
    for (int l : g.word()) out.push_back({l, 1});
    for (int i = 1; i <= g.rank(); ++i) {
        const long long t = g.lattice()[i - 1].convert_to<long long>();
        if (t) out.push_back({i, 2 * t});
    }
    return out;
}

inline OracleImage oracle(const GroupElement &g) { return oracle(g.rank(), as_word(g)); }

inline std::vector<Syllable> random_word(std::mt19937_64 &rng, int n, int max_len)
{
    std::uniform_int_distribution<int> len(0, max_len), gen(1, n), e(-2, 1);
    std::vector<Syllable> out(len(rng));
    for (auto &s : out) {
        s.gen = gen(rng);
        const int x = e(rng);
        s.exp = x >= 0 ? x + 1 : x;
    }
    return out;
}

inline GroupElement random_element(std::mt19937_64 &rng, int n, int max_len = 12)
{
    return evaluate(n, random_word(rng, n, max_len));
}

} // namespace hwg::testing
