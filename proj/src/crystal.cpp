#include "hwg/crystal.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hwg {

AffineIsometry::AffineIsometry(int dim, std::vector<int> linear, RationalVector translation)
    : dim_(dim), linear_(std::move(linear)), translation_(std::move(translation))
{
    if (dim < 1) throw std::invalid_argument("AffineIsometry: dimension must be >= 1");
    if (linear_.size() != static_cast<std::size_t>(dim * dim) || translation_.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("AffineIsometry: size mismatch");
    for (int v : linear_)
        if (v < -1 || v > 1) throw std::invalid_argument("AffineIsometry: entries must be in {-1,0,1}");
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            int dot = 0;
            for (int k = 0; k < dim; ++k) dot += linear_[r * dim + k] * linear_[c * dim + k];
            if (dot != (r == c ? 1 : 0)) throw std::invalid_argument("AffineIsometry: linear part not orthogonal");
        }
}

AffineIsometry AffineIsometry::identity(int dim)
{
    return diagonal(std::vector<int>(dim, 1), RationalVector(dim, Rational(0)));
}

AffineIsometry AffineIsometry::translation(RationalVector t)
{
    const int dim = static_cast<int>(t.size());
    return diagonal(std::vector<int>(dim, 1), std::move(t));
}

AffineIsometry AffineIsometry::diagonal(std::vector<int> signs, RationalVector t)
{
    const int dim = static_cast<int>(signs.size());
    std::vector<int> m(dim * dim, 0);
    for (int k = 0; k < dim; ++k) m[k * dim + k] = signs[k];
    return AffineIsometry(dim, std::move(m), std::move(t));
}

bool AffineIsometry::is_translation() const
{
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            if (linear(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

bool AffineIsometry::is_identity() const
{
    if (!is_translation()) return false;
    for (const auto &v : translation_)
        if (v != 0) return false;
    return true;
}

int AffineIsometry::det() const
{
    // Signed permutation: sign of the permutation times the product of signs.
    std::vector<int> perm(dim_);
    int sign = 1;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            if (linear(r, c)) {
                perm[r] = c;
                sign *= linear(r, c);
            }
    std::vector<bool> seen(dim_, false);
    for (int s = 0; s < dim_; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (int k = s; !seen[k]; k = perm[k]) {
            seen[k] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

RationalVector AffineIsometry::apply(const RationalVector &v) const
{
    if (v.size() != static_cast<std::size_t>(dim_)) throw std::invalid_argument("apply: dimension mismatch");
    RationalVector out = translation_;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            if (linear(r, c)) out[r] += linear(r, c) * v[c];
    return out;
}

std::string AffineIsometry::str() const
{
    std::ostringstream os;
    os << "([";
    for (int r = 0; r < dim_; ++r) {
        os << (r ? ";" : "");
        for (int c = 0; c < dim_; ++c) os << (c ? "," : "") << linear(r, c);
    }
    os << "],(";
    for (int k = 0; k < dim_; ++k) os << (k ? "," : "") << to_string(translation_[k]);
    os << "))";
    return os.str();
}

bool operator<(const AffineIsometry &a, const AffineIsometry &b)
{
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    if (a.linear_ != b.linear_) return a.linear_ < b.linear_;
    return a.translation_ < b.translation_;
}

AffineIsometry compose(const AffineIsometry &f, const AffineIsometry &g)
{
    if (f.dim() != g.dim()) throw std::invalid_argument("compose: dimension mismatch");
    const int d = f.dim();
    std::vector<int> m(d * d, 0);
    for (int r = 0; r < d; ++r)
        for (int k = 0; k < d; ++k) {
            if (!f.linear(r, k)) continue;
            for (int c = 0; c < d; ++c) m[r * d + c] += f.linear(r, k) * g.linear(k, c);
        }
    return AffineIsometry(d, std::move(m), f.apply(g.translation_part()));
}

AffineIsometry inv(const AffineIsometry &f)
{
    // (L, t)^-1 = (L^T, -L^T t)
    const int d = f.dim();
    std::vector<int> lt(d * d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) lt[r * d + c] = f.linear(c, r);
    RationalVector t(d, Rational(0));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            if (lt[r * d + c]) t[r] -= lt[r * d + c] * f.translation_part()[c];
    return AffineIsometry(d, std::move(lt), std::move(t));
}

AffineIsometry power(const AffineIsometry &f, long long k)
{
    AffineIsometry base = k < 0 ? inv(f) : f;
    unsigned long long e = k < 0 ? 0ull - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
    AffineIsometry r = AffineIsometry::identity(f.dim());
    while (e) {
        if (e & 1) r = compose(r, base);
        e >>= 1;
        if (e) base = compose(base, base);
    }
    return r;
}

AffineModel::AffineModel(std::string name, std::vector<AffineIsometry> images)
    : name_(std::move(name)), images_(std::move(images))
{
    if (images_.empty()) throw std::invalid_argument("AffineModel: no generators");
    for (const auto &g : images_)
        if (g.dim() != images_.front().dim()) throw std::invalid_argument("AffineModel: dimension mismatch");
}

AffineIsometry AffineModel::eval(const GroupElement &g) const
{
    if (g.rank() != rank()) throw std::invalid_argument("AffineModel: rank mismatch");
    AffineIsometry acc = AffineIsometry::identity(dim());
    for (int l : g.word()) acc = compose(acc, image(l));
    for (int i = 1; i <= rank(); ++i) {
        const BigInt &t = g.lattice()[i - 1];
        if (t == 0) continue;
        acc = compose(acc, power(compose(image(i), image(i)), t.convert_to<long long>()));
    }
    return acc;
}

AffineIsometry AffineModel::eval(std::span<const Syllable> word) const
{
    AffineIsometry acc = AffineIsometry::identity(dim());
    for (const auto &s : word) {
        if (s.gen < 1 || s.gen > rank()) throw std::out_of_range("AffineModel: generator out of range");
        acc = compose(acc, power(image(s.gen), s.exp));
    }
    return acc;
}

std::pair<AffineIsometry, AffineIsometry> gamma3_generators()
{
    const Rational h(1, 2);
    return {AffineIsometry::diagonal({1, -1, -1}, {h, h, 0}), AffineIsometry::diagonal({-1, 1, -1}, {0, h, h})};
}

AffineModel gamma3_model()
{
    auto [a, b] = gamma3_generators();
    return AffineModel("gamma3", {a, b});
}

AffineIsometry gamma_n_generator(int n, int i)
{
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("gamma_n_generator: n must be odd and >= 3");
    if (i < 1 || i > n - 1) throw std::out_of_range("gamma_n_generator: index outside 1..n-1");
    std::vector<int> signs(n, -1);
    signs[i - 1] = 1;
    RationalVector t(n, Rational(0));
    t[i - 1] = Rational(1, 2);
    t[i] = Rational(1, 2);
    return AffineIsometry::diagonal(std::move(signs), std::move(t));
}

AffineModel rn_model(int n)
{
    if (n < 1) throw std::invalid_argument("rn_model: n must be >= 1");
    std::vector<AffineIsometry> images;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> signs(n, -1);
        signs[i - 1] = 1;
        RationalVector t(n, Rational(0));
        t[i - 1] = Rational(1, 2);
        images.push_back(AffineIsometry::diagonal(std::move(signs), std::move(t)));
    }
    return AffineModel("rn", std::move(images));
}

RationalVector rn_action(const GroupElement &g, const RationalVector &v)
{
    if (v.size() != static_cast<std::size_t>(g.rank())) throw std::invalid_argument("rn_action: dimension mismatch");
    return rn_model(g.rank()).eval(g).apply(v);
}

std::size_t holonomy_order(int n)
{
    std::vector<std::vector<int>> gens;
    for (int i = 1; i <= n - 1; ++i) gens.push_back(gamma_n_generator(n, i).linear_part());
    const auto mul = [n](const std::vector<int> &a, const std::vector<int> &b) {
        std::vector<int> m(n * n, 0);
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k)
                for (int c = 0; c < n; ++c) m[r * n + c] += a[r * n + k] * b[k * n + c];
        return m;
    };
    std::vector<int> id(n * n, 0);
    for (int k = 0; k < n; ++k) id[k * n + k] = 1;
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto &m : frontier)
            for (const auto &g : gens) {
                auto p = mul(m, g);
                if (seen.insert(p).second) next.push_back(std::move(p));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

HomVerification verify_hom_g2_gamma3()
{
    const AffineModel model = gamma3_model();
    HomVerification v{model.eval(relator(1, 2)), model.eval(relator(2, 1)),
                      compose(model.image(1), model.image(1)), compose(model.image(2), model.image(2))};
    v.pass = v.relator_xy.is_identity() && v.relator_yx.is_identity() &&
             v.a_squared == AffineIsometry::translation({1, 0, 0}) &&
             v.b_squared == AffineIsometry::translation({0, 1, 0});
    return v;
}

std::optional<RationalVector> fixed_point(const AffineIsometry &f)
{
    const int d = f.dim();
    RationalMatrix a(d, std::vector<Rational>(d));
    RationalVector b(d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) a[r][c] = f.linear(r, c) - (r == c ? 1 : 0);
        b[r] = -f.translation_part()[r];
    }
    return solve_linear(std::move(a), std::move(b));
}

FixedPointReport fixed_point_probe(const AffineModel &model, int r, std::size_t cap)
{
    if (r < 1) throw std::invalid_argument("fixed_point_probe: radius must be >= 1");
    FixedPointReport rep;
    rep.model = model.name();
    rep.n = model.rank();
    rep.radius = r;
    for (const auto &g : ball(model.rank(), r, cap)) {
        if (g.is_identity()) continue;
        ++rep.checked;
        if (auto v = fixed_point(model.eval(g))) {
            bool klein = false;
            for (int i = 1; i <= model.rank() && !klein; ++i) klein = klein_membership(g, i);
            rep.hits.push_back({g, std::move(*v), klein});
        }
    }
    return rep;
}

InjectivityReport injectivity_probe(int r, std::size_t cap)
{
    if (r < 1) throw std::invalid_argument("injectivity_probe: radius must be >= 1");
    const AffineModel model = gamma3_model();
    InjectivityReport rep;
    rep.radius = r;
    std::map<AffineIsometry, GroupElement> seen;
    for (const auto &g : ball(2, r, cap)) {
        ++rep.checked;
        auto [it, inserted] = seen.emplace(model.eval(g), g);
        if (!inserted) rep.collisions.emplace_back(it->second, g);
    }
    rep.distinct = seen.size();
    return rep;
}

} // namespace hwg
