#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hwg/exact.hpp"
#include "hwg/hw_group.hpp"

namespace hwg {

using RationalVector = std::vector<Rational>;

// Exact Euclidean isometry v -> L v + t with L a signed permutation matrix.
class AffineIsometry {
  public:
    // Throws std::invalid_argument unless linear is orthogonal with entries
    // in {-1, 0, 1} and the sizes agree.
    AffineIsometry(int dim, std::vector<int> linear, RationalVector translation);

    static AffineIsometry identity(int dim);
    static AffineIsometry translation(RationalVector t);
    static AffineIsometry diagonal(std::vector<int> signs, RationalVector t);

    int dim() const { return dim_; }
    int linear(int r, int c) const { return linear_[r * dim_ + c]; }
    const std::vector<int> &linear_part() const { return linear_; }
    const RationalVector &translation_part() const { return translation_; }

    bool is_identity() const;
    bool is_translation() const;
    int det() const;

    RationalVector apply(const RationalVector &v) const;

    std::string str() const;

    friend bool operator==(const AffineIsometry &, const AffineIsometry &) = default;
    friend bool operator<(const AffineIsometry &a, const AffineIsometry &b);

  private:
    int dim_;
    std::vector<int> linear_;
    RationalVector translation_;
};

// (A, a) o (B, b) = (AB, A b + a)
AffineIsometry compose(const AffineIsometry &f, const AffineIsometry &g);
AffineIsometry inv(const AffineIsometry &f);
AffineIsometry power(const AffineIsometry &f, long long k);

// Images of x_1..x_n; defines a homomorphism from G_n when the relators
// evaluate to the identity.
class AffineModel {
  public:
    AffineModel(std::string name, std::vector<AffineIsometry> images);

    const std::string &name() const { return name_; }
    int rank() const { return static_cast<int>(images_.size()); }
    int dim() const { return images_.front().dim(); }
    const AffineIsometry &image(int i) const { return images_.at(i - 1); }

    AffineIsometry eval(const GroupElement &g) const;
    AffineIsometry eval(std::span<const Syllable> word) const;

  private:
    std::string name_;
    std::vector<AffineIsometry> images_;
};

// A = (diag(1,-1,-1), (1/2,1/2,0)), B = (diag(-1,1,-1), (0,1/2,1/2)).
std::pair<AffineIsometry, AffineIsometry> gamma3_generators();
// G_2 -> E(3), x -> A, y -> B.
AffineModel gamma3_model();

// n odd, 1 <= i <= n-1: diagonal with +1 only at i, translation 1/2 at i, i+1.
AffineIsometry gamma_n_generator(int n, int i);

// G_n on R^n: x_i(v)_i = v_i + 1/2, x_i(v)_j = -v_j.
AffineModel rn_model(int n);
RationalVector rn_action(const GroupElement &g, const RationalVector &v);

// Order of the group generated by the linear parts of gamma_1..gamma_{n-1}.
std::size_t holonomy_order(int n);

struct HomVerification {
    AffineIsometry relator_xy, relator_yx; // x^-1 y^2 x y^2 and y^-1 x^2 y x^2
    AffineIsometry a_squared, b_squared;
    bool pass = false;
};

HomVerification verify_hom_g2_gamma3();

// Fixed points of v -> L v + t: some solution of (L - I) v = -t.
std::optional<RationalVector> fixed_point(const AffineIsometry &f);

struct FixedPointHit {
    GroupElement element;
    RationalVector point;
    bool in_klein_subgroup; // element lies in some G_n^(i)
};

struct FixedPointReport {
    std::string model;
    int n = 0, radius = 0;
    std::size_t checked = 0;
    std::vector<FixedPointHit> hits;
};

FixedPointReport fixed_point_probe(const AffineModel &model, int r, std::size_t cap = default_ball_cap);

struct InjectivityReport {
    int radius = 0;
    std::size_t checked = 0;
    std::size_t distinct = 0;
    std::vector<std::pair<GroupElement, GroupElement>> collisions;
};

// Compares the Gamma_3 images of ball(2, r).
InjectivityReport injectivity_probe(int r, std::size_t cap = default_ball_cap);

} // namespace hwg
