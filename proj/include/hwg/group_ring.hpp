#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <set>
#include <vector>

#include "hwg/hw_group.hpp"

namespace hwg {

// Element of F_2[G_n] with finite support; every coefficient is 1.
class RingElement {
  public:
    explicit RingElement(int n) : n_(n) {}
    RingElement(int n, std::set<GroupElement> support);

    static RingElement one(int n) { return RingElement(n, {GroupElement::identity(n)}); }

    int rank() const { return n_; }
    const std::set<GroupElement> &support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    // Adds g with coefficient 1 (cancels if already present).
    void toggle(const GroupElement &g);

    friend RingElement operator+(RingElement a, const RingElement &b);
    friend bool operator==(const RingElement &, const RingElement &) = default;

  private:
    int n_;
    std::set<GroupElement> support_;
};

RingElement ring_mul(const RingElement &a, const RingElement &b);

// Number of pairs (x, y) in X x Y with x y = g.
using ProductTally = std::map<GroupElement, std::size_t>;

ProductTally product_tally(const std::vector<GroupElement> &xs, const std::vector<GroupElement> &ys);

// Products with exactly one representation, in canonical order. An empty
// result certifies (X, Y) as a nonunique-product pair.
std::vector<GroupElement> unique_product_witnesses(const std::vector<GroupElement> &xs,
                                                   const std::vector<GroupElement> &ys);

// One element per line in the element grammar; blank lines and text after
// '#' are ignored. Duplicates are dropped, first occurrence wins.
std::vector<GroupElement> read_element_set(std::istream &in, int n);
std::vector<GroupElement> read_element_set(const std::filesystem::path &path, int n);

} // namespace hwg
