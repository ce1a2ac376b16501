#include "hwg/group_ring.hpp"

#include <fstream>
#include <string>

namespace hwg {

RingElement::RingElement(int n, std::set<GroupElement> support) : n_(n), support_(std::move(support))
{
    for (const auto &g : support_)
        if (g.rank() != n_) throw std::invalid_argument("RingElement: rank mismatch");
}

void RingElement::toggle(const GroupElement &g)
{
    if (g.rank() != n_) throw std::invalid_argument("RingElement: rank mismatch");
    auto [it, inserted] = support_.insert(g);
    if (!inserted) support_.erase(it);
}

RingElement operator+(RingElement a, const RingElement &b)
{
    if (a.rank() != b.rank()) throw std::invalid_argument("RingElement: rank mismatch");
    for (const auto &g : b.support()) a.toggle(g);
    return a;
}

RingElement ring_mul(const RingElement &a, const RingElement &b)
{
    if (a.rank() != b.rank()) throw std::invalid_argument("ring_mul: rank mismatch");
    RingElement out(a.rank());
    for (const auto &x : a.support())
        for (const auto &y : b.support()) out.toggle(multiply(x, y));
    return out;
}

ProductTally product_tally(const std::vector<GroupElement> &xs, const std::vector<GroupElement> &ys)
{
    ProductTally tally;
    for (const auto &x : xs)
        for (const auto &y : ys) ++tally[multiply(x, y)];
    return tally;
}

std::vector<GroupElement> unique_product_witnesses(const std::vector<GroupElement> &xs,
                                                   const std::vector<GroupElement> &ys)
{
    std::vector<GroupElement> out;
    for (const auto &[g, count] : product_tally(xs, ys))
        if (count == 1) out.push_back(g);
    return out;
}

std::vector<GroupElement> read_element_set(std::istream &in, int n)
{
    std::vector<GroupElement> out;
    std::set<GroupElement> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            GroupElement g = parse_element(line, n);
            if (seen.insert(g).second) out.push_back(std::move(g));
        } catch (const ParseError &e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<GroupElement> read_element_set(const std::filesystem::path &path, int n)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_element_set(in, n);
}

} // namespace hwg
