#include "hwg/cli.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hwg/cohomology_f2.hpp"
#include "hwg/cohomology_q.hpp"
#include "hwg/crystal.hpp"
#include "hwg/group_ring.hpp"
#include "hwg/hw_group.hpp"
#include "hwg/int_matrix.hpp"
#include "hwg/quotient_w.hpp"

namespace hwg::cli {

namespace {

using nlohmann::json;

constexpr int closed_form_bound = 20;
constexpr int spectral_bound = 12;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string format = "text";
    int n = 2;
    std::string field = "f2";
    std::string method = "both";
    bool unsafe_large = false;
    bool detail = false;
    int radius = 3;
    int kmax = 12;
    std::size_t cap = default_ball_cap;
    std::string model = "gamma3";
    std::string probe_kind;
    std::vector<std::string> elements;
    std::string vector_text;
    std::string x_file, y_file;
    bool expect_nonunique = false;
};

json big_json(const BigInt &v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

json rational_json(const Rational &v)
{
    if (boost::multiprecision::denominator(v) == 1) return big_json(boost::multiprecision::numerator(v));
    return to_string(v);
}

json poly_json(const IntPolynomial &p)
{
    json a = json::array();
    for (const auto &c : p.coeffs()) a.push_back(big_json(c));
    return a;
}

json element_json(const GroupElement &g)
{
    json t = json::array();
    for (const auto &v : g.lattice()) t.push_back(big_json(v));
    return {{"w", g.word()}, {"t", t}, {"canonical", g.str()}};
}

json vector_json(const RationalVector &v)
{
    json a = json::array();
    for (const auto &c : v) a.push_back(rational_json(c));
    return a;
}

json isometry_json(const AffineIsometry &f)
{
    json rows = json::array();
    for (int r = 0; r < f.dim(); ++r) {
        json row = json::array();
        for (int c = 0; c < f.dim(); ++c) row.push_back(f.linear(r, c));
        rows.push_back(row);
    }
    return {{"linear", rows}, {"translation", vector_json(f.translation_part())}};
}

std::string vector_text(const RationalVector &v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + to_string(v[k]);
    return s + ")";
}

void require_rank(const Config &c, int lo, int hi)
{
    if (c.n < lo) throw UsageError("--n must be >= " + std::to_string(lo));
    if (c.n > hi && !c.unsafe_large)
        throw UsageError("--n " + std::to_string(c.n) + " exceeds the default bound " + std::to_string(hi) +
                         "; pass --unsafe-large to override");
}

GroupElement element_arg(const Config &c, std::size_t k)
{
    if (k >= c.elements.size()) throw UsageError("missing element argument");
    try {
        return parse_element(c.elements[k], c.n);
    } catch (const ParseError &e) {
        throw UsageError(std::string("element syntax: ") + e.what());
    }
}

int emit_element(const Config &c, const GroupElement &g, std::ostream &out)
{
    if (c.format == "json")
        out << element_json(g).dump() << '\n';
    else
        out << g.str() << '\n';
    return ok;
}

int cmd_nf(const Config &c, std::ostream &out)
{
    require_rank(c, 0, 1 << 20);
    if (c.elements.empty()) return emit_element(c, GroupElement::identity(c.n), out);
    return emit_element(c, element_arg(c, 0), out);
}

int cmd_mul(const Config &c, std::ostream &out)
{
    require_rank(c, 0, 1 << 20);
    return emit_element(c, multiply(element_arg(c, 0), element_arg(c, 1)), out);
}

int cmd_inv(const Config &c, std::ostream &out)
{
    require_rank(c, 0, 1 << 20);
    return emit_element(c, inverse(element_arg(c, 0)), out);
}

int cmd_poincare(const Config &c, std::ostream &out, std::ostream &err)
{
    const bool want_spectral = c.method != "closed";
    const bool want_closed = c.method != "spectral";
    require_rank(c, 0, want_spectral ? spectral_bound : closed_form_bound);
    const bool f2 = c.field == "f2";
    IntPolynomial spectral, closed;
    if (want_spectral) spectral = f2 ? poincare_f2_spectral(c.n) : poincare_q_spectral(c.n, c.unsafe_large ? 30 : spectral_bound);
    if (want_closed) closed = f2 ? poincare_f2_closed(c.n) : poincare_q_closed(c.n);
    const bool both = want_spectral && want_closed;
    const IntPolynomial diff = both ? spectral - closed : IntPolynomial{};

    if (c.format == "json") {
        json j{{"n", c.n}, {"field", c.field}, {"method", c.method}};
        if (want_spectral) j["spectral"] = poly_json(spectral);
        if (want_closed) j["closed"] = poly_json(closed);
        if (both) {
            j["diff"] = poly_json(diff);
            j["match"] = diff.is_zero();
        }
        out << j.dump() << '\n';
    } else {
        if (want_spectral) out << "spectral: " << spectral.str() << '\n';
        if (want_closed) out << "closed:   " << closed.str() << '\n';
        if (both) out << "diff:     " << (diff.is_zero() ? std::string("none") : diff.str()) << '\n';
    }
    if (both && !diff.is_zero()) {
        err << "spectral and closed-form polynomials differ\n";
        return verification_failed;
    }
    return ok;
}

int cmd_e3_table(const Config &c, std::ostream &out)
{
    require_rank(c, 0, spectral_bound);
    const auto blocks = e3_blocks(c.n, 4);
    if (c.format == "json") {
        json rows = json::array();
        for (const auto &b : blocks) {
            if (!c.detail && b.p > 2) continue;
            json r{{"p", b.p}, {"q", b.q}, {"dim", b.e3}};
            if (c.detail) {
                r["e2"] = b.e2;
                r["cycles"] = b.cycles;
                r["boundaries"] = b.boundaries;
            }
            rows.push_back(r);
        }
        out << json{{"n", c.n}, {"e3", rows}}.dump() << '\n';
    } else {
        out << (c.detail ? "p,q,dim,e2,cycles,boundaries\n" : "p,q,dim\n");
        for (const auto &b : blocks) {
            if (!c.detail && b.p > 2) continue;
            out << b.p << ',' << b.q << ',' << b.e3;
            if (c.detail) out << ',' << b.e2 << ',' << b.cycles << ',' << b.boundaries;
            out << '\n';
        }
    }
    for (const auto &b : blocks)
        if (b.p > 2 && b.e3 != 0) return verification_failed;
    return ok;
}

int cmd_en_basis(const Config &c, std::ostream &out)
{
    require_rank(c, 0, spectral_bound);
    const auto basis = en_basis(c.n);
    if (c.format == "json") {
        json rows = json::array();
        for (const auto &b : basis) rows.push_back({{"p", b.p}, {"q", b.q}, {"symbol", b.symbol.str()}});
        out << json{{"n", c.n}, {"basis", rows}}.dump() << '\n';
    } else if (c.format == "csv") {
        out << "p,q,symbol\n";
        for (const auto &b : basis) out << b.p << ',' << b.q << ",\"" << b.symbol.str() << "\"\n";
    } else {
        for (const auto &b : basis) out << '(' << b.p << ',' << b.q << ") " << b.symbol.str() << '\n';
    }
    const auto cmp = en_vs_e3(c.n);
    return cmp.pass ? ok : verification_failed;
}

int cmd_abelianization(const Config &c, std::ostream &out)
{
    require_rank(c, 0, 64);
    std::vector<std::vector<BigInt>> rows;
    for (int i = 1; i <= c.n; ++i)
        for (int j = 1; j <= c.n; ++j)
            if (i != j) rows.push_back(exponent_sums(c.n, relator(i, j)));
    const auto snf = smith_normal_form(IntMatrix::from_rows(rows, c.n));
    std::vector<BigInt> torsion;
    for (const auto &d : snf.invariant_factors)
        if (d != 1) torsion.push_back(d);
    if (c.format == "json") {
        json f = json::array();
        for (const auto &d : snf.invariant_factors) f.push_back(big_json(d));
        json t = json::array();
        for (const auto &d : torsion) t.push_back(big_json(d));
        out << json{{"n", c.n}, {"invariant_factors", f}, {"torsion", t}, {"free_rank", snf.free_rank}}.dump() << '\n';
    } else {
        out << "invariant factors: (";
        for (std::size_t k = 0; k < snf.invariant_factors.size(); ++k)
            out << (k ? "," : "") << snf.invariant_factors[k];
        out << ")\nfree rank: " << snf.free_rank << '\n';
    }
    return ok;
}

int cmd_ranks(const Config &c, std::ostream &out)
{
    require_rank(c, 2, 64);
    const Rational e = euler_wn(c.n);
    const BigInt comm = commutator_rank(c.n);
    const auto ker = kernel_rank_h(c.n);
    const Rational comm_euler = 1 - e * Rational(pow2(c.n));
    const Rational ker_euler = 1 - ker.euler_kernel;
    const bool pass = comm_euler == Rational(comm) && ker_euler == Rational(ker.rank) && ker.image_order == pow2(ker.s);
    if (c.format == "json") {
        out << json{{"n", c.n},
                    {"euler_wn", rational_json(e)},
                    {"commutator_rank", big_json(comm)},
                    {"commutator_rank_from_euler", rational_json(comm_euler)},
                    {"kernel_rank_h", big_json(ker.rank)},
                    {"kernel_rank_from_euler", rational_json(ker_euler)},
                    {"s", ker.s},
                    {"image_order", big_json(ker.image_order)},
                    {"euler_kernel", rational_json(ker.euler_kernel)},
                    {"pass", pass}}
                   .dump()
            << '\n';
    } else {
        out << "e(W_n) = " << to_string(e) << '\n'
            << "commutator rank = " << comm << " (from Euler characteristic: " << to_string(comm_euler) << ")\n"
            << "kernel of h: s = " << ker.s << ", |image| = " << ker.image_order << ", e(K) = "
            << to_string(ker.euler_kernel) << ", rank = " << ker.rank << " (from Euler characteristic: "
            << to_string(ker_euler) << ")\n"
            << (pass ? "pass" : "FAIL") << '\n';
    }
    return pass ? ok : verification_failed;
}

int cmd_gamma3_verify(const Config &c, std::ostream &out)
{
    const auto v = verify_hom_g2_gamma3();
    if (c.format == "json") {
        out << json{{"relator_xy", isometry_json(v.relator_xy)},
                    {"relator_yx", isometry_json(v.relator_yx)},
                    {"a_squared", isometry_json(v.a_squared)},
                    {"b_squared", isometry_json(v.b_squared)},
                    {"pass", v.pass}}
                   .dump()
            << '\n';
    } else {
        out << "x^-1 y^2 x y^2 -> " << v.relator_xy.str() << '\n'
            << "y^-1 x^2 y x^2 -> " << v.relator_yx.str() << '\n'
            << "A^2 -> " << v.a_squared.str() << '\n'
            << "B^2 -> " << v.b_squared.str() << '\n'
            << (v.pass ? "pass" : "FAIL") << '\n';
    }
    return v.pass ? ok : verification_failed;
}

RationalVector parse_vector(const std::string &s, int n)
{
    RationalVector v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t()");
        const auto e = item.find_last_not_of(" \t()");
        if (b == std::string::npos) throw UsageError("empty vector component");
        try {
            v.emplace_back(item.substr(b, e - b + 1));
        } catch (const std::exception &) {
            throw UsageError("bad rational '" + item + "'");
        }
    }
    if (v.size() != static_cast<std::size_t>(n))
        throw UsageError("vector has " + std::to_string(v.size()) + " components, expected " + std::to_string(n));
    return v;
}

int cmd_action(const Config &c, std::ostream &out)
{
    require_rank(c, 1, 1 << 20);
    const GroupElement g = element_arg(c, 0);
    const RationalVector v = parse_vector(c.vector_text, c.n);
    const RationalVector r = rn_action(g, v);
    if (c.format == "json")
        out << json{{"element", element_json(g)}, {"input", vector_json(v)}, {"output", vector_json(r)}}.dump() << '\n';
    else
        out << vector_text(r) << '\n';
    return ok;
}

int cmd_probe(const Config &c, std::ostream &out)
{
    if (c.radius < 1) throw UsageError("--radius must be >= 1");
    const std::string &kind = c.probe_kind;
    if (kind == "torsion") {
        require_rank(c, 1, 64);
        const auto rep = torsion_probe(c.n, c.radius, c.kmax, c.cap);
        if (c.format == "json") {
            json hits = json::array();
            for (const auto &h : rep.hits) hits.push_back({{"element", element_json(h.element)}, {"order", h.order}});
            out << json{{"probe", kind}, {"n", c.n}, {"radius", c.radius}, {"kmax", c.kmax}, {"checked", rep.checked}, {"hits", hits}}.dump() << '\n';
        } else {
            out << "torsion probe n=" << c.n << " r=" << c.radius << " kmax=" << c.kmax << ": checked " << rep.checked
                << ", hits " << rep.hits.size() << '\n';
            for (const auto &h : rep.hits) out << "  order " << h.order << ": " << h.element.str() << '\n';
        }
        return rep.hits.empty() ? ok : verification_failed;
    }
    if (kind == "center") {
        require_rank(c, 2, 64);
        const auto rep = center_probe(c.n, c.radius, c.cap);
        if (c.format == "json") {
            json hits = json::array();
            for (const auto &g : rep.central) hits.push_back(element_json(g));
            out << json{{"probe", kind}, {"n", c.n}, {"radius", c.radius}, {"checked", rep.checked}, {"hits", hits}}.dump() << '\n';
        } else {
            out << "center probe n=" << c.n << " r=" << c.radius << ": checked " << rep.checked << ", central "
                << rep.central.size() << '\n';
            for (const auto &g : rep.central) out << "  " << g.str() << '\n';
        }
        return rep.central.empty() ? ok : verification_failed;
    }
    if (kind == "fixed-point") {
        AffineModel model = c.model == "gamma3" ? gamma3_model() : rn_model(std::max(c.n, 1));
        if (c.model == "gamma3" && c.n != 2) throw UsageError("the gamma3 model is defined for --n 2 only");
        if (c.model == "rn") require_rank(c, 1, 64);
        const auto rep = fixed_point_probe(model, c.radius, c.cap);
        // Gamma_3 is Bieberbach: any fixed point fails. On R^n only the
        // generalized Klein bottle subgroups are required to act freely.
        bool pass = true;
        for (const auto &h : rep.hits)
            if (c.model == "gamma3" || h.in_klein_subgroup) pass = false;
        if (c.format == "json") {
            json hits = json::array();
            for (const auto &h : rep.hits)
                hits.push_back({{"element", element_json(h.element)}, {"point", vector_json(h.point)}, {"in_klein_subgroup", h.in_klein_subgroup}});
            out << json{{"probe", kind}, {"model", rep.model}, {"n", rep.n}, {"radius", rep.radius}, {"checked", rep.checked}, {"hits", hits}, {"pass", pass}}.dump() << '\n';
        } else {
            out << "fixed-point probe model=" << rep.model << " n=" << rep.n << " r=" << rep.radius << ": checked "
                << rep.checked << ", with fixed points " << rep.hits.size() << '\n';
            for (const auto &h : rep.hits)
                out << "  " << h.element.str() << " fixes " << vector_text(h.point)
                    << (h.in_klein_subgroup ? " [klein subgroup]" : "") << '\n';
            out << (pass ? "pass" : "FAIL") << '\n';
        }
        return pass ? ok : verification_failed;
    }
    if (kind == "injectivity") {
        const auto rep = injectivity_probe(c.radius, c.cap);
        if (c.format == "json") {
            json col = json::array();
            for (const auto &[a, b] : rep.collisions) col.push_back({element_json(a), element_json(b)});
            out << json{{"probe", kind}, {"radius", rep.radius}, {"checked", rep.checked}, {"distinct", rep.distinct}, {"collisions", col}}.dump() << '\n';
        } else {
            out << "injectivity probe r=" << rep.radius << ": " << rep.checked << " elements, " << rep.distinct
                << " distinct isometries\n";
            for (const auto &[a, b] : rep.collisions) out << "  collision: " << a.str() << " and " << b.str() << '\n';
        }
        return rep.collisions.empty() ? ok : verification_failed;
    }
    throw UsageError("unknown probe '" + kind + "'");
}

int cmd_up_check(const Config &c, std::ostream &out)
{
    require_rank(c, 0, 1 << 20);
    std::vector<GroupElement> xs, ys;
    try {
        xs = read_element_set(std::filesystem::path(c.x_file), c.n);
        ys = read_element_set(std::filesystem::path(c.y_file), c.n);
    } catch (const std::runtime_error &e) {
        throw UsageError(e.what());
    }
    if (xs.empty() || ys.empty()) throw UsageError("set files must be nonempty");
    const auto w = unique_product_witnesses(xs, ys);
    if (c.format == "json") {
        json a = json::array();
        for (const auto &g : w) a.push_back(element_json(g));
        out << json{{"n", c.n}, {"x_size", xs.size()}, {"y_size", ys.size()}, {"witnesses", a}, {"nonunique", w.empty()}}.dump() << '\n';
    } else {
        out << "|X| = " << xs.size() << ", |Y| = " << ys.size() << ", unique products: " << w.size() << '\n';
        for (const auto &g : w) out << "  " << g.str() << '\n';
        if (w.empty()) out << "nonunique-product pair\n";
    }
    return c.expect_nonunique && !w.empty() ? verification_failed : ok;
}

int cmd_mod2_check(const Config &c, std::ostream &out)
{
    require_rank(c, 0, closed_form_bound);
    if (c.n % 2) throw UsageError("mod2-check requires even --n");
    const bool eq = mod2_compare(c.n);
    if (c.format == "json") {
        out << json{{"n", c.n},
                    {"q", poly_json(poincare_q_closed(c.n))},
                    {"f2", poly_json(poincare_f2_closed(c.n))},
                    {"congruent_mod_2", eq}}
                   .dump()
            << '\n';
    } else {
        out << "Q:   " << poincare_q_closed(c.n).str() << '\n'
            << "F_2: " << poincare_f2_closed(c.n).str() << '\n'
            << (eq ? "congruent mod 2" : "NOT congruent mod 2") << '\n';
    }
    return eq ? ok : verification_failed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Config c;
    CLI::App app{"Exact computations for the combinatorial Hantzsche-Wendt groups G_n", "hwg"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    auto rank_opt = [&](CLI::App *sub) { sub->add_option("--n", c.n, "Rank n of G_n"); };

    auto *nf = app.add_subcommand("nf", "Normal form of a word");
    rank_opt(nf);
    nf->add_option("word", c.elements, "Word such as \"x1 x2^-1\"")->expected(0, 1);

    auto *mul = app.add_subcommand("mul", "Product of two words");
    rank_opt(mul);
    mul->add_option("words", c.elements)->expected(2);

    auto *inv_cmd = app.add_subcommand("inv", "Inverse of a word");
    rank_opt(inv_cmd);
    inv_cmd->add_option("word", c.elements)->expected(1);

    auto *poincare = app.add_subcommand("poincare", "Poincare polynomial of G_n");
    rank_opt(poincare);
    poincare->add_option("--field", c.field)->check(CLI::IsMember({"q", "f2"}));
    poincare->add_option("--method", c.method)->check(CLI::IsMember({"spectral", "closed", "both"}));
    poincare->add_flag("--unsafe-large", c.unsafe_large, "Lift the default rank bounds");

    auto *e3 = app.add_subcommand("e3-table", "Dimensions of the E_3 page over F_2");
    rank_opt(e3);
    e3->add_flag("--detail", c.detail, "Include E_2, cycle and boundary dimensions and columns 3, 4");
    e3->add_flag("--unsafe-large", c.unsafe_large);

    auto *en = app.add_subcommand("en-basis", "Basis of the bigraded algebra E^(n)");
    rank_opt(en);
    en->add_flag("--unsafe-large", c.unsafe_large);

    auto *ab = app.add_subcommand("abelianization", "Invariant factors of the abelianized relation matrix");
    rank_opt(ab);

    auto *ranks = app.add_subcommand("ranks", "Free subgroup ranks of W_n and Euler characteristics");
    rank_opt(ranks);

    app.add_subcommand("gamma3-verify", "Check the relators of G_2 in the Gamma_3 model");

    auto *action = app.add_subcommand("action", "Affine action of an element on R^n");
    rank_opt(action);
    action->add_option("--element", c.elements)->expected(1)->required();
    action->add_option("--vector", c.vector_text, "Comma-separated rationals, e.g. 0,1/2")->required();

    auto *probe = app.add_subcommand("probe", "Structural probes over a ball of G_n");
    probe->add_option("kind", c.probe_kind)->required()->check(CLI::IsMember({"torsion", "center", "fixed-point", "injectivity"}));
    rank_opt(probe);
    probe->add_option("--radius", c.radius);
    probe->add_option("--kmax", c.kmax);
    probe->add_option("--cap", c.cap, "Element budget for ball enumeration");
    probe->add_option("--model", c.model)->check(CLI::IsMember({"gamma3", "rn"}));

    auto *up = app.add_subcommand("up-check", "Unique-product witnesses for two set files");
    rank_opt(up);
    up->add_option("x_file", c.x_file)->required();
    up->add_option("y_file", c.y_file)->required();
    up->add_flag("--expect-nonunique", c.expect_nonunique, "Exit 1 unless the pair has no unique product");

    auto *mod2 = app.add_subcommand("mod2-check", "Compare the Q and F_2 series mod 2 (even n)");
    rank_opt(mod2);

    std::vector<const char *> argv{"hwg"};
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*nf) return cmd_nf(c, out);
        if (*mul) return cmd_mul(c, out);
        if (*inv_cmd) return cmd_inv(c, out);
        if (*poincare) return cmd_poincare(c, out, err);
        if (*e3) return cmd_e3_table(c, out);
        if (*en) return cmd_en_basis(c, out);
        if (*ab) return cmd_abelianization(c, out);
        if (*ranks) return cmd_ranks(c, out);
        if (app.got_subcommand("gamma3-verify")) return cmd_gamma3_verify(c, out);
        if (*action) return cmd_action(c, out);
        if (*probe) return cmd_probe(c, out);
        if (*up) return cmd_up_check(c, out);
        if (*mod2) return cmd_mod2_check(c, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::length_error &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    err << "error: no subcommand\n";
    return usage_error;
}

} // namespace hwg::cli
