#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "hwg/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = hwg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string &name) { return std::string(HWG_FIXTURE_DIR) + "/" + name; }

} // namespace

TEST(Cli, NormalForm)
{
    const auto r = run({"nf", "--n", "2", "x1 x2 x2 x1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "w =  | t = (1,-1)\n");
    EXPECT_EQ(run({"nf", "--n", "2"}).out, "w =  | t = (0,0)\n");
}

TEST(Cli, MulAndInv)
{
    EXPECT_EQ(run({"mul", "--n", "2", "x1", "x1"}).out, "w =  | t = (1,0)\n");
    EXPECT_EQ(run({"inv", "--n", "2", "x1^2 x2^-2"}).out, "w =  | t = (-1,1)\n");
}

TEST(Cli, PoincareBoth)
{
    const auto r = run({"poincare", "--n", "2", "--field", "f2", "--method", "both"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "spectral: 1 + 2x + 2x^2 + x^3\nclosed:   1 + 2x + 2x^2 + x^3\ndiff:     none\n");
    const auto j = nlohmann::json::parse(run({"--format", "json", "poincare", "--n", "2", "--field", "q"}).out);
    EXPECT_EQ(j["spectral"], nlohmann::json({1, 0, 0, 1}));
    EXPECT_EQ(j["closed"], nlohmann::json({1, 0, 0, 1}));
    EXPECT_TRUE(j["diff"].empty());
    EXPECT_TRUE(j["match"].get<bool>());
}

TEST(Cli, PoincareBounds)
{
    EXPECT_EQ(run({"poincare", "--n", "13", "--method", "spectral"}).code, 2);
    EXPECT_EQ(run({"poincare", "--n", "20", "--method", "closed", "--field", "q"}).code, 0);
    EXPECT_EQ(run({"poincare", "--n", "21", "--method", "closed"}).code, 2);
    EXPECT_EQ(run({"poincare", "--n", "21", "--method", "closed", "--unsafe-large"}).code, 0);
    EXPECT_EQ(run({"poincare", "--n", "2", "--field", "z"}).code, 2);
}

TEST(Cli, E3Table)
{
    const auto r = run({"e3-table", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 8), "p,q,dim\n");
    EXPECT_NE(r.out.find("\n2,1,1\n"), std::string::npos);
    const auto d = run({"e3-table", "--n", "4", "--detail"});
    EXPECT_NE(d.out.find("\n2,2,8,24,12,4\n"), std::string::npos);
}

TEST(Cli, EnBasis)
{
    const auto r = run({"en-basis", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(2,1) [z1^2 g_{2}]"), std::string::npos);
    const auto j = nlohmann::json::parse(run({"--format", "json", "en-basis", "--n", "2"}).out);
    EXPECT_EQ(j["basis"].size(), 6u);
}

TEST(Cli, Abelianization)
{
    const auto r = run({"abelianization", "--n", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "invariant factors: (4,4,4)\nfree rank: 0\n");
    const auto j = nlohmann::json::parse(run({"--format", "json", "abelianization", "--n", "1"}).out);
    EXPECT_EQ(j["free_rank"], 1);
}

TEST(Cli, Ranks)
{
    const auto j = nlohmann::json::parse(run({"--format", "json", "ranks", "--n", "3"}).out);
    EXPECT_EQ(j["commutator_rank"], 5);
    EXPECT_EQ(j["kernel_rank_h"], 3);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(run({"ranks", "--n", "1"}).code, 2);
}

TEST(Cli, Gamma3AndAction)
{
    EXPECT_EQ(run({"gamma3-verify"}).code, 0);
    EXPECT_EQ(run({"action", "--n", "2", "--element", "x1", "--vector", "0,0"}).out, "(1/2,0)\n");
    EXPECT_EQ(run({"action", "--n", "2", "--element", "x1", "--vector", "0"}).code, 2);
    EXPECT_EQ(run({"action", "--n", "2", "--element", "x1", "--vector", "a,0"}).code, 2);
}

TEST(Cli, Probes)
{
    EXPECT_EQ(run({"probe", "torsion", "--n", "2", "--radius", "3"}).code, 0);
    EXPECT_EQ(run({"probe", "center", "--n", "2", "--radius", "3"}).code, 0);
    EXPECT_EQ(run({"probe", "fixed-point", "--n", "2", "--radius", "3"}).code, 0);
    EXPECT_EQ(run({"probe", "fixed-point", "--n", "2", "--radius", "2", "--model", "rn"}).code, 0);
    EXPECT_EQ(run({"probe", "injectivity", "--radius", "3"}).code, 0);
    EXPECT_EQ(run({"probe", "torsion", "--n", "2", "--radius", "0"}).code, 2);
    EXPECT_EQ(run({"probe", "torsion", "--n", "3", "--radius", "9", "--cap", "50"}).code, 2);
    EXPECT_EQ(run({"probe", "bogus"}).code, 2);
}

TEST(Cli, UniqueProductCheck)
{
    const auto r = run({"up-check", "--n", "2", fixture("x_set.txt"), fixture("y_set.txt")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("|X| = 3, |Y| = 2"), std::string::npos);
    EXPECT_EQ(run({"up-check", "--n", "2", "--expect-nonunique", fixture("x_set.txt"), fixture("y_set.txt")}).code, 1);
    const auto bad = run({"up-check", "--n", "2", fixture("bad_set.txt"), fixture("y_set.txt")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 2"), std::string::npos);
    EXPECT_EQ(run({"up-check", "--n", "2", fixture("missing.txt"), fixture("y_set.txt")}).code, 2);
}

TEST(Cli, Mod2Check)
{
    EXPECT_EQ(run({"mod2-check", "--n", "4"}).code, 0);
    EXPECT_EQ(run({"mod2-check", "--n", "3"}).code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"nf", "--n", "2", "x3"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "nf", "--n", "2", "x1"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"--format", "json", "probe", "fixed-point", "--n", "2", "--radius", "2", "--model", "rn"};
    EXPECT_EQ(run(args).out, run(args).out);
}
