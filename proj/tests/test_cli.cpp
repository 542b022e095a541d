#include "zsum/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace zsum::cli;

namespace {

struct Invocation {
    int code;
    RunRecord record;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, from_json(out.str()), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("zsum_test_" + name);
}

} // namespace

TEST_CASE("compute k=8 r=4")
{
    auto run = invoke({"compute", "--k", "8", "--r", "4"});
    CHECK(run.code == kOk);
    CHECK(run.record.command == "compute");
    CHECK(run.record.value == 25);
    REQUIRE(run.record.witness);
    CHECK(*run.record.witness == "(0)^6(1)^18");
    CHECK(run.record.outcome == "computed");
    CHECK(run.record.exhausted);
    CHECK(run.record.nodes > 0);
    CHECK(run.record.version == kToolVersion);
}

TEST_CASE("oracle on the extremal coloring")
{
    auto run = invoke({"oracle", "--k", "8", "--r", "4", "--coloring", "(0)^6(1)^18"});
    CHECK(run.code == kOk);
    CHECK(run.record.outcome == "no-solution");
    CHECK(run.record.n == 24);

    auto hit = invoke({"oracle", "--k", "8", "--r", "4", "--coloring", "(0)^6(1)^19"});
    CHECK(hit.code == kOk);
    CHECK(hit.record.outcome.rfind("solution: ", 0) == 0);
}

TEST_CASE("audit reports out-of-domain tuples")
{
    auto run = invoke({"audit", "--k", "10", "--r", "5"});
    CHECK(run.code == kOk);
    REQUIRE(run.record.anomalies.size() == 3);
    for (const auto& a : run.record.anomalies)
        CHECK(a.find("47 > 41") != std::string::npos);
    CHECK(invoke({"audit", "--k", "8", "--r", "4"}).record.anomalies.empty());
}

TEST_CASE("exit codes")
{
    auto invalid = invoke({"compute", "--k", "6", "--r", "4"});
    CHECK(invalid.code == kInvalid);
    CHECK(invalid.record.outcome.rfind("invalid: ", 0) == 0);

    auto usage = invoke({"compute", "--r", "4"});
    CHECK(usage.code == kUsage);
    CHECK(invoke({"frobnicate"}).code == kUsage);
    CHECK(invoke({"compute", "--k", "8", "--r", "4", "--mode", "other"}).code == kUsage);

    auto budget = invoke({"compute", "--k", "8", "--r", "4", "--node-budget", "1"});
    CHECK(budget.code == kBudget);
    CHECK(budget.record.outcome.rfind("budget-exceeded", 0) == 0);
    CHECK_FALSE(budget.record.exhausted);

    CHECK(invoke({"oracle", "--k", "8", "--r", "4", "--coloring", "(0)^6(2)^18"}).code == kInvalid);
    CHECK(invoke({"oracle", "--k", "8", "--r", "4", "--coloring", "(0"}).code == kInvalid);
}

TEST_CASE("worker count does not change results")
{
    auto one = invoke({"compute", "--k", "12", "--r", "4", "--workers", "1"});
    auto eight = invoke({"compute", "--k", "12", "--r", "4", "--workers", "8"});
    CHECK(one.record.value == 41);
    CHECK(one.record.value == eight.record.value);
    CHECK(one.record.witness == eight.record.witness);
    CHECK(one.record.outcome == eight.record.outcome);
}

TEST_CASE("JSON round trip")
{
    RunRecord r;
    r.command = "certify";
    r.k = 8;
    r.r = 4;
    r.colors = 2;
    r.n = 25;
    r.witness = "(0)^25";
    r.outcome = "certified lemma1.1: 1+1+1+1+1+1+1=7";
    r.path = std::vector<std::pair<int, int>>{{1, 0}, {3, 0}, {7, 0}};
    r.nodes = 5;
    CHECK(from_json(to_json(r)) == r);

    CHECK_THROWS_AS(from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(from_json("{}"), std::invalid_argument);
    std::string extra = to_json(r);
    extra.insert(1, "\"extra\":1,");
    CHECK_THROWS_AS(from_json(extra), std::invalid_argument);
}

TEST_CASE("formula and witness-search")
{
    auto f = invoke({"formula", "--k", "10", "--r", "5"});
    CHECK(f.record.value == 41);
    CHECK(f.record.witness == "(0)^8(1)^32");
    auto small = invoke({"formula", "--k", "3", "--r", "3"});
    CHECK(small.record.value == 5);
    CHECK_FALSE(small.record.witness);

    auto found = invoke({"witness-search", "--k", "3", "--r", "3", "--colors", "3", "--n", "9"});
    CHECK(found.code == kOk);
    CHECK(found.record.outcome == "found");
    REQUIRE(found.record.witness);
    auto none = invoke({"witness-search", "--k", "8", "--r", "4", "--n", "25"});
    CHECK(none.record.outcome == "none");

    auto mono = invoke({"compute", "--k", "4", "--r", "2", "--mode", "mono"});
    CHECK(mono.record.value == 11);
}

TEST_CASE("certify")
{
    auto zero = invoke({"certify", "--k", "8", "--r", "4", "--coloring", "(0)^25"});
    CHECK(zero.code == kOk);
    CHECK(zero.record.outcome == "certified lemma1.1: 1+1+1+1+1+1+1=7");
    CHECK(zero.record.path == std::vector<std::pair<int, int>>{{1, 0}, {3, 0}, {7, 0}});

    auto a = invoke({"certify", "--k", "8", "--r", "4", "--seed", "7"});
    auto b = invoke({"certify", "--k", "8", "--r", "4", "--seed", "7"});
    CHECK(a.code == kOk);
    CHECK(a.record == b.record);
    CHECK(a.record.outcome.rfind("certified ", 0) == 0);

    auto file = scratch("coloring.txt");
    std::ofstream(file) << "(0)^2(1)^23\n";
    auto fromfile = invoke({"certify", "--k", "8", "--r", "4", "--coloring", "@" + file.string()});
    CHECK(fromfile.record.outcome == "certified lemma2.f: 3+3+3+3+3+3+7=25");
    std::filesystem::remove(file);

    CHECK(invoke({"certify", "--k", "8", "--r", "4", "--coloring", "(0)^24"}).code == kInvalid);
}

TEST_CASE("lemma-check")
{
    auto run = invoke({"lemma-check", "--k", "8", "--r", "4", "--seed", "3"});
    CHECK(run.code == kOk);
    CHECK(run.record.outcome.rfind("pass", 0) == 0);
}

TEST_CASE("export-cnf writes DIMACS")
{
    auto file = scratch("cnf.cnf");
    auto run = invoke({"export-cnf", "--k", "4", "--r", "2", "--n", "5", "--out", file.string()});
    CHECK(run.code == kOk);
    CHECK(run.record.outcome.rfind("cnf: 5 variables, ", 0) == 0);
    std::ifstream in(file);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(text.find("p cnf 5 ") != std::string::npos);
    CHECK(text.rfind("c ", 0) == 0);
    std::filesystem::remove(file);

    CHECK(invoke({"export-cnf", "--k", "4", "--r", "2", "--n", "5"}).code == kInvalid);
}

TEST_CASE("--out copies the record")
{
    auto file = scratch("record.json");
    auto run = invoke({"formula", "--k", "8", "--r", "4", "--out", file.string()});
    std::ifstream in(file);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(from_json(text) == run.record);
    std::filesystem::remove(file);
}
