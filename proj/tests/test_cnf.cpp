#include "support/brute.hpp"

#include "zsum/cnf.hpp"
#include "zsum/errors.hpp"
#include "zsum/search.hpp"

#include <doctest.h>

#include <sstream>

using namespace zsum;
using zsum::testing::brute_sat;

TEST_CASE("n=4, k=4, r=2 is satisfiable with model 0011")
{
    auto cnf = export_cnf(4, validate_params(4, 2, 2));
    CHECK(cnf.variables() == 4);
    CHECK(brute_sat(cnf).has_value());
    // 0011: variables 3 and 4 true.
    CHECK(zsum::testing::satisfied_by(cnf, 0b1100));
}

TEST_CASE("n=5, k=4, r=2 is unsatisfiable")
{
    CHECK_FALSE(brute_sat(export_cnf(5, validate_params(4, 2, 2))).has_value());
}

TEST_CASE("vacuous instance")
{
    auto cnf = export_cnf(1, validate_params(3, 3, 2));
    CHECK(cnf.variables() == 1);
    CHECK(cnf.clauses.empty());
}

TEST_CASE("CNF satisfiability matches the search for n <= 13")
{
    const Params grid[] = {validate_params(4, 2, 2), validate_params(6, 2, 2), validate_params(3, 3, 2),
        validate_params(6, 3, 2), validate_params(4, 4, 2), validate_params(8, 4, 2),
        validate_params(3, 2, 2, Mode::Monochromatic), validate_params(4, 2, 2, Mode::Monochromatic)};
    for (const auto& p : grid)
        for (int n = 0; n <= 13; ++n) {
            auto cnf = export_cnf(n, p);
            auto model = brute_sat(cnf);
            CHECK(model.has_value() == exists_zero_sum_free_coloring(n, p).has_value());
            if (model) {
                std::vector<Color> colors;
                for (int i = 1; i <= n; ++i)
                    colors.push_back(static_cast<Color>((*model >> (i - 1)) & 1U));
                CHECK_FALSE(has_zero_sum_solution(Coloring(colors, 2), p));
            }
        }
}

TEST_CASE("DIMACS text")
{
    auto cnf = export_cnf(5, validate_params(4, 2, 2));
    std::ostringstream out;
    write_dimacs(out, cnf);
    std::istringstream in(out.str());
    std::string line;
    std::size_t clauses = 0;
    bool header = false;
    bool saw_version = false;
    while (std::getline(in, line)) {
        if (line.rfind("c ", 0) == 0) {
            CHECK_FALSE(header);
            saw_version = saw_version || line.find("encoding-version 1") != std::string::npos;
            continue;
        }
        if (line.rfind("p cnf ", 0) == 0) {
            CHECK(line == "p cnf 5 " + std::to_string(cnf.clauses.size()));
            header = true;
            continue;
        }
        REQUIRE(header);
        CHECK(line.size() >= 2);
        CHECK(line.substr(line.size() - 2) == " 0");
        std::istringstream literals(line);
        int lit = 0, last = 1;
        while (literals >> lit) {
            CHECK(std::abs(lit) <= 5);
            last = lit;
        }
        CHECK(last == 0);
        ++clauses;
    }
    CHECK(saw_version);
    CHECK(clauses == cnf.clauses.size());
}

TEST_CASE("CNF preconditions")
{
    CHECK_THROWS_AS(export_cnf(5, validate_params(6, 3, 3)), DomainError);
    CHECK_THROWS_AS(export_cnf(-1, validate_params(4, 2, 2)), DomainError);
    CHECK_THROWS_AS(export_cnf(30, validate_params(8, 4, 2), 100), LimitExceeded);
}
