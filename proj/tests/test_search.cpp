#include "support/brute.hpp"

#include "zsum/oracle.hpp"
#include "zsum/search.hpp"

#include <doctest.h>

using namespace zsum;

namespace {

SearchConfig with_symmetry(Symmetry s)
{
    SearchConfig config;
    config.symmetry = s;
    return config;
}

SearchConfig with_workers(int workers, int split = 8)
{
    SearchConfig config;
    config.worker_count = workers;
    config.split_depth = split;
    return config;
}

} // namespace

TEST_CASE("exists_zero_sum_free_coloring examples")
{
    auto p = validate_params(4, 2, 2);
    auto w = exists_zero_sum_free_coloring(4, p);
    REQUIRE(w);
    CHECK(format_digits(*w) == "0011");
    CHECK_FALSE(exists_zero_sum_free_coloring(5, p));

    auto p33 = validate_params(3, 3, 3);
    auto w3 = exists_zero_sum_free_coloring(9, p33);
    REQUIRE(w3);
    CHECK(w3->n() == 9);
    CHECK_FALSE(has_zero_sum_solution(*w3, p33));

    CHECK(exists_zero_sum_free_coloring(0, p) == Coloring(2));
    CHECK_THROWS_AS(exists_zero_sum_free_coloring(-1, p), DomainError);
}

TEST_CASE("compute_schur_number examples")
{
    auto a = compute_schur_number(validate_params(4, 2, 2));
    CHECK(a.value == 5);
    CHECK(a.exhausted);
    auto b = compute_schur_number(validate_params(8, 4, 2));
    CHECK(b.value == 25);
    REQUIRE(b.witness);
    CHECK(b.witness->n() == 24);
    CHECK(compute_schur_number(validate_params(3, 3, 2)).value == 5);
}

TEST_CASE("search threshold equals brute-force threshold")
{
    const int expected[][3] = {{4, 2, 5}, {6, 2, 9}, {8, 2, 13}, {3, 3, 5}, {6, 3, 13}, {4, 4, 11}};
    for (const auto& [k, r, value] : expected) {
        auto p = validate_params(k, r, 2);
        CAPTURE(k);
        CAPTURE(r);
        auto result = compute_schur_number(p);
        CHECK(result.value == zsum::testing::brute_threshold(p));
        CHECK(result.value == value);
        REQUIRE(result.witness);
        CHECK(result.witness->n() == result.value - 1);
        CHECK_FALSE(has_zero_sum_solution(*result.witness, p));
    }
}

TEST_CASE("witness is the lexicographically least free coloring")
{
    const Params grid[] = {validate_params(4, 2, 2), validate_params(6, 3, 2), validate_params(4, 4, 2),
        validate_params(3, 3, 3), validate_params(3, 2, 3, Mode::Monochromatic),
        validate_params(3, 2, 2, Mode::Monochromatic)};
    for (const auto& p : grid) {
        const int top = p.colors() == 2 ? 12 : 9;
        for (int n = 1; n <= top; ++n) {
            auto expect = zsum::testing::brute_least_free(n, p);
            for (auto s : {Symmetry::None, Symmetry::FixFirstColor, Symmetry::FixPlusUnitMult})
                CHECK(exists_zero_sum_free_coloring(n, p, with_symmetry(s)) == expect);
        }
    }
}

TEST_CASE("symmetry reduction never changes the threshold")
{
    const Params grid[] = {validate_params(4, 2, 2), validate_params(8, 4, 2), validate_params(6, 3, 2),
        validate_params(3, 3, 3), validate_params(2 * 2, 2, 2, Mode::Monochromatic)};
    for (const auto& p : grid) {
        auto base = compute_schur_number(p, with_symmetry(Symmetry::None));
        for (auto s : {Symmetry::FixFirstColor, Symmetry::FixPlusUnitMult}) {
            auto other = compute_schur_number(p, with_symmetry(s));
            CHECK(other.value == base.value);
            CHECK(other.witness == base.witness);
        }
    }
}

TEST_CASE("zero-sum free 3-colorings: S_z(3;3) and S_z(6;3) lower bounds")
{
    auto p33 = validate_params(3, 3, 3);
    auto nine = exists_zero_sum_free_coloring(9, p33);
    REQUIRE(nine);
    CHECK_FALSE(find_zero_sum_solution_naive(*nine, p33));

    auto p63 = validate_params(6, 3, 3);
    auto fourteen = exists_zero_sum_free_coloring(14, p63);
    REQUIRE(fourteen);
    CHECK_FALSE(find_zero_sum_solution_naive(*fourteen, p63));
}

TEST_CASE("monotonicity: restrictions of witnesses stay free")
{
    auto p = validate_params(8, 4, 2);
    auto top = exists_zero_sum_free_coloring(24, p);
    REQUIRE(top);
    for (int n = 0; n < 24; ++n) {
        CHECK_FALSE(has_zero_sum_solution(top->prefix(n), p));
        CHECK(exists_zero_sum_free_coloring(n, p).has_value());
    }
}

TEST_CASE("results do not depend on worker count or split depth")
{
    const Params grid[] = {validate_params(4, 2, 2), validate_params(8, 2, 2), validate_params(6, 3, 2),
        validate_params(3, 3, 2), validate_params(4, 4, 2), validate_params(8, 4, 2), validate_params(12, 4, 2),
        validate_params(10, 5, 2), validate_params(3, 3, 3), validate_params(4, 2, 2, Mode::Monochromatic)};
    for (const auto& p : grid) {
        auto base = compute_schur_number(p, with_workers(1));
        for (int workers : {2, 8})
            for (int split : {0, 3, 8, 30}) {
                auto other = compute_schur_number(p, with_workers(workers, split));
                CHECK(other.value == base.value);
                CHECK(other.witness == base.witness);
                CHECK(other.exhausted == base.exhausted);
            }
        for (int n : {base.value - 1, base.value}) {
            auto one = exists_zero_sum_free_coloring(n, p, with_workers(1));
            for (int workers : {2, 8})
                CHECK(exists_zero_sum_free_coloring(n, p, with_workers(workers, 4)) == one);
        }
    }
}

TEST_CASE("budgets and interrupts")
{
    SearchConfig tight;
    tight.node_budget = 1;
    auto p = validate_params(8, 4, 2);
    try {
        compute_schur_number(p, tight);
        FAIL("expected BudgetExceeded");
    }
    catch (const BudgetExceeded& e) {
        REQUIRE(e.partial());
        CHECK_FALSE(e.partial()->exhausted);
        CHECK(e.partial()->value <= 25);
    }
    CHECK_THROWS_AS(exists_zero_sum_free_coloring(24, p, tight), BudgetExceeded);

    std::atomic<bool> stop{true};
    SearchConfig interrupted;
    interrupted.interrupt = &stop;
    interrupted.worker_count = 2;
    CHECK_THROWS_AS(compute_schur_number(p, interrupted), BudgetExceeded);

    SearchConfig bad;
    bad.worker_count = 0;
    CHECK_THROWS_AS(compute_schur_number(p, bad), RangeError);
    bad = {};
    bad.node_budget = 0;
    CHECK_THROWS_AS(compute_schur_number(p, bad), RangeError);
}

TEST_CASE("symmetry names")
{
    for (auto s : {Symmetry::None, Symmetry::FixFirstColor, Symmetry::FixPlusUnitMult})
        CHECK(parse_symmetry(to_string(s)) == s);
    CHECK_THROWS_AS(parse_symmetry("mirror"), RangeError);
}
