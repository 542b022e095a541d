#pragma once

#include "zsum/coloring.hpp"
#include "zsum/params.hpp"
#include "zsum/reachability.hpp"
#include "zsum/solution_tuple.hpp"

#include <cstdint>
#include <optional>

namespace zsum {

/// A solution together with its color-weight mod r.
struct ZeroSumWitness {
    SolutionTuple tuple;
    int weight;

    friend bool operator==(const ZeroSumWitness&, const ZeroSumWitness&) = default;
};

/// k - 1 summands, every entry in [1, n], summands adding to the target.
bool verify_tuple(const SolutionTuple& tuple, const Params& params, int n);

/// Sum of the colors of all entries (with multiplicity) mod r. Throws
/// DomainError when an entry exceeds coloring.n().
int tuple_weight(const SolutionTuple& tuple, const Coloring& coloring, int r);

/// True when every entry of the tuple has the same color.
bool is_monochromatic(const SolutionTuple& tuple, const Coloring& coloring);

/// Whether the tuple is a zero-sum (or monochromatic, per mode) solution
/// under the coloring. Entries must lie in [1, coloring.n()].
bool is_witness(const SolutionTuple& tuple, const Coloring& coloring, const Params& params);

inline constexpr std::uint64_t kDefaultNaiveLimit = 10'000'000;

/// Reference oracle: walks nondecreasing summand lists in lexicographic
/// order and returns the first witness. Throws LimitExceeded once more than
/// `limit` partial lists have been visited.
std::optional<ZeroSumWitness> find_zero_sum_solution_naive(
    const Coloring& coloring, const Params& params, std::uint64_t limit = kDefaultNaiveLimit);

/// Reachability-table oracle. Returns the lexicographically least witness,
/// the same one the naive oracle finds.
std::optional<ZeroSumWitness> find_zero_sum_solution(
    const Coloring& coloring, const Params& params, std::uint64_t bit_budget = kDefaultTableBitBudget);

/// Existence only; skips witness reconstruction.
bool has_zero_sum_solution(
    const Coloring& coloring, const Params& params, std::uint64_t bit_budget = kDefaultTableBitBudget);

} // namespace zsum
