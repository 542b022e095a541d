#pragma once

#include "zsum/coloring.hpp"
#include "zsum/errors.hpp"
#include "zsum/params.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace zsum {

/// Color-symmetry reduction applied while branching.
///
/// FixFirstColor pins color(1) = 0, which is sound for every instance the
/// search accepts: the map x -> c - 1 - x turns weight w into k(c-1) - w,
/// and r | k makes that -w mod r. FixPlusUnitMult additionally restricts
/// the first nonzero color to a divisor of r when c = r (the affine maps
/// x -> ux + b with u a unit preserve zero-sum), and introduces colors in
/// first-use order in monochromatic mode. Neither reduction changes the
/// lexicographically least feasible coloring.
enum class Symmetry { None, FixFirstColor, FixPlusUnitMult };

std::string_view to_string(Symmetry symmetry);
Symmetry parse_symmetry(std::string_view text);

struct SearchConfig {
    int worker_count = 1;
    std::optional<std::uint64_t> node_budget;
    std::optional<std::chrono::milliseconds> time_budget = std::chrono::minutes(10);
    Symmetry symmetry = Symmetry::FixFirstColor;
    /// Depth at which the tree is cut into independent subtrees.
    int split_depth = 8;
    /// Polled cooperatively; setting it stops the search like a budget trip.
    const std::atomic<bool>* interrupt = nullptr;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::chrono::milliseconds elapsed{0};
};

struct SearchResult {
    /// Least t such that no coloring of [1, t] is zero-sum-free (a lower
    /// bound when exhausted is false).
    int value = 1;
    /// Lexicographically least zero-sum-free coloring of [1, value - 1];
    /// absent when value is 1.
    std::optional<Coloring> witness;
    SearchStats stats;
    bool exhausted = false;
};

/// Raised when a node or time budget (or an interrupt) stops a search
/// before it could answer. compute_schur_number attaches its best partial
/// result.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::optional<SearchResult> partial, SearchStats stats)
        : Error(what), partial_(std::move(partial)), stats_(stats)
    {
    }
    const std::optional<SearchResult>& partial() const noexcept { return partial_; }
    const SearchStats& stats() const noexcept { return stats_; }

private:
    std::optional<SearchResult> partial_;
    SearchStats stats_;
};

struct FreeColoringResult {
    std::optional<Coloring> coloring;
    SearchStats stats;
};

/// Lexicographically least coloring of [1, n] admitting no zero-sum (or
/// monochromatic) solution, among those the symmetry reduction keeps.
/// nullopt means the space was exhausted.
FreeColoringResult find_zero_sum_free_coloring(int n, const Params& params, const SearchConfig& config = {});

/// find_zero_sum_free_coloring without the statistics.
std::optional<Coloring> exists_zero_sum_free_coloring(int n, const Params& params, const SearchConfig& config = {});

/// Exact threshold by a single deepest-prefix search. The value and witness
/// do not depend on worker_count.
SearchResult compute_schur_number(const Params& params, const SearchConfig& config = {});

} // namespace zsum
