#pragma once

#include <string>
#include <vector>

namespace zsum {

/// A solution of x_1 + ... + x_{k-1} = x_k in positive integers. Summands
/// are held sorted ascending, so two tuples compare equal exactly when they
/// have the same multiset of summands. The constructor refuses anything
/// whose summands do not add up to the target.
class SolutionTuple {
public:
    /// Throws DomainError when the summand list is empty, a value is not
    /// positive, or the sum differs from `target`.
    SolutionTuple(std::vector<int> summands, int target);

    /// Builds the tuple whose target is the sum of `summands`.
    static SolutionTuple from_summands(std::vector<int> summands);

    const std::vector<int>& summands() const noexcept { return summands_; }
    int target() const noexcept { return target_; }
    /// Entry count k (summands plus target).
    int size() const noexcept { return static_cast<int>(summands_.size()) + 1; }
    int max_element() const noexcept { return target_; }

    /// Summands followed by the target.
    std::vector<int> entries() const;

    /// "1+1+1=3".
    std::string to_string() const;

    friend bool operator==(const SolutionTuple&, const SolutionTuple&) = default;
    /// Lexicographic on summands, then target.
    friend auto operator<=>(const SolutionTuple& a, const SolutionTuple& b)
    {
        if (auto c = a.summands_ <=> b.summands_; c != 0)
            return c;
        return a.target_ <=> b.target_;
    }

private:
    std::vector<int> summands_;
    int target_;
};

/// Convenience for tuples written as runs, e.g. {{1, k - r}, {k - 1, r - 1}}.
struct Run {
    int value;
    int count;
};
SolutionTuple tuple_from_runs(const std::vector<Run>& runs, int target);

} // namespace zsum
