#pragma once

#include "zsum/coloring.hpp"
#include "zsum/params.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace zsum {

/// Default ceiling on k * classes * (cap + 1) table bits (1 GiB).
inline constexpr std::uint64_t kDefaultTableBitBudget = std::uint64_t{1} << 33;

/// Dimensions of a reachability table. Unlike Params it does not insist
/// on r | k: the sumset recurrence is meaningful for any modulus.
struct TableShape {
    int k;
    int r;
    int colors;
    Mode mode;

    TableShape(const Params& params) // NOLINT: implicit by intent
        : k(params.k()), r(params.r()), colors(params.colors()), mode(params.mode())
    {
    }
    /// Throws RangeError unless k >= 2, r >= 2 and 2 <= colors <= 10.
    TableShape(int k, int r, int colors, Mode mode = Mode::ZeroSum);

    int classes() const noexcept { return mode == Mode::ZeroSum ? r : colors; }
};

/// Layered sumset table. Layer j, class w holds the sums s <= cap that are
/// realizable by a multiset of exactly j elements of the colored prefix
/// whose color-weight is w mod r (zero-sum mode) or whose elements all
/// have color w (monochromatic mode). Layers run j = 0..k-1.
///
/// Sets are packed 64 sums per word; bits above cap are always clear.
class ReachabilityTable {
public:
    using Word = std::uint64_t;

    /// Table over the empty prefix [1, 0]. Throws ResourceError when the
    /// table would exceed `bit_budget` bits.
    ReachabilityTable(const TableShape& shape, int cap, std::uint64_t bit_budget = kDefaultTableBitBudget);

    int cap() const noexcept { return cap_; }
    int layers() const noexcept { return layers_; }
    int classes() const noexcept { return classes_; }
    int words_per_set() const noexcept { return words_; }
    /// Largest element folded into the table so far.
    int domain() const noexcept { return domain_; }

    bool contains(int j, int w, int sum) const noexcept;
    std::span<const Word> set(int j, int w) const noexcept;
    std::span<Word> set(int j, int w) noexcept;
    /// Sums of layer j, class w in ascending order.
    std::vector<int> sums(int j, int w) const;

    /// Folds element domain() + 1 with the given color into every layer,
    /// accounting for repeated use of the new element.
    void extend(Color color);

    /// Weight class a target of color `color` must pair with in the top
    /// layer for the whole tuple to be zero-sum (or monochromatic).
    int partner_class(Color color) const noexcept;

    /// True when domain() + 1 colored `color` would complete a solution
    /// whose summands lie in the current domain.
    bool closes_solution(int target, Color color) const noexcept;

    /// Marks, in `out` (words_per_set() words), every sum in (from, to]
    /// that every color in [0, palette) would turn into a solution target.
    void blocked_positions(int from, int to, std::span<Word> out) const noexcept;

    friend bool operator==(const ReachabilityTable&, const ReachabilityTable&) = default;

private:
    std::size_t offset(int j, int w) const noexcept
    {
        return (static_cast<std::size_t>(j) * static_cast<std::size_t>(classes_) + static_cast<std::size_t>(w))
            * static_cast<std::size_t>(words_);
    }

    Mode mode_;
    int r_;
    int palette_;
    int cap_;
    int layers_;
    int classes_;
    int words_;
    int domain_ = 0;
    Word top_mask_;
    std::vector<Word> bits_;

    friend ReachabilityTable build_reachability(const Coloring&, const TableShape&, int, std::uint64_t);
};

/// Direct layer-by-layer construction for the whole coloring:
/// R[j][w] = union over v in [1, n] of shift(R[j-1][w - color(v)], v).
/// cap < 0 selects cap = n.
ReachabilityTable build_reachability(const Coloring& coloring, const TableShape& shape, int cap = -1,
    std::uint64_t bit_budget = kDefaultTableBitBudget);

} // namespace zsum
