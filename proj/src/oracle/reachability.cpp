#include "zsum/reachability.hpp"

#include "zsum/errors.hpp"

#include <bit>

namespace zsum {

namespace {

    using Word = ReachabilityTable::Word;

    // dst |= src << shift, dropping bits beyond the last word.
    void or_shifted(std::span<Word> dst, std::span<const Word> src, int shift) noexcept
    {
        const int n = static_cast<int>(dst.size());
        const int q = shift / 64;
        const int b = shift % 64;
        if (q >= n)
            return;
        if (b == 0) {
            for (int i = n - 1; i >= q; --i)
                dst[i] |= src[i - q];
            return;
        }
        for (int i = n - 1; i > q; --i)
            dst[i] |= (src[i - q] << b) | (src[i - q - 1] >> (64 - b));
        dst[q] |= src[0] << b;
    }

    int mod(int a, int m) noexcept
    {
        int x = a % m;
        return x < 0 ? x + m : x;
    }

} // namespace

TableShape::TableShape(int k_, int r_, int colors_, Mode mode_) : k(k_), r(r_), colors(colors_), mode(mode_)
{
    if (k < 2 || r < 2 || colors < 2 || colors > kMaxColors)
        throw RangeError("table shape needs k >= 2, r >= 2 and 2 <= colors <= 10");
}

ReachabilityTable::ReachabilityTable(const TableShape& shape, int cap, std::uint64_t bit_budget)
    : mode_(shape.mode), r_(shape.r), palette_(shape.colors), cap_(cap), layers_(shape.k),
      classes_(shape.classes()), words_(cap / 64 + 1)
{
    if (cap < 0)
        throw DomainError("table cap must be nonnegative");
    const std::uint64_t bits = static_cast<std::uint64_t>(layers_) * static_cast<std::uint64_t>(classes_)
        * static_cast<std::uint64_t>(words_) * 64U;
    if (bits > bit_budget)
        throw ResourceError("reachability table needs " + std::to_string(bits) + " bits, budget is "
            + std::to_string(bit_budget));
    const int top_bits = cap % 64 + 1;
    top_mask_ = top_bits == 64 ? ~Word{0} : ((Word{1} << top_bits) - 1);
    bits_.assign(static_cast<std::size_t>(layers_) * static_cast<std::size_t>(classes_)
            * static_cast<std::size_t>(words_),
        0);
    if (mode_ == Mode::ZeroSum)
        bits_[offset(0, 0)] = 1;
    else
        for (int w = 0; w < classes_; ++w)
            bits_[offset(0, w)] = 1;
}

bool ReachabilityTable::contains(int j, int w, int sum) const noexcept
{
    if (sum < 0 || sum > cap_)
        return false;
    return (bits_[offset(j, w) + static_cast<std::size_t>(sum / 64)] >> (sum % 64)) & 1U;
}

std::span<const ReachabilityTable::Word> ReachabilityTable::set(int j, int w) const noexcept
{
    return {bits_.data() + offset(j, w), static_cast<std::size_t>(words_)};
}

std::span<ReachabilityTable::Word> ReachabilityTable::set(int j, int w) noexcept
{
    return {bits_.data() + offset(j, w), static_cast<std::size_t>(words_)};
}

std::vector<int> ReachabilityTable::sums(int j, int w) const
{
    std::vector<int> out;
    auto words = set(j, w);
    for (int i = 0; i < words_; ++i) {
        Word word = words[static_cast<std::size_t>(i)];
        while (word) {
            out.push_back(i * 64 + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return out;
}

void ReachabilityTable::extend(Color color)
{
    const int value = ++domain_;
    if (value > cap_)
        return;
    for (int j = 1; j < layers_; ++j) {
        if (mode_ == Mode::ZeroSum) {
            for (int w = 0; w < classes_; ++w)
                or_shifted(set(j, w), set(j - 1, mod(w - color, r_)), value);
        }
        else {
            or_shifted(set(j, color), set(j - 1, color), value);
        }
    }
    for (int j = 1; j < layers_; ++j)
        for (int w = 0; w < classes_; ++w)
            set(j, w)[static_cast<std::size_t>(words_ - 1)] &= top_mask_;
}

int ReachabilityTable::partner_class(Color color) const noexcept
{
    return mode_ == Mode::ZeroSum ? mod(-static_cast<int>(color), r_) : static_cast<int>(color);
}

bool ReachabilityTable::closes_solution(int target, Color color) const noexcept
{
    return contains(layers_ - 1, partner_class(color), target);
}

void ReachabilityTable::blocked_positions(int from, int to, std::span<Word> out) const noexcept
{
    for (auto& word : out)
        word = ~Word{0};
    for (int color = 0; color < palette_; ++color) {
        auto forbidden = set(layers_ - 1, partner_class(static_cast<Color>(color)));
        for (int i = 0; i < words_; ++i)
            out[static_cast<std::size_t>(i)] &= forbidden[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < words_; ++i) {
        const int lo = i * 64;
        Word mask = ~Word{0};
        if (from >= lo + 63)
            mask = 0;
        else if (from >= lo)
            mask &= ~Word{0} << (from - lo + 1);
        if (to < lo)
            mask = 0;
        else if (to < lo + 63)
            mask &= (Word{1} << (to - lo + 1)) - 1;
        out[static_cast<std::size_t>(i)] &= mask;
    }
}

ReachabilityTable build_reachability(
    const Coloring& coloring, const TableShape& shape, int cap, std::uint64_t bit_budget)
{
    if (coloring.palette() > shape.colors)
        throw ColorRangeError("coloring palette exceeds the instance color count");
    ReachabilityTable table(shape, cap < 0 ? coloring.n() : cap, bit_budget);
    const int n = coloring.n();
    for (int j = 1; j < table.layers_; ++j) {
        for (int v = 1; v <= n && v <= table.cap_; ++v) {
            const Color color = coloring(v);
            if (shape.mode == Mode::ZeroSum) {
                for (int w = 0; w < table.classes_; ++w)
                    or_shifted(table.set(j, w), table.set(j - 1, mod(w - color, table.r_)), v);
            }
            else {
                or_shifted(table.set(j, color), table.set(j - 1, color), v);
            }
        }
        for (int w = 0; w < table.classes_; ++w)
            table.set(j, w)[static_cast<std::size_t>(table.words_ - 1)] &= table.top_mask_;
    }
    table.domain_ = n;
    return table;
}

} // namespace zsum
