#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace zsum {

using Color = std::uint8_t;

/// Total assignment of colors {0..c-1} to the interval [1, n].
class Coloring {
public:
    /// Empty coloring of [1, 0] over a palette of `palette` colors.
    explicit Coloring(int palette = 2);

    /// colors[i-1] is the color of i. Throws ColorRangeError if any entry is
    /// not below `palette`.
    Coloring(std::vector<Color> colors, int palette);

    int n() const noexcept { return static_cast<int>(colors_.size()); }
    int palette() const noexcept { return palette_; }

    /// Color of i, 1 <= i <= n.
    Color operator()(int i) const { return colors_[static_cast<std::size_t>(i - 1)]; }
    Color at(int i) const;

    const std::vector<Color>& colors() const noexcept { return colors_; }

    /// 1 - color for every position; only meaningful for 2-colorings.
    Coloring complemented() const;
    /// Coloring of [1, m], m <= n.
    Coloring prefix(int m) const;
    /// Appends color for n + 1.
    Coloring extended(Color color) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
    int palette_;
};

/// Accepts the run-length form "(d)^count(d)^count..." (whitespace between
/// runs ignored) or a plain digit string. Throws ParseError on malformed
/// text and ColorRangeError on digits >= palette.
Coloring parse_coloring(std::string_view text, int palette);

/// Maximal-run run-length form; "" for the empty coloring.
std::string format_coloring(const Coloring& coloring);

/// Plain digit string, one digit per position.
std::string format_digits(const Coloring& coloring);

/// Uniform coloring of [1, n] drawn from raw engine output, so a seed
/// reproduces the same coloring on every platform.
Coloring random_coloring(int n, int palette, std::mt19937_64& rng);

} // namespace zsum
