#include "zsum/coloring.hpp"

#include "zsum/errors.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace zsum {

namespace {

    void check_palette(int palette)
    {
        if (palette < 1 || palette > 10)
            throw RangeError("palette size must lie in [1, 10], got " + std::to_string(palette));
    }

    Color digit_color(char ch, int palette)
    {
        int value = ch - '0';
        if (value >= palette)
            throw ColorRangeError("color " + std::to_string(value) + " not below palette size "
                + std::to_string(palette));
        return static_cast<Color>(value);
    }

    bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }
    bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

    // Runs beyond this length would not fit any table this tool can build.
    constexpr long long kMaxLength = 1LL << 28;

} // namespace

Coloring::Coloring(int palette) : palette_(palette) { check_palette(palette); }

Coloring::Coloring(std::vector<Color> colors, int palette) : colors_(std::move(colors)), palette_(palette)
{
    check_palette(palette);
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] >= palette_)
            throw ColorRangeError("color " + std::to_string(colors_[i]) + " at position "
                + std::to_string(i + 1) + " not below palette size " + std::to_string(palette_));
}

Color Coloring::at(int i) const
{
    if (i < 1 || i > n())
        throw DomainError("position " + std::to_string(i) + " outside [1, " + std::to_string(n()) + "]");
    return (*this)(i);
}

Coloring Coloring::complemented() const
{
    Coloring out = *this;
    for (auto& c : out.colors_)
        c = static_cast<Color>(palette_ - 1 - c);
    return out;
}

Coloring Coloring::prefix(int m) const
{
    if (m < 0 || m > n())
        throw DomainError("prefix length " + std::to_string(m) + " outside [0, " + std::to_string(n()) + "]");
    return Coloring(std::vector<Color>(colors_.begin(), colors_.begin() + m), palette_);
}

Coloring Coloring::extended(Color color) const
{
    auto colors = colors_;
    colors.push_back(color);
    return Coloring(std::move(colors), palette_);
}

Coloring parse_coloring(std::string_view text, int palette)
{
    check_palette(palette);
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && is_space(text[pos]))
            ++pos;
    };
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError(what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    };

    skip_space();
    std::vector<Color> colors;
    if (pos == text.size())
        return Coloring(std::move(colors), palette);

    if (is_digit(text[pos])) {
        while (pos < text.size() && is_digit(text[pos]))
            colors.push_back(digit_color(text[pos++], palette));
        skip_space();
        if (pos != text.size())
            throw fail("unexpected character");
        return Coloring(std::move(colors), palette);
    }

    while (pos < text.size()) {
        if (text[pos] != '(')
            throw fail("expected '('");
        ++pos;
        if (pos >= text.size() || !is_digit(text[pos]))
            throw fail("expected a digit");
        char digit = text[pos++];
        if (pos >= text.size() || text[pos] != ')')
            throw fail("expected ')'");
        ++pos;
        if (pos >= text.size() || text[pos] != '^')
            throw fail("expected '^'");
        ++pos;
        long long count = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), count);
        if (ec != std::errc{} || end == text.data() + pos)
            throw fail("expected a run length");
        if (text[pos] == '+' || count <= 0)
            throw fail("run length must be positive");
        pos = static_cast<std::size_t>(end - text.data());
        if (static_cast<long long>(colors.size()) + count > kMaxLength)
            throw fail("coloring too long");
        Color color = digit_color(digit, palette);
        colors.insert(colors.end(), static_cast<std::size_t>(count), color);
        skip_space();
    }
    return Coloring(std::move(colors), palette);
}

std::string format_coloring(const Coloring& coloring)
{
    std::string out;
    const auto& colors = coloring.colors();
    std::size_t i = 0;
    while (i < colors.size()) {
        std::size_t j = i;
        while (j < colors.size() && colors[j] == colors[i])
            ++j;
        out += '(';
        out += static_cast<char>('0' + colors[i]);
        out += ")^";
        out += std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string format_digits(const Coloring& coloring)
{
    std::string out;
    out.reserve(coloring.colors().size());
    for (auto c : coloring.colors())
        out += static_cast<char>('0' + c);
    return out;
}

Coloring random_coloring(int n, int palette, std::mt19937_64& rng)
{
    std::vector<Color> colors(static_cast<std::size_t>(n));
    for (auto& c : colors)
        c = static_cast<Color>(rng() % static_cast<std::uint64_t>(palette));
    return Coloring(std::move(colors), palette);
}

} // namespace zsum
