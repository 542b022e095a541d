#include "zsum/params.hpp"

#include "zsum/errors.hpp"

namespace zsum {

std::string_view to_string(Mode mode)
{
    return mode == Mode::ZeroSum ? "zero-sum" : "mono";
}

Mode parse_mode(std::string_view text)
{
    if (text == "zero-sum")
        return Mode::ZeroSum;
    if (text == "mono" || text == "monochromatic")
        return Mode::Monochromatic;
    throw RangeError("unknown mode '" + std::string(text) + "'");
}

Params validate_params(int k, int r, int c, Mode mode)
{
    if (k < 3)
        throw RangeError("k must be at least 3, got " + std::to_string(k));
    if (r < 2)
        throw RangeError("r must be at least 2, got " + std::to_string(r));
    if (mode == Mode::ZeroSum) {
        if (k % r != 0)
            throw DivisibilityError(std::to_string(r) + " does not divide " + std::to_string(k));
        if (c < 2 || c > r)
            throw RangeError("color count must lie in [2, r], got " + std::to_string(c));
    }
    else if (c < 2 || c > kMaxColors) {
        throw RangeError("color count must lie in [2, 10], got " + std::to_string(c));
    }
    return Params(k, r, c, mode);
}

} // namespace zsum
