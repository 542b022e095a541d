#pragma once

#include <string>
#include <string_view>

namespace zsum {

enum class Mode { ZeroSum, Monochromatic };

std::string_view to_string(Mode mode);
/// Accepts "zero-sum" and "mono" (also "monochromatic").
Mode parse_mode(std::string_view text);

/// Largest palette the digit-based coloring grammar can express.
inline constexpr int kMaxColors = 10;

/// Instance of the equation x_1 + ... + x_{k-1} = x_k under a c-coloring,
/// asking for solutions of color-weight 0 mod r (or monochromatic ones).
///
/// Only validate_params() can build one, so every live Params satisfies
/// k >= 3, r >= 2, 2 <= c and, in zero-sum mode, r | k and c <= r.
class Params {
public:
    int k() const noexcept { return k_; }
    int r() const noexcept { return r_; }
    int colors() const noexcept { return c_; }
    Mode mode() const noexcept { return mode_; }

    /// Number of weight classes tracked by the reachability tables:
    /// residues mod r in zero-sum mode, colors in monochromatic mode.
    int classes() const noexcept { return mode_ == Mode::ZeroSum ? r_ : c_; }

    friend bool operator==(const Params&, const Params&) = default;

private:
    Params(int k, int r, int c, Mode mode) : k_(k), r_(r), c_(c), mode_(mode) {}
    friend Params validate_params(int k, int r, int c, Mode mode);

    int k_;
    int r_;
    int c_;
    Mode mode_;
};

/// Throws DivisibilityError when r does not divide k in zero-sum mode and
/// RangeError when k < 3, r < 2, or c is outside {2..r} (zero-sum) or
/// {2..10} (monochromatic).
Params validate_params(int k, int r, int c, Mode mode = Mode::ZeroSum);

} // namespace zsum
