#include "zsum/oracle.hpp"

#include "zsum/errors.hpp"

#include <algorithm>

namespace zsum {

namespace {

    int mod(int a, int m) noexcept
    {
        int x = a % m;
        return x < 0 ? x + m : x;
    }

    void check_palette(const Coloring& coloring, const Params& params)
    {
        if (coloring.palette() > params.colors())
            throw ColorRangeError("coloring palette exceeds the instance color count");
    }

    ZeroSumWitness make_witness(SolutionTuple tuple, const Coloring& coloring, const Params& params)
    {
        int weight = tuple_weight(tuple, coloring, params.r());
        return {std::move(tuple), weight};
    }

    class NaiveWalker {
    public:
        NaiveWalker(const Coloring& coloring, const Params& params, std::uint64_t limit)
            : coloring_(coloring), params_(params), limit_(limit),
              slots_(static_cast<std::size_t>(params.k() - 1))
        {
        }

        bool walk(int depth, int min_value, int sum, int weight)
        {
            if (++visited_ > limit_)
                throw LimitExceeded("naive oracle visited more than " + std::to_string(limit_) + " partial lists");
            const int slots_left = static_cast<int>(slots_.size()) - depth;
            if (slots_left == 0)
                return accepts(sum, weight);
            for (int v = min_value; sum + slots_left * v <= coloring_.n(); ++v) {
                if (params_.mode() == Mode::Monochromatic && depth > 0 && coloring_(v) != coloring_(slots_[0]))
                    continue;
                slots_[static_cast<std::size_t>(depth)] = v;
                if (walk(depth + 1, v, sum + v, weight + coloring_(v)))
                    return true;
            }
            return false;
        }

        const std::vector<int>& slots() const { return slots_; }

    private:
        bool accepts(int target, int weight) const
        {
            const Color target_color = coloring_(target);
            if (params_.mode() == Mode::Monochromatic)
                return target_color == coloring_(slots_[0]);
            return (weight + target_color) % params_.r() == 0;
        }

        const Coloring& coloring_;
        const Params& params_;
        std::uint64_t limit_;
        std::uint64_t visited_ = 0;
        std::vector<int> slots_;
    };

    // Smallest-first reconstruction of one summand multiset reaching `target`
    // in the top layer, class `w`.
    std::vector<int> reconstruct(const ReachabilityTable& table, const Coloring& coloring, const Params& params,
        int w, int target)
    {
        std::vector<int> out;
        int sum = target;
        for (int j = table.layers() - 1; j > 0; --j) {
            for (int v = 1; v <= sum; ++v) {
                const Color color = coloring(v);
                int prev;
                if (params.mode() == Mode::ZeroSum)
                    prev = mod(w - color, params.r());
                else if (color == w)
                    prev = w;
                else
                    continue;
                if (table.contains(j - 1, prev, sum - v)) {
                    out.push_back(v);
                    sum -= v;
                    w = prev;
                    break;
                }
            }
        }
        return out;
    }

} // namespace

bool verify_tuple(const SolutionTuple& tuple, const Params& params, int n)
{
    if (tuple.size() != params.k())
        return false;
    for (int v : tuple.summands())
        if (v < 1 || v > n)
            return false;
    if (tuple.target() < 1 || tuple.target() > n)
        return false;
    long long sum = 0;
    for (int v : tuple.summands())
        sum += v;
    return sum == tuple.target();
}

int tuple_weight(const SolutionTuple& tuple, const Coloring& coloring, int r)
{
    if (tuple.max_element() > coloring.n())
        throw DomainError("tuple entry " + std::to_string(tuple.max_element()) + " outside [1, "
            + std::to_string(coloring.n()) + "]");
    long long weight = coloring(tuple.target());
    for (int v : tuple.summands())
        weight += coloring(v);
    return static_cast<int>(weight % r);
}

bool is_monochromatic(const SolutionTuple& tuple, const Coloring& coloring)
{
    const Color color = coloring.at(tuple.target());
    return std::all_of(tuple.summands().begin(), tuple.summands().end(),
        [&](int v) { return coloring.at(v) == color; });
}

bool is_witness(const SolutionTuple& tuple, const Coloring& coloring, const Params& params)
{
    if (!verify_tuple(tuple, params, coloring.n()))
        return false;
    if (params.mode() == Mode::Monochromatic)
        return is_monochromatic(tuple, coloring);
    return tuple_weight(tuple, coloring, params.r()) == 0;
}

std::optional<ZeroSumWitness> find_zero_sum_solution_naive(
    const Coloring& coloring, const Params& params, std::uint64_t limit)
{
    check_palette(coloring, params);
    NaiveWalker walker(coloring, params, limit);
    if (!walker.walk(0, 1, 0, 0))
        return std::nullopt;
    return make_witness(SolutionTuple::from_summands(walker.slots()), coloring, params);
}

std::optional<ZeroSumWitness> find_zero_sum_solution(
    const Coloring& coloring, const Params& params, std::uint64_t bit_budget)
{
    check_palette(coloring, params);
    const auto table = build_reachability(coloring, params, coloring.n(), bit_budget);
    std::optional<std::vector<int>> best;
    for (int target = 1; target <= coloring.n(); ++target) {
        const Color color = coloring(target);
        if (!table.closes_solution(target, color))
            continue;
        auto summands = reconstruct(table, coloring, params, table.partner_class(color), target);
        if (!best || summands < *best)
            best = std::move(summands);
    }
    if (!best)
        return std::nullopt;
    return make_witness(SolutionTuple::from_summands(std::move(*best)), coloring, params);
}

bool has_zero_sum_solution(const Coloring& coloring, const Params& params, std::uint64_t bit_budget)
{
    check_palette(coloring, params);
    const auto table = build_reachability(coloring, params, coloring.n(), bit_budget);
    for (int target = 1; target <= coloring.n(); ++target)
        if (table.closes_solution(target, coloring(target)))
            return true;
    return false;
}

} // namespace zsum
