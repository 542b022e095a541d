#include "zsum/solution_tuple.hpp"

#include "zsum/errors.hpp"

#include <algorithm>
#include <numeric>

namespace zsum {

SolutionTuple::SolutionTuple(std::vector<int> summands, int target)
    : summands_(std::move(summands)), target_(target)
{
    if (summands_.empty())
        throw DomainError("a solution needs at least one summand");
    std::sort(summands_.begin(), summands_.end());
    if (summands_.front() < 1)
        throw DomainError("solution entries must be positive");
    long long sum = std::accumulate(summands_.begin(), summands_.end(), 0LL);
    if (sum != target_)
        throw DomainError("summands add up to " + std::to_string(sum) + ", not " + std::to_string(target_));
}

SolutionTuple SolutionTuple::from_summands(std::vector<int> summands)
{
    long long sum = std::accumulate(summands.begin(), summands.end(), 0LL);
    return SolutionTuple(std::move(summands), static_cast<int>(sum));
}

std::vector<int> SolutionTuple::entries() const
{
    auto out = summands_;
    out.push_back(target_);
    return out;
}

std::string SolutionTuple::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        if (i)
            out += '+';
        out += std::to_string(summands_[i]);
    }
    out += '=';
    out += std::to_string(target_);
    return out;
}

SolutionTuple tuple_from_runs(const std::vector<Run>& runs, int target)
{
    std::vector<int> summands;
    for (const auto& run : runs) {
        if (run.count < 0)
            throw DomainError("negative multiplicity for value " + std::to_string(run.value));
        summands.insert(summands.end(), static_cast<std::size_t>(run.count), run.value);
    }
    return SolutionTuple(std::move(summands), target);
}

} // namespace zsum
