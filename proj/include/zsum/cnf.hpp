#pragma once

#include "zsum/params.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace zsum {

inline constexpr int kCnfEncodingVersion = 1;
inline constexpr std::uint64_t kDefaultClauseLimit = 10'000'000;

/// Variable i (1-based) is true iff color(i) = 1. Literals follow DIMACS
/// sign conventions.
struct CnfDocument {
    int k = 0;
    int r = 0;
    int n = 0;
    Mode mode = Mode::ZeroSum;
    std::vector<std::vector<int>> clauses;

    int variables() const noexcept { return n; }
};

/// Forbids, for every solution multiset within [1, n], each 0/1 assignment
/// to its distinct values that makes it zero-sum (or monochromatic). The
/// formula is satisfiable iff a solution-free 2-coloring of [1, n] exists.
/// Throws DomainError unless c = 2 and LimitExceeded once more than
/// `clause_limit` clauses would be produced.
CnfDocument export_cnf(int n, const Params& params, std::uint64_t clause_limit = kDefaultClauseLimit);

/// DIMACS text: comment lines, "p cnf <vars> <clauses>", one clause per line.
void write_dimacs(std::ostream& out, const CnfDocument& cnf);

} // namespace zsum
