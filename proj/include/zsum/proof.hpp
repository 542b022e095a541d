#pragma once

#include "zsum/coloring.hpp"
#include "zsum/oracle.hpp"
#include "zsum/params.hpp"
#include "zsum/solution_tuple.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace zsum {

/// Exact 2-color zero-sum threshold for r | k:
/// r = 2 -> 2k - 3, k = r -> k^2 - k - 1, r = 3 -> 3k - 5, otherwise
/// rk - 2r + 1. Throws DomainError unless k >= 2, r >= 2 and r | k.
int closed_form(int k, int r);

/// Upper end rk - 2r + 1 of the upper-bound domain for the k >= 2r regime.
int upper_domain(int k, int r);

/// The lower-bound coloring of [1, rk - 2r]: color 0 on [1, k - 2], color 1
/// after. Requires r >= 2, r | k, k >= 2r.
Coloring extremal_coloring(int k, int r);

struct LowerBoundReport {
    int domain = 0;          ///< rk - 2r
    int max_zero = 0;        ///< largest 0-colored integer
    int min_one = 0;         ///< smallest 1-colored integer
    int min_target = 0;      ///< k - 1, the least possible target
    int min_one_heavy_sum = 0; ///< (r - 1)(k - 1) + (k - r)
    bool no_zero_solution = false;
    bool min_one_ok = false;
    bool identity_ok = false;
    bool out_of_bounds = false;
    bool pass = false;
};

/// Re-derives the counting argument that makes extremal_coloring
/// zero-sum-free from the coloring itself.
LowerBoundReport verify_lower_bound_counting(int k, int r);

/// A tuple the upper-bound case analysis uses, together with the colors
/// assumed at the point it is applied. When `branch` is set the tuple is
/// zero-sum as soon as that integer has that color; otherwise it is
/// zero-sum under the assumptions alone.
struct ProofTuple {
    std::string label;
    SolutionTuple tuple;
    std::map<int, Color> assumed;
    std::optional<std::pair<int, Color>> branch;
};

/// Every tuple of the case analysis for r >= 4, r | k, k >= 2r, in the
/// order the certificate extractor tries them.
std::vector<ProofTuple> proof_tuples(int k, int r);

struct AuditEntry {
    std::string label;
    bool sum_ok = false;
    bool in_domain = false;
    int max_element = 0;
    int domain_bound = 0;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    /// Labels of tuples with an entry above rk - 2r + 1.
    std::vector<std::string> anomalies;
};

AuditReport audit_proof(int k, int r);

struct CertifiedSolution {
    ZeroSumWitness witness;
    /// Integers read, with their colors in the input coloring.
    std::vector<std::pair<int, Color>> path;
    bool complemented = false;
    std::string leaf;
};

struct ChainBroken {
    std::string reason;
    std::vector<std::pair<int, Color>> path;
    bool complemented = false;
};

using Certificate = std::variant<CertifiedSolution, ChainBroken>;

/// Reads a handful of colors and follows the upper-bound case analysis to
/// an explicit zero-sum solution on the input coloring. Only in-domain
/// tuples are used; where the argument would need rk - 3 the result is
/// ChainBroken. Requires a 2-coloring in zero-sum mode with r >= 4, r | k,
/// k >= 2r and n = rk - 2r + 1 (DomainError otherwise).
Certificate certified_solution(const Coloring& coloring, const Params& params);

/// Same decision tree over precomputed tuples; lets a caller certify many
/// colorings of one instance without rebuilding the inventory.
class CertificateExtractor {
public:
    CertificateExtractor(int k, int r);

    Certificate operator()(const Coloring& coloring) const;

    int k() const noexcept { return k_; }
    int r() const noexcept { return r_; }
    int domain() const noexcept { return domain_; }

private:
    const ProofTuple& find(const std::string& label) const;

    int k_;
    int r_;
    int domain_;
    std::vector<ProofTuple> tuples_;
};

struct LemmaCase {
    std::string label;
    int trials = 0;
    int failures = 0;
    std::optional<Coloring> counterexample;
};

struct LemmaCheckReport {
    std::vector<LemmaCase> cases;
    bool pass = false;
};

/// Samples `trials` random 2-colorings of [1, rk - 2r + 1] under the
/// hypothesis of each lemma case (lemma1: color(1) = color(r-1) = 0;
/// lemma2.a-f: color(1) = 0, color(r-1) = 1 plus that case's condition)
/// and confirms with the reachability oracle that each one admits a
/// zero-sum solution. Same regime as proof_tuples.
LemmaCheckReport check_lemmas(int k, int r, int trials, std::uint64_t seed);

} // namespace zsum
