#include "zsum/proof.hpp"

#include "zsum/errors.hpp"

#include <algorithm>
#include <initializer_list>

namespace zsum {

namespace {

    void require_regime(int k, int r)
    {
        if (r < 2 || k < 2 * r || k % r != 0)
            throw DomainError("need r >= 2, r | k and k >= 2r; got k = " + std::to_string(k) + ", r = "
                + std::to_string(r));
    }

    void require_replay_regime(int k, int r)
    {
        require_regime(k, r);
        if (r < 4)
            throw DomainError("the case analysis is replayed for r >= 4 only; got r = " + std::to_string(r));
    }

    using Assumptions = std::map<int, Color>;

    Assumptions with(Assumptions base, std::initializer_list<std::pair<const int, Color>> extra)
    {
        for (const auto& [value, color] : extra) {
            auto [it, inserted] = base.emplace(value, color);
            if (!inserted && it->second != color)
                throw DomainError("contradictory assumption on the color of " + std::to_string(value));
        }
        return base;
    }

} // namespace

int closed_form(int k, int r)
{
    if (k < 2 || r < 2 || k % r != 0)
        throw DomainError("closed form needs k, r >= 2 with r | k; got k = " + std::to_string(k) + ", r = "
            + std::to_string(r));
    if (r == 2)
        return 2 * k - 3;
    if (k == r)
        return k * k - k - 1;
    if (r == 3)
        return 3 * k - 5;
    return r * k - 2 * r + 1;
}

int upper_domain(int k, int r) { return r * k - 2 * r + 1; }

Coloring extremal_coloring(int k, int r)
{
    require_regime(k, r);
    std::vector<Color> colors(static_cast<std::size_t>(r * k - 2 * r), 1);
    std::fill_n(colors.begin(), k - 2, Color{0});
    return Coloring(std::move(colors), 2);
}

LowerBoundReport verify_lower_bound_counting(int k, int r)
{
    const auto coloring = extremal_coloring(k, r);
    LowerBoundReport report;
    report.domain = coloring.n();
    for (int i = 1; i <= coloring.n(); ++i) {
        if (coloring(i) == 0)
            report.max_zero = i;
        else if (report.min_one == 0)
            report.min_one = i;
    }
    // k - 1 summands of value at least 1.
    report.min_target = k - 1;
    // r - 1 summands colored 1 (each at least min_one) besides the k - r
    // remaining summands of value at least 1.
    report.min_one_heavy_sum = (r - 1) * report.min_one + (k - r);
    report.no_zero_solution = report.max_zero < report.min_target;
    report.min_one_ok = report.min_one == k - 1;
    report.identity_ok = (r - 1) * (k - 1) + (k - r) == r * k - 2 * r + 1;
    report.out_of_bounds = report.min_one_heavy_sum > report.domain;
    report.pass = report.no_zero_solution && report.min_one_ok && report.identity_ok && report.out_of_bounds;
    return report;
}

std::vector<ProofTuple> proof_tuples(int k, int r)
{
    require_replay_regime(k, r);
    const int top = upper_domain(k, r);
    std::vector<ProofTuple> out;

    const Assumptions lemma1 = {{1, 0}, {r - 1, 0}};
    const auto lemma1_b = with(lemma1, {{k - 1, 1}});
    const auto lemma1_c = with(lemma1_b, {{top, 0}});
    out.push_back({"lemma1.1", tuple_from_runs({{1, k - 1}}, k - 1), lemma1, {{k - 1, 0}}});
    out.push_back({"lemma1.2", tuple_from_runs({{1, k - r}, {k - 1, r - 1}}, top), lemma1_b, {{top, 1}}});
    out.push_back({"lemma1.3", tuple_from_runs({{1, 1}, {r, k - 2}}, top), lemma1_c, {{r, 0}}});
    out.push_back({"lemma1.4", tuple_from_runs({{r - 1, r - 1}, {r, k - r}}, top), with(lemma1_c, {{r, 1}}),
        std::nullopt});

    const Assumptions lemma2 = {{1, 0}, {r - 1, 1}};
    const auto after_c = with(lemma2, {{k - 1, 1}});
    const auto after_f = with(after_c, {{top, 0}});
    const auto after_a = with(after_f, {{r, 1}});
    const auto after_b = with(after_a, {{k - 2, 0}});
    const auto in_d = with(after_b, {{k, 0}});
    const auto after_d = with(after_b, {{k, 1}});
    const int d_target = (r - 1) * (k - 1);
    out.push_back({"lemma2.c", tuple_from_runs({{1, k - 1}}, k - 1), lemma2, {{k - 1, 0}}});
    out.push_back({"lemma2.f", tuple_from_runs({{r - 1, k - 2}, {k - 1, 1}}, top), after_c, {{top, 1}}});
    out.push_back({"lemma2.a", tuple_from_runs({{1, 1}, {r, k - 2}}, top), after_f, {{r, 0}}});
    out.push_back(
        {"lemma2.b", tuple_from_runs({{1, k - r - 1}, {r, 1}, {k - 2, r - 1}}, top), after_a, {{k - 2, 1}}});
    out.push_back({"lemma2.d1", tuple_from_runs({{r - 1, k - 1}}, d_target), in_d, {{d_target, 1}}});
    out.push_back({"lemma2.d2", tuple_from_runs({{1, k - r + 1}, {k, r - 2}}, d_target),
        with(in_d, {{d_target, 0}}), std::nullopt});
    out.push_back({"lemma2.e", tuple_from_runs({{1, r - 1}, {r, k - 2 * r}, {2 * r - 3, r}}, top - 2), after_d,
        {{top - 2, 0}}});

    const auto table = with(after_d, {{top - 2, 1}});
    if (r == 4) {
        out.push_back({"thm3.r4", tuple_from_runs({{1, 3}, {2, k - 8}, {3, 2}, {k, 2}}, 4 * k - 7), table,
            std::nullopt});
        return out;
    }
    const int pivot = k + r - 3;
    const int beyond = r * k - 3;
    const auto step2 = with(table, {{pivot, 1}});
    const auto step3 = with(step2, {{beyond, 0}});
    const auto step4 = with(step3, {{2, 1}});
    const auto step5 = with(step4, {{3, 1}});
    out.push_back(
        {"thm3.step1", tuple_from_runs({{1, k - r}, {k - 2, r - 2}, {pivot, 1}}, top), table, {{pivot, 0}}});
    out.push_back(
        {"thm3.step2", tuple_from_runs({{1, k - r}, {k, r - 2}, {pivot, 1}}, beyond), step2, {{beyond, 1}}});
    out.push_back({"thm3.step3", tuple_from_runs({{2, k - r - 1}, {r, 1}, {r - 1, 1}, {k, r - 2}}, beyond), step3,
        {{2, 0}}});
    out.push_back(
        {"thm3.step4", tuple_from_runs({{3, k - r - 1}, {r, 3}, {k, r - 3}}, beyond), step4, {{3, 0}}});
    out.push_back({"thm3.step5", tuple_from_runs({{2, k - 2 * r + 6}, {3, r - 5}, {k - 1, r - 2}}, top - 2), step5,
        std::nullopt});
    return out;
}

AuditReport audit_proof(int k, int r)
{
    const int bound = upper_domain(k, r);
    AuditReport report;
    for (const auto& pt : proof_tuples(k, r)) {
        AuditEntry entry;
        entry.label = pt.label;
        long long sum = 0;
        for (int v : pt.tuple.summands())
            sum += v;
        entry.sum_ok = sum == pt.tuple.target() && pt.tuple.size() == k;
        const auto entries = pt.tuple.entries();
        entry.max_element = *std::max_element(entries.begin(), entries.end());
        const int min_element = *std::min_element(entries.begin(), entries.end());
        entry.domain_bound = bound;
        entry.in_domain = min_element >= 1 && entry.max_element <= bound;
        if (!entry.in_domain)
            report.anomalies.push_back(entry.label);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

CertificateExtractor::CertificateExtractor(int k, int r)
    : k_(k), r_(r), domain_(upper_domain(k, r)), tuples_(proof_tuples(k, r))
{
}

const ProofTuple& CertificateExtractor::find(const std::string& label) const
{
    for (const auto& pt : tuples_)
        if (pt.label == label)
            return pt;
    throw DomainError("no proof tuple labelled " + label);
}

Certificate CertificateExtractor::operator()(const Coloring& coloring) const
{
    if (coloring.palette() != 2)
        throw DomainError("certificate extraction needs a 2-coloring");
    if (coloring.n() != domain_)
        throw DomainError("certificate extraction needs a coloring of [1, " + std::to_string(domain_) + "], got n = "
            + std::to_string(coloring.n()));

    const int k = k_;
    const int r = r_;
    const int top = domain_;
    const bool complemented = coloring(1) == 1;
    std::vector<std::pair<int, Color>> path;
    auto read = [&](int i) -> Color {
        const Color seen = coloring(i);
        path.emplace_back(i, seen);
        return complemented ? static_cast<Color>(1 - seen) : seen;
    };
    auto leaf = [&](const char* label) -> Certificate {
        const auto& pt = find(label);
        ZeroSumWitness witness{pt.tuple, tuple_weight(pt.tuple, coloring, r)};
        return CertifiedSolution{std::move(witness), std::move(path), complemented, label};
    };

    read(1);
    if (read(r - 1) == 0) {
        if (read(k - 1) == 0)
            return leaf("lemma1.1");
        if (read(top) == 1)
            return leaf("lemma1.2");
        if (read(r) == 0)
            return leaf("lemma1.3");
        return leaf("lemma1.4");
    }

    if (read(k - 1) == 0)
        return leaf("lemma2.c");
    if (read(top) == 1)
        return leaf("lemma2.f");
    if (read(r) == 0)
        return leaf("lemma2.a");
    if (read(k - 2) == 1)
        return leaf("lemma2.b");
    if (read(k) == 0)
        return read((r - 1) * (k - 1)) == 1 ? leaf("lemma2.d1") : leaf("lemma2.d2");
    if (read(top - 2) == 0)
        return leaf("lemma2.e");

    if (r == 4)
        return leaf("thm3.r4");
    if (read(k + r - 3) == 0)
        return leaf("thm3.step1");
    const bool two = read(2) == 1;
    const bool three = r == 5 || read(3) == 1;
    if (two && three)
        return leaf("thm3.step5");
    return ChainBroken{"forcing color(" + std::string(two ? "3" : "2") + ") = 1 needs the color of "
            + std::to_string(r * k - 3) + ", outside [1, " + std::to_string(top) + "]",
        std::move(path), complemented};
}

Certificate certified_solution(const Coloring& coloring, const Params& params)
{
    if (params.mode() != Mode::ZeroSum || params.colors() != 2)
        throw DomainError("certificate extraction needs a 2-color zero-sum instance");
    return CertificateExtractor(params.k(), params.r())(coloring);
}

} // namespace zsum

namespace zsum {

LemmaCheckReport check_lemmas(int k, int r, int trials, std::uint64_t seed)
{
    require_replay_regime(k, r);
    if (trials < 0)
        throw DomainError("trial count must be nonnegative");
    const int top = upper_domain(k, r);
    const auto params = validate_params(k, r, 2, Mode::ZeroSum);
    struct Hypothesis {
        const char* label;
        std::vector<std::pair<int, Color>> fixed;
    };
    const std::vector<Hypothesis> hypotheses = {
        {"lemma1", {{1, 0}, {r - 1, 0}}},
        {"lemma2.a", {{1, 0}, {r - 1, 1}, {r, 0}}},
        {"lemma2.b", {{1, 0}, {r - 1, 1}, {k - 2, 1}}},
        {"lemma2.c", {{1, 0}, {r - 1, 1}, {k - 1, 0}}},
        {"lemma2.d", {{1, 0}, {r - 1, 1}, {k, 0}}},
        {"lemma2.e", {{1, 0}, {r - 1, 1}, {top - 2, 0}}},
        {"lemma2.f", {{1, 0}, {r - 1, 1}, {top, 1}}},
    };

    std::mt19937_64 rng(seed);
    LemmaCheckReport report;
    report.pass = true;
    for (const auto& hypothesis : hypotheses) {
        LemmaCase c;
        c.label = hypothesis.label;
        for (int t = 0; t < trials; ++t) {
            auto colors = random_coloring(top, 2, rng).colors();
            for (const auto& [value, color] : hypothesis.fixed)
                colors[static_cast<std::size_t>(value - 1)] = color;
            Coloring coloring(std::move(colors), 2);
            ++c.trials;
            if (!has_zero_sum_solution(coloring, params)) {
                ++c.failures;
                if (!c.counterexample)
                    c.counterexample = coloring;
            }
        }
        report.pass = report.pass && c.failures == 0;
        report.cases.push_back(std::move(c));
    }
    return report;
}

} // namespace zsum
