#include "zsum/cnf.hpp"

#include "zsum/errors.hpp"

#include <bit>
#include <ostream>
#include <set>

namespace zsum {

namespace {

    struct SupportEntry {
        int value;
        int multiplicity;
    };

    class ClauseBuilder {
    public:
        ClauseBuilder(CnfDocument& doc, int r, std::uint64_t limit) : doc_(doc), r_(r), limit_(limit) {}

        // Emits the clauses forbidding every 0/1 assignment on `support`
        // that makes the tuple zero-sum (or monochromatic). Assignments are
        // visited in reflected Gray-code order.
        void forbid(const std::vector<SupportEntry>& support)
        {
            const int d = static_cast<int>(support.size());
            if (d >= 63)
                throw LimitExceeded("tuple support too large for clause expansion");
            const std::uint64_t count = std::uint64_t{1} << d;
            expanded_ += count;
            if (expanded_ > limit_)
                throw LimitExceeded("CNF clause expansion exceeds " + std::to_string(limit_));

            std::uint64_t assignment = 0;
            int weight = 0;
            for (std::uint64_t step = 0; step < count; ++step) {
                if (step > 0) {
                    const int flip = std::countr_zero(step);
                    assignment ^= std::uint64_t{1} << flip;
                    const int m = support[static_cast<std::size_t>(flip)].multiplicity;
                    weight += (assignment >> flip) & 1U ? m : -m;
                }
                if (forbidden(assignment, weight, d))
                    emit(support, assignment);
            }
        }

    private:
        bool forbidden(std::uint64_t assignment, int weight, int d) const
        {
            if (doc_.mode == Mode::Monochromatic)
                return assignment == 0 || assignment == (std::uint64_t{1} << d) - 1;
            return weight % r_ == 0;
        }

        void emit(const std::vector<SupportEntry>& support, std::uint64_t assignment)
        {
            std::vector<int> clause;
            clause.reserve(support.size());
            for (std::size_t j = 0; j < support.size(); ++j)
                clause.push_back((assignment >> j) & 1U ? -support[j].value : support[j].value);
            if (seen_.insert(clause).second)
                doc_.clauses.push_back(std::move(clause));
        }

        CnfDocument& doc_;
        int r_;
        std::uint64_t limit_;
        std::uint64_t expanded_ = 0;
        std::set<std::vector<int>> seen_;
    };

    void enumerate(int slots_left, int min_value, int sum, int n, std::vector<SupportEntry>& support,
        ClauseBuilder& builder)
    {
        if (slots_left == 0) {
            support.push_back({sum, 1});
            builder.forbid(support);
            support.pop_back();
            return;
        }
        for (int v = min_value; sum + slots_left * v <= n; ++v) {
            const bool repeat = !support.empty() && support.back().value == v;
            if (repeat)
                ++support.back().multiplicity;
            else
                support.push_back({v, 1});
            enumerate(slots_left - 1, v, sum + v, n, support, builder);
            if (repeat)
                --support.back().multiplicity;
            else
                support.pop_back();
        }
    }

} // namespace

CnfDocument export_cnf(int n, const Params& params, std::uint64_t clause_limit)
{
    if (params.colors() != 2)
        throw DomainError("CNF export needs a 2-color instance");
    if (n < 0)
        throw DomainError("n must be nonnegative");
    CnfDocument doc;
    doc.k = params.k();
    doc.r = params.r();
    doc.n = n;
    doc.mode = params.mode();
    ClauseBuilder builder(doc, params.r(), clause_limit);
    std::vector<SupportEntry> support;
    enumerate(params.k() - 1, 1, 0, n, support, builder);
    return doc;
}

void write_dimacs(std::ostream& out, const CnfDocument& cnf)
{
    out << "c zero-sum-free 2-colorings; variable i true iff color(i) = 1\n";
    out << "c k " << cnf.k << " r " << cnf.r << " n " << cnf.n << '\n';
    out << "c mode " << to_string(cnf.mode) << '\n';
    out << "c encoding-version " << kCnfEncodingVersion << '\n';
    out << "p cnf " << cnf.variables() << ' ' << cnf.clauses.size() << '\n';
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause)
            out << lit << ' ';
        out << "0\n";
    }
}

} // namespace zsum
