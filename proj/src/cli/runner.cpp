#include "zsum/cli.hpp"

#include "zsum/cnf.hpp"
#include "zsum/coloring.hpp"
#include "zsum/errors.hpp"
#include "zsum/oracle.hpp"
#include "zsum/params.hpp"
#include "zsum/proof.hpp"
#include "zsum/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace zsum::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

    using Clock = std::chrono::steady_clock;

    constexpr int kLemmaTrials = 10'000;

    struct Options {
        int k = 0;
        int r = 0;
        int colors = 2;
        std::string mode = "zero-sum";
        std::optional<int> n;
        std::optional<std::string> coloring;
        int workers = 1;
        std::optional<double> time_budget;
        std::optional<std::uint64_t> node_budget;
        std::uint64_t seed = 0;
        std::optional<std::string> out;
    };

    // Failures that map to exit code 3 but still carry a partial record.
    struct ResourceFailure {
        std::string what;
    };

    template <typename T>
    ordered_json nullable(const std::optional<T>& value)
    {
        return value ? ordered_json(*value) : ordered_json(nullptr);
    }

    std::string read_coloring_text(const std::string& spec)
    {
        if (spec.empty() || spec.front() != '@')
            return spec;
        std::ifstream in(spec.substr(1));
        if (!in)
            throw DomainError("cannot read coloring file " + spec.substr(1));
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    SearchConfig search_config(const Options& opt, const std::atomic<bool>* interrupt)
    {
        SearchConfig config;
        config.worker_count = opt.workers;
        config.node_budget = opt.node_budget;
        if (opt.time_budget) {
            if (*opt.time_budget <= 0)
                throw RangeError("time budget must be positive");
            config.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(*opt.time_budget * 1000.0));
            if (config.time_budget->count() == 0)
                config.time_budget = std::chrono::milliseconds(1);
        }
        config.interrupt = interrupt;
        return config;
    }

    std::vector<std::pair<int, int>> to_path(const std::vector<std::pair<int, Color>>& path)
    {
        std::vector<std::pair<int, int>> out;
        for (const auto& [value, color] : path)
            out.emplace_back(value, color);
        return out;
    }

    const char* formula_name(int k, int r)
    {
        if (r == 2)
            return "2k-3";
        if (k == r)
            return "k^2-k-1";
        if (r == 3)
            return "3k-5";
        return "rk-2r+1";
    }

    class Runner {
    public:
        Runner(const std::string& command, const Options& opt, RunRecord& record, std::ostream& err,
            const std::atomic<bool>* interrupt)
            : command_(command), opt_(opt), record_(record), err_(err), interrupt_(interrupt)
        {
        }

        void run()
        {
            if (command_ == "compute")
                compute();
            else if (command_ == "witness-search")
                witness_search();
            else if (command_ == "oracle")
                oracle();
            else if (command_ == "certify")
                certify();
            else if (command_ == "lemma-check")
                lemma_check();
            else if (command_ == "audit")
                audit();
            else if (command_ == "formula")
                formula();
            else if (command_ == "export-cnf")
                export_cnf_file();
        }

    private:
        Params params() const { return validate_params(opt_.k, opt_.r, opt_.colors, parse_mode(opt_.mode)); }

        int require_n() const
        {
            if (!opt_.n)
                throw RangeError("--n is required for " + command_);
            if (*opt_.n < 0)
                throw RangeError("--n must be nonnegative");
            return *opt_.n;
        }

        Coloring require_coloring(int palette) const
        {
            if (!opt_.coloring)
                throw RangeError("--coloring is required for " + command_);
            return parse_coloring(read_coloring_text(*opt_.coloring), palette);
        }

        void take_stats(const SearchStats& stats)
        {
            record_.nodes = stats.nodes;
            record_.elapsed_ms = stats.elapsed.count();
        }

        void compute()
        {
            const auto p = params();
            err_ << "computing threshold for k=" << p.k() << " r=" << p.r() << " colors=" << p.colors() << " mode="
                 << to_string(p.mode()) << " workers=" << opt_.workers << '\n';
            auto fill = [&](const SearchResult& result) {
                record_.value = result.value;
                record_.n = result.value - 1;
                record_.witness = result.witness ? std::optional(format_coloring(*result.witness)) : std::nullopt;
                record_.exhausted = result.exhausted;
                take_stats(result.stats);
            };
            try {
                const auto result = compute_schur_number(p, search_config(opt_, interrupt_));
                fill(result);
                record_.outcome = "computed";
            }
            catch (const BudgetExceeded& e) {
                if (e.partial())
                    fill(*e.partial());
                else
                    take_stats(e.stats());
                record_.exhausted = false;
                record_.outcome = std::string("budget-exceeded: ") + e.what();
                throw ResourceFailure{e.what()};
            }
        }

        void witness_search()
        {
            const auto p = params();
            const int n = require_n();
            record_.n = n;
            try {
                const auto result = find_zero_sum_free_coloring(n, p, search_config(opt_, interrupt_));
                take_stats(result.stats);
                record_.exhausted = true;
                if (result.coloring) {
                    record_.witness = format_coloring(*result.coloring);
                    record_.outcome = "found";
                }
                else {
                    record_.outcome = "none";
                }
            }
            catch (const BudgetExceeded& e) {
                take_stats(e.stats());
                record_.outcome = std::string("budget-exceeded: ") + e.what();
                throw ResourceFailure{e.what()};
            }
        }

        void oracle()
        {
            const auto p = params();
            const auto started = Clock::now();
            const auto coloring = require_coloring(p.colors());
            record_.n = coloring.n();
            const auto witness = find_zero_sum_solution(coloring, p);
            record_.outcome = witness ? "solution: " + witness->tuple.to_string() : "no-solution";
            record_.exhausted = true;
            record_.elapsed_ms
                = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
        }

        void certify()
        {
            const auto p = params();
            const int n = upper_domain(p.k(), p.r());
            Coloring coloring(2);
            if (opt_.coloring) {
                coloring = require_coloring(2);
            }
            else {
                std::mt19937_64 rng(opt_.seed);
                coloring = random_coloring(n, 2, rng);
                err_ << "sampled coloring of [1, " << n << "] from seed " << opt_.seed << '\n';
            }
            record_.n = coloring.n();
            record_.witness = format_coloring(coloring);
            const auto certificate = certified_solution(coloring, p);
            record_.exhausted = true;
            if (const auto* solved = std::get_if<CertifiedSolution>(&certificate)) {
                record_.path = to_path(solved->path);
                record_.outcome = "certified " + solved->leaf + ": " + solved->witness.tuple.to_string()
                    + (solved->complemented ? " (complemented)" : "");
            }
            else {
                const auto& broken = std::get<ChainBroken>(certificate);
                record_.path = to_path(broken.path);
                record_.outcome = "chain-broken: " + broken.reason;
            }
        }

        void lemma_check()
        {
            const auto p = params();
            const auto started = Clock::now();
            const auto report = check_lemmas(p.k(), p.r(), kLemmaTrials, opt_.seed);
            record_.n = upper_domain(p.k(), p.r());
            int total = 0;
            std::string failed;
            for (const auto& c : report.cases) {
                total += c.trials;
                err_ << c.label << ": " << c.trials << " trials, " << c.failures << " failures\n";
                if (c.failures)
                    failed += (failed.empty() ? "" : ", ") + c.label;
            }
            record_.outcome
                = report.pass ? "pass: " + std::to_string(total) + " colorings" : "fail: " + failed;
            if (!report.pass)
                for (const auto& c : report.cases)
                    if (c.counterexample)
                        record_.witness = format_coloring(*c.counterexample);
            record_.exhausted = true;
            record_.elapsed_ms
                = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
        }

        void audit()
        {
            const auto p = params();
            const auto report = audit_proof(p.k(), p.r());
            for (const auto& entry : report.entries)
                if (!entry.in_domain)
                    record_.anomalies.push_back(entry.label + ": " + std::to_string(entry.max_element) + " > "
                        + std::to_string(entry.domain_bound));
            record_.n = upper_domain(p.k(), p.r());
            record_.outcome = "audited " + std::to_string(report.entries.size()) + " tuples, "
                + std::to_string(report.anomalies.size()) + " out of domain";
            record_.exhausted = true;
        }

        void formula()
        {
            const auto p = params();
            record_.value = closed_form(p.k(), p.r());
            record_.outcome = formula_name(p.k(), p.r());
            if (p.k() >= 2 * p.r()) {
                const auto lower = extremal_coloring(p.k(), p.r());
                record_.n = lower.n();
                record_.witness = format_coloring(lower);
            }
            record_.exhausted = true;
        }

        void export_cnf_file()
        {
            const auto p = params();
            const int n = require_n();
            if (!opt_.out)
                throw RangeError("--out is required for export-cnf");
            const auto started = Clock::now();
            const auto cnf = export_cnf(n, p);
            std::ofstream file(*opt_.out);
            if (!file)
                throw DomainError("cannot write " + *opt_.out);
            write_dimacs(file, cnf);
            record_.n = n;
            record_.outcome = "cnf: " + std::to_string(cnf.variables()) + " variables, "
                + std::to_string(cnf.clauses.size()) + " clauses";
            record_.exhausted = true;
            record_.elapsed_ms
                = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
        }

        const std::string& command_;
        const Options& opt_;
        RunRecord& record_;
        std::ostream& err_;
        const std::atomic<bool>* interrupt_;
    };

    void add_options(CLI::App& sub, Options& opt)
    {
        sub.add_option("--k", opt.k, "tuple length k")->required();
        sub.add_option("--r", opt.r, "zero-sum modulus r")->required();
        sub.add_option("--colors", opt.colors, "number of colors");
        sub.add_option("--mode", opt.mode, "zero-sum or mono")->check(CLI::IsMember({"zero-sum", "mono"}));
        sub.add_option("--n", opt.n, "domain size");
        sub.add_option("--coloring", opt.coloring, "coloring text or @file");
        sub.add_option("--workers", opt.workers, "search worker threads");
        sub.add_option("--time-budget", opt.time_budget, "search time budget in seconds");
        sub.add_option("--node-budget", opt.node_budget, "search node budget");
        sub.add_option("--seed", opt.seed, "seed for sampled colorings");
        sub.add_option("--out", opt.out, "output file");
    }

} // namespace

std::string to_json(const RunRecord& record)
{
    ordered_json doc;
    doc["command"] = record.command;
    doc["k"] = record.k;
    doc["r"] = record.r;
    doc["colors"] = record.colors;
    doc["mode"] = record.mode;
    doc["n"] = nullable(record.n);
    doc["value"] = nullable(record.value);
    doc["witness"] = nullable(record.witness);
    doc["outcome"] = record.outcome;
    doc["anomalies"] = record.anomalies;
    if (record.path) {
        ordered_json path = ordered_json::array();
        for (const auto& [value, color] : *record.path)
            path.push_back({value, color});
        doc["path"] = std::move(path);
    }
    else {
        doc["path"] = nullptr;
    }
    doc["nodes"] = record.nodes;
    doc["elapsed_ms"] = record.elapsed_ms;
    doc["exhausted"] = record.exhausted;
    doc["version"] = record.version;
    return doc.dump();
}

RunRecord from_json(const std::string& text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    }
    catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(e.what());
    }
    static const char* const fields[] = {"command", "k", "r", "colors", "mode", "n", "value", "witness",
        "outcome", "anomalies", "path", "nodes", "elapsed_ms", "exhausted", "version"};
    if (!doc.is_object() || doc.size() != std::size(fields))
        throw std::invalid_argument("run record must be an object with exactly the schema fields");
    for (const char* field : fields)
        if (!doc.contains(field))
            throw std::invalid_argument(std::string("run record lacks field ") + field);
    try {
        RunRecord record;
        record.command = doc.at("command").get<std::string>();
        record.k = doc.at("k").get<int>();
        record.r = doc.at("r").get<int>();
        record.colors = doc.at("colors").get<int>();
        record.mode = doc.at("mode").get<std::string>();
        if (!doc.at("n").is_null())
            record.n = doc.at("n").get<int>();
        if (!doc.at("value").is_null())
            record.value = doc.at("value").get<int>();
        if (!doc.at("witness").is_null())
            record.witness = doc.at("witness").get<std::string>();
        record.outcome = doc.at("outcome").get<std::string>();
        record.anomalies = doc.at("anomalies").get<std::vector<std::string>>();
        if (!doc.at("path").is_null()) {
            std::vector<std::pair<int, int>> path;
            for (const auto& step : doc.at("path")) {
                if (!step.is_array() || step.size() != 2)
                    throw std::invalid_argument("path steps must be [int, int]");
                path.emplace_back(step.at(0).get<int>(), step.at(1).get<int>());
            }
            record.path = std::move(path);
        }
        record.nodes = doc.at("nodes").get<std::uint64_t>();
        record.elapsed_ms = doc.at("elapsed_ms").get<std::int64_t>();
        record.exhausted = doc.at("exhausted").get<bool>();
        record.version = doc.at("version").get<std::string>();
        return record;
    }
    catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(e.what());
    }
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
    const std::atomic<bool>* interrupt)
{
    CLI::App app{"Exact computation and proof replay for zero-sum generalized Schur numbers", "zsum"};
    app.require_subcommand(1);
    Options opt;
    const char* commands[][2] = {
        {"compute", "least t such that every coloring of [1, t] has a solution"},
        {"witness-search", "least solution-free coloring of [1, n]"},
        {"oracle", "decide whether a coloring admits a solution"},
        {"certify", "replay the upper-bound case analysis on a coloring"},
        {"lemma-check", "sample colorings under each lemma hypothesis"},
        {"audit", "check every tuple of the case analysis"},
        {"formula", "closed-form threshold and lower-bound coloring"},
        {"export-cnf", "write the solution-free 2-coloring problem as DIMACS CNF"},
    };
    for (const auto& [name, help] : commands)
        add_options(*app.add_subcommand(name, help), opt);

    RunRecord record;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp& e) {
        app.exit(e, err, err);
        return kOk;
    }
    catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        record.outcome = std::string("usage-error: ") + e.what();
        out << to_json(record) << '\n';
        return kUsage;
    }

    std::string command;
    for (auto* sub : app.get_subcommands())
        command = sub->get_name();
    record.command = command;
    record.k = opt.k;
    record.r = opt.r;
    record.colors = opt.colors;
    record.mode = opt.mode;

    int code = kOk;
    try {
        Runner(command, opt, record, err, interrupt).run();
    }
    catch (const ResourceFailure& e) {
        err << "stopped: " << e.what << '\n';
        code = kBudget;
    }
    catch (const ResourceError& e) {
        record.outcome = std::string("resource-exceeded: ") + e.what();
        err << record.outcome << '\n';
        code = kBudget;
    }
    catch (const LimitExceeded& e) {
        record.outcome = std::string("limit-exceeded: ") + e.what();
        err << record.outcome << '\n';
        code = kBudget;
    }
    catch (const Error& e) {
        record.outcome = std::string("invalid: ") + e.what();
        err << record.outcome << '\n';
        code = kInvalid;
    }

    const auto json = to_json(record);
    out << json << '\n';
    if (opt.out && command != "export-cnf") {
        std::ofstream file(*opt.out);
        if (file)
            file << json << '\n';
        else
            err << "cannot write " << *opt.out << '\n';
    }
    return code;
}

} // namespace zsum::cli
