#include "zsum/search.hpp"

#include "zsum/reachability.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace zsum {

std::string_view to_string(Symmetry symmetry)
{
    switch (symmetry) {
    case Symmetry::None:
        return "none";
    case Symmetry::FixFirstColor:
        return "fix-first-color";
    case Symmetry::FixPlusUnitMult:
        return "fix-plus-unit-mult";
    }
    return "none";
}

Symmetry parse_symmetry(std::string_view text)
{
    if (text == "none")
        return Symmetry::None;
    if (text == "fix-first-color")
        return Symmetry::FixFirstColor;
    if (text == "fix-plus-unit-mult")
        return Symmetry::FixPlusUnitMult;
    throw RangeError("unknown symmetry '" + std::string(text) + "'");
}

namespace {

    using Clock = std::chrono::steady_clock;
    using Word = ReachabilityTable::Word;

    constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();

    // Internal unwinding signals; never escape this file.
    struct StopRequested {};
    struct CapReached {};
    struct BudgetTrip {
        std::string reason;
    };

    struct Task {
        std::vector<Color> prefix;
        bool open;
    };

    struct TaskResult {
        int depth = -1;
        std::vector<Color> colors;
    };

    struct Shared {
        Shared(const Params& p, const SearchConfig& c, Clock::time_point t) : params(p), config(c), start(t) {}

        const Params& params;
        const SearchConfig& config;
        Clock::time_point start;
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> stop{false};
        std::atomic<int> best_depth{0};
        std::atomic<std::size_t> found_task{kNoTask};

        SearchStats stats() const
        {
            return {nodes.load(),
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)};
        }
    };

    void atomic_max(std::atomic<int>& cell, int value)
    {
        int seen = cell.load(std::memory_order_relaxed);
        while (seen < value && !cell.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
        }
    }

    void atomic_min(std::atomic<std::size_t>& cell, std::size_t value)
    {
        std::size_t seen = cell.load();
        while (seen > value && !cell.compare_exchange_weak(seen, value)) {
        }
    }

    bool any_bit(std::span<const Word> words)
    {
        return std::any_of(words.begin(), words.end(), [](Word w) { return w != 0; });
    }

    // Depth-first walker over colorings of [1, m]. tables_[m] describes the
    // colored prefix [1, m]; colors_[m - 1] is the color of m.
    class Walker {
    public:
        Walker(Shared& shared, int cap)
            : shared_(shared), params_(shared.params), cap_(cap),
              tables_(static_cast<std::size_t>(cap) + 1, ReachabilityTable(shared.params, cap)),
              pristine_(tables_[0]), colors_(static_cast<std::size_t>(cap)),
              max_color_(static_cast<std::size_t>(cap) + 1, -1),
              scratch_(static_cast<std::size_t>(tables_[0].words_per_set()))
        {
        }

        void load(const std::vector<Color>& prefix)
        {
            tables_[0] = pristine_;
            for (std::size_t i = 0; i < prefix.size(); ++i)
                push(static_cast<int>(i), prefix[i]);
        }

        // Collects subtree roots at depth `split` in DFS order. In goal mode
        // (goal >= 0) prefixes that cannot reach the goal are dropped; in
        // deepest mode dead ends above the split become closed tasks.
        void frontier(int m, int split, int goal, std::vector<Task>& out)
        {
            count_node();
            if (m == split) {
                out.push_back({prefix(m), true});
                return;
            }
            bool extended = false;
            for (Color color : allowed(m + 1)) {
                if (!try_push(m, color, goal))
                    continue;
                extended = true;
                frontier(m + 1, split, goal, out);
            }
            if (!extended && goal < 0)
                out.push_back({prefix(m), false});
        }

        bool reach_goal(int m, int goal, std::size_t task)
        {
            count_node();
            if (shared_.found_task.load(std::memory_order_relaxed) < task)
                throw StopRequested{};
            if (m == goal)
                return true;
            for (Color color : allowed(m + 1)) {
                if (!try_push(m, color, goal))
                    continue;
                if (reach_goal(m + 1, goal, task))
                    return true;
            }
            return false;
        }

        void deepest(int m)
        {
            count_node();
            if (m > best_.depth) {
                best_.depth = m;
                best_.colors = prefix(m);
                atomic_max(shared_.best_depth, m);
            }
            if (m == cap_)
                throw CapReached{};
            for (Color color : allowed(m + 1)) {
                const int goal = std::min(cap_, std::max(best_.depth + 1, shared_.best_depth.load(std::memory_order_relaxed)));
                if (!try_push(m, color, goal))
                    continue;
                deepest(m + 1);
            }
        }

        std::vector<Color> prefix(int m) const { return {colors_.begin(), colors_.begin() + m}; }

        TaskResult& best() noexcept { return best_; }

    private:
        void push(int m, Color color)
        {
            auto& next = tables_[static_cast<std::size_t>(m) + 1];
            next = tables_[static_cast<std::size_t>(m)];
            next.extend(color);
            colors_[static_cast<std::size_t>(m)] = color;
            max_color_[static_cast<std::size_t>(m) + 1] = std::max<int>(max_color_[static_cast<std::size_t>(m)], color);
        }

        // Extends [1, m] by m + 1 colored `color` unless that closes a
        // solution or leaves some position in (m + 1, goal] with no
        // admissible color.
        bool try_push(int m, Color color, int goal)
        {
            if (tables_[static_cast<std::size_t>(m)].closes_solution(m + 1, color))
                return false;
            push(m, color);
            if (goal > m + 1) {
                tables_[static_cast<std::size_t>(m) + 1].blocked_positions(m + 1, goal, scratch_);
                if (any_bit(scratch_))
                    return false;
            }
            return true;
        }

        std::vector<Color> allowed(int position) const
        {
            const int palette = params_.colors();
            const auto symmetry = shared_.config.symmetry;
            std::vector<Color> out;
            if (symmetry != Symmetry::None && position == 1) {
                out.push_back(0);
                return out;
            }
            const int seen = max_color_[static_cast<std::size_t>(position) - 1];
            if (symmetry == Symmetry::FixPlusUnitMult) {
                if (params_.mode() == Mode::Monochromatic) {
                    for (int c = 0; c < palette && c <= seen + 1; ++c)
                        out.push_back(static_cast<Color>(c));
                    return out;
                }
                if (palette == params_.r() && seen == 0) {
                    for (int c = 0; c < palette; ++c)
                        if (c == 0 || params_.r() % c == 0)
                            out.push_back(static_cast<Color>(c));
                    return out;
                }
            }
            for (int c = 0; c < palette; ++c)
                out.push_back(static_cast<Color>(c));
            return out;
        }

        void count_node()
        {
            const auto total = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
            if (shared_.stop.load(std::memory_order_relaxed))
                throw StopRequested{};
            const auto& config = shared_.config;
            if (config.node_budget && total > *config.node_budget)
                throw BudgetTrip{"node budget of " + std::to_string(*config.node_budget) + " exhausted"};
            if ((++local_nodes_ & 1023U) == 0) {
                if (config.interrupt && config.interrupt->load())
                    throw BudgetTrip{"interrupted"};
                if (config.time_budget && Clock::now() - shared_.start > *config.time_budget)
                    throw BudgetTrip{"time budget of " + std::to_string(config.time_budget->count()) + " ms exhausted"};
            }
        }

        Shared& shared_;
        const Params& params_;
        int cap_;
        std::vector<ReachabilityTable> tables_;
        ReachabilityTable pristine_;
        std::vector<Color> colors_;
        std::vector<int> max_color_;
        std::vector<Word> scratch_;
        std::uint64_t local_nodes_ = 1023;
        TaskResult best_;
    };

    // Runs `body(worker)` on worker_count threads (inline for one worker).
    // Returns the first failure other than a stop request.
    template <typename Body>
    std::exception_ptr run_workers(Shared& shared, int cap, Body body)
    {
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            try {
                Walker walker(shared, cap);
                body(walker);
            }
            catch (const StopRequested&) {
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                shared.stop = true;
            }
        };
        const int workers = std::max(1, shared.config.worker_count);
        if (workers == 1) {
            work();
            return failure;
        }
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i)
            threads.emplace_back(work);
        for (auto& t : threads)
            t.join();
        return failure;
    }

    void check_config(const SearchConfig& config)
    {
        if (config.worker_count < 1)
            throw RangeError("worker count must be positive");
        if (config.node_budget && *config.node_budget == 0)
            throw RangeError("node budget must be positive");
        if (config.time_budget && config.time_budget->count() <= 0)
            throw RangeError("time budget must be positive");
        if (config.split_depth < 0)
            throw RangeError("split depth must be nonnegative");
    }

    Coloring to_coloring(std::vector<Color> colors, const Params& params)
    {
        return Coloring(std::move(colors), params.colors());
    }

    // One pass of the deepest-prefix search with a fixed table cap.
    SearchResult deepest_pass(Shared& shared, int cap)
    {
        const auto& params = shared.params;
        std::vector<Task> tasks;
        std::exception_ptr failure;
        try {
            Walker root(shared, cap);
            root.frontier(0, std::min(shared.config.split_depth, cap), -1, tasks);
        }
        catch (...) {
            failure = std::current_exception();
        }

        std::vector<TaskResult> results(tasks.size());
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            if (!tasks[i].open) {
                results[i] = {static_cast<int>(tasks[i].prefix.size()), tasks[i].prefix};
                atomic_max(shared.best_depth, results[i].depth);
            }
        }

        if (!failure) {
            std::atomic<std::size_t> next{0};
            failure = run_workers(shared, cap, [&](Walker& walker) {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    if (!tasks[i].open)
                        continue;
                    walker.best() = {};
                    try {
                        walker.load(tasks[i].prefix);
                        walker.deepest(static_cast<int>(tasks[i].prefix.size()));
                    }
                    catch (...) {
                        results[i] = walker.best();
                        throw;
                    }
                    results[i] = walker.best();
                }
            });
        }

        SearchResult result;
        int depth = -1;
        const TaskResult* chosen = nullptr;
        for (const auto& r : results)
            if (r.depth > depth) {
                depth = r.depth;
                chosen = &r;
            }
        result.value = std::max(depth, 0) + 1;
        if (chosen && depth > 0)
            result.witness = to_coloring(chosen->colors, params);
        result.stats = shared.stats();

        if (failure) {
            try {
                std::rethrow_exception(failure);
            }
            catch (const BudgetTrip& trip) {
                result.exhausted = false;
                throw BudgetExceeded(trip.reason, result, result.stats);
            }
        }
        result.exhausted = true;
        return result;
    }

} // namespace

FreeColoringResult find_zero_sum_free_coloring(int n, const Params& params, const SearchConfig& config)
{
    check_config(config);
    if (n < 0)
        throw DomainError("n must be nonnegative");
    Shared shared(params, config, Clock::now());
    if (n == 0)
        return {Coloring(params.colors()), shared.stats()};

    std::vector<Task> tasks;
    std::exception_ptr failure;
    const int split = std::min(config.split_depth, n);
    try {
        Walker root(shared, n);
        root.frontier(0, split, n, tasks);
    }
    catch (...) {
        failure = std::current_exception();
    }

    std::vector<std::vector<Color>> found(tasks.size());
    if (!failure && split == n) {
        if (!tasks.empty()) {
            found[0] = tasks[0].prefix;
            shared.found_task = 0;
        }
    }
    else if (!failure) {
        std::atomic<std::size_t> next{0};
        failure = run_workers(shared, n, [&](Walker& walker) {
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                if (shared.found_task.load() < i)
                    return;
                walker.load(tasks[i].prefix);
                try {
                    if (walker.reach_goal(split, n, i)) {
                        found[i] = walker.prefix(n);
                        atomic_min(shared.found_task, i);
                    }
                }
                catch (const StopRequested&) {
                    if (shared.stop.load())
                        throw;
                    // a lexicographically smaller subtree already succeeded
                }
            }
        });
    }

    const auto stats = shared.stats();
    if (failure) {
        try {
            std::rethrow_exception(failure);
        }
        catch (const BudgetTrip& trip) {
            throw BudgetExceeded(trip.reason, std::nullopt, stats);
        }
    }
    const auto index = shared.found_task.load();
    if (index == kNoTask)
        return {std::nullopt, stats};
    return {to_coloring(found[index], params), stats};
}

std::optional<Coloring> exists_zero_sum_free_coloring(int n, const Params& params, const SearchConfig& config)
{
    return find_zero_sum_free_coloring(n, params, config).coloring;
}

SearchResult compute_schur_number(const Params& params, const SearchConfig& config)
{
    check_config(config);
    const auto start = Clock::now();
    std::uint64_t spent_nodes = 0;
    for (int cap = 63;; cap = cap * 2 + 1) {
        Shared shared(params, config, start);
        shared.nodes = spent_nodes;
        try {
            return deepest_pass(shared, cap);
        }
        catch (const CapReached&) {
            spent_nodes = shared.nodes.load();
        }
    }
}

} // namespace zsum
