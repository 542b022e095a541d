#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zsum::cli {

inline constexpr const char* kToolVersion = "zsum 1.0.0 (cnf encoding 1)";

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalid = 2, kBudget = 3 };

/// One machine-readable result per invocation.
struct RunRecord {
    std::string command;
    int k = 0;
    int r = 0;
    int colors = 0;
    std::string mode = "zero-sum";
    std::optional<int> n;
    std::optional<int> value;
    std::optional<std::string> witness;
    std::string outcome;
    std::vector<std::string> anomalies;
    std::optional<std::vector<std::pair<int, int>>> path;
    std::uint64_t nodes = 0;
    std::int64_t elapsed_ms = 0;
    bool exhausted = false;
    std::string version = kToolVersion;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

std::string to_json(const RunRecord& record);
/// Throws std::invalid_argument on documents that do not match the schema.
RunRecord from_json(const std::string& text);

/// Parses argv (without the program name), runs the subcommand, writes the
/// JSON record to `out` and progress to `err`. Returns the exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
    const std::atomic<bool>* interrupt = nullptr);

} // namespace zsum::cli
