#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace neardist {

/// One CLI invocation. Unset optionals fall back to per-command defaults.
struct RunConfig {
    std::string command;  // generate | analyze | verify | turan | mdk | reproduce
    std::optional<int> d;
    std::optional<int> k;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> s;
    std::optional<double> eps;
    std::optional<double> eps1;
    std::optional<double> length;
    std::optional<double> scale;
    std::optional<double> ratio;
    std::optional<double> t1;
    std::optional<double> t2;
    std::optional<double> ratio_threshold;  // --D
    std::string construction;
    std::string in;
    std::string out;
    std::string bound;
    std::string check;
    std::uint64_t seed = 0;

    /// Throws InputError when a required parameter is missing or out of range.
    void validate() const;
};

/// Exit codes of run().
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitInputError = 2,
    kExitUnsupported = 3,
    kExitResource = 4,
};

/// Executes one command. Results go to the configured files or `out`; errors
/// are reported as a JSON object {"error": {...}} on `out`.
int run(const RunConfig& config, std::ostream& out);

} // namespace neardist
