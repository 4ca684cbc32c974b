#pragma once

#include "report.hpp"

#include <hypfib/identities.hpp>
#include <hypfib/kfib.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypfib::cli {

enum class Command { gen, verify, bench, report };

// Exit statuses shared by every subcommand and output format.
inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
    Command command = Command::verify;
    // Empty means the command's default: symbolic,1,2,3 for verify,
    // symbolic for gen, 1 for bench.
    std::vector<KMode> k_modes;
    std::optional<IndexRange> n;
    IndexRange m{2, 12};
    IndexRange r{0, 4};
    std::vector<IdentityId> identities; // empty means all
    Format format = Format::json;
    unsigned jobs = 1;
    std::string output;                      // empty means stdout
    std::string input;                       // report: JSON file to re-render
    std::optional<std::string> expectations; // verify: override of the built-in table
};

// "a..b" or a single integer "a". Throws InvalidRange.
IndexRange parse_range(std::string_view text);
// Comma-separated k modes: "symbolic,1,7/2".
std::vector<KMode> parse_k_list(std::string_view text);
// Comma-separated ids or "all".
std::vector<IdentityId> parse_identity_list(std::string_view text);

// Fills defaults and checks ranges, jobs and the symbolic degree cap.
// Throws InvalidRange or GridTooLarge.
RunConfig resolve(RunConfig config);

// Default n range per command.
IndexRange default_n(Command command);
// Sizes the bench command runs at for an n range: lo, 10 lo, 100 lo, ... <= hi.
std::vector<std::uint64_t> bench_sizes(const IndexRange& n);

Report cmd_gen(const RunConfig& config);
Report cmd_verify(const RunConfig& config);
// Throws SymbolicKUnsupported for a symbolic k.
Report cmd_bench(const RunConfig& config);
// Throws MalformedReport.
Report cmd_report(const RunConfig& config);

// Exit status a report implies: exit_mismatch when a verify report has an
// asserted mismatch or a bench report has unequal kernels.
int exit_status(const Report& report);

// Parses argv, runs the command, writes the output. Returns the exit status.
int run_cli(int argc, char** argv);

} // namespace hypfib::cli
