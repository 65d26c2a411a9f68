#pragma once

#include "boxmode/config.hpp"
#include "boxmode/table.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace boxmode::cli {

/// One built-in invariant evaluated by a subcommand.
struct Check {
    std::string name;
    bool pass;
    double residual;  // measured deviation (or measured value for bound checks)
    double tolerance; // threshold it was held to
};

struct CommandOutput {
    Table table;
    std::vector<std::pair<std::string, Table>> sidecars; // file suffix, table
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool all_pass() const;
};

/// Plain-text run report: config echo, notes, one CHECK line per invariant.
std::string format_report(const RunConfig& config, const CommandOutput& output);

/// `boxmode <group> <command> [--flag value]...`.
/// Exit code 0 when every check passes, 1 when a check fails, 2 on invalid
/// arguments (nothing is written in that case).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace boxmode::cli
