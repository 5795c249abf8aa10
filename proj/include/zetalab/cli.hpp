#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace zetalab {

// One batch job: a command plus raw key/value parameters, as gathered from
// the command line.  run() parses values, executes, and writes the report.
struct JobConfig {
    enum class Command { zeta, verify, roots, conjecture, list };
    enum class Format { json, csv, text };

    Command command = Command::list;
    int precision = 50; // target digits, in [10, 10000]
    std::map<std::string, std::string> params;
    std::string output_path; // empty = stdout
    Format format = Format::text;
};

// Exit code: 0 all-pass, 1 verification failure or conjecture violation
// flag, 2 usage or domain error.  Reports are deterministic for a fixed
// config and version.
int run(const JobConfig& config, std::ostream& out);

// Parses "pi", "2pi", "pi/4", "pi^2", "3/2", "1.25", "pi^2/4" forms.
// Used for --alpha/--beta/--w/--x/--y values.
std::string cli_schema_version();

} // namespace zetalab
