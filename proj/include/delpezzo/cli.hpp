#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dp {

enum ExitCode { kOk = 0, kVerdictFailure = 1, kUsage = 2, kCatalogError = 3 };

struct RunConfig {
    std::string command; // validate, family, report, oracle
    std::string catalogPath; // empty: DELPEZZO_CATALOG, then the embedded catalog
    std::string families = "all";
    std::optional<long long> n;
    std::optional<long long> ray;
    std::string format = "json";
    long long oracleFrom = 3, oracleTo = 1000;
    std::string out; // empty or "stdout": standard output
};

// Parses argv into a config. Returns the exit code when parsing ends the
// run (help or usage error).
std::optional<int> parse_args(int argc, const char *const *argv, RunConfig &cfg, std::ostream &out,
                              std::ostream &err);

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace dp
