#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rkdv::cli {

struct RunSpec {
    std::string command;  // run | converge-time | converge-space | drift | reproduce
    std::string problem;
    int n = 0;
    double tau = 0.0;
    double T = 0.0;
    std::vector<double> taus;
    std::vector<int> ns;
    std::string out;             // empty: stdout
    std::string format = "csv";  // csv | json
    double tol = 1e-14;
    int max_iter = 200;
    int sample_every = 10;
    std::string table_id;  // reproduce target
    bool quick = false;    // abbreviated CI variants of table2/table5
};

// Exit codes: 0 pass, 1 tolerance failure, 2 usage error, 3 solver error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_tolerance = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_solver = 3;

/// Parse argv (without the program name). Returns exit_ok and fills spec, or
/// exit_usage with a diagnostic on err. Never throws on malformed input.
int parse_args(const std::vector<std::string>& args, RunSpec& spec,
               std::ostream& err);

/// Run a validated spec. Reports go to spec.out or out; human-readable
/// pass/fail summaries and diagnostics go to out/err.
int execute(const RunSpec& spec, std::ostream& out, std::ostream& err);

int main_impl(int argc, char** argv);

}  // namespace rkdv::cli
