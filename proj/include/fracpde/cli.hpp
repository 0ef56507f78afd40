#pragma once

#include <string>
#include <vector>

namespace fracpde::cli {

enum class Command { Solve, Rates, Verify };

// Exit codes of run()/run_main().
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_numerical_failure = 3;

struct RunConfig {
    Command command = Command::Verify;
    std::string problem_id = "sub.sinx";
    double alpha = 0.5;
    double beta = 0.5;
    int M = 50;             // solve: spatial size; rates: fixed size for the temporal axis
    int N = 50;             // solve: step count;  rates: fixed count for the spatial axis
    std::string axis = "temporal";
    std::vector<int> steps; // empty: default doubling list per axis
    std::string format = "csv";
    std::string out_path;   // empty: stdout
    std::string plot_path;  // empty: no plot
};

// Reads every field except `command` from a JSON file; unknown keys are errors.
RunConfig load_config(const std::string& json_path);

// Executes a validated config; exceptions escape to the caller.
int run(const RunConfig& config);

// Full front-end: argv parsing, config loading, flag overrides, and mapping
// of errors onto the exit codes above.
int run_main(int argc, const char* const* argv);

}  // namespace fracpde::cli
