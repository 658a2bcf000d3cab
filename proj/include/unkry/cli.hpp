#pragma once

#include <string>
#include <vector>

namespace unkry::cli {

// Exit codes of the command line driver.
//   0  solved: the system is compatible and x was produced
//   1  solved: the system is incompatible and a certificate was produced
//   2  usage, input, or parse error
//   3  solver did not reach a verdict (iteration cap or breakdown)
enum class ExitCode : int {
  compatible = 0,
  incompatible = 1,
  usage_error = 2,
  no_verdict = 3,
};

struct CliOptions {
  std::string matrix_path;
  std::string c_path;
  bool rhs_is_b = false;  // interpret the vector file as b in Hx = b
  std::string method = "krylov";
  std::string scaling = "ynorm";
  double q_tol = -1.0;      // negative: use solver default
  double delta_tol = -1.0;  // negative: use solver default
  long long max_iter = -1;  // negative: use solver default
  bool reorthogonalize = false;
  std::string output_path;  // empty: stdout
  std::string format = "json";
  std::string demo = "none";
  bool timings = false;
};

// Runs the driver on the given arguments (argv[0] excluded).
// Writes the report to --output or stdout; diagnostics go to stderr.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

}  // namespace unkry::cli
