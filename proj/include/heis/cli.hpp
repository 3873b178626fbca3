#pragma once

// Command-line orchestration: constants tables, Hardy suites, resolvent
// batches, multiplier-identity batches and potential decisions, emitted as
// JSON/CSV through the report module.  run() is the whole program behind
// argument parsing, so tests drive it directly with a config struct.
//
// Exit codes: 0 all checks passed, 1 a verdict failed or a consistency
// residual exceeded its tolerance, 2 usage or config error (including
// hypothesis violations in the input data), 3 numerical failure
// (solver non-convergence, quadrature accuracy).

#include <complex>
#include <string>
#include <vector>

namespace heis {

struct RunConfig {
  std::string subcommand;  // constants|table|hardy|resolvent|potential-check|identities
  std::vector<int> dims;                  // empty: subcommand default
  std::vector<double> deltas;             // empty: subcommand default
  std::vector<std::complex<double>> lambdas;  // empty: builtin 12-point grid
  unsigned long long seed = 2026;
  std::string preset = "standard";  // fast|standard|thorough
  std::string out_dir = "out";
  std::string format = "json";  // json|csv|both
  int members = 12;             // family size for batch subcommands
  std::string batch_path;       // resolvent: JSON batch file
  std::string potential;        // inline JSON or a path to it
  std::string theorem = "free";  // resolvent: free|repulsive|two-budget
  double tol = 1e-5;            // identity relative tolerance
  std::string simd = "auto";    // auto|scalar|avx2
};

int run(const RunConfig& cfg);

// argv front end over run(); returns the same exit codes, 2 on parse errors
int cli_main(int argc, const char* const* argv);

// "a+bi" forms: "1", "-2.5", "i", "-i", "2i", "1+2i", "1.5e-1-2e+0i"
std::complex<double> parse_lambda(const std::string& s);

// "2..6" ranges and "2,3,5" lists
std::vector<int> parse_dims(const std::string& s);

}  // namespace heis
