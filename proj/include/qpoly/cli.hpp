#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qpoly/rootfinder.hpp"

namespace qpoly::cli {

enum class Subcommand { solve, bilateral, ode, selftest };
enum class OutputFormat { json, table };

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitVerification = 3;

struct CliConfig {
  Subcommand subcommand = Subcommand::solve;
  Method method = Method::eigenvector;
  double tol = kDefaultTol;
  OutputFormat output = OutputFormat::json;
  bool dump_matrices = false;

  std::string input;  // polynomial text or JSON; "-" reads stdin

  // bilateral coefficients (used when `input` is empty)
  std::string alpha1 = "0";
  std::string beta1 = "0";
  std::string alpha0 = "0";

  // ode verification: x0, x1, steps
  std::vector<double> check_grid;
  double h = 1e-3;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
};

/// Executes one command. Never throws for bad input or failed verification;
/// those map to exit codes 2 and 3.
RunResult run(const CliConfig& config, std::istream& in);

/// argv front end (CLI11); writes the report to `out` and errors to `err`.
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qpoly::cli
