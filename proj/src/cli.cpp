#include "qpoly/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <functional>
#include <iterator>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "qpoly/niven.hpp"
#include "qpoly/ode.hpp"
#include "qpoly/report_json.hpp"
#include "qpoly/text.hpp"

namespace qpoly::cli {

namespace {

std::string read_input(const std::string& input, std::istream& in) {
  if (input != "-")
    return input;
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string fixed12(const Quaternion& q) {
  return to_string(q, 12);
}

std::string table(const SolveReport& report) {
  std::ostringstream out;
  out << "method: " << to_string(report.method) << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-3s %-58s %-28s %-10s %s\n", "#", "root", "lambda",
                "residual", "kind");
  out << line;
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    const auto& r = report.roots[i];
    char lambda[64];
    std::snprintf(lambda, sizeof lambda, "(%.6g, %.6g)", r.lambda.real(), r.lambda.imag());
    std::snprintf(line, sizeof line, "%-3zu %-58s %-28s %-10.3e %s\n", i + 1, fixed12(r.q).c_str(),
                  lambda, r.residual, to_string(r.kind));
    out << line;
  }
  for (const auto& s : report.spheres) {
    std::snprintf(line, sizeof line, "sphere: re = %.12g, |Im| = %.12g\n", s.re, s.imag_norm);
    out << line;
  }
  for (const auto& w : report.diagnostics.warnings)
    out << "warning: " << w << "\n";
  return out.str();
}

SolveReport solve_with(const UnilateralPolynomial& poly, const CliConfig& config) {
  switch (config.method) {
    case Method::niven: return solve_niven(poly, config.tol);
    case Method::spv: return solve_spv(poly, config.tol);
    case Method::eigenvector: break;
  }
  return solve_unilateral(poly, config.tol);
}

std::string emit(const SolveReport& report, const CliConfig& config, json extra) {
  if (config.output == OutputFormat::table) {
    std::string out = table(report);
    if (!extra.is_null())
      out += "matrices: " + extra.dump() + "\n";
    return out;
  }
  json j = report_to_json(report);
  if (!extra.is_null())
    j["matrices"] = std::move(extra);
  return j.dump(2) + "\n";
}

json matrices(const QuaternionMatrix& companion) {
  return {{"companion", quaternion_matrix_to_json(companion)},
          {"translated", complex_matrix_to_json(translate_block(companion))}};
}

RunResult run_solve(const CliConfig& config, std::istream& in) {
  const auto poly = parse_polynomial(read_input(config.input, in));
  const auto report = solve_with(poly, config);
  json extra = config.dump_matrices ? matrices(build_companion(poly)) : json{};
  return {kExitOk, emit(report, config, std::move(extra))};
}

RunResult run_bilateral(const CliConfig& config, std::istream& in) {
  if (config.method != Method::eigenvector)
    throw DomainError("bilateral equations are solved by the eigenvector method only");
  BilateralQuadratic bq;
  if (!config.input.empty()) {
    const std::string text = read_input(config.input, in);
    try {
      bq = bilateral_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
  } else {
    bq = {parse_quaternion(config.alpha1), parse_quaternion(config.beta1),
          parse_quaternion(config.alpha0)};
  }
  const auto report = solve_bilateral(bq, config.tol);
  json extra = config.dump_matrices ? matrices(build_generalized(bq)) : json{};
  return {kExitOk, emit(report, config, std::move(extra))};
}

RunResult run_ode(const CliConfig& config, std::istream& in) {
  const auto poly = parse_polynomial(read_input(config.input, in));
  const OdeProblem prob{poly.coeffs()};
  const auto basis = solve_ode(prob, config.tol);
  json j = basis_to_json(basis);
  if (!config.check_grid.empty()) {
    if (config.check_grid.size() != 3 || config.check_grid[2] < 1.0)
      throw DomainError("--check-grid expects x0 x1 steps with steps >= 1");
    const auto xs = linspace(config.check_grid[0], config.check_grid[1],
                             static_cast<std::size_t>(config.check_grid[2]));
    json checks = json::array();
    for (const auto& e : basis.exponents)
      checks.push_back({{"q", to_string(e.q)}, {"residual", verify_solution(prob, e.q, xs, config.h)}});
    j["checks"] = std::move(checks);
    j["h"] = config.h;
  }
  if (config.output == OutputFormat::table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < basis.exponents.size(); ++i) {
      out << "exp(" << fixed12(basis.exponents[i].q) << " x)";
      if (j.contains("checks"))
        out << "  residual " << j["checks"][i]["residual"].get<double>();
      out << "\n";
    }
    for (const auto& s : basis.spheres)
      out << "sphere: re = " << s.re << ", |Im| = " << s.imag_norm << "\n";
    return {kExitOk, out.str()};
  }
  return {kExitOk, j.dump(2) + "\n"};
}

struct Example {
  std::string name;
  std::vector<Quaternion> expected;
  std::function<SolveReport()> solve;
};

bool same_roots(const SolveReport& report, std::vector<Quaternion> expected) {
  if (report.roots.size() != expected.size())
    return false;
  for (const auto& r : report.roots) {
    auto it = std::find_if(expected.begin(), expected.end(),
                           [&](const Quaternion& e) { return max_abs_diff(e, r.q) <= 1e-9; });
    if (it == expected.end())
      return false;
    expected.erase(it);
  }
  return true;
}

RunResult run_selftest(const CliConfig& config) {
  const double s2 = std::numbers::sqrt2;
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  const std::vector<Example> examples{
      {"quadratic q^2 + j q + (1-k)", {-i, -(i + j)},
       [&] { return solve_unilateral(parse_polynomial("q^2 + j q + (1-k)"), config.tol); }},
      {"cubic q^3 + k q^2 + i q - j", {-k, (Quaternion{s2} + j - k) / 2.0, (Quaternion{-s2} + j - k) / 2.0},
       [&] { return solve_unilateral(parse_polynomial("q^3 + k q^2 + i q - j"), config.tol); }},
      {"bilateral p^2 - i p + p j - k", {-j, i},
       [&] { return solve_bilateral_direct({i, j, k}, config.tol); }},
      {"reduced q^2 - (i+j) q", {Quaternion{}, i + j},
       [&] { return solve_unilateral(parse_polynomial("q^2 - (i+j) q"), config.tol); }},
  };
  std::ostringstream out;
  int passed = 0;
  for (const auto& ex : examples) {
    bool ok = false;
    try {
      ok = same_roots(ex.solve(), ex.expected);
    } catch (const std::exception&) {
      ok = false;
    }
    passed += ok;
    out << (ok ? "PASS " : "FAIL ") << ex.name << "\n";
  }
  out << passed << "/" << examples.size() << " PASS\n";
  return {passed == static_cast<int>(examples.size()) ? kExitOk : kExitVerification, out.str()};
}

}  // namespace

RunResult run(const CliConfig& config, std::istream& in) {
  try {
    if (!(config.tol > 0.0))
      throw DomainError("--tol must be positive");
    switch (config.subcommand) {
      case Subcommand::solve: return run_solve(config, in);
      case Subcommand::bilateral: return run_bilateral(config, in);
      case Subcommand::ode: return run_ode(config, in);
      case Subcommand::selftest: return run_selftest(config);
    }
  } catch (const VerificationError& e) {
    return {kExitVerification, std::string("verification error: ") + e.what() + "\n"};
  } catch (const ConvergenceError& e) {
    return {kExitVerification, std::string("convergence error: ") + e.what() + "\n"};
  } catch (const DegenerateEigenvectorError& e) {
    return {kExitVerification, std::string("degenerate eigenvector: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kExitParse, std::string("parse error: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kExitParse, std::string("invalid input: ") + e.what() + "\n"};
  }
  return {kExitParse, "unknown subcommand\n"};
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Zeros of unilateral quaternionic polynomials via companion eigenvectors"};
  app.require_subcommand(1);
  CliConfig config;

  const std::map<std::string, Method> methods{
      {"eigenvector", Method::eigenvector}, {"niven", Method::niven}, {"spv", Method::spv}};
  const std::map<std::string, OutputFormat> outputs{{"json", OutputFormat::json},
                                                    {"table", OutputFormat::table}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--method", config.method, "eigenvector | niven | spv")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    sub->add_option("--tol", config.tol, "verification tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--output", config.output, "json | table")
        ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
    sub->add_flag("--dump-matrices", config.dump_matrices,
                  "include the companion and its complex translation");
  };

  auto* solve = app.add_subcommand("solve", "zeros of q^n + ... (text or JSON, '-' for stdin)");
  solve->add_option("input", config.input)->required();
  add_common(solve);

  auto* bilateral = app.add_subcommand("bilateral", "zeros of p^2 - alpha1 p + p beta1 - alpha0");
  bilateral->add_option("input", config.input, "JSON {alpha1, beta1, alpha0} or '-'");
  bilateral->add_option("--alpha1", config.alpha1);
  bilateral->add_option("--beta1", config.beta1);
  bilateral->add_option("--alpha0", config.alpha0);
  add_common(bilateral);

  auto* ode = app.add_subcommand("ode", "exponential solutions of Psi^(n) - sum a_s Psi^(s) = 0");
  ode->set_help_flag("--help", "Print this help message and exit");
  ode->add_option("input", config.input)->required();
  ode->add_option("--check-grid", config.check_grid, "x0 x1 steps")->expected(3);
  ode->add_option("--h", config.h, "finite-difference step")->check(CLI::PositiveNumber);
  add_common(ode);

  auto* selftest = app.add_subcommand("selftest", "reproduce the worked examples");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  if (solve->parsed())
    config.subcommand = Subcommand::solve;
  else if (bilateral->parsed())
    config.subcommand = Subcommand::bilateral;
  else if (ode->parsed())
    config.subcommand = Subcommand::ode;
  else
    config.subcommand = Subcommand::selftest;

  const auto result = run(config, in);
  (result.exit_code == kExitOk || config.subcommand == Subcommand::selftest ? out : err)
      << result.output;
  return result.exit_code;
}

}  // namespace qpoly::cli
