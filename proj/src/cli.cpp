#include "unkry/cli.hpp"

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unkry/cg.hpp"
#include "unkry/demo.hpp"
#include "unkry/errors.hpp"
#include "unkry/io.hpp"
#include "unkry/krylov.hpp"
#include "unkry/minres.hpp"

namespace unkry::cli {

namespace {

ScalingStrategy parse_strategy(const std::string& s) {
  if (s == "ynorm") return ScalingStrategy::ynorm;
  if (s == "qnorm") return ScalingStrategy::qnorm;
  if (s == "unit") return ScalingStrategy::unit;
  if (s == "normalized") return ScalingStrategy::normalized;
  throw Error("unknown scaling strategy: " + s);
}

void emit(const io::ReportDocument& doc, const CliOptions& opt) {
  const io::ReportFormat fmt =
      opt.format == "text" ? io::ReportFormat::text : io::ReportFormat::json;
  if (opt.output_path.empty()) {
    io::write_report(doc, std::cout, fmt);
  } else {
    io::write_report(doc, opt.output_path, fmt);
  }
}

int run_solver(const CliOptions& opt) {
  io::ProblemInstance prob;
  if (opt.demo == "compatible") {
    prob = demo_compatible();
  } else if (opt.demo == "incompatible") {
    prob = demo_incompatible();
  } else {
    prob = io::load_problem(opt.matrix_path, opt.c_path, opt.rhs_is_b);
  }
  const std::size_t n = prob.H.dim();

  KrylovConfig cfg;
  if (opt.q_tol >= 0.0) cfg.q_tol = opt.q_tol;
  if (opt.delta_tol >= 0.0) cfg.delta_tol = opt.delta_tol;
  if (opt.max_iter >= 0) cfg.max_iter = static_cast<std::size_t>(opt.max_iter);
  cfg.strategy = parse_strategy(opt.scaling);
  cfg.reorthogonalize = opt.reorthogonalize;
  // The text layout prints the q and y iterates as columns; keep them only
  // while the table stays readable.
  cfg.keep_history = opt.format == "text" && n <= 100;

  io::ReportDocument doc;
  ExitCode code = ExitCode::compatible;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (opt.method == "minres") {
      const MinresReport rep = solve_minres(prob.H, prob.c, cfg);
      doc = io::make_document(rep, cfg, n);
      code = rep.verdict == Verdict::incompatible ? ExitCode::incompatible
                                                  : ExitCode::compatible;
    } else if (opt.method == "cg") {
      const SolveReport rep = solve_cg(prob.H, prob.c, cfg);
      doc = io::make_document(rep, cfg, n, "cg");
      code = ExitCode::compatible;
    } else {
      const SolveReport rep = solve_krylov(prob.H, prob.c, cfg);
      doc = io::make_document(rep, cfg, n, "krylov");
      code = rep.verdict == Verdict::incompatible ? ExitCode::incompatible
                                                  : ExitCode::compatible;
    }
  } catch (const DidNotTerminate& e) {
    std::cerr << "unkry: " << e.what() << "\n";
    doc = io::make_document(e.partial(), cfg, n, opt.method);
    emit(doc, opt);
    return static_cast<int>(ExitCode::no_verdict);
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  if (opt.timings) doc.solve_seconds = elapsed.count();

  emit(doc, opt);
  return static_cast<int>(code);
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("unkry");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& a : full) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Matrix-free solver for symmetric linear systems H x + c = 0.\n"
      "Produces either a solution or a certificate that none exists."};
  app.name("unkry");

  CliOptions opt;
  app.add_option("--matrix", opt.matrix_path,
                 "Matrix Market file holding the symmetric matrix H");
  app.add_option("--c", opt.c_path,
                 "Vector file holding c (Matrix Market array or one number "
                 "per line)");
  app.add_flag("--rhs-is-b", opt.rhs_is_b,
               "Interpret the vector file as b of H x = b instead of c");
  app.add_option("--method", opt.method, "Solver to run")
      ->check(CLI::IsMember({"krylov", "minres", "cg"}))
      ->capture_default_str();
  app.add_option("--scaling", opt.scaling,
                 "Scaling strategy of the iteration (ignored by cg)")
      ->check(CLI::IsMember({"ynorm", "qnorm", "unit", "normalized"}))
      ->capture_default_str();
  app.add_option("--q-tol", opt.q_tol,
                 "Termination threshold on ||q_k|| (default sqrt(machine "
                 "epsilon))");
  app.add_option("--delta-tol", opt.delta_tol,
                 "Compatibility threshold on |delta_r| (default sqrt(machine "
                 "epsilon))");
  app.add_option("--max-iter", opt.max_iter,
                 "Iteration cap (default n + 2)");
  app.add_flag("--reorth", opt.reorthogonalize,
               "Reorthogonalize each new iterate against all previous ones");
  app.add_option("--output", opt.output_path,
                 "Write the report to this file instead of stdout");
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--demo", opt.demo,
                 "Run a built-in instance instead of reading files")
      ->check(CLI::IsMember({"none", "compatible", "incompatible"}))
      ->capture_default_str();
  app.add_flag("--timings", opt.timings,
               "Include the solve wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::usage_error);
  }

  const bool has_paths = !opt.matrix_path.empty() || !opt.c_path.empty();
  if (opt.demo != "none" && (has_paths || opt.rhs_is_b)) {
    std::cerr << "unkry: --demo excludes --matrix, --c and --rhs-is-b\n";
    return static_cast<int>(ExitCode::usage_error);
  }
  if (opt.demo == "none" &&
      (opt.matrix_path.empty() || opt.c_path.empty())) {
    std::cerr << "unkry: both --matrix and --c are required (or use --demo)\n";
    return static_cast<int>(ExitCode::usage_error);
  }

  try {
    return run_solver(opt);
  } catch (const NormalizationBreakdown& e) {
    std::cerr << "unkry: " << e.what() << "\n";
  } catch (const NonpositiveCurvature& e) {
    std::cerr << "unkry: " << e.what() << "\n";
  } catch (const ZeroYScaling& e) {
    std::cerr << "unkry: " << e.what() << "\n";
  } catch (const ZeroCertificate& e) {
    std::cerr << "unkry: " << e.what() << "\n";
  } catch (const ZeroQ& e) {
    std::cerr << "unkry: " << e.what() << "\n";
  } catch (const Error& e) {
    // Input, parse and dimension problems: the solver never started.
    std::cerr << "unkry: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage_error);
  }
  return static_cast<int>(ExitCode::no_verdict);
}

}  // namespace unkry::cli
