// Command-line front end: parse polynomials, dispatch the solvers, print
// root reports and verification results, run the benchmark harness, and
// dump the shift/clock/Fourier matrices.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "radical/radical.hpp"
#include "radical/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitVerificationFailure = 2;

struct SolveOptions {
  std::string method = "auto";
  std::string format = "text";
  bool verify = false;
  bool from_stdin = false;
  double tol_abs = 1e-10;
  double tol_rel = 1e-10;
  std::size_t max_iter = 200;
};

radical::SolveRequest make_request(const SolveOptions& opts) {
  radical::SolveRequest req;
  req.method = radical::method_from_name(opts.method);
  req.verify = opts.verify;
  req.tolerance = radical::make_tolerance(opts.tol_abs, opts.tol_rel);
  req.oracle_max_iter = opts.max_iter;
  return req;
}

int classify(const std::exception& e) {
  if (dynamic_cast<const radical::StructureError*>(&e) != nullptr ||
      dynamic_cast<const radical::ConvergenceError*>(&e) != nullptr) {
    return kExitVerificationFailure;
  }
  return kExitUserError;
}

/// Solve one input line; returns the exit-code contribution and fills the
/// rendered output (batch mode keeps everything single-line). `is_report`
/// distinguishes a rendered report (stdout, even with failing checks) from
/// an error message (stderr).
int solve_line(const SolveOptions& opts, const std::string& text,
               bool single_line, std::string& out, bool& is_report) {
  is_report = true;
  try {
    radical::SolveRequest req = make_request(opts);
    req.polynomial = radical::parse_polynomial(text);
    const radical::SolveReport report = radical::run_solve(req);
    if (opts.format == "json") {
      out = radical::report_to_json(report).dump(single_line ? -1 : 2);
    } else if (single_line) {
      std::string roots;
      for (std::size_t i = 0; i < report.roots.size(); ++i) {
        if (i > 0) roots += ", ";
        roots += radical::format_complex(report.roots.roots[i]);
      }
      out = roots + "    (" + report.method + ")";
    } else {
      out = radical::report_to_text(report);
    }
    if (opts.verify && !report.all_checks_pass()) {
      return kExitVerificationFailure;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    is_report = false;
    if (opts.format == "json") {
      out = nlohmann::json{{"error", e.what()}}.dump(single_line ? -1 : 2);
    } else {
      out = std::string("error: ") + e.what();
    }
    return classify(e);
  }
}

int run_solve_command(const SolveOptions& opts, const std::string& poly_text) {
  if (!opts.from_stdin) {
    std::string out;
    bool is_report = true;
    const int code = solve_line(opts, poly_text, false, out, is_report);
    (is_report ? std::cout : std::cerr) << out << "\n";
    return code;
  }

  std::vector<std::string> lines;
  for (std::string line; std::getline(std::cin, line);) lines.push_back(line);

  std::vector<std::string> outputs(lines.size());
  std::vector<int> codes(lines.size(), kExitOk);
  const auto process = [&](std::size_t i) {
    if (lines[i].find_first_not_of(" \t\r") == std::string::npos) return;
    bool is_report = true;
    codes[i] = solve_line(opts, lines[i], true, outputs[i], is_report);
  };

  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, hw), std::min<std::size_t>(lines.size(), 8));
  if (workers <= 1) {
    for (std::size_t i = 0; i < lines.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < lines.size();
             i = next.fetch_add(1)) {
          process(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  int worst = kExitOk;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!outputs[i].empty()) std::cout << outputs[i] << "\n";
    worst = std::max(worst, codes[i]);
  }
  return worst;
}

int run_matrix_command(std::size_t n, long power, const std::string& format) {
  const radical::SquareMatrix s1 = radical::sigma1(n, power);
  const radical::SquareMatrix s3 = radical::sigma3(n);
  const radical::SquareMatrix w = radical::walsh_hadamard(n);
  if (format == "json") {
    const nlohmann::json out{{"n", n},
                             {"power", power},
                             {"sigma1", radical::matrix_to_json(s1)},
                             {"sigma3", radical::matrix_to_json(s3)},
                             {"w", radical::matrix_to_json(w)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "Sigma_1^" << power << ":\n" << radical::matrix_to_text(s1)
              << "Sigma_3:\n" << radical::matrix_to_text(s3) << "W:\n"
              << radical::matrix_to_text(w);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "radical: exact roots of degree <= 4 polynomials via circulant "
      "superposition, with classical formulas and an iterative oracle"};
  app.require_subcommand(1);

  SolveOptions opts;
  std::string poly_text;
  CLI::App* solve = app.add_subcommand(
      "solve", "solve a polynomial given as an expression or coefficient list");
  solve->add_option("polynomial", poly_text,
                    "\"x^3 - 6x + 4\" or constant-first \"4,-6,0,1\"");
  solve->add_flag("--stdin", opts.from_stdin,
                  "read one polynomial per line from standard input");
  solve->add_option("--method", opts.method, "solution path")
      ->check(CLI::IsMember({"auto", "cardano", "ferrari-circulant",
                             "ferrari-classical", "euler", "oracle"}))
      ->capture_default_str();
  solve->add_flag("--verify", opts.verify,
                  "run oracle, superposition and constraint checks");

  std::string bench_format = "text";
  std::size_t bench_count = 1000;
  int bench_degree = 3;
  std::uint64_t bench_seed = 0;
  CLI::App* bench = app.add_subcommand(
      "bench", "time every method on seeded random polynomials");
  bench->add_option("--count", bench_count, "number of instances")
      ->capture_default_str();
  bench->add_option("--degree", bench_degree, "polynomial degree (2..4)")
      ->capture_default_str();
  bench->add_option("--seed", bench_seed, "RNG seed")->capture_default_str();

  std::size_t matrix_n = 3;
  long matrix_power = 1;
  std::string matrix_format = "text";
  CLI::App* matrix = app.add_subcommand(
      "matrix", "print Sigma_1^k, Sigma_3 and W for a given dimension");
  matrix->add_option("--n", matrix_n, "matrix dimension (>= 2)")
      ->capture_default_str();
  matrix->add_option("--power", matrix_power, "power applied to Sigma_1")
      ->capture_default_str();

  for (auto& [cmd, fmt] : {std::pair<CLI::App*, std::string*>{solve, &opts.format},
                           {bench, &bench_format},
                           {matrix, &matrix_format}}) {
    cmd->add_option("--format", *fmt, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  }
  for (CLI::App* cmd : {solve, bench}) {
    cmd->add_option("--tolerance-abs", opts.tol_abs, "absolute tolerance")
        ->envname("RADICAL_SOLVE_TOL_ABS")
        ->capture_default_str();
    cmd->add_option("--tolerance-rel", opts.tol_rel, "relative tolerance")
        ->envname("RADICAL_SOLVE_TOL_REL")
        ->capture_default_str();
    cmd->add_option("--max-iter", opts.max_iter,
                    "oracle iteration budget")
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUserError;
  }

  try {
    if (solve->parsed()) {
      if (!opts.from_stdin && poly_text.empty()) {
        std::cerr << "error: no polynomial given (pass one or use --stdin)\n";
        return kExitUserError;
      }
      return run_solve_command(opts, poly_text);
    }
    if (bench->parsed()) {
      const radical::BenchReport report = radical::run_bench(
          bench_count, bench_degree, bench_seed, opts.max_iter,
          radical::make_tolerance(opts.tol_abs, opts.tol_rel));
      if (bench_format == "json") {
        std::cout << radical::bench_to_json(report).dump(2) << "\n";
      } else {
        std::cout << radical::bench_to_text(report);
      }
      return kExitOk;
    }
    return run_matrix_command(matrix_n, matrix_power, matrix_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify(e);
  }
}
