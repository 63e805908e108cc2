#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radical/euler.hpp"
#include "radical/ferrari.hpp"
#include "radical/oracle.hpp"
#include "radical/superposition.hpp"

namespace radical {

enum class Method {
  kAuto,
  kCardano,
  kFerrariCirculant,
  kFerrariClassical,
  kEuler,
  kOracle,
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::kAuto: return "auto";
    case Method::kCardano: return "cardano";
    case Method::kFerrariCirculant: return "ferrari-circulant";
    case Method::kFerrariClassical: return "ferrari-classical";
    case Method::kEuler: return "euler";
    case Method::kOracle: return "oracle";
  }
  return "auto";
}

inline Method method_from_name(const std::string& name) {
  for (Method m : {Method::kAuto, Method::kCardano, Method::kFerrariCirculant,
                   Method::kFerrariClassical, Method::kEuler, Method::kOracle}) {
    if (name == method_name(m)) return m;
  }
  throw Error("unknown method '" + name + "'");
}

struct SolveRequest {
  Polynomial polynomial;
  Method method = Method::kAuto;
  bool verify = false;
  Tolerance tolerance{};
  std::size_t oracle_max_iter = 200;
};

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;  // the measured quantity the pass/fail bound applies to
};

struct SolveReport {
  RootSet roots;       // shifted back, residuals against the input polynomial
  std::string method;  // name of the path actually taken
  Complex shift{};
  std::optional<SuperpositionCoeffsCubic> cubic_coeffs;
  std::optional<SuperpositionCoeffsQuartic> quartic_coeffs;
  std::vector<Check> checks;
  std::int64_t time_ns = 0;

  bool all_checks_pass() const {
    for (const Check& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Depress, dispatch on method, shift back; residuals against the input.
inline RootSet solve_quartic(const Polynomial& poly, Method method,
                             Tolerance tol = {}) {
  const DepressedQuartic d = depress_quartic(poly);
  RootSet depressed;
  switch (method) {
    case Method::kFerrariClassical:
      depressed = solve_depressed_quartic_classical(d.p, d.q, d.r, tol);
      break;
    case Method::kEuler:
      depressed = solve_depressed_quartic_euler(d.p, d.q, d.r, tol);
      break;
    default:
      depressed = solve_depressed_quartic_circulant(d.p, d.q, d.r, tol);
      break;
  }
  RootSet rs = shift_roots(std::move(depressed), d.shift);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    rs.residuals[i] = std::abs(poly.eval(rs.roots[i]));
  }
  return rs;
}

namespace detail {

inline double residual_bound(std::size_t degree, double cs) {
  if (degree <= 2) return 1e-10 * cs;
  if (degree == 3) return 1e-8 * std::pow(cs, 1.5);
  if (degree == 4) return 1e-7 * cs * cs;
  return 1e-8 * std::pow(cs, static_cast<double>(degree) / 2.0);
}

/// Verification checks appended to a report when --verify is requested.
/// Bounds follow the per-degree residual budgets of the solvers themselves.
inline std::vector<Check> run_verification(const SolveRequest& req,
                                           const Polynomial& monic,
                                           const SolveReport& report,
                                           const RootSet* depressed_roots,
                                           const Complex* dep_coeffs) {
  std::vector<Check> checks;
  const std::size_t deg = monic.degree();
  const double cs = coeff_scale(monic);
  const double rscale = root_scale(report.roots);

  {
    double worst = 0.0;
    for (Complex x : report.roots.roots) {
      worst = std::max(worst, std::abs(monic.eval(x)));
    }
    checks.push_back(
        {"residual_max", worst <= residual_bound(deg, cs), worst});
  }
  {
    const Complex vieta = -monic.coeff(deg - 1);
    const double defect = std::abs(root_sum(report.roots) - vieta);
    checks.push_back({"root_sum_vieta",
                      defect <= 1e-8 * static_cast<double>(deg) * rscale,
                      defect});
  }
  if (report.method != "oracle") {
    try {
      const RootSet reference =
          solve_numeric(monic, req.oracle_max_iter, req.tolerance);
      const MatchReport match = match_rootsets(report.roots, reference);
      checks.push_back({"oracle_match", match.max_distance <= 1e-6 * rscale,
                        match.max_distance});
    } catch (const ConvergenceError& e) {
      const MatchReport match = match_rootsets(report.roots, e.best_iterate());
      checks.push_back({"oracle_match", false, match.max_distance});
    }
  }

  if (depressed_roots != nullptr) {
    const std::size_t n = depressed_roots->size();
    const SquareMatrix w = walsh_hadamard(n);
    const SquareMatrix c =
        conjugate_by(adjoint(w), root_matrix(*depressed_roots));
    const double mscale = std::max(1.0, max_abs(c));
    const double structure = circulant_defect(c);
    checks.push_back({"superposition_circulant",
                      structure <= kCirculantStructureTol * mscale, structure});
    const double diagonal = max_abs_diagonal(c);
    checks.push_back({"superposition_zero_diagonal",
                      diagonal <= kCirculantStructureTol * mscale, diagonal});

    std::vector<Complex> column(n);
    for (std::size_t m = 0; m < n; ++m) column[m] = c(m, 0);
    const RootSet rebuilt = reconstruct_roots(column);
    double roundtrip = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      roundtrip = std::max(
          roundtrip, std::abs(rebuilt.roots[i] - depressed_roots->roots[i]));
    }
    checks.push_back(
        {"superposition_roundtrip",
         roundtrip <= 1e-10 * root_scale(*depressed_roots), roundtrip});

    const double dcs = [&] {
      double s = 1.0;
      for (std::size_t k = 0; k < (n == 3 ? 2u : 3u); ++k) {
        s = std::max(s, std::abs(dep_coeffs[k]));
      }
      return s;
    }();
    const double eq_defect =
        (n == 3)
            ? cubic_matrix_equation_defect(*depressed_roots, dep_coeffs[0],
                                           dep_coeffs[1])
            : quartic_matrix_equation_defect(*depressed_roots, dep_coeffs[0],
                                             dep_coeffs[1], dep_coeffs[2]);
    checks.push_back({"matrix_equation",
                      eq_defect <= residual_bound(n, dcs), eq_defect});

    if (report.cubic_coeffs) {
      const double sys = cardano_system_residual(dep_coeffs[0], dep_coeffs[1],
                                                 *report.cubic_coeffs);
      checks.push_back(
          {"coefficient_constraints", sys <= 1e-8 * std::pow(dcs, 1.5), sys});
    } else if (report.quartic_coeffs) {
      const double sys =
          ferrari_system_residual(dep_coeffs[0], dep_coeffs[1], dep_coeffs[2],
                                  *report.quartic_coeffs);
      checks.push_back(
          {"coefficient_constraints", sys <= 1e-8 * dcs * dcs, sys});
    }
  }
  return checks;
}

}  // namespace detail

/// Dispatch a solve request: route by degree (or honor the explicit method),
/// depress where the solver needs it, shift back, and report roots with
/// residuals against the input polynomial. A closed-form method requested
/// for degree >= 5 is a user error, not a fallback.
inline SolveReport run_solve(const SolveRequest& req) {
  const auto t0 = std::chrono::steady_clock::now();
  const Polynomial& poly = req.polynomial;
  const std::size_t deg = poly.degree();
  if (deg == 0) {
    throw DegreeError("cannot solve a degree-0 polynomial");
  }
  const Method m = req.method;
  const bool closed_form = m == Method::kCardano ||
                           m == Method::kFerrariCirculant ||
                           m == Method::kFerrariClassical || m == Method::kEuler;
  if (closed_form && deg >= 5) {
    throw DegreeError("no algebraic solution path for degree " +
                      std::to_string(deg) + "; use method 'oracle'");
  }
  if (m == Method::kCardano && deg != 3) {
    throw DegreeError("method 'cardano' requires degree 3");
  }
  if ((m == Method::kFerrariCirculant || m == Method::kFerrariClassical ||
       m == Method::kEuler) &&
      deg != 4) {
    throw DegreeError(std::string("method '") + method_name(m) +
                      "' requires degree 4");
  }

  const Polynomial monic = poly.monic();
  const Tolerance tol = req.tolerance;

  SolveReport report;
  std::optional<RootSet> depressed_roots;
  Complex dep_coeffs[3] = {};

  if (m == Method::kOracle || deg >= 5) {
    report.roots = solve_numeric(poly, req.oracle_max_iter, tol);
    report.method = "oracle";
  } else if (deg == 1) {
    report.roots = solve_linear(poly.coeff(1), poly.coeff(0));
    report.method = "linear";
  } else if (deg == 2) {
    report.roots = solve_quadratic(monic.coeff(1), monic.coeff(0));
    report.method = "quadratic";
  } else if (deg == 3) {
    const DepressedCubic d = depress_cubic(poly);
    depressed_roots = solve_depressed_cubic(d.p, d.q);
    report.cubic_coeffs = cardano_coeffs(d.p, d.q);
    report.shift = d.shift;
    report.roots = shift_roots(*depressed_roots, d.shift);
    report.method = "cardano";
    dep_coeffs[0] = d.p;
    dep_coeffs[1] = d.q;
  } else {
    const DepressedQuartic d = depress_quartic(poly);
    const Method quartic_method =
        (m == Method::kAuto) ? Method::kFerrariCirculant : m;
    switch (quartic_method) {
      case Method::kFerrariClassical:
        depressed_roots = solve_depressed_quartic_classical(d.p, d.q, d.r, tol);
        break;
      case Method::kEuler:
        depressed_roots = solve_depressed_quartic_euler(d.p, d.q, d.r, tol);
        break;
      default: {
        depressed_roots = solve_depressed_quartic_circulant(d.p, d.q, d.r, tol);
        const double scale =
            std::max({1.0, std::abs(d.p), std::abs(d.q), std::abs(d.r)});
        if (std::abs(d.q) > tol.abs_eps * scale) {
          report.quartic_coeffs = ferrari_coeffs(d.p, d.q, d.r, tol);
        }
        break;
      }
    }
    report.shift = d.shift;
    report.roots = shift_roots(*depressed_roots, d.shift);
    report.method = method_name(quartic_method);
    dep_coeffs[0] = d.p;
    dep_coeffs[1] = d.q;
    dep_coeffs[2] = d.r;
  }

  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    report.roots.residuals[i] = std::abs(poly.eval(report.roots.roots[i]));
    if (!is_finite(report.roots.roots[i])) {
      throw StructureError("run_solve: produced a non-finite root");
    }
  }

  if (req.verify) {
    report.checks = detail::run_verification(
        req, monic, report,
        depressed_roots ? &*depressed_roots : nullptr, dep_coeffs);
  }

  report.time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

}  // namespace radical
