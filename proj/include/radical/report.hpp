#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "radical/bench.hpp"
#include "radical/matrices.hpp"
#include "radical/solve.hpp"

namespace radical {

/// Compact human-readable rendering: "2", "-1.5i", "1+1.7320508075688772i".
inline std::string format_complex(Complex z) {
  const auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  if (z.imag() == 0.0) return num(z.real());
  std::string imag = num(z.imag());
  if (imag == "1") imag.clear();
  if (imag == "-1") imag = "-";
  if (z.real() == 0.0) return imag + "i";
  return num(z.real()) + (z.imag() > 0.0 ? "+" : "") + imag + "i";
}

inline nlohmann::json complex_to_json(Complex z) {
  return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

inline Complex complex_from_json(const nlohmann::json& j) {
  return Complex(j.at("re").get<double>(), j.at("im").get<double>());
}

inline nlohmann::json report_to_json(const SolveReport& report) {
  nlohmann::json roots = nlohmann::json::array();
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    roots.push_back({{"re", report.roots.roots[i].real()},
                     {"im", report.roots.roots[i].imag()},
                     {"residual", report.roots.residuals[i]}});
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value}});
  }
  nlohmann::json out{{"roots", roots},
                     {"method", report.method},
                     {"shift", complex_to_json(report.shift)},
                     {"checks", checks},
                     {"time_ns", report.time_ns}};
  if (report.cubic_coeffs) {
    out["superposition"] = {
        {"alpha", complex_to_json(report.cubic_coeffs->alpha)},
        {"beta", complex_to_json(report.cubic_coeffs->beta)}};
  } else if (report.quartic_coeffs) {
    out["superposition"] = {
        {"alpha", complex_to_json(report.quartic_coeffs->alpha)},
        {"beta", complex_to_json(report.quartic_coeffs->beta)},
        {"gamma", complex_to_json(report.quartic_coeffs->gamma)}};
  }
  return out;
}

inline std::string report_to_text(const SolveReport& report) {
  std::ostringstream out;
  out << "method: " << report.method;
  if (report.shift != Complex{}) {
    out << "    shift: " << format_complex(report.shift);
  }
  out << "\nroots:\n";
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    char residual[32];
    std::snprintf(residual, sizeof(residual), "%.3g",
                  report.roots.residuals[i]);
    out << "  " << format_complex(report.roots.roots[i]) << "    (residual "
        << residual << ")\n";
  }
  if (report.cubic_coeffs) {
    out << "superposition: alpha = " << format_complex(report.cubic_coeffs->alpha)
        << ", beta = " << format_complex(report.cubic_coeffs->beta) << "\n";
  } else if (report.quartic_coeffs) {
    out << "superposition: alpha = "
        << format_complex(report.quartic_coeffs->alpha)
        << ", beta = " << format_complex(report.quartic_coeffs->beta)
        << ", gamma = " << format_complex(report.quartic_coeffs->gamma) << "\n";
  }
  if (!report.checks.empty()) {
    out << "checks:\n";
    for (const Check& c : report.checks) {
      char value[32];
      std::snprintf(value, sizeof(value), "%.3g", c.value);
      out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << " = "
          << value << "\n";
    }
  }
  out << "time: " << report.time_ns << " ns\n";
  return out.str();
}

inline nlohmann::json matrix_to_json(const SquareMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(row);
  }
  return rows;
}

inline std::string matrix_to_text(const SquareMatrix& m) {
  std::ostringstream out;
  std::vector<std::string> cells(m.dim() * m.dim());
  std::size_t width = 0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      // round near-zero parts so the small-n matrices print exactly
      Complex z = m(r, c);
      if (std::abs(z.real()) < 1e-12) z = Complex(0.0, z.imag());
      if (std::abs(z.imag()) < 1e-12) z = Complex(z.real(), 0.0);
      const auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return std::string(buf);
      };
      std::string cell;
      if (z.imag() == 0.0) {
        cell = num(z.real());
      } else {
        std::string imag = num(z.imag());
        if (imag == "1") imag.clear();
        if (imag == "-1") imag = "-";
        cell = (z.real() == 0.0 ? "" : num(z.real()) +
                                           (z.imag() > 0.0 ? "+" : "")) +
               imag + "i";
      }
      cells[r * m.dim() + c] = cell;
      width = std::max(width, cell.size());
    }
  }
  for (std::size_t r = 0; r < m.dim(); ++r) {
    out << " ";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const std::string& cell = cells[r * m.dim() + c];
      out << std::string(width + 2 - cell.size(), ' ') << cell;
    }
    out << "\n";
  }
  return out.str();
}

inline nlohmann::json bench_to_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BenchRow& row : report.rows) {
    rows.push_back({{"method", row.method},
                    {"median_ns", row.median_ns},
                    {"p95_ns", row.p95_ns},
                    {"max_discrepancy", row.max_discrepancy}});
  }
  return nlohmann::json{{"count", report.count},
                        {"degree", report.degree},
                        {"seed", report.seed},
                        {"rows", rows}};
}

inline std::string bench_to_text(const BenchReport& report) {
  std::ostringstream out;
  out << "degree " << report.degree << ", " << report.count
      << " instances, seed " << report.seed << "\n";
  char line[128];
  std::snprintf(line, sizeof(line), "%-20s %12s %12s %16s\n", "method",
                "median", "p95", "max discrepancy");
  out << line;
  for (const BenchRow& row : report.rows) {
    std::snprintf(line, sizeof(line), "%-20s %9.0f ns %9.0f ns %16.3g\n",
                  row.method.c_str(), row.median_ns, row.p95_ns,
                  row.max_discrepancy);
    out << line;
  }
  return out.str();
}

}  // namespace radical
