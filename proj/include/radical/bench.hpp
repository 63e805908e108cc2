#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "radical/solve.hpp"

namespace radical {

struct BenchRow {
  std::string method;
  double median_ns = 0.0;
  double p95_ns = 0.0;
  double max_discrepancy = 0.0;  // worst matched distance against the oracle
};

struct BenchReport {
  std::size_t count = 0;
  int degree = 0;
  std::uint64_t seed = 0;
  std::vector<BenchRow> rows;
};

namespace detail {

inline double percentile(std::vector<double> v, double fraction) {
  std::sort(v.begin(), v.end());
  const std::size_t idx = std::min(
      v.size() - 1, static_cast<std::size_t>(fraction * double(v.size())));
  return v[idx];
}

/// Random monic polynomial of the given degree, coefficient components
/// uniform in [-10, 10]. Instances whose roots come closer than the
/// separation floor are redrawn, matching the well-separated regime the
/// iterative oracle is specified for.
inline Polynomial random_well_separated(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  while (true) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k < degree; ++k) {
      coeffs[static_cast<std::size_t>(k)] = Complex(u(rng), u(rng));
    }
    coeffs[static_cast<std::size_t>(degree)] = Complex(1.0);
    Polynomial poly(std::move(coeffs));

    RootSet roots;
    switch (degree) {
      case 2:
        roots = solve_quadratic(poly.coeff(1), poly.coeff(0));
        break;
      case 3:
        roots = solve_cubic(poly);
        break;
      default:
        roots = solve_quartic(poly, Method::kFerrariCirculant);
        break;
    }
    double min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        min_sep = std::min(min_sep, std::abs(roots.roots[i] - roots.roots[j]));
      }
    }
    if (min_sep > 1e-3) return poly;
  }
}

}  // namespace detail

/// Seeded benchmark: `count` random polynomials of the given degree, each
/// closed-form method timed per solve alongside the iterative oracle, with
/// the worst oracle disagreement tracked per method.
inline BenchReport run_bench(std::size_t count, int degree, std::uint64_t seed,
                             std::size_t oracle_max_iter = 200,
                             Tolerance tol = {}) {
  if (degree < 2 || degree > 4) {
    throw Error("bench: degree must be in 2..4");
  }
  if (count < 1) {
    throw Error("bench: count must be at least 1");
  }

  std::vector<std::pair<std::string, Method>> methods;
  if (degree == 2) {
    methods = {{"quadratic", Method::kAuto}};
  } else if (degree == 3) {
    methods = {{"cardano", Method::kCardano}};
  } else {
    methods = {{"ferrari-circulant", Method::kFerrariCirculant},
               {"ferrari-classical", Method::kFerrariClassical},
               {"euler", Method::kEuler}};
  }

  std::mt19937_64 rng(seed);
  std::vector<Polynomial> instances;
  instances.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    instances.push_back(detail::random_well_separated(degree, rng));
  }

  using clock = std::chrono::steady_clock;
  const auto time_ns = [](auto&& fn) {
    const auto t0 = clock::now();
    fn();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() -
                                                                t0)
        .count();
  };

  std::vector<std::vector<double>> samples(methods.size() + 1);
  std::vector<double> discrepancy(methods.size(), 0.0);
  for (auto& s : samples) s.reserve(count);

  for (const Polynomial& poly : instances) {
    RootSet oracle_roots;
    samples.back().push_back(static_cast<double>(time_ns([&] {
      oracle_roots = solve_numeric(poly, oracle_max_iter, tol);
    })));
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      RootSet roots;
      const Method method = methods[mi].second;
      samples[mi].push_back(static_cast<double>(time_ns([&] {
        if (degree == 2) {
          roots = solve_quadratic(poly.coeff(1), poly.coeff(0));
        } else if (degree == 3) {
          roots = solve_cubic(poly);
        } else {
          roots = solve_quartic(poly, method, tol);
        }
      })));
      const MatchReport match = match_rootsets(roots, oracle_roots);
      discrepancy[mi] = std::max(discrepancy[mi], match.max_distance);
    }
  }

  BenchReport report;
  report.count = count;
  report.degree = degree;
  report.seed = seed;
  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    report.rows.push_back({methods[mi].first,
                           detail::percentile(samples[mi], 0.5),
                           detail::percentile(samples[mi], 0.95),
                           discrepancy[mi]});
  }
  report.rows.push_back({"oracle", detail::percentile(samples.back(), 0.5),
                         detail::percentile(samples.back(), 0.95), 0.0});
  return report;
}

}  // namespace radical
