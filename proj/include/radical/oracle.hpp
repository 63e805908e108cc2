#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "radical/polynomial.hpp"

namespace radical {

/// Thrown when the simultaneous iteration has not met the update criterion
/// within the iteration budget; carries the best iterate seen so far.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, RootSet best)
      : Error(message), best_(std::move(best)) {}

  const RootSet& best_iterate() const { return best_; }

 private:
  RootSet best_;
};

/// Durand-Kerner simultaneous iteration: all roots at once, from the
/// standard staggered start (0.4 + 0.9i)^k. Converged when the largest
/// per-root update falls below tol against the current root scale. This is
/// the library's independent ground truth and the only path for degree >= 5.
inline RootSet solve_numeric(const Polynomial& poly, std::size_t max_iter = 200,
                             Tolerance tol = {}) {
  const std::size_t deg = poly.degree();
  if (deg < 1 || poly.is_zero()) {
    throw DegreeError("solve_numeric: degree must be at least 1");
  }
  const Complex lead = poly.leading();

  std::vector<Complex> z(deg);
  const Complex seed(0.4, 0.9);
  Complex power(1.0);
  for (std::size_t k = 0; k < deg; ++k) {
    z[k] = power;
    power *= seed;
  }

  std::vector<Complex> updates(deg);
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    double max_update = 0.0;
    double scale = 1.0;
    for (std::size_t i = 0; i < deg; ++i) {
      Complex denom = lead;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      updates[i] = poly.eval(z[i]) / denom;
      if (!is_finite(updates[i])) {
        throw ConvergenceError(
            "solve_numeric: iterates collided, update is not finite",
            make_rootset(z, poly));
      }
    }
    for (std::size_t i = 0; i < deg; ++i) {
      z[i] -= updates[i];
      max_update = std::max(max_update, std::abs(updates[i]));
      scale = std::max(scale, std::abs(z[i]));
    }
    if (max_update <= tol.abs_eps + tol.rel_eps * scale) {
      return make_rootset(std::move(z), poly);
    }
  }
  throw ConvergenceError("solve_numeric: no convergence after " +
                             std::to_string(max_iter) + " iterations",
                         make_rootset(z, poly));
}

/// Pairing of two equal-sized root multisets minimizing the largest paired
/// distance, found by exhaustive permutation search.
struct MatchReport {
  std::vector<std::size_t> pairing;  // pairing[i] = index in b matched to a[i]
  double max_distance = 0.0;
};

inline MatchReport match_rootsets(const RootSet& a, const RootSet& b) {
  if (a.size() != b.size()) {
    throw DimensionError("match_rootsets: size mismatch " +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  if (n > 8) {
    throw DimensionError(
        "match_rootsets: exhaustive matching supports at most 8 roots");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  MatchReport best;
  best.max_distance = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cost = std::max(cost, std::abs(a.roots[i] - b.roots[perm[i]]));
      if (cost >= best.max_distance) break;
    }
    if (cost < best.max_distance) {
      best.max_distance = cost;
      best.pairing = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 0) best.max_distance = 0.0;
  return best;
}

}  // namespace radical
