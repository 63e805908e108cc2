#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "radical/oracle.hpp"
#include "radical/polynomial.hpp"

namespace testutil {

using radical::Complex;
using radical::Polynomial;
using radical::RootSet;

/// Expand prod_k (x - roots[k]) by exact binomial accumulation; the
/// factorization oracle used to freeze expected root sets.
inline Polynomial poly_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> coeffs{Complex(1.0)};
  for (Complex r : roots) {
    coeffs.insert(coeffs.begin(), Complex{});
    for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
      coeffs[k] -= r * coeffs[k + 1];
    }
  }
  return Polynomial(std::move(coeffs));
}

inline RootSet rootset_of(std::vector<Complex> roots) {
  RootSet rs;
  rs.residuals.assign(roots.size(), 0.0);
  rs.roots = std::move(roots);
  return rs;
}

/// Optimal-matching distance between two root multisets.
inline double multiset_distance(const std::vector<Complex>& a,
                                const std::vector<Complex>& b) {
  return radical::match_rootsets(rootset_of(a), rootset_of(b)).max_distance;
}

inline double multiset_distance(const RootSet& a, const RootSet& b) {
  return radical::match_rootsets(a, b).max_distance;
}

inline Complex random_complex(std::mt19937_64& rng, double lo = -10.0,
                              double hi = 10.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double re = u(rng);
  const double im = u(rng);
  return Complex(re, im);
}

inline double min_pairwise_distance(const std::vector<Complex>& xs) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      m = std::min(m, std::abs(xs[i] - xs[j]));
    }
  }
  return m;
}

}  // namespace testutil
