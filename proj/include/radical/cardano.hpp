#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "radical/quadratic.hpp"
#include "radical/transforms.hpp"

namespace radical {

/// Circulant amplitudes for y^3 + 3 p y + q = 0: the roots are the three
/// root-of-unity superpositions of alpha and beta, with
/// alpha^3 + beta^3 = -q and alpha beta = -p.
struct SuperpositionCoeffsCubic {
  Complex alpha;
  Complex beta;
};

/// Solve the binomial resolvent t^2 + q t - p^3 = 0 and take alpha as the
/// principal cube root of the larger-magnitude root; beta then comes from
/// the coupling alpha beta = -p rather than an independent radical, so the
/// pair always satisfies both constraint equations. When alpha vanishes the
/// coupling is vacuous and beta falls back to the other root's cube root.
inline SuperpositionCoeffsCubic cardano_coeffs(Complex p, Complex q) {
  require_finite(p, "cardano_coeffs");
  require_finite(q, "cardano_coeffs");
  const RootSet t = solve_quadratic(q, -p * p * p);
  Complex t_big = t.roots[0];
  Complex t_small = t.roots[1];
  if (std::abs(t_small) > std::abs(t_big)) std::swap(t_big, t_small);
  const Complex alpha = principal_nth_root(t_big, 3);
  const Complex beta = (std::abs(alpha) > 0.0) ? -p / alpha
                                               : principal_nth_root(t_small, 3);
  return SuperpositionCoeffsCubic{alpha, beta};
}

/// Largest constraint violation of the amplitude pair:
/// max(|alpha^3 + beta^3 + q|, |alpha beta + p|).
inline double cardano_system_residual(Complex p, Complex q,
                                      const SuperpositionCoeffsCubic& c) {
  const Complex a3 = c.alpha * c.alpha * c.alpha;
  const Complex b3 = c.beta * c.beta * c.beta;
  return std::max(std::abs(a3 + b3 + q), std::abs(c.alpha * c.beta + p));
}

/// All roots of y^3 + 3 p y + q = 0 in superposition order:
/// {alpha + beta, sigma^2 alpha + sigma beta, sigma alpha + sigma^2 beta}
/// with sigma = e^{2 pi i / 3}.
inline RootSet solve_depressed_cubic(Complex p, Complex q) {
  const SuperpositionCoeffsCubic c = cardano_coeffs(p, q);
  const Complex s1 = unity_root(3, 1);
  const Complex s2 = unity_root(3, 2);
  std::vector<Complex> roots = {
      c.alpha + c.beta,
      s2 * c.alpha + s1 * c.beta,
      s1 * c.alpha + s2 * c.beta,
  };
  RootSet rs;
  rs.residuals.reserve(3);
  for (Complex x : roots) {
    rs.residuals.push_back(std::abs(x * x * x + 3.0 * p * x + q));
  }
  rs.roots = std::move(roots);
  return rs;
}

/// Full pipeline for an arbitrary degree-3 polynomial: normalize, depress,
/// solve, shift back. Residuals are recomputed against the input.
inline RootSet solve_cubic(const Polynomial& poly) {
  const DepressedCubic d = depress_cubic(poly);
  RootSet rs = shift_roots(solve_depressed_cubic(d.p, d.q), d.shift);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    rs.residuals[i] = std::abs(poly.eval(rs.roots[i]));
  }
  return rs;
}

}  // namespace radical
