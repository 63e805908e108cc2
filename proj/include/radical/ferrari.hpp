#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "radical/cardano.hpp"

namespace radical {

/// Circulant amplitudes for y^4 + p y^2 + q y + r = 0: the roots are the
/// four fourth-root-of-unity superpositions of (alpha, gamma, beta), with
/// alpha^2 + beta^2 = -q/(4 gamma), gamma^2 + 2 alpha beta = -p/2 and
/// Gamma = gamma^2 a root of the reduction equation.
struct SuperpositionCoeffsQuartic {
  Complex alpha;
  Complex beta;
  Complex gamma;
};

/// The reduction equation 64 G^3 + 32 p G^2 - 4 (4 r - p^2) G - q^2 = 0
/// satisfied by Gamma = gamma^2, as a polynomial in G.
inline Polynomial reduction_resolvent(Complex p, Complex q, Complex r) {
  return Polynomial({-q * q, -4.0 * (4.0 * r - p * p), 32.0 * p, Complex(64.0)});
}

namespace detail {

/// Resolvent scan order: real part descending, then magnitude descending.
inline std::vector<Complex> resolvent_scan_order(const RootSet& rs) {
  std::vector<Complex> v = rs.roots;
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return std::abs(a) > std::abs(b);
  });
  return v;
}

}  // namespace detail

/// Amplitudes for one explicitly chosen reduction-equation root Gamma.
/// alpha^2 and beta^2 are the two branches of the printed radical pair;
/// beta itself comes from the product constraint
/// alpha beta = -(Gamma + p/2)/2 so the pair's relative sign is never left
/// to an independent square root (except when alpha = 0, where the product
/// says nothing).
inline SuperpositionCoeffsQuartic ferrari_coeffs_for_gamma(Complex p, Complex q,
                                                           Complex gamma_sq,
                                                           Tolerance tol = {}) {
  const Complex gamma = principal_nth_root(gamma_sq, 2);
  if (!(std::abs(gamma) > tol.abs_eps)) {
    throw StructureError("ferrari_coeffs_for_gamma: gamma below tolerance");
  }
  const Complex q4g = q / (4.0 * gamma);
  const Complex half_trace = gamma_sq + 0.5 * p;  // Gamma + p/2
  const Complex product = -0.5 * half_trace;      // alpha beta
  const Complex root_term = std::sqrt(q4g * q4g - half_trace * half_trace);
  const Complex alpha_sq = 0.5 * (-q4g + root_term);
  const Complex beta_sq = 0.5 * (-q4g - root_term);
  const Complex alpha = principal_nth_root(alpha_sq, 2);
  const Complex beta = (std::abs(alpha) > 0.0) ? product / alpha
                                               : principal_nth_root(beta_sq, 2);
  return SuperpositionCoeffsQuartic{alpha, beta, gamma};
}

/// Solve the reduction equation and pick Gamma among roots with
/// |Gamma| > abs_eps: largest real part first, magnitude as tie-break
/// (this maximizes |gamma| in the -q/(4 gamma) division). If every root is
/// negligible the quartic is the all-degenerate y^4 = 0 and the amplitudes
/// are identically zero.
inline SuperpositionCoeffsQuartic ferrari_coeffs(Complex p, Complex q, Complex r,
                                                 Tolerance tol = {}) {
  require_finite(p, "ferrari_coeffs");
  require_finite(q, "ferrari_coeffs");
  require_finite(r, "ferrari_coeffs");
  const RootSet res = solve_cubic(reduction_resolvent(p, q, r));
  for (Complex g : detail::resolvent_scan_order(res)) {
    if (std::abs(g) > tol.abs_eps) {
      return ferrari_coeffs_for_gamma(p, q, g, tol);
    }
  }
  return SuperpositionCoeffsQuartic{Complex{}, Complex{}, Complex{}};
}

/// Largest violation among the four transformed system equations
/// (a)-(d) that the amplitudes must satisfy simultaneously.
inline double ferrari_system_residual(Complex p, Complex q, Complex r,
                                      const SuperpositionCoeffsQuartic& c) {
  const Complex a = c.alpha;
  const Complex b = c.beta;
  const Complex g = c.gamma;
  const Complex sum_sq = a * a + b * b;
  const Complex mixed = g * g + 2.0 * a * b;
  const Complex eq_a =
      sum_sq * sum_sq + mixed * mixed + 8.0 * a * b * g * g + p * mixed + r;
  const Complex common = 2.0 * g * g + 6.0 * a * b + p;
  const Complex eq_b = 2.0 * g * b * common + 4.0 * a * a * a * g + q * a;
  const Complex eq_c = sum_sq * (6.0 * g * g + 4.0 * a * b + p) + q * g;
  const Complex eq_d = 2.0 * a * g * common + 4.0 * b * b * b * g + q * b;
  return std::max({std::abs(eq_a), std::abs(eq_b), std::abs(eq_c),
                   std::abs(eq_d)});
}

/// q = 0 degeneracy: y^4 + p y^2 + r factors through y^2, so substitute,
/// solve the quadratic and take both square roots of each solution.
inline RootSet solve_biquadratic(Complex p, Complex r) {
  const RootSet ys = solve_quadratic(p, r);
  std::vector<Complex> roots;
  roots.reserve(4);
  for (Complex y : ys.roots) {
    const Complex s = principal_nth_root(y, 2);
    roots.push_back(s);
    roots.push_back(-s);
  }
  RootSet rs;
  rs.residuals.reserve(4);
  for (Complex x : roots) {
    rs.residuals.push_back(std::abs(((x * x + p) * x * x) + r));
  }
  rs.roots = std::move(roots);
  return rs;
}

namespace detail {

inline double quartic_residual(Complex p, Complex q, Complex r, Complex x) {
  return std::abs(((x * x + p) * x + q) * x + r);
}

inline RootSet biquadratic_with_full_residuals(Complex p, Complex q, Complex r) {
  RootSet rs = solve_biquadratic(p, r);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    rs.residuals[i] = quartic_residual(p, q, r, rs.roots[i]);
  }
  return rs;
}

}  // namespace detail

/// All roots of y^4 + p y^2 + q y + r = 0 as superpositions of the
/// circulant amplitudes, in the fixed order
/// {a+g+b, s^3 a + s^2 g + s b, s^2 a + g + s^2 b, s a + s^2 g + s^3 b}
/// with s = i. Near-zero q is routed to the biquadratic path before any
/// division by gamma can happen.
inline RootSet solve_depressed_quartic_circulant(Complex p, Complex q, Complex r,
                                                 Tolerance tol = {}) {
  require_finite(p, "solve_depressed_quartic_circulant");
  require_finite(q, "solve_depressed_quartic_circulant");
  require_finite(r, "solve_depressed_quartic_circulant");
  const double scale = std::max({1.0, std::abs(p), std::abs(q), std::abs(r)});
  if (std::abs(q) <= tol.abs_eps * scale) {
    return detail::biquadratic_with_full_residuals(p, q, r);
  }
  const SuperpositionCoeffsQuartic c = ferrari_coeffs(p, q, r, tol);
  const Complex s1 = unity_root(4, 1);
  const Complex s2 = unity_root(4, 2);
  const Complex s3 = unity_root(4, 3);
  std::vector<Complex> roots = {
      c.alpha + c.gamma + c.beta,
      s3 * c.alpha + s2 * c.gamma + s1 * c.beta,
      s2 * c.alpha + c.gamma + s2 * c.beta,
      s1 * c.alpha + s2 * c.gamma + s3 * c.beta,
  };
  RootSet rs;
  rs.residuals.reserve(4);
  for (Complex x : roots) {
    rs.residuals.push_back(detail::quartic_residual(p, q, r, x));
  }
  rs.roots = std::move(roots);
  return rs;
}

/// Classical resolvent route: solve
/// lambda^3 - p lambda^2 - 4 r lambda + (4 p r - q^2) = 0, take the first
/// scanned root with lambda - p away from zero, and split the quartic into
/// x^2 +- sqrt(lambda - p) (x - q/(2(lambda - p))) + lambda/2 = 0.
/// If every root sits at lambda = p the coefficients force q = 0 and the
/// biquadratic path applies.
inline RootSet solve_depressed_quartic_classical(Complex p, Complex q, Complex r,
                                                 Tolerance tol = {}) {
  require_finite(p, "solve_depressed_quartic_classical");
  require_finite(q, "solve_depressed_quartic_classical");
  require_finite(r, "solve_depressed_quartic_classical");
  const Polynomial resolvent(
      {4.0 * p * r - q * q, -4.0 * r, -p, Complex(1.0)});
  const RootSet lams = solve_cubic(resolvent);
  Complex lambda0{};
  bool found = false;
  for (Complex l : detail::resolvent_scan_order(lams)) {
    if (std::abs(l - p) > tol.abs_eps) {
      lambda0 = l;
      found = true;
      break;
    }
  }
  if (!found) {
    return detail::biquadratic_with_full_residuals(p, q, r);
  }
  const Complex s = principal_nth_root(lambda0 - p, 2);
  const Complex t = q / (2.0 * (lambda0 - p));
  const RootSet first = solve_quadratic(s, -s * t + 0.5 * lambda0);
  const RootSet second = solve_quadratic(-s, s * t + 0.5 * lambda0);
  std::vector<Complex> roots = {first.roots[0], first.roots[1],
                                second.roots[0], second.roots[1]};
  RootSet rs;
  rs.residuals.reserve(4);
  for (Complex x : roots) {
    rs.residuals.push_back(detail::quartic_residual(p, q, r, x));
  }
  rs.roots = std::move(roots);
  return rs;
}

}  // namespace radical
