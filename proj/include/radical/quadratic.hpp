#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "radical/polynomial.hpp"

namespace radical {

/// Root of a x + b = 0.
inline RootSet solve_linear(Complex a, Complex b) {
  if (a == Complex{}) {
    throw DegreeError("solve_linear: zero leading coefficient");
  }
  require_finite(a, "solve_linear");
  require_finite(b, "solve_linear");
  const Complex x = -b / a;
  RootSet rs;
  rs.roots = {x};
  rs.residuals = {std::abs(a * x + b)};
  return rs;
}

/// Both roots of the monic quadratic t^2 + b t + c. The square root's sign
/// is chosen so it never cancels against b, and the second root comes from
/// the product c = t1 t2, which keeps the small root accurate when the two
/// differ by many orders of magnitude.
inline RootSet solve_quadratic(Complex b, Complex c) {
  require_finite(b, "solve_quadratic");
  require_finite(c, "solve_quadratic");
  Complex s = std::sqrt(b * b - 4.0 * c);
  if ((std::conj(b) * s).real() < 0.0) s = -s;
  const Complex big = -0.5 * (b + s);
  const Complex small = (big == Complex{}) ? Complex{} : c / big;
  const auto residual = [&](Complex t) { return std::abs((t + b) * t + c); };
  RootSet rs;
  rs.roots = {big, small};
  rs.residuals = {residual(big), residual(small)};
  return rs;
}

}  // namespace radical
