#pragma once

#include <string>
#include <utility>
#include <vector>

#include "radical/polynomial.hpp"

namespace radical {

/// y^3 + 3 p y + q = 0, reached from a monic cubic by x = y - shift.
/// Note the factor-3 normalization on the linear term.
struct DepressedCubic {
  Complex p;
  Complex q;
  Complex shift;
};

/// y^4 + p y^2 + q y + r = 0, reached from a monic quartic by x = y - shift.
struct DepressedQuartic {
  Complex p;
  Complex q;
  Complex r;
  Complex shift;
};

/// Coefficients of P(x0 + y) as a polynomial in y, computed by repeated
/// synthetic division (exact binomial expansion in Horner form).
inline Polynomial taylor_shift(const Polynomial& poly, Complex x0) {
  std::vector<Complex> d = poly.coeffs();
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = n - 1; j > k; --j) {
      d[j - 1] += x0 * d[j];
    }
  }
  return Polynomial(std::move(d));
}

/// Normalize to monic and remove the quadratic term with x = y - a/3:
/// p = b/3 - a^2/9, q = c - a b/3 + 2 a^3/27.
inline DepressedCubic depress_cubic(const Polynomial& poly) {
  if (poly.degree() != 3) {
    throw DegreeError("depress_cubic: degree 3 required, got " +
                      std::to_string(poly.degree()));
  }
  const Polynomial m = poly.monic();
  const Complex a = m.coeff(2);
  const Complex b = m.coeff(1);
  const Complex c = m.coeff(0);
  DepressedCubic out;
  out.p = b / 3.0 - a * a / 9.0;
  out.q = c - a * b / 3.0 + 2.0 * a * a * a / 27.0;
  out.shift = a / 3.0;
  return out;
}

/// Normalize to monic and remove the cubic term with x = y - a/4. The
/// depressed coefficients come from expanding P(y - a/4) directly, which
/// leaves the quartic's own coefficient algebra to taylor_shift.
inline DepressedQuartic depress_quartic(const Polynomial& poly) {
  if (poly.degree() != 4) {
    throw DegreeError("depress_quartic: degree 4 required, got " +
                      std::to_string(poly.degree()));
  }
  const Polynomial m = poly.monic();
  const Complex shift = m.coeff(3) / 4.0;
  const Polynomial dep = taylor_shift(m, -shift);
  return DepressedQuartic{dep.coeff(2), dep.coeff(1), dep.coeff(0), shift};
}

/// Undo a depression substitution: y-roots of P(y - shift) become x-roots
/// after subtracting shift. Residuals are carried over unchanged; recompute
/// them against the original polynomial if they matter downstream.
inline RootSet shift_roots(RootSet rs, Complex shift) {
  for (Complex& x : rs.roots) x -= shift;
  return rs;
}

}  // namespace radical
