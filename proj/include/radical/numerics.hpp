#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "radical/errors.hpp"

namespace radical {

using Complex = std::complex<double>;

/// Absolute/relative threshold pair shared by every approximate comparison.
struct Tolerance {
  double abs_eps = 1e-10;
  double rel_eps = 1e-10;
};

inline Tolerance make_tolerance(double abs_eps, double rel_eps) {
  if (!(abs_eps > 0.0) || !(rel_eps > 0.0)) {
    throw Error("tolerance thresholds must be positive");
  }
  return Tolerance{abs_eps, rel_eps};
}

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* context) {
  if (!is_finite(z)) {
    throw Error(std::string(context) + ": non-finite value");
  }
}

/// sigma^k for sigma = e^{2 pi i / n}. The angle is reduced mod n and
/// evaluated directly, so large or negative k do not accumulate drift.
inline Complex unity_root(long n, long k) {
  if (n < 1) throw Error("unity_root: n must be >= 1");
  long m = k % n;
  if (m < 0) m += n;
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

/// Principal n-th root: the unique w with w^n = z and arg(w) in (-pi/n, pi/n].
/// Zero maps to zero.
inline Complex principal_nth_root(Complex z, long n) {
  if (n < 1) throw Error("principal_nth_root: n must be >= 1");
  require_finite(z, "principal_nth_root");
  if (z == Complex{}) return Complex{};
  if (n == 1) return z;
  // A negative-zero imaginary part would flip arg() to -pi; collapse it.
  const Complex w(z.real(), z.imag() + 0.0);
  return std::polar(std::pow(std::abs(w), 1.0 / static_cast<double>(n)),
                    std::arg(w) / static_cast<double>(n));
}

/// True iff |a - b| <= abs_eps + rel_eps * max(scale, |a|, |b|).
inline bool approx_eq(Complex a, Complex b, Tolerance tol = {},
                      double scale = 1.0) {
  if (scale < 0.0) throw Error("approx_eq: scale must be nonnegative");
  const double bound =
      tol.abs_eps + tol.rel_eps * std::max({scale, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= bound;
}

}  // namespace radical
