#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "radical/cardano.hpp"

namespace radical {

/// The cubic t^3 + (p/2) t^2 + (p^2/16 - r/4) t - q^2/64 = 0 whose roots are
/// the squared half-sums of quartic root pairs. It is the reduction equation
/// scaled down by 64.
inline Polynomial euler_resolvent(Complex p, Complex q, Complex r) {
  return Polynomial(
      {-q * q / 64.0, p * p / 16.0 - r / 4.0, 0.5 * p, Complex(1.0)});
}

/// The three resolvent square roots with signs fixed so that
/// s1 s2 s3 = -q/8. The search keeps s1 and toggles s2, s3 (negating all
/// three only flips the product, which the toggles already cover); the best
/// assignment is accepted by minimization so harmless q ~ 0 noise never
/// trips the check.
struct EulerRadicals {
  Complex s1;
  Complex s2;
  Complex s3;
  double product_defect;  // |s1 s2 s3 + q/8| for the chosen signs
};

inline EulerRadicals euler_radicals(Complex p, Complex q, Complex r,
                                    Tolerance tol = {}) {
  require_finite(p, "euler_radicals");
  require_finite(q, "euler_radicals");
  require_finite(r, "euler_radicals");
  const RootSet ts = solve_cubic(euler_resolvent(p, q, r));
  const Complex s1 = principal_nth_root(ts.roots[0], 2);
  Complex s2 = principal_nth_root(ts.roots[1], 2);
  Complex s3 = principal_nth_root(ts.roots[2], 2);
  const Complex target = -q / 8.0;
  double best = std::numeric_limits<double>::infinity();
  int best_mask = 0;
  for (int mask = 0; mask < 4; ++mask) {
    const Complex u2 = (mask & 1) ? -s2 : s2;
    const Complex u3 = (mask & 2) ? -s3 : s3;
    const double defect = std::abs(s1 * u2 * u3 - target);
    if (defect < best) {
      best = defect;
      best_mask = mask;
    }
  }
  if (best_mask & 1) s2 = -s2;
  if (best_mask & 2) s3 = -s3;
  const double scale = std::max({1.0, std::abs(p), std::abs(q), std::abs(r)});
  if (best > tol.abs_eps + tol.rel_eps * scale &&
      std::abs(q) > tol.abs_eps * scale) {
    throw StructureError(
        "euler_radicals: no sign assignment matches the radical product");
  }
  return EulerRadicals{s1, s2, s3, best};
}

/// All roots of y^4 + p y^2 + q y + r = 0 as the four sign patterns
/// {s1+s2+s3, s1-s2-s3, -s1+s2-s3, -s1-s2+s3}.
inline RootSet solve_depressed_quartic_euler(Complex p, Complex q, Complex r,
                                             Tolerance tol = {}) {
  const EulerRadicals e = euler_radicals(p, q, r, tol);
  std::vector<Complex> roots = {
      e.s1 + e.s2 + e.s3,
      e.s1 - e.s2 - e.s3,
      -e.s1 + e.s2 - e.s3,
      -e.s1 - e.s2 + e.s3,
  };
  RootSet rs;
  rs.residuals.reserve(4);
  for (Complex x : roots) {
    rs.residuals.push_back(std::abs(((x * x + p) * x + q) * x + r));
  }
  rs.roots = std::move(roots);
  return rs;
}

}  // namespace radical
