#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "radical/matrices.hpp"
#include "radical/polynomial.hpp"

namespace radical {

/// Entries along wrapped diagonals of W^dagger A W must agree to this
/// relative level for the matrix to count as circulant.
inline constexpr double kCirculantStructureTol = 1e-9;

/// Diagonal matrix of the roots in their stored order.
inline SquareMatrix root_matrix(const RootSet& rs) {
  if (rs.size() == 0) {
    throw DimensionError("root_matrix: empty root set");
  }
  SquareMatrix a(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) a(i, i) = rs.roots[i];
  return a;
}

/// Conjugate the diagonal root matrix into the Fourier basis
/// (C = W^dagger A W), assert the result is a circulant with vanishing
/// diagonal, and return its first column (c0 ~ 0, c1, ..., c_{n-1}).
/// For a depressed cubic the column reads (0, alpha, beta); for a depressed
/// quartic (0, alpha, gamma, beta).
inline std::vector<Complex> extract_circulant_coeffs(const RootSet& rs,
                                                     Tolerance tol = {}) {
  const SquareMatrix a = root_matrix(rs);
  const std::size_t n = a.dim();
  const SquareMatrix w = walsh_hadamard(n);
  const SquareMatrix c = conjugate_by(adjoint(w), a);  // W^dagger A W
  const double scale = std::max(1.0, max_abs(c));
  if (circulant_defect(c) > kCirculantStructureTol * scale) {
    throw StructureError(
        "extract_circulant_coeffs: conjugated matrix is not circulant");
  }
  if (max_abs_diagonal(c) > tol.abs_eps + tol.rel_eps * scale) {
    throw Error(
        "extract_circulant_coeffs: nonzero diagonal, roots do not come from "
        "a depressed equation");
  }
  std::vector<Complex> coeffs(n);
  for (std::size_t m = 0; m < n; ++m) coeffs[m] = c(m, 0);
  return coeffs;
}

/// Invert the extraction: root j is the j-th diagonal entry of
/// W circulant(coeffs) W^dagger, i.e. the superposition
/// x_j = sum_m coeffs[m] sigma^{-j m}. For n = 3 and n = 4 these are exactly
/// the displayed root-of-unity superposition rows of the two solvers.
inline RootSet reconstruct_roots(const std::vector<Complex>& coeffs) {
  const long n = static_cast<long>(coeffs.size());
  if (n < 2) {
    throw DimensionError("reconstruct_roots: need at least 2 coefficients");
  }
  RootSet rs;
  rs.roots.reserve(coeffs.size());
  for (long j = 0; j < n; ++j) {
    Complex x{};
    for (long m = 0; m < n; ++m) {
      x += coeffs[static_cast<std::size_t>(m)] * unity_root(n, -(j * m));
    }
    rs.roots.push_back(x);
  }
  rs.residuals.assign(coeffs.size(), 0.0);
  return rs;
}

/// Entrywise magnitude of A^3 + 3 p A + q E for the cubic root matrix;
/// zero when every diagonal entry solves the depressed cubic.
inline double cubic_matrix_equation_defect(const RootSet& rs, Complex p,
                                           Complex q) {
  const SquareMatrix a = root_matrix(rs);
  const SquareMatrix lhs = matrix_power(a, 3) + (3.0 * p) * a +
                           q * SquareMatrix::identity(a.dim());
  return max_abs(lhs);
}

/// Entrywise magnitude of A^4 + p A^2 + q A + r E for the quartic root matrix.
inline double quartic_matrix_equation_defect(const RootSet& rs, Complex p,
                                             Complex q, Complex r) {
  const SquareMatrix a = root_matrix(rs);
  const SquareMatrix a2 = a * a;
  const SquareMatrix lhs = a2 * a2 + p * a2 + q * a +
                           r * SquareMatrix::identity(a.dim());
  return max_abs(lhs);
}

}  // namespace radical
