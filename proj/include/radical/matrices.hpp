#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "radical/numerics.hpp"

namespace radical {

inline constexpr std::size_t kMaxMatrixDim = 64;

/// Dense row-major n-by-n complex matrix. Values are immutable in practice:
/// every operation below builds a fresh matrix.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {
    if (n < 1 || n > kMaxMatrixDim) {
      throw DimensionError("SquareMatrix: dimension " + std::to_string(n) +
                           " outside [1, " + std::to_string(kMaxMatrixDim) +
                           "]");
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1.0);
    return m;
  }

  std::size_t dim() const { return n_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * n_ + c];
  }

 private:
  std::size_t n_;
  std::vector<Complex> data_;
};

inline void require_same_dim(const SquareMatrix& a, const SquareMatrix& b,
                             const char* context) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(context) + ": dimension mismatch " +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

inline SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "matrix product");
  const std::size_t n = a.dim();
  SquareMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

inline SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "matrix sum");
  SquareMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

inline SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "matrix difference");
  SquareMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

inline SquareMatrix operator*(Complex s, const SquareMatrix& a) {
  SquareMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = s * a(r, c);
  return out;
}

inline SquareMatrix adjoint(const SquareMatrix& a) {
  SquareMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = std::conj(a(c, r));
  return out;
}

inline SquareMatrix matrix_power(const SquareMatrix& a, std::size_t k) {
  SquareMatrix out = SquareMatrix::identity(a.dim());
  for (std::size_t i = 0; i < k; ++i) out = out * a;
  return out;
}

inline double max_abs(const SquareMatrix& a) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      m = std::max(m, std::abs(a(r, c)));
  return m;
}

/// Entrywise |a - b| <= bound.
inline bool entrywise_close(const SquareMatrix& a, const SquareMatrix& b,
                            double bound) {
  require_same_dim(a, b, "entrywise comparison");
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (std::abs(a(r, c) - b(r, c)) > bound) return false;
  return true;
}

/// Cyclic shift matrix raised to `power`: Sigma_1 has ones at (i+1 mod n, i),
/// so Sigma_1^k has ones where row - col = k (mod n). Sigma_1^n is the
/// identity; any integer power is reduced mod n.
inline SquareMatrix sigma1(std::size_t n, long power = 1) {
  if (n < 2) throw DimensionError("sigma1: dimension must be at least 2");
  SquareMatrix m(n);
  long k = power % static_cast<long>(n);
  if (k < 0) k += static_cast<long>(n);
  for (std::size_t col = 0; col < n; ++col) {
    m((col + static_cast<std::size_t>(k)) % n, col) = Complex(1.0);
  }
  return m;
}

/// Clock matrix diag(1, sigma, sigma^2, ..., sigma^{n-1}).
inline SquareMatrix sigma3(std::size_t n) {
  if (n < 2) throw DimensionError("sigma3: dimension must be at least 2");
  SquareMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    m(k, k) = unity_root(static_cast<long>(n), static_cast<long>(k));
  }
  return m;
}

/// Generalized Walsh-Hadamard matrix: W[a][b] = sigma^{(n-a) b} / sqrt(n),
/// i.e. row a carries ratio sigma^{n-a}, rows in descending-power order with
/// an all-ones first row. Its adjoint is the DFT coefficient matrix
/// W^dagger[a][b] = sigma^{a b} / sqrt(n).
inline SquareMatrix walsh_hadamard(std::size_t n) {
  if (n < 2) throw DimensionError("walsh_hadamard: dimension must be at least 2");
  SquareMatrix m(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  const long ln = static_cast<long>(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const long exponent = (ln - static_cast<long>(a)) * static_cast<long>(b);
      m(a, b) = norm * unity_root(ln, exponent);
    }
  }
  return m;
}

/// Adjoint action w a w^dagger. With w = walsh_hadamard(n) and a = sigma3(n)
/// this reproduces sigma1(n, 1); the reverse direction w^dagger a w is what
/// turns a diagonal root matrix into a circulant (pass adjoint(w) here).
inline SquareMatrix conjugate_by(const SquareMatrix& w, const SquareMatrix& a) {
  require_same_dim(w, a, "conjugate_by");
  return w * a * adjoint(w);
}

/// sum_k c[k] Sigma_1^k (c[0] multiplies the identity): the circulant whose
/// first column is c.
inline SquareMatrix circulant_from_coeffs(const std::vector<Complex>& c) {
  const std::size_t n = c.size();
  if (n < 2) throw DimensionError("circulant_from_coeffs: need length >= 2");
  SquareMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col)
      m(r, col) = c[(r + n - col) % n];
  return m;
}

/// Largest deviation of any entry from the wrapped-diagonal value implied by
/// the first column; zero for an exact circulant.
inline double circulant_defect(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  double defect = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      defect = std::max(defect, std::abs(a(r, c) - a((r + n - c) % n, 0)));
  return defect;
}

inline double max_abs_diagonal(const SquareMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a(i, i)));
  return m;
}

}  // namespace radical
