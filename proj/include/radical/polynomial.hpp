#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "radical/numerics.hpp"

namespace radical {

inline constexpr std::size_t kMaxDegree = 64;

/// Dense univariate polynomial over Complex, coefficients stored constant
/// term first. Trailing exact-zero coefficients are trimmed on construction,
/// so degree() reflects the highest structurally nonzero term.
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{}} {}

  explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Complex{});
    for (Complex c : coeffs_) require_finite(c, "Polynomial");
    while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
    if (degree() > kMaxDegree) {
      throw DegreeError("Polynomial: degree " + std::to_string(degree()) +
                        " exceeds the supported maximum " +
                        std::to_string(kMaxDegree));
    }
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }
  Complex leading() const { return coeffs_.back(); }

  /// Horner evaluation.
  Complex eval(Complex x) const {
    Complex y{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      y = y * x + *it;
    }
    return y;
  }

  /// Same polynomial scaled so the leading coefficient is one.
  Polynomial monic() const {
    if (is_zero()) {
      throw DegreeError("Polynomial::monic: zero polynomial");
    }
    std::vector<Complex> scaled(coeffs_.size());
    const Complex lead = leading();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      scaled[k] = coeffs_[k] / lead;
      require_finite(scaled[k], "Polynomial::monic");
    }
    return Polynomial(std::move(scaled));
  }

 private:
  std::vector<Complex> coeffs_;
};

/// Unordered multiset of roots paired with per-root |P(root)| residuals.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;

  std::size_t size() const { return roots.size(); }
};

inline RootSet make_rootset(std::vector<Complex> roots,
                            const Polynomial& poly) {
  RootSet rs;
  rs.residuals.reserve(roots.size());
  for (Complex x : roots) rs.residuals.push_back(std::abs(poly.eval(x)));
  rs.roots = std::move(roots);
  return rs;
}

inline Complex root_sum(const RootSet& rs) {
  Complex s{};
  for (Complex x : rs.roots) s += x;
  return s;
}

/// max(1, |x_i|) over the set; the scale used by root-distance comparisons.
inline double root_scale(const RootSet& rs) {
  double s = 1.0;
  for (Complex x : rs.roots) s = std::max(s, std::abs(x));
  return s;
}

/// max(1, |c_k|) over the coefficients.
inline double coeff_scale(const Polynomial& poly) {
  double s = 1.0;
  for (Complex c : poly.coeffs()) s = std::max(s, std::abs(c));
  return s;
}

}  // namespace radical
