#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "radical/cardano.hpp"
#include "radical/oracle.hpp"

using radical::cardano_coeffs;
using radical::cardano_system_residual;
using radical::Complex;
using radical::Polynomial;
using radical::RootSet;
using radical::solve_cubic;
using radical::solve_depressed_cubic;
using radical::SuperpositionCoeffsCubic;
using radical::unity_root;

TEST_CASE("cardano_coeffs pinned cases") {
  // x^3 = 1: resolvent t^2 - t = 0, alpha from the larger root 1
  const SuperpositionCoeffsCubic a = cardano_coeffs(Complex{}, Complex(-1.0));
  CHECK(std::abs(a.alpha - Complex(1.0)) < 1e-15);
  CHECK(std::abs(a.beta) < 1e-15);

  // triple zero
  const SuperpositionCoeffsCubic z = cardano_coeffs(Complex{}, Complex{});
  CHECK(z.alpha == Complex{});
  CHECK(z.beta == Complex{});

  // p=-2, q=4: resolvent t^2 + 4t + 8, larger-magnitude root is a tie, the
  // solver's own branch picks t = -2-2i whose principal cube root is 1-i
  const SuperpositionCoeffsCubic c = cardano_coeffs(Complex(-2.0), Complex(4.0));
  CHECK(std::abs(c.alpha - Complex(1.0, -1.0)) < 1e-14);
  CHECK(std::abs(c.beta - Complex(1.0, 1.0)) < 1e-14);
  CHECK(cardano_system_residual(Complex(-2.0), Complex(4.0), c) < 1e-13);
}

TEST_CASE("solve_depressed_cubic pinned cases") {
  // x^3 = 1
  const RootSet unity = solve_depressed_cubic(Complex{}, Complex(-1.0));
  CHECK(testutil::multiset_distance(
            unity.roots, {Complex(1.0), unity_root(3, 1), unity_root(3, 2)}) <
        1e-14);

  // x^3 - 6x + 4 = (x - 2)(x^2 + 2x - 2): roots 2, -1 +- sqrt(3)
  const RootSet named = solve_depressed_cubic(Complex(-2.0), Complex(4.0));
  const double s3 = std::sqrt(3.0);
  CHECK(testutil::multiset_distance(
            named.roots, {Complex(2.0), Complex(-1.0 + s3), Complex(-1.0 - s3)}) <
        1e-13);

  const RootSet zeros = solve_depressed_cubic(Complex{}, Complex{});
  for (Complex x : zeros.roots) CHECK(std::abs(x) < 1e-15);
}

TEST_CASE("root order follows the superposition rows") {
  // x1 = alpha + beta, x2 = s^2 alpha + s beta, x3 = s alpha + s^2 beta
  const SuperpositionCoeffsCubic c = cardano_coeffs(Complex(-2.0), Complex(4.0));
  const RootSet rs = solve_depressed_cubic(Complex(-2.0), Complex(4.0));
  const Complex s = unity_root(3, 1);
  CHECK(std::abs(rs.roots[0] - (c.alpha + c.beta)) < 1e-15);
  CHECK(std::abs(rs.roots[1] - (s * s * c.alpha + s * c.beta)) < 1e-15);
  CHECK(std::abs(rs.roots[2] - (s * c.alpha + s * s * c.beta)) < 1e-15);
}

TEST_CASE("random depressed cubics: residuals, trace, constraints, oracle") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex p = testutil::random_complex(rng);
    const Complex q = testutil::random_complex(rng);
    const RootSet rs = solve_depressed_cubic(p, q);
    const double cs = std::max({1.0, std::abs(p), std::abs(q)});
    const double residual_bound = 1e-8 * std::pow(cs, 1.5);
    for (double r : rs.residuals) CHECK(r <= residual_bound);
    CHECK(std::abs(root_sum(rs)) <= 1e-9);

    const SuperpositionCoeffsCubic c = cardano_coeffs(p, q);
    CHECK(cardano_system_residual(p, q, c) <= 1e-9 * std::pow(cs, 1.5));

    if (testutil::min_pairwise_distance(rs.roots) > 1e-3) {
      const RootSet oracle = radical::solve_numeric(
          Polynomial({q, 3.0 * p, Complex{}, Complex(1.0)}));
      CHECK(testutil::multiset_distance(rs, oracle) <=
            1e-6 * radical::root_scale(rs));
    }
  }
}

TEST_CASE("branch choice does not change the root multiset") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex p = testutil::random_complex(rng);
    const Complex q = testutil::random_complex(rng);
    const SuperpositionCoeffsCubic c = cardano_coeffs(p, q);
    // the alternative primitive pair (sigma alpha, sigma^2 beta) keeps both
    // constraint equations and must permute the same superpositions
    const Complex s = unity_root(3, 1);
    const SuperpositionCoeffsCubic alt{s * c.alpha, s * s * c.beta};
    CHECK(cardano_system_residual(p, q, alt) <=
          1e-9 * std::pow(std::max({1.0, std::abs(p), std::abs(q)}), 1.5));

    const auto rows = [](const SuperpositionCoeffsCubic& k) {
      const Complex s1 = unity_root(3, 1);
      const Complex s2 = unity_root(3, 2);
      return std::vector<Complex>{k.alpha + k.beta,
                                  s2 * k.alpha + s1 * k.beta,
                                  s1 * k.alpha + s2 * k.beta};
    };
    CHECK(testutil::multiset_distance(rows(c), rows(alt)) <=
          1e-9 * std::max(1.0, std::abs(c.alpha) + std::abs(c.beta)));
  }
}

TEST_CASE("solve_cubic shifts back and reports input residuals") {
  // (x+1)^3
  const RootSet triple = solve_cubic(Polynomial(
      {Complex(1.0), Complex(3.0), Complex(3.0), Complex(1.0)}));
  for (Complex x : triple.roots) CHECK(std::abs(x + 1.0) < 1e-5);
  for (double r : triple.residuals) CHECK(r < 1e-14);

  // x^3 + 3x^2 = x^2 (x + 3)
  const RootSet mixed = solve_cubic(
      Polynomial({Complex{}, Complex{}, Complex(3.0), Complex(1.0)}));
  CHECK(testutil::multiset_distance(
            mixed.roots, {Complex{}, Complex{}, Complex(-3.0)}) < 1e-7);
}
