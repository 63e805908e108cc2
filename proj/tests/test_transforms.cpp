#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "radical/transforms.hpp"

using radical::Complex;
using radical::DepressedCubic;
using radical::DepressedQuartic;
using radical::depress_cubic;
using radical::depress_quartic;
using radical::Polynomial;
using radical::RootSet;
using radical::shift_roots;
using radical::taylor_shift;

namespace {

Polynomial poly(std::initializer_list<double> constant_first) {
  std::vector<Complex> coeffs;
  for (double c : constant_first) coeffs.push_back(Complex(c));
  return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("depress_cubic on pinned cases") {
  // (x+1)^3 collapses to y^3
  const DepressedCubic a = depress_cubic(poly({1, 3, 3, 1}));
  CHECK(std::abs(a.p) < 1e-15);
  CHECK(std::abs(a.q) < 1e-15);
  CHECK(a.shift == Complex(1.0));

  // already depressed: x^3 - 6x + 4 has 3p = -6
  const DepressedCubic b = depress_cubic(poly({4, -6, 0, 1}));
  CHECK(b.p == Complex(-2.0));
  CHECK(b.q == Complex(4.0));
  CHECK(b.shift == Complex{});

  // x^3 + 3x^2: p and q evaluated by hand from a=3, b=0, c=0
  const DepressedCubic c = depress_cubic(poly({0, 0, 3, 1}));
  CHECK(std::abs(c.p - Complex(-1.0)) < 1e-15);
  CHECK(std::abs(c.q - Complex(2.0)) < 1e-15);
  CHECK(c.shift == Complex(1.0));
}

TEST_CASE("depress_cubic rejects wrong degrees and normalizes non-monic") {
  CHECK_THROWS_AS(depress_cubic(poly({1, 2, 1})), radical::DegreeError);
  CHECK_THROWS_AS(depress_cubic(poly({1, 1, 1, 1, 1})), radical::DegreeError);
  // 2x^3 + 12x^2: same depressed form as x^3 + 6x^2... scaled input
  const DepressedCubic scaled = depress_cubic(poly({0, 0, 6, 2}));
  const DepressedCubic plain = depress_cubic(poly({0, 0, 3, 1}));
  CHECK(std::abs(scaled.p - plain.p) < 1e-15);
  CHECK(std::abs(scaled.q - plain.q) < 1e-15);
}

TEST_CASE("depress_quartic on pinned cases") {
  // (x+1)^4 collapses to y^4
  const DepressedQuartic a = depress_quartic(poly({1, 4, 6, 4, 1}));
  CHECK(std::abs(a.p) < 1e-14);
  CHECK(std::abs(a.q) < 1e-14);
  CHECK(std::abs(a.r) < 1e-14);
  CHECK(a.shift == Complex(1.0));

  // already depressed
  const DepressedQuartic b = depress_quartic(poly({0, 6, -7, 0, 1}));
  CHECK(b.p == Complex(-7.0));
  CHECK(b.q == Complex(6.0));
  CHECK(b.r == Complex{});
  CHECK(b.shift == Complex{});

  CHECK_THROWS_AS(depress_quartic(poly({1, 1, 1, 1})), radical::DegreeError);
}

TEST_CASE("depress_quartic agrees with the explicit binomial formulas") {
  // independent oracle: for monic x^4 + a x^3 + b x^2 + c x + d and the
  // substitution x = y - a/4,
  //   p = b - 3a^2/8, q = c - ab/2 + a^3/8, r = d - ac/4 + a^2 b/16 - 3a^4/256
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex a = testutil::random_complex(rng);
    const Complex b = testutil::random_complex(rng);
    const Complex c = testutil::random_complex(rng);
    const Complex d = testutil::random_complex(rng);
    const DepressedQuartic dep =
        depress_quartic(Polynomial({d, c, b, a, Complex(1.0)}));
    const Complex p = b - 3.0 * a * a / 8.0;
    const Complex q = c - a * b / 2.0 + a * a * a / 8.0;
    const Complex r = d - a * c / 4.0 + a * a * b / 16.0 -
                      3.0 * a * a * a * a / 256.0;
    const double scale = radical::coeff_scale(Polynomial({d, c, b, a}));
    CHECK(std::abs(dep.p - p) <= 1e-12 * scale * scale);
    CHECK(std::abs(dep.q - q) <= 1e-12 * scale * scale);
    CHECK(std::abs(dep.r - r) <= 1e-12 * scale * scale);
    CHECK(dep.shift == a / 4.0);
  }
}

TEST_CASE("taylor_shift is evaluation-equivalent to the original") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> coeffs;
    for (int k = 0; k < 5; ++k) coeffs.push_back(testutil::random_complex(rng));
    const Polynomial p(coeffs);
    const Complex x0 = testutil::random_complex(rng, -2.0, 2.0);
    const Polynomial shifted = taylor_shift(p, x0);
    for (int s = 0; s < 5; ++s) {
      const Complex y = testutil::random_complex(rng, -2.0, 2.0);
      const Complex direct = p.eval(x0 + y);
      const Complex via = shifted.eval(y);
      CHECK(std::abs(direct - via) <=
            1e-10 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("depressed form shifted back reproduces the input coefficients") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> coeffs;
    for (int k = 0; k < 4; ++k) coeffs.push_back(testutil::random_complex(rng));
    coeffs.push_back(Complex(1.0));
    const Polynomial quartic(coeffs);
    const DepressedQuartic dep = depress_quartic(quartic);
    const Polynomial depressed(
        {dep.r, dep.q, dep.p, Complex{}, Complex(1.0)});
    // substituting y = x + shift must recover the original
    const Polynomial back = taylor_shift(depressed, dep.shift);
    const double scale = radical::coeff_scale(quartic);
    for (std::size_t k = 0; k <= 4; ++k) {
      CHECK(std::abs(back.coeff(k) - quartic.coeff(k)) <=
            1e-12 * scale * scale);
    }
    // the cubic coefficient of the depressed form vanished
    const Polynomial dep_full = taylor_shift(quartic, -dep.shift);
    CHECK(std::abs(dep_full.coeff(3)) <= 1e-12 * scale);
  }
}

TEST_CASE("shift_roots subtracts the shift") {
  const RootSet zeros = testutil::rootset_of({Complex{}, Complex{}, Complex{}});
  const RootSet shifted = shift_roots(zeros, Complex(1.0));
  for (Complex x : shifted.roots) CHECK(x == Complex(-1.0));

  const RootSet same = shift_roots(testutil::rootset_of({Complex(2.0, 1.0)}),
                                   Complex{});
  CHECK(same.roots[0] == Complex(2.0, 1.0));

  // matches the depress_cubic x^3 + 3x^2 example: y-roots {1,1,-2},
  // shift 1, x-roots {0,0,-3}
  const RootSet moved = shift_roots(
      testutil::rootset_of({Complex(1.0), Complex(1.0), Complex(-2.0)}),
      Complex(1.0));
  CHECK(testutil::multiset_distance(
            moved.roots, {Complex{}, Complex{}, Complex(-3.0)}) < 1e-15);
}
