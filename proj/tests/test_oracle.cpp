#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "radical/oracle.hpp"

using radical::Complex;
using radical::ConvergenceError;
using radical::match_rootsets;
using radical::MatchReport;
using radical::Polynomial;
using radical::RootSet;
using radical::solve_numeric;
using radical::unity_root;

TEST_CASE("solve_numeric pinned cases") {
  // x^2 - 1
  const RootSet quad = solve_numeric(Polynomial({Complex(-1.0), Complex{}, Complex(1.0)}));
  CHECK(testutil::multiset_distance(quad.roots, {Complex(1.0), Complex(-1.0)}) <
        1e-9);

  // x^3 - 6x + 4 = (x-2)(x^2+2x-2), independently of the closed forms
  const RootSet cubic = solve_numeric(
      Polynomial({Complex(4.0), Complex(-6.0), Complex{}, Complex(1.0)}));
  const double s3 = std::sqrt(3.0);
  CHECK(testutil::multiset_distance(cubic.roots,
                                    {Complex(2.0), Complex(-1.0 + s3),
                                     Complex(-1.0 - s3)}) < 1e-9);

  // x^5 - 1: the degree-5 route
  std::vector<Complex> coeffs(6);
  coeffs[0] = Complex(-1.0);
  coeffs[5] = Complex(1.0);
  const RootSet quintic = solve_numeric(Polynomial(coeffs));
  std::vector<Complex> expected;
  for (long k = 0; k < 5; ++k) expected.push_back(unity_root(5, k));
  CHECK(testutil::multiset_distance(quintic.roots, expected) < 1e-9);
}

TEST_CASE("solve_numeric residuals and degree checks") {
  CHECK_THROWS_AS(solve_numeric(Polynomial({Complex(3.0)})),
                  radical::DegreeError);
  CHECK_THROWS_AS(solve_numeric(Polynomial()), radical::DegreeError);

  std::mt19937_64 rng(81);
  int done = 0;
  while (done < 200) {
    // build instances from known well-separated roots
    const int deg = 2 + int(rng() % 4);  // 2..5
    std::vector<Complex> roots;
    for (int k = 0; k < deg; ++k) {
      roots.push_back(testutil::random_complex(rng, -5.0, 5.0));
    }
    if (testutil::min_pairwise_distance(roots) <= 1e-3) continue;
    ++done;
    const Polynomial poly = testutil::poly_from_roots(roots);
    const RootSet rs = solve_numeric(poly);
    CHECK(testutil::multiset_distance(rs.roots, roots) <=
          1e-8 * radical::root_scale(rs));
    const double cs = radical::coeff_scale(poly);
    for (double res : rs.residuals) CHECK(res <= 1e-9 * cs);
  }
}

TEST_CASE("non-convergence carries the best iterate") {
  // two iterations cannot reach a tight tolerance from the staggered start
  const Polynomial poly(
      {Complex(4.0), Complex(-6.0), Complex{}, Complex(1.0)});
  try {
    solve_numeric(poly, 2);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best_iterate().size() == 3);
    CHECK(e.best_iterate().residuals.size() == 3);
  }
}

TEST_CASE("match_rootsets pinned cases") {
  const MatchReport same = match_rootsets(
      testutil::rootset_of({Complex(1.0), Complex(2.0)}),
      testutil::rootset_of({Complex(2.0), Complex(1.0)}));
  CHECK(same.max_distance == 0.0);
  CHECK(same.pairing == std::vector<std::size_t>{1, 0});

  const MatchReport close = match_rootsets(
      testutil::rootset_of({Complex(1.0), Complex(2.0)}),
      testutil::rootset_of({Complex(1.000001), Complex(2.0)}));
  CHECK(close.max_distance == Catch::Approx(1e-6).margin(1e-12));

  CHECK_THROWS_AS(
      match_rootsets(testutil::rootset_of({Complex(1.0)}),
                     testutil::rootset_of({Complex(1.0), Complex(2.0)})),
      radical::DimensionError);
}

TEST_CASE("match cost is invariant under permutations") {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> a, b;
    for (int k = 0; k < 5; ++k) {
      a.push_back(testutil::random_complex(rng));
      b.push_back(testutil::random_complex(rng));
    }
    const double cost = testutil::multiset_distance(a, b);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    CHECK(testutil::multiset_distance(a, b) == Catch::Approx(cost));
  }
}
