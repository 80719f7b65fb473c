#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "hilden/dilatation.hpp"
#include "hilden/roots.hpp"

using namespace hilden;

namespace {
const rational kTol(1, 1000000000000L);  // 1e-12
}

TEST_CASE("largest_real_root on easy polynomials") {
  root_bracket lin = largest_real_root(int_poly({-2, 1}), kTol);
  CHECK(std::abs(lin.value - 2.0) <= 1e-12);
  CHECK(lin.width() <= 1e-12);

  root_bracket sq2 = largest_real_root(int_poly({-2, 0, 1}), kTol);
  CHECK(std::abs(sq2.value - std::sqrt(2.0)) <= 1e-12);

  // multiple real roots: picks the top one
  // (t+3)(t-1)(t-5) = t^3 - 3t^2 - 13t + 15
  root_bracket top = largest_real_root(int_poly({15, -13, -3, 1}), kTol);
  CHECK(std::abs(top.value - 5.0) <= 1e-12);

  // repeated roots are fine: (t-2)^2
  root_bracket rep = largest_real_root(int_poly({4, -4, 1}), kTol);
  CHECK(std::abs(rep.value - 2.0) <= 1e-12);

  CHECK_THROWS_AS(largest_real_root(int_poly({1, 0, 1}), kTol), std::invalid_argument);
  CHECK_THROWS_AS(largest_real_root(int_poly{}, kTol), std::invalid_argument);
  CHECK_THROWS_AS(largest_real_root(int_poly({7}), kTol), std::invalid_argument);
}

TEST_CASE("kappa quartic root") {
  root_bracket k = largest_real_root(kappa_polynomial(), kTol);
  CHECK(std::abs(k.value - 2.89005) <= 5e-6);
  CHECK(std::abs(k.value - 2.8900536382639638) <= 1e-11);
  CHECK(k.width() <= 1e-12);
}

TEST_CASE("sturm machinery") {
  int_poly p({15, -13, -3, 1});  // roots -3, 1, 5
  auto chain = sturm_chain(p);
  CHECK(sturm_count(chain, rational(-10), rational(10)) == 3);
  CHECK(sturm_count(chain, rational(0), rational(2)) == 1);
  CHECK(sturm_count(chain, rational(1), rational(2)) == 0);  // (1, 2] excludes the root at 1
  CHECK(sturm_count(chain, rational(0), rational(1)) == 1);  // (0, 1] includes it
  CHECK(cauchy_bound(p) == rational(16));
}

TEST_CASE("family polynomials have exactly one real root above 1") {
  for (int n = 0; n <= 50; ++n) {
    int_poly p = family_polynomial(n);
    CHECK(sturm_count(p, rational(1), cauchy_bound(p)) == 1);
    CHECK(shifted_sign_variations(p, 1) == 1);
  }
}

TEST_CASE("descartes shift counts") {
  // (t-2)(t-3) = t^2 - 5t + 6 has two roots above 1
  CHECK(shifted_sign_variations(int_poly({6, -5, 1}), 1) == 2);
  CHECK(shifted_sign_variations(int_poly({6, -5, 1}), 3) == 0);
  CHECK(shifted_sign_variations(kappa_polynomial(), 1) == 1);
}

TEST_CASE("unique_root_above_one agrees with the sturm route") {
  for (int n = 0; n <= 4; ++n) {
    int_poly p = family_polynomial(n);
    root_bracket fast = unique_root_above_one(p, kTol);
    root_bracket slow = largest_real_root(p, kTol);
    CHECK(std::abs(fast.value - slow.value) <= 2e-12);
    CHECK(fast.width() <= 1e-12);
    CHECK(fast.low > 1);
  }
  // falls back to sturm when the certificate does not apply
  root_bracket fb = unique_root_above_one(int_poly({6, -5, 1}), kTol);
  CHECK(std::abs(fb.value - 3.0) <= 1e-12);
}

TEST_CASE("sqrt brackets") {
  rational lo, hi;
  sqrt_bracket(rational(5), rational(1, 100000000000000L), lo, hi);
  CHECK(hi - lo <= rational(1, 100000000000000L));
  CHECK(rational(lo).get_d() == doctest::Approx(2.2360679774997896).epsilon(1e-13));
  CHECK(lo * lo <= 5);
  CHECK(hi * hi >= 5);
  CHECK_THROWS_AS(sqrt_bracket(rational(-1), rational(1, 10), lo, hi), std::invalid_argument);
}
