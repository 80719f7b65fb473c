#pragma once

#include <vector>

#include "hilden/poly.hpp"

namespace hilden {

// Certified bracket around a single real root of an integer polynomial.
// The closed interval [low, high] contains exactly one real root of poly;
// high - low is at most the tolerance the bracket was requested with.
struct root_bracket {
  int_poly poly;
  rational low;
  rational high;
  double value = 0.0;  // floating approximation, midpoint of the bracket

  double width() const;
  bool contains(const rational& x) const { return low <= x && x <= high; }
};

// Sturm chain of the squarefree part of p.
std::vector<int_poly> sturm_chain(const int_poly& p);

// Number of distinct real roots of p in the half-open interval (a, b], a < b.
int sturm_count(const std::vector<int_poly>& chain, const rational& a, const rational& b);
int sturm_count(const int_poly& p, const rational& a, const rational& b);

// Cauchy root bound 1 + max|c_i|/|lead| (as an exact rational).
rational cauchy_bound(const int_poly& p);

// Certified largest real root via Sturm isolation and bisection.
// Throws std::invalid_argument when p is constant/zero or has no real root.
root_bracket largest_real_root(const int_poly& p, const rational& tol);

// Number of sign variations in the coefficients of p(t + a) (Descartes bound
// on the count of real roots greater than a, exact modulo 2).  Computed
// termwise from the nonzero coefficients, so it stays cheap for sparse p of
// very large degree.
int shifted_sign_variations(const int_poly& p, const bigint& a);

// Certified bracket of the unique real root of p above 1, for polynomials
// whose shifted sign-variation count at 1 equals exactly 1 (then Descartes'
// rule proves there is exactly one real root > 1 and the sign-change bracket
// pins it).  Falls back to largest_real_root otherwise.
root_bracket unique_root_above_one(const int_poly& p, const rational& tol);

// Dyadic bracket of sqrt(x) with high - low <= tol, for x >= 0.
void sqrt_bracket(const rational& x, const rational& tol, rational& low, rational& high);

}  // namespace hilden
