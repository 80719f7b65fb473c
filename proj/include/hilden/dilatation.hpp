#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilden/poly.hpp"
#include "hilden/roots.hpp"

namespace hilden {

// Defining polynomial of the dilatation of the 4n+8 family:
// t^{6n+9} - 2t^{5n+8} - 2t^{5n+7} + 3t^{4n+6} + 3t^{2n+3} - 2t^{n+2} - 2t^{n+1} + 1
// (coinciding exponents, if any, are summed).  Palindromic for every n.
int_poly family_polynomial(int n);

// t^4 - 2t^3 - 2t^2 - 2t + 1, the defining polynomial of the six-strand
// dilatation kappa = (1+sqrt5)/2 + sqrt(2+2*sqrt5)/2 ~ 2.89005.
int_poly kappa_polynomial();

struct kappa_result {
  root_bracket bracket;                 // certified bracket for kappa
  rational closed_form_low, closed_form_high;  // bracket of the nested-radical form
  bool closed_form_agrees = false;      // closed form within the root bracket width
  bool factorization_exact = false;     // quadratic factorization over Z[sqrt5] expands back
};

// Certifies kappa three ways: root bracket, closed form, factorization.
kappa_result kappa(const rational& tol = rational(1, 1000000000000L));

struct dilatation_result {
  int strands = 0;              // 2k
  std::optional<int> n;         // family parameter when strands >= 8
  int_poly polynomial;          // defining polynomial of lambda
  root_bracket lambda;
  double log_lambda = 0.0;
  double normalized_entropy = 0.0;  // (2k-2) * log lambda
};

// Dispatch per strand count: 6 -> kappa's quartic; 4n+8 -> family_polynomial(n);
// 4n+6 (n >= 1) -> same polynomial and lambda, entropy normalized by 4n+4.
// Rejects odd strand counts and anything below 6.
dilatation_result dilatation(int strands, const rational& tol = rational(1, 1000000000000L));

struct table_row {
  std::optional<int> n;              // empty for the six-strand row
  std::optional<int> strands_high;   // 4n+8
  std::optional<int> strands_low;    // 4n+6 (n >= 1), or 6 on the kappa row
  double lambda = 0.0;
  double normalized_entropy = 0.0;   // (strands_high - 2) * log lambda; 4 log kappa on the kappa row
};

// The kappa and n = 0 header rows plus rows n = 1..n_max, each lambda
// certified to at least six decimals.
std::vector<table_row> reproduce_table(int n_max);

struct convergence_row {
  int n = 0;
  double lambda = 0.0;
  double normalized_entropy = 0.0;  // (4n+6) log lambda
  double gap = 0.0;                 // normalized_entropy - 4 log kappa
};

struct convergence_report_result {
  std::vector<convergence_row> rows;
  double limit = 0.0;  // 4 log kappa
  bool gap_strictly_decreasing = false;
  bool lambda_strictly_decreasing = false;
  std::optional<int> first_n_lambda_within_001;  // least n with lambda - 1 < 0.01
};

convergence_report_result convergence_report(int n_max);

// Penner's lower bound check: log lambda >= log 2 / (4 * strands - 12),
// evaluated on the certified bracket's lower end.
bool penner_check(int strands);

}  // namespace hilden
