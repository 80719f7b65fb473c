#include "hilden/dilatation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "parallel_util.hpp"

namespace hilden {

int_poly family_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("family_polynomial: n must be >= 0");
  if (n > (std::numeric_limits<int>::max() - 9) / 6)
    throw std::invalid_argument("family_polynomial: n too large");
  int_poly p;
  const int exps[8] = {6 * n + 9, 5 * n + 8, 5 * n + 7, 4 * n + 6, 2 * n + 3, n + 2, n + 1, 0};
  const int coefs[8] = {1, -2, -2, 3, 3, -2, -2, 1};
  for (int k = 0; k < 8; ++k) p += int_poly::monomial(coefs[k], exps[k]);
  return p;
}

int_poly kappa_polynomial() { return int_poly({1, -2, -2, -2, 1}); }

namespace {

// a + b*sqrt(5), exact
struct zs5 {
  bigint a, b;
  friend zs5 operator+(const zs5& x, const zs5& y) { return {x.a + y.a, x.b + y.b}; }
  friend zs5 operator*(const zs5& x, const zs5& y) {
    return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  bool operator==(const zs5&) const = default;
};

std::vector<zs5> mul(const std::vector<zs5>& p, const std::vector<zs5>& q) {
  std::vector<zs5> r(p.size() + q.size() - 1, zs5{0, 0});
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] = r[i + j] + p[i] * q[j];
  return r;
}

}  // namespace

kappa_result kappa(const rational& tol) {
  kappa_result out;
  out.bracket = largest_real_root(kappa_polynomial(), tol / 4);
  // closed form (1+sqrt5)/2 + sqrt(2+2*sqrt5)/2 with directed rational bounds
  rational s5lo, s5hi;
  sqrt_bracket(rational(5), tol / 16, s5lo, s5hi);
  rational inner_lo = 2 + 2 * s5lo, inner_hi = 2 + 2 * s5hi;
  rational r2lo, r2hi, dummy_lo, dummy_hi;
  sqrt_bracket(inner_lo, tol / 16, r2lo, dummy_hi);
  sqrt_bracket(inner_hi, tol / 16, dummy_lo, r2hi);
  out.closed_form_low = (1 + s5lo) / 2 + r2lo / 2;
  out.closed_form_high = (1 + s5hi) / 2 + r2hi / 2;
  // the hull of the two brackets bounds |closed form - root| from above
  rational hull = std::max(out.closed_form_high, out.bracket.high) -
                  std::min(out.closed_form_low, out.bracket.low);
  out.closed_form_agrees = hull <= tol;
  // (t^2 - (1+sqrt5)t + 1)(t^2 - (1-sqrt5)t + 1) == t^4 - 2t^3 - 2t^2 - 2t + 1 over Z[sqrt5]
  std::vector<zs5> f1{{1, 0}, {-1, -1}, {1, 0}};
  std::vector<zs5> f2{{1, 0}, {-1, 1}, {1, 0}};
  std::vector<zs5> prod = mul(f1, f2);
  const int_poly quartic = kappa_polynomial();
  out.factorization_exact = prod.size() == 5;
  for (int k = 0; k < 5 && out.factorization_exact; ++k)
    out.factorization_exact = prod[k].b == 0 && prod[k].a == quartic[k];
  return out;
}

dilatation_result dilatation(int strands, const rational& tol) {
  if (strands < 6 || strands % 2 != 0)
    throw std::invalid_argument("dilatation: strand count must be even and >= 6");
  dilatation_result r;
  r.strands = strands;
  if (strands == 6) {
    r.polynomial = kappa_polynomial();
    r.lambda = largest_real_root(r.polynomial, tol);
  } else if (strands % 4 == 0) {
    r.n = (strands - 8) / 4;
    r.polynomial = family_polynomial(*r.n);
    r.lambda = unique_root_above_one(r.polynomial, tol);
  } else {
    r.n = (strands - 6) / 4;  // strands = 4n+6 with n >= 1 here
    r.polynomial = family_polynomial(*r.n);
    r.lambda = unique_root_above_one(r.polynomial, tol);
  }
  r.log_lambda = std::log(r.lambda.value);
  r.normalized_entropy = (strands - 2) * r.log_lambda;
  return r;
}

std::vector<table_row> reproduce_table(int n_max) {
  if (n_max < 1) throw std::invalid_argument("reproduce_table: n_max must be >= 1");
  const rational tol(1, 1000000000000L);
  std::vector<table_row> rows;
  {
    table_row r6;
    r6.strands_low = 6;
    r6.lambda = kappa(tol).bracket.value;
    r6.normalized_entropy = 4 * std::log(r6.lambda);
    rows.push_back(r6);
  }
  auto family_rows = detail::parallel_map<table_row>(n_max + 1, [&tol](std::size_t i) {
    int n = static_cast<int>(i);
    table_row r;
    r.n = n;
    r.strands_high = 4 * n + 8;
    if (n >= 1) r.strands_low = 4 * n + 6;
    r.lambda = unique_root_above_one(family_polynomial(n), tol).value;
    r.normalized_entropy = (4 * n + 6) * std::log(r.lambda);
    return r;
  });
  rows.insert(rows.end(), family_rows.begin(), family_rows.end());
  return rows;
}

convergence_report_result convergence_report(int n_max) {
  if (n_max < 1) throw std::invalid_argument("convergence_report: n_max must be >= 1");
  const rational tol(1, 1000000000000L);
  convergence_report_result out;
  kappa_result k = kappa(tol);
  out.limit = 4 * std::log(k.bracket.value);
  out.rows = detail::parallel_map<convergence_row>(n_max + 1, [&tol, &out](std::size_t i) {
    int n = static_cast<int>(i);
    convergence_row row;
    row.n = n;
    root_bracket b = unique_root_above_one(family_polynomial(n), tol);
    row.lambda = b.value;
    row.normalized_entropy = (4 * n + 6) * std::log(row.lambda);
    row.gap = row.normalized_entropy - out.limit;
    return row;
  });
  out.gap_strictly_decreasing = true;
  out.lambda_strictly_decreasing = true;
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    if (!(out.rows[i].gap < out.rows[i - 1].gap)) out.gap_strictly_decreasing = false;
    if (!(out.rows[i].lambda < out.rows[i - 1].lambda)) out.lambda_strictly_decreasing = false;
  }
  for (const auto& row : out.rows)
    if (row.lambda - 1.0 < 0.01) {
      out.first_n_lambda_within_001 = row.n;
      break;
    }
  return out;
}

bool penner_check(int strands) {
  dilatation_result r = dilatation(strands);
  double lower = std::log(rational(r.lambda.low).get_d());
  return lower >= std::log(2.0) / (4.0 * strands - 12.0);
}

}  // namespace hilden
