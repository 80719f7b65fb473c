#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hilden {

using bigint = mpz_class;
using rational = mpq_class;

// Integer polynomial, coefficients ascending by degree, canonical form
// (no trailing zero coefficient; the zero polynomial has no coefficients).
class int_poly {
 public:
  int_poly() = default;
  explicit int_poly(std::vector<bigint> coeffs);

  static int_poly monomial(bigint c, int degree);
  static int_poly constant(bigint c) { return monomial(std::move(c), 0); }

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<bigint>& coeffs() const { return coeffs_; }
  const bigint& operator[](int k) const;  // 0 outside stored range
  const bigint& leading() const;

  int_poly& operator+=(const int_poly& o);
  int_poly& operator-=(const int_poly& o);
  int_poly operator-() const;
  friend int_poly operator+(int_poly a, const int_poly& b) { return a += b; }
  friend int_poly operator-(int_poly a, const int_poly& b) { return a -= b; }
  friend int_poly operator*(const int_poly& a, const int_poly& b);
  int_poly& operator*=(const bigint& c);
  friend bool operator==(const int_poly&, const int_poly&) = default;

  bigint eval(const bigint& x) const;
  rational eval(const rational& x) const;
  int sign_at(const rational& x) const;

  int_poly derivative() const;
  int_poly reversed() const;  // coefficient list reversed: t^d * p(1/t)
  bool is_palindromic() const { return *this == reversed(); }

  // divides by the content and makes the leading coefficient positive
  int_poly primitive_part() const;
  bigint content() const;

  // exact division; throws std::invalid_argument when the remainder is nonzero
  int_poly divide_exact(const int_poly& divisor) const;

  std::string coeff_list() const;          // "1 -2 0 3" ascending
  std::string pretty(char var = 't') const;  // "t^4 - 2*t^3 + ..."

 private:
  void trim();
  std::vector<bigint> coeffs_;
};

// gcd of primitive parts, leading coefficient positive
int_poly poly_gcd(int_poly a, int_poly b);

}  // namespace hilden
