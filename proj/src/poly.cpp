#include "hilden/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hilden {

namespace {
const bigint kZero = 0;
}

int_poly::int_poly(std::vector<bigint> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void int_poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int_poly int_poly::monomial(bigint c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (c == 0) return {};
  std::vector<bigint> v(degree + 1);
  v[degree] = std::move(c);
  return int_poly(std::move(v));
}

const bigint& int_poly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

const bigint& int_poly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return coeffs_.back();
}

int_poly& int_poly::operator+=(const int_poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

int_poly& int_poly::operator-=(const int_poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

int_poly int_poly::operator-() const {
  int_poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

int_poly operator*(const int_poly& a, const int_poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<bigint> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (b.coeffs_[j] != 0) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return int_poly(std::move(v));
}

int_poly& int_poly::operator*=(const bigint& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bigint int_poly::eval(const bigint& x) const {
  bigint acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

rational int_poly::eval(const rational& x) const {
  // Horner over Q; for x = p/q this is sum c_k p^k / q^k
  rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + rational(*it);
  return acc;
}

int int_poly::sign_at(const rational& x) const {
  // integer-only evaluation of q^d * p(p/q)
  if (is_zero()) return 0;
  const bigint& num = x.get_num();
  const bigint& den = x.get_den();
  bigint acc = 0;
  bigint dpow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * dpow;
    dpow *= den;
  }
  return sgn(acc);
}

int_poly int_poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<bigint> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
  return int_poly(std::move(v));
}

int_poly int_poly::reversed() const {
  std::vector<bigint> v(coeffs_.rbegin(), coeffs_.rend());
  return int_poly(std::move(v));
}

bigint int_poly::content() const {
  bigint g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

int_poly int_poly::primitive_part() const {
  if (is_zero()) return {};
  bigint g = content();
  if (sgn(leading()) < 0) g = -g;
  int_poly r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

int_poly int_poly::divide_exact(const int_poly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  int_poly rem = *this;
  if (rem.degree() < divisor.degree() && !rem.is_zero())
    throw std::invalid_argument("divide_exact: nonzero remainder");
  std::vector<bigint> q(rem.is_zero() ? 0 : rem.degree() - divisor.degree() + 1);
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    if (!mpz_divisible_p(rem.leading().get_mpz_t(), divisor.leading().get_mpz_t()))
      throw std::invalid_argument("divide_exact: leading coefficient not divisible");
    bigint c;
    mpz_divexact(c.get_mpz_t(), rem.leading().get_mpz_t(), divisor.leading().get_mpz_t());
    int shift = rem.degree() - divisor.degree();
    q[shift] = c;
    rem -= int_poly::monomial(c, shift) * divisor;
    if (!rem.is_zero() && rem.degree() >= divisor.degree() + shift)
      throw std::invalid_argument("divide_exact: no degree drop");
  }
  if (!rem.is_zero()) throw std::invalid_argument("divide_exact: nonzero remainder");
  return int_poly(std::move(q));
}

std::string int_poly::coeff_list() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ' ';
    os << coeffs_[k];
  }
  if (coeffs_.empty()) os << '0';
  return os.str();
}

std::string int_poly::pretty(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const bigint& c = (*this)[k];
    if (c == 0) continue;
    bigint a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (a != 1 || k == 0) os << a;
    if (k > 0) {
      if (a != 1) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

int_poly poly_gcd(int_poly a, int_poly b) {
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.is_zero()) return b;
  // primitive remainder loop
  while (!b.is_zero()) {
    if (a.degree() < b.degree()) std::swap(a, b);
    // pseudo-remainder of a by b
    int_poly rem = a;
    const bigint& lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int shift = rem.degree() - b.degree();
      bigint lc = rem.leading();
      rem *= lb;
      rem -= int_poly::monomial(std::move(lc), shift) * b;
    }
    a = b;
    b = rem.is_zero() ? int_poly{} : rem.primitive_part();
  }
  return a.is_zero() ? a : a.primitive_part();
}

}  // namespace hilden
