#include <doctest.h>

#include <stdexcept>

#include <random>

#include "hilden/matrix.hpp"
#include "hilden/traintrack.hpp"

using namespace hilden;

namespace {

// convolution oracle, independent of int_poly arithmetic
std::vector<long> conv(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

int_poly to_poly(const std::vector<long>& c) {
  std::vector<bigint> v(c.begin(), c.end());
  return int_poly(std::move(v));
}

// (t-1)^2 (t^4 - 2t^3 - 2t^2 - 2t + 1), expanded by the oracle
int_poly w6_charpoly_expected() {
  auto sq = conv({-1, 1}, {-1, 1});
  return to_poly(conv(sq, {1, -2, -2, -2, 1}));
}

int_matrix random_matrix(std::mt19937& rng, int d, int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi);
  int_matrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = e(rng);
  return m;
}

// cofactor determinant, test-local
bigint det_oracle(const int_matrix& m) {
  int d = m.dim();
  if (d == 1) return m.at(0, 0);
  bigint sum = 0;
  for (int j = 0; j < d; ++j) {
    int_matrix minor(d - 1);
    for (int i = 1; i < d; ++i) {
      int cc = 0;
      for (int c = 0; c < d; ++c)
        if (c != j) minor.at(i - 1, cc++) = m.at(i, c);
    }
    bigint term = m.at(0, j) * det_oracle(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace

TEST_CASE("char_poly on tiny matrices") {
  CHECK(char_poly(int_matrix::identity(2)) == to_poly({1, -2, 1}));
  int_matrix swap2(2);
  swap2.at(0, 1) = 1;
  swap2.at(1, 0) = 1;
  CHECK(char_poly(swap2) == to_poly({-1, 0, 1}));
}

TEST_CASE("char_poly of the six-strand matrix matches the factored form") {
  CHECK(char_poly(w6_incidence_matrix()) == w6_charpoly_expected());
}

TEST_CASE("char_poly constant term is the signed determinant") {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    int d = 2 + rep % 4;
    int_matrix m = random_matrix(rng, d, -4, 4);
    int_poly p = char_poly(m);
    bigint det = det_oracle(m);
    CHECK(p[0] == (d % 2 == 0 ? det : -det));
    CHECK(p.leading() == 1);
    CHECK(p.degree() == d);
  }
}

TEST_CASE("Cayley-Hamilton holds exactly") {
  CHECK(eval_poly_at(char_poly(w6_incidence_matrix()), w6_incidence_matrix()).is_zero());
  std::mt19937 rng(9);
  for (int rep = 0; rep < 6; ++rep) {
    int_matrix m = random_matrix(rng, 3 + rep % 3, -3, 3);
    CHECK(eval_poly_at(char_poly(m), m).is_zero());
  }
}

TEST_CASE("primitivity witnesses") {
  auto r = is_primitive(w6_incidence_matrix());
  CHECK(r.primitive);
  CHECK(r.witness == 5);

  CHECK_FALSE(is_primitive(int_matrix::identity(3)).primitive);

  int_matrix cyc(2);
  cyc.at(0, 1) = 1;
  cyc.at(1, 0) = 1;
  CHECK_FALSE(is_primitive(cyc).primitive);

  int_matrix neg(2);
  neg.at(0, 0) = -1;
  CHECK_THROWS_AS(is_primitive(neg), std::invalid_argument);

  int_matrix pos(1);
  pos.at(0, 0) = 2;
  CHECK(is_primitive(pos).primitive);
  CHECK(is_primitive(pos).witness == 1);
}

TEST_CASE("smith normal form basics") {
  auto zero = smith_normal_form({{0, 0, 0}, {0, 0, 0}}, 3);
  CHECK(zero.factors.empty());
  CHECK(zero.free_rank == 3);

  auto diag = smith_normal_form({{2, 0}, {0, 3}}, 2);
  CHECK(diag.factors == std::vector<bigint>{1, 6});
  CHECK(diag.free_rank == 0);

  auto empty = smith_normal_form({}, 4);
  CHECK(empty.free_rank == 4);
}

TEST_CASE("smith normal form divisibility and determinant") {
  std::mt19937 rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    int d = 2 + rep % 3;
    int_matrix m = random_matrix(rng, d, -5, 5);
    bigint det = det_oracle(m);
    if (det == 0) continue;
    std::vector<std::vector<bigint>> rows(d, std::vector<bigint>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) rows[i][j] = m.at(i, j);
    auto snf = smith_normal_form(rows, d);
    CHECK(static_cast<int>(snf.factors.size()) == d);
    bigint prod = 1;
    for (std::size_t k = 0; k < snf.factors.size(); ++k) {
      prod *= snf.factors[k];
      if (k + 1 < snf.factors.size()) CHECK(snf.factors[k + 1] % snf.factors[k] == 0);
    }
    CHECK(prod == abs(det));
  }
}

TEST_CASE("int_poly behaves") {
  int_poly p({1, -2, 1});
  CHECK(p.pretty() == "t^2 - 2*t + 1");
  CHECK(p.coeff_list() == "1 -2 1");
  CHECK(p.eval(bigint(3)) == 4);
  CHECK(p.eval(rational(1, 2)) == rational(1, 4));
  CHECK(p.sign_at(rational(1, 2)) == 1);
  CHECK(p.sign_at(rational(1)) == 0);
  CHECK(p.derivative() == int_poly({-2, 2}));
  CHECK(int_poly({1, 0, 0}).degree() == 0);  // canonical trim
  CHECK(int_poly{}.is_zero());
  CHECK(to_poly({1, 2, 3, 2, 1}).is_palindromic());
  CHECK_FALSE(to_poly({1, 2, 3}).is_palindromic());
  CHECK((to_poly({-1, 1}) * to_poly({1, 1})) == to_poly({-1, 0, 1}));
  CHECK(to_poly({-1, 0, 1}).divide_exact(to_poly({1, 1})) == to_poly({-1, 1}));
  CHECK_THROWS_AS(to_poly({1, 0, 1}).divide_exact(to_poly({1, 1})), std::invalid_argument);
}
