#include <doctest.h>

#include <stdexcept>

#include "hilden/dilatation.hpp"
#include "hilden/traintrack.hpp"

using namespace hilden;

TEST_CASE("six-strand matrix columns and spectra") {
  int_matrix m = w6_incidence_matrix();
  CHECK(m.dim() == 6);
  const int col3[6] = {0, 0, 1, 2, 0, 0};
  for (int i = 0; i < 6; ++i) CHECK(m.at(i, 2) == col3[i]);
  auto prim = is_primitive(m);
  CHECK(prim.primitive);
  CHECK(prim.witness == 5);
}

TEST_CASE("edge labels and the q3 column") {
  transition_map tm = family_transition_map(2);
  REQUIRE(tm.edges.size() == 21);
  CHECK(tm.edges[0].name() == "q1");
  CHECK(tm.edges[3].name() == "p1(1)");
  CHECK(tm.edges[20].name() == "p6(3)");
  int q3 = tm.edge_position({'q', 3, 0});
  REQUIRE(q3 == 2);
  // q3 maps to p3^{(1)} and p4^{(1)}, once each
  for (int r = 0; r < 21; ++r) {
    bool hit = tm.edges[r] == edge_label{'p', 3, 1} || tm.edges[r] == edge_label{'p', 4, 1};
    CHECK(tm.matrix.at(r, q3) == (hit ? 1 : 0));
  }
  CHECK(tm.edge_position({'p', 7, 1}) == -1);
}

TEST_CASE("w6 prong data") {
  prong_data_result r = w6_prong_data();
  CHECK(r.puncture_prongs == std::vector<int>(6, 1));
  CHECK(r.interior_three_prongs == 2);
  CHECK(r.euler_poincare_sum() == 4);
}

TEST_CASE("family matrix dimensions and column sums") {
  CHECK(family_incidence_matrix(0).dim() == 9);
  CHECK(family_incidence_matrix(2).dim() == 21);
  for (int n : {0, 1, 3}) {
    int_matrix m = family_incidence_matrix(n);
    int d = m.dim();
    CHECK(d == 6 * n + 9);
    // q1, q2 columns sum to 1, q3 to 2
    for (int c = 0; c < 3; ++c) {
      bigint sum = 0;
      for (int r = 0; r < d; ++r) sum += m.at(r, c);
      CHECK(sum == (c == 2 ? 2 : 1));
    }
    // pass-through columns sum to 1
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= 6; ++i) {
        int c = 3 + 6 * (j - 1) + (i - 1);
        bigint sum = 0;
        for (int r = 0; r < d; ++r) sum += m.at(r, c);
        CHECK(sum == 1);
      }
  }
}

TEST_CASE("n = 0 characteristic polynomial is the closed-form one") {
  int_poly p = char_poly(family_incidence_matrix(0));
  int_poly expected({1, -2, -2, 3, 0, 0, 3, -2, -2, 1});
  CHECK(p == expected);
  CHECK(p == family_polynomial(0));
}

TEST_CASE("validate_family certifies the matrices against the polynomial family") {
  auto report = validate_family(6);
  CHECK(report.all_pass());
  REQUIRE(report.rows.size() == 7);
  for (const auto& row : report.rows) {
    CHECK(row.dimension == 6 * row.n + 9);
    CHECK(row.charpoly_matches);
    CHECK(row.primitive);
    CHECK(row.witness >= 1);
  }
}

TEST_CASE("a perturbed matrix is reported as a mismatch") {
  int_matrix m = family_incidence_matrix(1);
  m.at(0, 0) += 1;
  CHECK(char_poly(m) != family_polynomial(1));
  CHECK(char_poly(family_incidence_matrix(1)) == family_polynomial(1));
}

TEST_CASE("Cayley-Hamilton for the constructed matrices") {
  for (int n = 0; n <= 5; ++n) {
    int_matrix m = family_incidence_matrix(n);
    CHECK(eval_poly_at(char_poly(m), m).is_zero());
  }
}

TEST_CASE("prong data solves the sphere identity") {
  prong_data_result p0 = prong_data(0);
  CHECK(p0.puncture_prongs.size() == 8);
  CHECK(p0.puncture_prongs[6] == 2);
  CHECK(p0.puncture_prongs[7] == 1);
  CHECK(p0.interior_three_prongs == 3);
  CHECK(p0.euler_poincare_sum() == 4);

  for (int n = 0; n <= 20; ++n) {
    prong_data_result p = prong_data(n);
    // independent count: solve sum(2 - prongs) = 4 from the puncture data
    long punctures = static_cast<long>(4 * n + 6) + (2 - (n + 2)) + (2 - (n + 1));
    CHECK(p.interior_three_prongs == punctures - 4);
    CHECK(p.interior_three_prongs == 2 * n + 3);
    CHECK(p.euler_poincare_sum() == 4);
    CHECK(static_cast<int>(p.puncture_prongs.size()) == 4 * n + 8);
  }
  CHECK_THROWS_AS(prong_data(-1), std::invalid_argument);
}

TEST_CASE("largest root of the family matrices decreases in n") {
  const rational tol(1, 1000000000L);
  double prev = 1e9;
  for (int n = 0; n <= 4; ++n) {
    root_bracket b = largest_real_root(char_poly(family_incidence_matrix(n)), tol);
    CHECK(b.value < prev);
    prev = b.value;
  }
}
