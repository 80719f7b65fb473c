#include "hilden/traintrack.hpp"

#include <stdexcept>

#include "hilden/dilatation.hpp"
#include "parallel_util.hpp"

namespace hilden {

int_matrix w6_incidence_matrix() {
  int_matrix m(6);
  static const int rows[6][6] = {
      {2, 0, 0, 0, 0, 1},
      {2, 0, 0, 2, 1, 0},
      {1, 0, 1, 1, 1, 0},
      {0, 0, 2, 1, 2, 0},
      {1, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0},
  };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m.at(i, j) = rows[i][j];
  return m;
}

namespace {

// Images of the six top edges, split into the part that crosses the bottom
// edges q1..q3 and the part that crosses the second-bottom edges p^{(1)}.
// The q-detour and the direct part add up, through q's own images, to the
// one-level return matrix above; the splitting is the unique nonnegative one
// whose assembled matrices reproduce the closed-form characteristic
// polynomial family (validate_family recertifies this for every n it runs).
constexpr int kTopToQ[3][6] = {
    {0, 0, 0, 0, 0, 1},
    {0, 0, 0, 2, 1, 0},
    {0, 0, 1, 1, 1, 0},
};
constexpr int kTopToP1[6][6] = {
    {2, 0, 0, 0, 0, 0},
    {2, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 1, 0},
    {1, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0},
};

}  // namespace

std::string edge_label::name() const {
  std::string s(1, kind);
  s += std::to_string(index);
  if (kind == 'p') s += "(" + std::to_string(level) + ")";
  return s;
}

int transition_map::edge_position(const edge_label& e) const {
  for (std::size_t k = 0; k < edges.size(); ++k)
    if (edges[k] == e) return static_cast<int>(k);
  return -1;
}

transition_map family_transition_map(int n) {
  if (n < 0) throw std::invalid_argument("family_transition_map: n must be >= 0");
  transition_map tm;
  tm.n = n;
  for (int i = 1; i <= 3; ++i) tm.edges.push_back({'q', i, 0});
  for (int j = 1; j <= n + 1; ++j)
    for (int i = 1; i <= 6; ++i) tm.edges.push_back({'p', i, j});
  int d = 6 * n + 9;
  tm.matrix = int_matrix(d);
  auto p = [](int i, int j) { return 3 + 6 * (j - 1) + (i - 1); };  // i in 1..6, j in 1..n+1
  tm.matrix.at(p(1, 1), 0) = 1;
  tm.matrix.at(p(2, 1), 1) = 1;
  tm.matrix.at(p(3, 1), 2) = 1;
  tm.matrix.at(p(4, 1), 2) = 1;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= 6; ++i) tm.matrix.at(p(i, j + 1), p(i, j)) = 1;
  for (int i = 1; i <= 6; ++i) {
    for (int k = 0; k < 3; ++k) tm.matrix.at(k, p(i, n + 1)) = kTopToQ[k][i - 1];
    for (int k = 1; k <= 6; ++k) tm.matrix.at(p(k, 1), p(i, n + 1)) = kTopToP1[k - 1][i - 1];
  }
  return tm;
}

int_matrix family_incidence_matrix(int n) { return family_transition_map(n).matrix; }

long prong_data_result::euler_poincare_sum() const {
  long s = 0;
  for (int p : puncture_prongs) s += 2 - p;
  s += static_cast<long>(interior_three_prongs) * (2 - 3);
  return s;
}

prong_data_result prong_data(int n) {
  if (n < 0) throw std::invalid_argument("prong_data: n must be >= 0");
  prong_data_result r;
  r.puncture_prongs.assign(4 * n + 8, 1);
  r.puncture_prongs[4 * n + 6] = n + 2;  // c_{4n+7}
  r.puncture_prongs[4 * n + 7] = n + 1;  // c_{4n+8}
  // solve sum(2 - prongs) = 4 with 3-pronged interior singularities
  long punctures_part = 0;
  for (int p : r.puncture_prongs) punctures_part += 2 - p;
  r.interior_three_prongs = static_cast<int>(punctures_part - 4);
  return r;
}

prong_data_result w6_prong_data() {
  prong_data_result r;
  r.puncture_prongs.assign(6, 1);
  r.interior_three_prongs = 2;
  return r;
}

bool family_validation_report::all_pass() const {
  for (const auto& row : rows)
    if (!row.pass()) return false;
  return !rows.empty();
}

family_validation_report validate_family(int n_max) {
  if (n_max < 0) throw std::invalid_argument("validate_family: n_max must be >= 0");
  family_validation_report report;
  report.rows = detail::parallel_map<family_validation_row>(n_max + 1, [](std::size_t i) {
    int n = static_cast<int>(i);
    family_validation_row row;
    row.n = n;
    int_matrix m = family_incidence_matrix(n);
    row.dimension = m.dim();
    row.charpoly_matches = char_poly(m) == family_polynomial(n);
    auto prim = is_primitive(m);
    row.primitive = prim.primitive;
    row.witness = prim.witness;
    return row;
  });
  return report;
}

}  // namespace hilden
