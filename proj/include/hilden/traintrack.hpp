#pragma once

#include <string>
#include <vector>

#include "hilden/matrix.hpp"

namespace hilden {

// Real-edge transition matrices of the invariant train tracks behind the
// braid families, with columns holding edge images: entry (k, i) counts how
// often the image of edge i crosses edge k.  The column convention is
// normative; the transpose has the same characteristic polynomial but not
// the same primitivity witnesses in general.

// The 6x6 matrix for the six-strand braid, edges p1..p6.
int_matrix w6_incidence_matrix();

// Real edge of the 4n+8 family's track: the bottom edges q1..q3 (level 0)
// and the edges p1..p6 at levels 1..n+1 (level n+1 are the top edges).
struct edge_label {
  char kind = 'q';  // 'q' or 'p'
  int index = 0;    // q: 1..3, p: 1..6
  int level = 0;    // 0 for q, 1..n+1 for p
  std::string name() const;  // "q3", "p4(2)"
  friend bool operator==(const edge_label&, const edge_label&) = default;
};

// Edge images of the 4n+8 family as crossing-count multisets; column i of
// the matrix is the image of edge i.  Rules: q1 -> p1^{(1)}, q2 -> p2^{(1)},
// q3 -> p3^{(1)} + p4^{(1)}; p_i^{(j)} -> p_i^{(j+1)} for j <= n; the top
// edges map into the bottom and second-bottom edges by a fixed completion.
struct transition_map {
  int n = 0;
  std::vector<edge_label> edges;  // normative ordering, dimension 6n+9
  int_matrix matrix;
  int edge_position(const edge_label& e) const;  // -1 when absent
};

transition_map family_transition_map(int n);

// Convenience accessor for family_transition_map(n).matrix.
int_matrix family_incidence_matrix(int n);

// Singularity bookkeeping for the unstable foliation on the 4n+8-punctured
// sphere: 1-pronged punctures except the last two, which carry n+2 and n+1
// prongs; interior singularities are 3-pronged.
struct prong_data_result {
  std::vector<int> puncture_prongs;  // size 4n+8
  int interior_three_prongs = 0;
  long euler_poincare_sum() const;  // sum of (2 - prongs); 4 on the sphere
};

prong_data_result prong_data(int n);

// The six-strand analogue: six 1-pronged punctures, two interior 3-prong
// singularities, sphere identity sum 4.
prong_data_result w6_prong_data();

struct family_validation_row {
  int n = 0;
  int dimension = 0;
  bool charpoly_matches = false;
  bool primitive = false;
  int witness = 0;
  bool pass() const { return charpoly_matches && primitive; }
};

struct family_validation_report {
  std::vector<family_validation_row> rows;
  bool all_pass() const;
};

// Certifies char_poly(family_incidence_matrix(n)) against the closed-form
// polynomial family and checks primitivity, for n = 0..n_max.
family_validation_report validate_family(int n_max);

}  // namespace hilden
