#pragma once

#include <string>
#include <vector>

#include "hilden/braid.hpp"
#include "hilden/matrix.hpp"

namespace hilden {

// Generators of the genus-g hyperelliptic handlebody group presentation:
// r_1..r_g, s_1..s_g, t_1..t_{g+1}; 3g+1 in total.
struct pres_generator {
  char kind = 'r';  // 'r', 's' or 't'
  int index = 0;
  std::string name() const;
  friend bool operator==(const pres_generator&, const pres_generator&) = default;
};

// A relator is a word over the generators, stored as (generator id, exponent)
// runs; generator ids index the presentation's generator list (0-based).
struct pres_relator {
  int family = 0;  // relation family 1..10
  std::vector<std::pair<int, int>> word;
};

struct presentation {
  int genus = 0;
  std::vector<pres_generator> generators;
  std::vector<pres_relator> relators;

  int generator_id(char kind, int index) const;  // -1 when absent
  std::string text() const;                      // listing grouped by family
};

// The finite presentation of the genus-g group (g >= 2): braid-style and
// exchange relations between r and s, the t-interaction families, the power
// relation (s_g...s_1 t_1^2)^{g+1} = 1, and the central involution
// theta = t_1 s_1..s_g r_g^-1..r_1^-1 t_1 with theta^2 = 1 and one commutator
// [theta, x] per generator x.
presentation handlebody_presentation(int genus);

struct abelianization_result {
  int free_rank = 0;
  std::vector<bigint> torsion;  // invariant factors with units suppressed
  std::string pretty() const;   // "Z + Z/2 + Z/2"
};

abelianization_result abelianization(const presentation& p);

enum class relation_status {
  holds_in_disk_group,       // certified by the Artin oracle in B_{2g+2}
  holds_modulo_invariants,   // oracle negative/skipped, necessary invariants pass
  fails,                     // a necessary invariant fails
  skipped_resource           // oracle skipped because of the resource cap
};

struct relation_check {
  int family = 0;
  std::string instance;        // e.g. "r1 r2 r1 = r2 r1 r2"
  bool permutations_match = false;
  bool exponent_sums_consistent = false;
  bool oracle_ran = false;
  bool oracle_equal = false;          // as written
  bool oracle_equal_mirror = false;   // with every sigma sign flipped
  relation_status status = relation_status::fails;
};

struct relation_report {
  int genus = 0;
  std::vector<relation_check> checks;
  bool partial = false;  // some oracle runs skipped by the resource cap
  bool all_acceptable() const;  // nothing in state `fails`
};

// Instantiates every relation as sigma-words in B_{2g+2} through the wicket
// generator expansion.  Families (1)-(8) are decided by the Artin oracle;
// (9) and (10) live in the spherical quotient, so both global crossing-sign
// conventions are attempted and the necessary invariants (permutation
// triviality, exponent-sum consistency) set the acceptance bar.
relation_report verify_relations(int genus, std::size_t oracle_letter_cap = 10000,
                                 int oracle_genus_cap = 4);

}  // namespace hilden
