#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hilden {

// Permutation of {1, ..., size}; image(i) is 1-based.
class permutation {
 public:
  explicit permutation(int size);  // identity
  explicit permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }
  bool is_identity() const;
  permutation inverse() const;
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;  // "(1 3 2 4)(5)(6)"

  // right-to-left composition: (a * b)(x) = a(b(x))
  friend permutation operator*(const permutation& a, const permutation& b);
  friend bool operator==(const permutation&, const permutation&) = default;

 private:
  std::vector<int> images_;
};

// Word in the braid generators sigma_1 .. sigma_{m-1} on m strands.
// Letters are signed generator indices (+i for sigma_i, -i for its inverse),
// stored in reading order.  Within a word the rightmost letter acts first,
// matching the right-to-left convention used for permutations and mapping
// classes.  Constructors never reduce; free reduction is explicit.
class braid_word {
 public:
  explicit braid_word(int strands);  // identity word
  braid_word(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  friend bool operator==(const braid_word&, const braid_word&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Whitespace-separated signed integer tokens; k > 0 reads sigma_k, k < 0 the
// inverse.  Throws std::invalid_argument naming the offending token.
braid_word parse_word(std::string_view text, int strands);
std::string render_word(const braid_word& w);  // same token format

braid_word compose(const braid_word& a, const braid_word& b);
braid_word inverse(const braid_word& a);
braid_word free_reduce(const braid_word& a);

permutation braid_permutation(const braid_word& a);
int exponent_sum(const braid_word& a);

// cycle count of the underlying permutation plus one for the braid axis
int closure_components(const braid_word& a);

// whether the permutation carries every endpoint pair {2i-1, 2i} onto a pair;
// necessary (not sufficient) for membership in the wicket group
bool pairing_preserved(const braid_word& a);

// Delta_m = (s1..s_{m-1})(s1..s_{m-2})...(s1 s2) s1
braid_word half_twist(int strands);
// (s1..s_{m-1})^{m*power}, equal to Delta_m^{2*power} in B_m
braid_word full_twist_power(int strands, int power);

enum class wicket_kind { r, s, t };
// r_i = s_{2i} s_{2i+1} s_{2i-1}^-1 s_{2i}^-1, s_i with all signs negative,
// t_j = s_{2j-1}^-1; index ranges i in [1, n-1] (r, s), j in [1, n]
braid_word wicket_generator(wicket_kind kind, int index, int strands);

enum class hilden_kind { eta, rho, omega, theta };
// Expansions in the wicket generators:
//   eta_i = s_i t_i t_{i+1}
//   rho_{ij}, omega_{ij} by the two-sided case formulas (j != i for rho,
//   j not in {i-1, i} for omega); empty middle segments are instantiated
//   literally, e.g. omega_{i,i+1} = s_i^2 t_i^2
//   theta = t_1 s_1 ... s_{n-1} r_{n-1}^-1 ... r_1^-1 t_1
// j is ignored for eta and theta.
braid_word hilden_generator(hilden_kind kind, int i, int j, int strands);

enum class braid_family { w6, x4n8, y4n8, w4n8, x4n6, y4n6, w4n6 };
// Named braid families; n >= 0 for the 4n+8 family, n >= 1 for the 4n+6
// family (built by deleting the two trivial final strands), n ignored for w6.
braid_word family_word(braid_family kind, int n);

// Drops the final strand; requires that no letter touches it.
braid_word underline(const braid_word& a);

// Deletes the last `count` strands geometrically: crossings involving a
// deleted strand disappear, the rest are reindexed.  Requires the deleted
// strands to end at their starting positions.
braid_word remove_last_strands(const braid_word& a, int count);

}  // namespace hilden
