#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hilden/braid.hpp"

namespace hilden {

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Freely reduced word in a free group of the given rank.
// Letters are signed generator indices; no adjacent inverse pair survives.
class free_word {
 public:
  explicit free_word(int rank) : rank_(rank) {}
  free_word(int rank, const std::vector<int>& letters);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  void push(int letter);  // cancels against the tail

  friend bool operator==(const free_word&, const free_word&) = default;

 private:
  int rank_;
  std::vector<int> letters_;
};

// Endomorphism of the free group given by generator images (an automorphism
// for everything produced here); images are kept reduced.
class free_automorphism {
 public:
  static free_automorphism identity(int rank);
  free_automorphism(int rank, std::vector<free_word> images);

  int rank() const { return rank_; }
  const free_word& image(int generator) const { return images_[generator - 1]; }

  free_word apply(const free_word& w) const;

  // right-to-left: (a * b)(x) = a(b(x))
  friend free_automorphism operator*(const free_automorphism& a, const free_automorphism& b);
  friend bool operator==(const free_automorphism&, const free_automorphism&) = default;

 private:
  int rank_;
  std::vector<free_word> images_;
};

inline constexpr std::size_t kDefaultArtinLetterCap = 10000;

// The Artin action of a braid word on the rank-m free group:
// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, others fixed.
// Faithful on B_m, which is what makes braids_equal an exact oracle there.
// Throws resource_error when the input word exceeds max_letters.
free_automorphism artin_automorphism(const braid_word& a,
                                     std::size_t max_letters = kDefaultArtinLetterCap);

// Exact equality in the disk braid group B_m.  Says nothing about the
// spherical quotient SB_m; callers use necessary invariants for that.
bool braids_equal(const braid_word& a, const braid_word& b,
                  std::size_t max_letters = kDefaultArtinLetterCap);

}  // namespace hilden
