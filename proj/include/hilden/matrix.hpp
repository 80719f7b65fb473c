#pragma once

#include <string>
#include <vector>

#include "hilden/poly.hpp"

namespace hilden {

// Square matrix over Z with arbitrary-precision entries.
class int_matrix {
 public:
  int_matrix() = default;
  explicit int_matrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {}
  int_matrix(int dim, std::vector<bigint> entries);

  static int_matrix identity(int dim);

  int dim() const { return dim_; }
  bigint& at(int row, int col) { return e_[static_cast<std::size_t>(row) * dim_ + col]; }
  const bigint& at(int row, int col) const {
    return e_[static_cast<std::size_t>(row) * dim_ + col];
  }

  friend int_matrix operator*(const int_matrix& a, const int_matrix& b);
  friend int_matrix operator+(const int_matrix& a, const int_matrix& b);
  int_matrix& operator+=(const int_matrix& o);
  friend bool operator==(const int_matrix&, const int_matrix&) = default;

  bool is_zero() const;
  bool is_nonnegative() const;

  std::string text_grid() const;  // aligned rows

 private:
  int dim_ = 0;
  std::vector<bigint> e_;
};

// Exact characteristic polynomial det(tI - M), monic of degree dim.
int_poly char_poly(const int_matrix& m);

// p(M), evaluated exactly (Horner); for the Cayley-Hamilton check.
int_matrix eval_poly_at(const int_poly& p, const int_matrix& m);

struct primitivity_result {
  bool primitive = false;
  int witness = 0;  // least k with M^k entrywise positive, when primitive
};

// Perron-Frobenius primitivity test on an entrywise-nonnegative matrix.
// Throws on negative entries. Searches k up to the Wielandt bound (d-1)^2+1.
primitivity_result is_primitive(const int_matrix& m);

struct snf_result {
  std::vector<bigint> factors;  // nonzero invariant factors d1 | d2 | ...
  int free_rank = 0;            // #columns - #factors
};

// Smith normal form of a rectangular integer matrix given as rows.
// cols is the row width (needed when rows is empty).
snf_result smith_normal_form(std::vector<std::vector<bigint>> rows, int cols);

}  // namespace hilden
