#include "hilden/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace hilden {

int_matrix::int_matrix(int dim, std::vector<bigint> entries) : dim_(dim), e_(std::move(entries)) {
  if (e_.size() != static_cast<std::size_t>(dim) * dim)
    throw std::invalid_argument("int_matrix: entry count does not match dimension");
}

int_matrix int_matrix::identity(int dim) {
  int_matrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

int_matrix operator*(const int_matrix& a, const int_matrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix product: dimension mismatch");
  int d = a.dim_;
  int_matrix r(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const bigint& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < d; ++j)
        if (b.at(k, j) != 0) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

int_matrix operator+(const int_matrix& a, const int_matrix& b) {
  int_matrix r = a;
  r += b;
  return r;
}

int_matrix& int_matrix::operator+=(const int_matrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix sum: dimension mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

bool int_matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const bigint& x) { return x == 0; });
}

bool int_matrix::is_nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](const bigint& x) { return sgn(x) >= 0; });
}

std::string int_matrix::text_grid() const {
  std::vector<std::string> cells(e_.size());
  std::size_t w = 1;
  for (std::size_t k = 0; k < e_.size(); ++k) {
    cells[k] = e_[k].get_str();
    w = std::max(w, cells[k].size());
  }
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      const std::string& s = cells[static_cast<std::size_t>(i) * dim_ + j];
      os << (j ? " " : "") << std::string(w - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

int_poly char_poly(const int_matrix& m) {
  // Faddeev-LeVerrier: M_1 = M, c_{d-1} = -tr M_1,
  // M_k = M (M_{k-1} + c_{d-k+1} I), c_{d-k} = -tr(M_k)/k.  All divisions exact.
  int d = m.dim();
  std::vector<bigint> c(d + 1);
  c[d] = 1;
  int_matrix mk = m;
  for (int k = 1; k <= d; ++k) {
    if (k > 1) {
      int_matrix shifted = mk;
      for (int i = 0; i < d; ++i) shifted.at(i, i) += c[d - k + 1];
      mk = m * shifted;
    }
    bigint tr = 0;
    for (int i = 0; i < d; ++i) tr += mk.at(i, i);
    if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)))
      throw std::logic_error("char_poly: trace not divisible, recurrence corrupted");
    bigint ck;
    mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[d - k] = -ck;
  }
  return int_poly(std::move(c));
}

int_matrix eval_poly_at(const int_poly& p, const int_matrix& m) {
  int d = m.dim();
  int_matrix acc(d);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    for (int i = 0; i < d; ++i) acc.at(i, i) += p[k];
  }
  return acc;
}

namespace {

// positivity pattern as bit rows
struct bit_matrix {
  int d;
  int words;
  std::vector<std::uint64_t> rows;
  bit_matrix(int d_) : d(d_), words((d_ + 63) / 64), rows(static_cast<std::size_t>(d_) * words) {}
  void set(int i, int j) { rows[static_cast<std::size_t>(i) * words + j / 64] |= 1ull << (j % 64); }
  bool all_set() const {
    for (int i = 0; i < d; ++i)
      for (int w = 0; w < words; ++w) {
        std::uint64_t expect =
            (w + 1 < words || d % 64 == 0) ? ~0ull : ((1ull << (d % 64)) - 1);
        if (rows[static_cast<std::size_t>(i) * words + w] != expect) return false;
      }
    return true;
  }
};

bit_matrix bit_mul(const bit_matrix& a, const bit_matrix& b) {
  bit_matrix r(a.d);
  for (int i = 0; i < a.d; ++i)
    for (int k = 0; k < a.d; ++k)
      if (a.rows[static_cast<std::size_t>(i) * a.words + k / 64] >> (k % 64) & 1)
        for (int w = 0; w < a.words; ++w)
          r.rows[static_cast<std::size_t>(i) * a.words + w] |=
              b.rows[static_cast<std::size_t>(k) * b.words + w];
  return r;
}

bit_matrix bit_pow(const bit_matrix& base, long e) {
  bit_matrix acc(base.d);
  for (int i = 0; i < base.d; ++i) acc.set(i, i);
  bit_matrix sq = base;
  while (e > 0) {
    if (e & 1) acc = bit_mul(acc, sq);
    e >>= 1;
    if (e) sq = bit_mul(sq, sq);
  }
  return acc;
}

}  // namespace

primitivity_result is_primitive(const int_matrix& m) {
  if (!m.is_nonnegative()) throw std::invalid_argument("is_primitive: negative entry");
  int d = m.dim();
  if (d == 0) return {false, 0};
  bit_matrix pat(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (m.at(i, j) > 0) pat.set(i, j);
  // a zero row or column rules primitivity out and breaks monotonicity below
  for (int i = 0; i < d; ++i) {
    bool row = false, col = false;
    for (int j = 0; j < d; ++j) {
      if (m.at(i, j) > 0) row = true;
      if (m.at(j, i) > 0) col = true;
    }
    if (!row || !col) return {false, 0};
  }
  // once M^k > 0, every higher power is positive, so binary search works
  long bound = static_cast<long>(d - 1) * (d - 1) + 1;
  if (!bit_pow(pat, bound).all_set()) return {false, 0};
  long lo = 1, hi = bound;
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (bit_pow(pat, mid).all_set())
      hi = mid;
    else
      lo = mid + 1;
  }
  return {true, static_cast<int>(lo)};
}

namespace {

using rows_t = std::vector<std::vector<bigint>>;

void row_axpy(rows_t& a, int dst, int src, const bigint& q, int from_col) {
  if (q == 0) return;
  for (std::size_t j = from_col; j < a[dst].size(); ++j) a[dst][j] -= q * a[src][j];
}

void col_axpy(rows_t& a, int dst, int src, const bigint& q, int from_row) {
  if (q == 0) return;
  for (std::size_t i = from_row; i < a.size(); ++i) a[i][dst] -= q * a[i][src];
}

}  // namespace

snf_result smith_normal_form(rows_t rows, int cols) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument("smith_normal_form: ragged rows");
  int m = static_cast<int>(rows.size());
  std::vector<bigint> factors;
  int r = 0, c = 0;
  while (r < m && c < cols) {
    // magnitude-minimizing pivot keeps intermediate growth down
    int pi = -1, pj = -1;
    for (int i = r; i < m; ++i)
      for (int j = c; j < cols; ++j)
        if (rows[i][j] != 0 &&
            (pi < 0 || mpz_cmpabs(rows[i][j].get_mpz_t(), rows[pi][pj].get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(rows[r], rows[pi]);
    for (int i = 0; i < m; ++i) std::swap(rows[i][c], rows[i][pj]);
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = r + 1; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        bigint q = rows[i][c] / rows[r][c];  // truncated quotient
        row_axpy(rows, i, r, q, c);
        if (rows[i][c] != 0) {
          std::swap(rows[r], rows[i]);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (int j = c + 1; j < cols; ++j) {
        if (rows[r][j] == 0) continue;
        bigint q = rows[r][j] / rows[r][c];
        col_axpy(rows, j, c, q, r);
        if (rows[r][j] != 0) {
          for (int i = r; i < m; ++i) std::swap(rows[i][c], rows[i][j]);
          dirty = true;
        }
      }
    }
    factors.push_back(abs(rows[r][c]));
    ++r;
    ++c;
  }
  // enforce d1 | d2 | ... by gcd/lcm sweeps
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
      if (factors[k + 1] % factors[k] == 0) continue;
      bigint g, l;
      mpz_gcd(g.get_mpz_t(), factors[k].get_mpz_t(), factors[k + 1].get_mpz_t());
      l = factors[k] / g * factors[k + 1];
      factors[k] = g;
      factors[k + 1] = l;
      changed = true;
    }
  }
  int rank = static_cast<int>(factors.size());
  return {std::move(factors), cols - rank};
}

}  // namespace hilden
