#include "hilden/roots.hpp"

#include <stdexcept>
#include <utility>

namespace hilden {

double root_bracket::width() const { return rational(high - low).get_d(); }

namespace {

// pseudo-remainder with a positive multiplier, so the sign matches the
// sign of the rational remainder
int_poly pseudo_rem_positive(const int_poly& a, const int_poly& b) {
  int_poly rem = a;
  const bigint& lb = b.leading();
  bigint alb = abs(lb);
  int s = sgn(lb);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    bigint lc = rem.leading();
    rem *= alb;
    rem -= int_poly::monomial(lc * s, shift) * b;
  }
  return rem;
}

int_poly strip_positive_content(const int_poly& p) {
  if (p.is_zero()) return p;
  bigint g = p.content();
  int_poly r = p;
  std::vector<bigint> c = r.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return int_poly(std::move(c));
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

std::vector<int_poly> sturm_chain(const int_poly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  int_poly f = p.divide_exact(poly_gcd(p, p.derivative())).primitive_part();
  std::vector<int_poly> chain;
  chain.push_back(f);
  if (f.degree() == 0) return chain;
  chain.push_back(strip_positive_content(f.derivative()));
  while (chain.back().degree() > 0) {
    int_poly rem = pseudo_rem_positive(chain[chain.size() - 2], chain.back());
    if (rem.is_zero()) break;  // squarefree input: only at the final constant
    chain.push_back(strip_positive_content(-rem));
  }
  return chain;
}

namespace {

int sign_sequence_variations(const std::vector<int_poly>& chain, const rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.sign_at(x));
  return variations(signs);
}

}  // namespace

int sturm_count(const std::vector<int_poly>& chain, const rational& a, const rational& b) {
  if (!(a < b)) throw std::invalid_argument("sturm_count: empty interval");
  return sign_sequence_variations(chain, a) - sign_sequence_variations(chain, b);
}

int sturm_count(const int_poly& p, const rational& a, const rational& b) {
  return sturm_count(sturm_chain(p), a, b);
}

rational cauchy_bound(const int_poly& p) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("cauchy_bound: needs a nonconstant polynomial");
  bigint mx = 0;
  for (int k = 0; k < p.degree(); ++k)
    if (mpz_cmpabs(p[k].get_mpz_t(), mx.get_mpz_t()) > 0) mx = abs(p[k]);
  rational b(mx, abs(p.leading()));
  b.canonicalize();
  return rational(1) + b;
}

root_bracket largest_real_root(const int_poly& p, const rational& tol) {
  if (p.is_zero()) throw std::invalid_argument("largest_real_root: zero polynomial");
  if (p.degree() < 1) throw std::invalid_argument("largest_real_root: constant polynomial");
  if (!(tol > 0)) throw std::invalid_argument("largest_real_root: tolerance must be positive");
  auto chain = sturm_chain(p);
  const int_poly& f = chain.front();  // squarefree part, same real roots
  rational bound = cauchy_bound(p);
  rational lo = -bound, hi = bound;
  if (sturm_count(chain, lo, hi) == 0)
    throw std::invalid_argument("largest_real_root: no real root");
  // shrink to the topmost root: keep count(lo,hi] >= 1 and nothing above hi
  while (sturm_count(chain, lo, hi) > 1) {
    rational mid = (lo + hi) / 2;
    if (sturm_count(chain, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  // make sure lo itself is not a (lower) root sitting on the closed endpoint
  while (f.sign_at(lo) == 0) {
    rational mid = (lo + hi) / 2;
    if (sturm_count(chain, mid, hi) == 1)
      lo = mid;
    else
      hi = mid;
  }
  root_bracket out;
  out.poly = p;
  if (f.sign_at(hi) == 0) {
    out.low = out.high = hi;
  } else {
    int shi = f.sign_at(hi);
    while (hi - lo > tol) {
      rational mid = (lo + hi) / 2;
      int s = f.sign_at(mid);
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      (s == shi ? hi : lo) = mid;
    }
    out.low = lo;
    out.high = hi;
  }
  out.value = rational((out.low + out.high) / 2).get_d();
  return out;
}

int shifted_sign_variations(const int_poly& p, const bigint& a) {
  if (p.is_zero()) return 0;
  int d = p.degree();
  std::vector<bigint> shifted(d + 1);
  for (int e = 0; e <= d; ++e) {
    const bigint& c = p[e];
    if (c == 0) continue;
    // walk C(e,j) * a^(e-j) from j = e down to 0
    bigint binom = 1, apow = 1;
    shifted[e] += c;
    for (int j = e; j > 0; --j) {
      binom *= j;
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(e - j + 1));
      apow *= a;
      shifted[j - 1] += c * binom * apow;
    }
  }
  std::vector<int> signs;
  signs.reserve(shifted.size());
  for (const auto& c : shifted) signs.push_back(sgn(c));
  return variations(signs);
}

namespace {

// sign of p(a / 2^s), evaluated exactly through the nonzero terms only
int sparse_sign_at_dyadic(const int_poly& p, const bigint& a, long s) {
  int d = p.degree();
  bigint acc = 0;
  bigint pw;
  for (int e = 0; e <= d; ++e) {
    const bigint& c = p[e];
    if (c == 0) continue;
    mpz_pow_ui(pw.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_mul_2exp(pw.get_mpz_t(), pw.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(s) * static_cast<mp_bitcnt_t>(d - e));
    acc += c * pw;
  }
  return sgn(acc);
}

}  // namespace

root_bracket unique_root_above_one(const int_poly& p, const rational& tol) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("unique_root_above_one: needs a nonconstant polynomial");
  if (shifted_sign_variations(p, 1) != 1) return largest_real_root(p, tol);
  // Descartes certificate: exactly one (simple) real root above 1, so the
  // polynomial is negative between 1 and the root and positive after it.
  int lead = sgn(p.leading());
  bigint hi_int = 2;
  rational bound = cauchy_bound(p);
  while (rational(hi_int) < bound && sparse_sign_at_dyadic(p, hi_int, 0) * lead <= 0) hi_int *= 2;
  bigint lo_num = 1, hi_num = hi_int;
  long s = 0;
  rational width = rational(hi_num) - 1;
  int guard = 0;
  while (width > tol || sparse_sign_at_dyadic(p, lo_num, s) == 0) {
    if (++guard > 20000) throw std::runtime_error("unique_root_above_one: refinement stalled");
    bigint mid = lo_num + hi_num;  // numerator over 2^(s+1)
    ++s;
    lo_num *= 2;
    hi_num *= 2;
    int sig = sparse_sign_at_dyadic(p, mid, s) * lead;
    if (sig == 0) {
      lo_num = hi_num = mid;
      width = 0;
      break;
    }
    (sig > 0 ? hi_num : lo_num) = mid;
    width /= 2;
  }
  root_bracket out;
  out.poly = p;
  out.low = rational(lo_num) / rational(bigint(1) << s);
  out.high = rational(hi_num) / rational(bigint(1) << s);
  out.low.canonicalize();
  out.high.canonicalize();
  out.value = rational((out.low + out.high) / 2).get_d();
  return out;
}

void sqrt_bracket(const rational& x, const rational& tol, rational& low, rational& high) {
  if (x < 0) throw std::invalid_argument("sqrt_bracket: negative input");
  low = 0;
  high = x + 1;
  while (high - low > tol) {
    rational mid = (low + high) / 2;
    if (mid * mid <= x)
      low = mid;
    else
      high = mid;
  }
}

}  // namespace hilden
