#include "hilden/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hilden {

permutation::permutation(int size) : images_(size) {
  if (size < 0) throw std::invalid_argument("permutation: negative size");
  std::iota(images_.begin(), images_.end(), 1);
}

permutation::permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      throw std::invalid_argument("permutation: images are not a bijection");
    seen[v - 1] = true;
  }
}

bool permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (image(i) != i) return false;
  return true;
}

permutation permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[image(i) - 1] = i;
  return permutation(std::move(inv));
}

permutation operator*(const permutation& a, const permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation product: size mismatch");
  std::vector<int> img(a.size());
  for (int i = 1; i <= a.size(); ++i) img[i - 1] = a.image(b.image(i));
  return permutation(std::move(img));
}

std::vector<std::vector<int>> permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int s = 1; s <= size(); ++s) {
    if (seen[s - 1]) continue;
    std::vector<int> c{s};
    seen[s - 1] = true;
    for (int x = image(s); x != s; x = image(x)) {
      c.push_back(x);
      seen[x - 1] = true;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string permutation::cycle_string() const {
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

braid_word::braid_word(int strands) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("braid_word: strands must be positive");
}

braid_word::braid_word(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("braid_word: strands must be positive");
  for (int l : letters_) {
    int idx = l > 0 ? l : -l;
    if (idx < 1 || idx > strands_ - 1)
      throw std::invalid_argument("braid_word: letter index out of range");
  }
}

braid_word parse_word(std::string_view text, int strands) {
  if (strands < 1) throw std::invalid_argument("parse_word: strands must be positive");
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("parse_word: token '" + std::string(tok) +
                                  "' is not an integer");
    if (value == 0)
      throw std::invalid_argument("parse_word: token '0' is not a generator");
    int idx = value > 0 ? value : -value;
    if (idx >= strands)
      throw std::invalid_argument("parse_word: token '" + std::string(tok) +
                                  "' exceeds generator range 1.." + std::to_string(strands - 1));
    letters.push_back(value);
    pos = end;
  }
  return braid_word(strands, std::move(letters));
}

std::string render_word(const braid_word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.letters().size(); ++k)
    os << (k ? " " : "") << w.letters()[k];
  return os.str();
}

braid_word compose(const braid_word& a, const braid_word& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("compose: strand count mismatch");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return braid_word(a.strands(), std::move(letters));
}

braid_word inverse(const braid_word& a) {
  std::vector<int> letters(a.letters().rbegin(), a.letters().rend());
  for (int& l : letters) l = -l;
  return braid_word(a.strands(), std::move(letters));
}

braid_word free_reduce(const braid_word& a) {
  std::vector<int> out;
  out.reserve(a.letters().size());
  for (int l : a.letters()) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return braid_word(a.strands(), std::move(out));
}

permutation braid_permutation(const braid_word& a) {
  // rightmost letter first; track the strand occupying each position
  int m = a.strands();
  std::vector<int> at(m);  // at[pos-1] = strand currently at pos
  std::iota(at.begin(), at.end(), 1);
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    int i = *it > 0 ? *it : -*it;
    std::swap(at[i - 1], at[i]);
  }
  // at[pos-1] = s means strand s ends at position pos, i.e. image(s) = pos
  std::vector<int> img(m);
  for (int pos = 1; pos <= m; ++pos) img[at[pos - 1] - 1] = pos;
  return permutation(std::move(img));
}

int exponent_sum(const braid_word& a) {
  int s = 0;
  for (int l : a.letters()) s += l > 0 ? 1 : -1;
  return s;
}

int closure_components(const braid_word& a) {
  return static_cast<int>(braid_permutation(a).cycles().size()) + 1;
}

bool pairing_preserved(const braid_word& a) {
  if (a.strands() % 2 != 0)
    throw std::invalid_argument("pairing_preserved: strand count must be even");
  permutation p = braid_permutation(a);
  for (int i = 1; i <= a.strands() / 2; ++i) {
    int x = p.image(2 * i - 1), y = p.image(2 * i);
    int lo = std::min(x, y), hi = std::max(x, y);
    if (hi != lo + 1 || lo % 2 == 0) return false;
  }
  return true;
}

braid_word half_twist(int strands) {
  if (strands < 2) throw std::invalid_argument("half_twist: needs at least 2 strands");
  std::vector<int> letters;
  for (int block = strands - 1; block >= 1; --block)
    for (int i = 1; i <= block; ++i) letters.push_back(i);
  return braid_word(strands, std::move(letters));
}

braid_word full_twist_power(int strands, int power) {
  if (strands < 2) throw std::invalid_argument("full_twist_power: needs at least 2 strands");
  if (power < 0) throw std::invalid_argument("full_twist_power: power must be >= 0");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(strands) * (strands - 1) * power);
  for (int rep = 0; rep < strands * power; ++rep)
    for (int i = 1; i <= strands - 1; ++i) letters.push_back(i);
  return braid_word(strands, std::move(letters));
}

namespace {

void require_even(int strands, const char* who) {
  if (strands < 2 || strands % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": strand count must be even and >= 2");
}

void append_wicket(std::vector<int>& out, wicket_kind kind, int index, int n) {
  switch (kind) {
    case wicket_kind::r:
      if (index < 1 || index > n - 1)
        throw std::invalid_argument("wicket r index out of range 1..n-1");
      out.insert(out.end(), {2 * index, 2 * index + 1, -(2 * index - 1), -(2 * index)});
      break;
    case wicket_kind::s:
      if (index < 1 || index > n - 1)
        throw std::invalid_argument("wicket s index out of range 1..n-1");
      out.insert(out.end(), {-(2 * index), -(2 * index + 1), -(2 * index - 1), -(2 * index)});
      break;
    case wicket_kind::t:
      if (index < 1 || index > n)
        throw std::invalid_argument("wicket t index out of range 1..n");
      out.push_back(-(2 * index - 1));
      break;
  }
}

void append_wicket_inverse(std::vector<int>& out, wicket_kind kind, int index, int n) {
  std::vector<int> w;
  append_wicket(w, kind, index, n);
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
}

}  // namespace

braid_word wicket_generator(wicket_kind kind, int index, int strands) {
  require_even(strands, "wicket_generator");
  std::vector<int> letters;
  append_wicket(letters, kind, index, strands / 2);
  return braid_word(strands, std::move(letters));
}

braid_word hilden_generator(hilden_kind kind, int i, int j, int strands) {
  require_even(strands, "hilden_generator");
  int n = strands / 2;
  std::vector<int> out;
  switch (kind) {
    case hilden_kind::eta:
      if (i < 1 || i > n - 1) throw std::invalid_argument("eta index out of range 1..n-1");
      append_wicket(out, wicket_kind::s, i, n);
      append_wicket(out, wicket_kind::t, i, n);
      append_wicket(out, wicket_kind::t, i + 1, n);
      break;
    case hilden_kind::rho:
      if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw std::invalid_argument("rho indices out of range (need i, j in 1..n, i != j)");
      if (i < j) {
        for (int k = i; k <= j - 2; ++k) append_wicket(out, wicket_kind::s, k, n);
        append_wicket(out, wicket_kind::s, j - 1, n);
        append_wicket(out, wicket_kind::r, j - 1, n);
        for (int k = j - 2; k >= i; --k) append_wicket(out, wicket_kind::s, k, n);
      } else {
        for (int k = i - 1; k >= j + 1; --k) append_wicket(out, wicket_kind::s, k, n);
        append_wicket(out, wicket_kind::s, j, n);
        append_wicket_inverse(out, wicket_kind::r, j, n);
        for (int k = j + 1; k <= i - 1; ++k) append_wicket(out, wicket_kind::s, k, n);
      }
      append_wicket(out, wicket_kind::t, i, n);
      append_wicket(out, wicket_kind::t, i, n);
      break;
    case hilden_kind::omega:
      if (i < 1 || i > n || j < 1 || j > n || j == i || j == i - 1)
        throw std::invalid_argument("omega indices out of range (need j not in {i-1, i})");
      if (i < j) {
        for (int k = i; k <= j - 2; ++k) append_wicket(out, wicket_kind::s, k, n);
        append_wicket(out, wicket_kind::s, j - 1, n);
        append_wicket(out, wicket_kind::s, j - 1, n);
        for (int k = j - 2; k >= i; --k) append_wicket(out, wicket_kind::s, k, n);
      } else {  // i - 1 > j
        for (int k = i - 1; k >= j + 2; --k) append_wicket(out, wicket_kind::s, k, n);
        append_wicket(out, wicket_kind::s, j + 1, n);
        append_wicket(out, wicket_kind::s, j + 1, n);
        for (int k = j + 2; k <= i - 1; ++k) append_wicket(out, wicket_kind::s, k, n);
      }
      append_wicket(out, wicket_kind::t, i, n);
      append_wicket(out, wicket_kind::t, i, n);
      break;
    case hilden_kind::theta:
      append_wicket(out, wicket_kind::t, 1, n);
      for (int k = 1; k <= n - 1; ++k) append_wicket(out, wicket_kind::s, k, n);
      for (int k = n - 1; k >= 1; --k) append_wicket_inverse(out, wicket_kind::r, k, n);
      append_wicket(out, wicket_kind::t, 1, n);
      break;
  }
  return braid_word(strands, std::move(out));
}

namespace {

braid_word family_x4n8(int n) {
  int m = 4 * n + 8;
  std::vector<int> w{5, -2, -1};
  for (int i = 3; i <= 4 * n + 5; ++i) w.push_back(i);
  for (int i = 2; i <= 4 * n + 4; ++i) w.push_back(i);
  w.insert(w.end(), {4 * n + 6, 4 * n + 5, 4 * n + 5, 4 * n + 6});
  return braid_word(m, std::move(w));
}

braid_word family_y4n8(int n) {
  int m = 4 * n + 8;
  std::vector<int> w;
  for (int rep = 0; rep < 4; ++rep)
    for (int i = 1; i <= 4 * n + 5; ++i) w.push_back(i);
  w.insert(w.end(),
           {4 * n + 6, 4 * n + 5, 4 * n + 4, 4 * n + 3, 4 * n + 3, 4 * n + 4, 4 * n + 5, 4 * n + 6});
  return braid_word(m, std::move(w));
}

}  // namespace

braid_word family_word(braid_family kind, int n) {
  switch (kind) {
    case braid_family::w6:
      return braid_word(6, {-2, -1, 3, 2, 4, 3, 3, 4, 3});
    case braid_family::x4n8:
      if (n < 0) throw std::invalid_argument("family_word: n must be >= 0");
      return family_x4n8(n);
    case braid_family::y4n8:
      if (n < 0) throw std::invalid_argument("family_word: n must be >= 0");
      return family_y4n8(n);
    case braid_family::w4n8: {
      if (n < 0) throw std::invalid_argument("family_word: n must be >= 0");
      braid_word w = family_x4n8(n);
      braid_word y = family_y4n8(n);
      for (int k = 0; k < n; ++k) w = compose(w, y);
      return w;
    }
    case braid_family::x4n6:
      if (n < 1) throw std::invalid_argument("family_word: 4n+6 family needs n >= 1");
      return remove_last_strands(family_x4n8(n), 2);
    case braid_family::y4n6:
      if (n < 1) throw std::invalid_argument("family_word: 4n+6 family needs n >= 1");
      return remove_last_strands(family_y4n8(n), 2);
    case braid_family::w4n6: {
      if (n < 1) throw std::invalid_argument("family_word: 4n+6 family needs n >= 1");
      braid_word w = remove_last_strands(family_x4n8(n), 2);
      braid_word y = remove_last_strands(family_y4n8(n), 2);
      for (int k = 0; k < n; ++k) w = compose(w, y);
      return w;
    }
  }
  throw std::invalid_argument("family_word: unknown kind");
}

braid_word underline(const braid_word& a) {
  if (a.strands() < 2) throw std::invalid_argument("underline: nothing to drop");
  for (int l : a.letters())
    if (l == a.strands() - 1 || l == -(a.strands() - 1))
      throw std::invalid_argument("underline: final strand is used by the word");
  return braid_word(a.strands() - 1, a.letters());
}

braid_word remove_last_strands(const braid_word& a, int count) {
  int m = a.strands();
  if (count < 0 || count >= m)
    throw std::invalid_argument("remove_last_strands: bad count");
  if (count == 0) return a;
  std::vector<int> at(m);   // position -> strand
  std::vector<int> pos(m);  // strand -> position
  std::iota(at.begin(), at.end(), 1);
  std::iota(pos.begin(), pos.end(), 1);
  auto removed = [&](int strand) { return strand > m - count; };
  std::vector<int> out_rev;
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    int i = *it > 0 ? *it : -*it;
    int s1 = at[i - 1], s2 = at[i];
    if (!removed(s1) && !removed(s2)) {
      int shift = 0;
      for (int s = m - count + 1; s <= m; ++s)
        if (pos[s - 1] < i) ++shift;
      out_rev.push_back(*it > 0 ? i - shift : -(i - shift));
    }
    at[i - 1] = s2;
    at[i] = s1;
    pos[s1 - 1] = i + 1;
    pos[s2 - 1] = i;
  }
  for (int s = m - count + 1; s <= m; ++s)
    if (pos[s - 1] != s)
      throw std::invalid_argument("remove_last_strands: deleted strands do not return home");
  return braid_word(m - count, std::vector<int>(out_rev.rbegin(), out_rev.rend()));
}

}  // namespace hilden
