#include "hilden/artin.hpp"

namespace hilden {

free_word::free_word(int rank, const std::vector<int>& letters) : rank_(rank) {
  for (int l : letters) push(l);
}

void free_word::push(int letter) {
  int idx = letter > 0 ? letter : -letter;
  if (idx < 1 || idx > rank_) throw std::invalid_argument("free_word: letter out of range");
  if (!letters_.empty() && letters_.back() == -letter)
    letters_.pop_back();
  else
    letters_.push_back(letter);
}

free_automorphism free_automorphism::identity(int rank) {
  std::vector<free_word> images;
  images.reserve(rank);
  for (int g = 1; g <= rank; ++g) images.emplace_back(rank, std::vector<int>{g});
  return free_automorphism(rank, std::move(images));
}

free_automorphism::free_automorphism(int rank, std::vector<free_word> images)
    : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank_)
    throw std::invalid_argument("free_automorphism: one image per generator required");
}

free_word free_automorphism::apply(const free_word& w) const {
  free_word out(rank_);
  for (int l : w.letters()) {
    const free_word& im = images_[(l > 0 ? l : -l) - 1];
    if (l > 0) {
      for (int x : im.letters()) out.push(x);
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) out.push(-*it);
    }
  }
  return out;
}

free_automorphism operator*(const free_automorphism& a, const free_automorphism& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("automorphism product: rank mismatch");
  std::vector<free_word> images;
  images.reserve(a.rank());
  for (int g = 1; g <= a.rank(); ++g) images.push_back(a.apply(b.image(g)));
  return free_automorphism(a.rank(), std::move(images));
}

free_automorphism artin_automorphism(const braid_word& a, std::size_t max_letters) {
  if (a.length() > max_letters)
    throw resource_error("artin_automorphism: braid word exceeds the letter cap");
  int m = a.strands();
  free_automorphism phi = free_automorphism::identity(m);
  // left-to-right accumulation keeps phi = phi_{l1} o ... o phi_{lk}
  for (int l : a.letters()) {
    int i = l > 0 ? l : -l;
    std::vector<free_word> images;
    images.reserve(m);
    for (int g = 1; g <= m; ++g) {
      std::vector<int> base{g};
      if (l > 0 && g == i)
        base = {i, i + 1, -i};
      else if (l > 0 && g == i + 1)
        base = {i};
      else if (l < 0 && g == i)
        base = {i + 1};
      else if (l < 0 && g == i + 1)
        base = {-(i + 1), i, i + 1};
      images.push_back(phi.apply(free_word(m, base)));
    }
    phi = free_automorphism(m, std::move(images));
  }
  return phi;
}

bool braids_equal(const braid_word& a, const braid_word& b, std::size_t max_letters) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("braids_equal: strand count mismatch");
  return artin_automorphism(a, max_letters) == artin_automorphism(b, max_letters);
}

}  // namespace hilden
