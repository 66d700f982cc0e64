#include "braceblock/permutation.hpp"

#include <numeric>

namespace braceblock {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (Element x : images_) {
    if (x >= images_.size() || hit[x]) {
      throw Error(ErrorKind::BadParameters, "images do not form a bijection");
    }
    hit[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Element> id(n);
  std::iota(id.begin(), id.end(), Element{0});
  Permutation p;
  p.images_ = std::move(id);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  out.images_.resize(rhs.images_.size());
  for (std::size_t h = 0; h < rhs.images_.size(); ++h) out.images_[h] = images_[rhs.images_[h]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t h = 0; h < images_.size(); ++h) out.images_[images_[h]] = static_cast<Element>(h);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t h = 0; h < images_.size(); ++h) {
    if (images_[h] != h) return false;
  }
  return true;
}

int Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  long long result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    long long len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return static_cast<int>(result);
}

std::string Permutation::cycles() const {
  std::vector<char> seen(images_.size(), 0);
  std::string out;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation left_translation(const FiniteGroup& g, Element x) {
  std::vector<Element> img(g.order());
  for (std::size_t h = 0; h < g.order(); ++h) img[h] = g.mul(x, static_cast<Element>(h));
  return Permutation(std::move(img));
}

Permutation right_translation(const FiniteGroup& g, Element x) {
  const Element xi = g.inv(x);
  std::vector<Element> img(g.order());
  for (std::size_t h = 0; h < g.order(); ++h) img[h] = g.mul(static_cast<Element>(h), xi);
  return Permutation(std::move(img));
}

}  // namespace braceblock
