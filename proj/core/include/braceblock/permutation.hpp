#pragma once

#include <string>
#include <vector>

#include "braceblock/group.hpp"

namespace braceblock {

/// A permutation of the carrier [0, n). Composition follows function
/// composition: (p * q)[h] = p[q[h]].
class Permutation {
 public:
  Permutation() = default;
  /// Throws BadParameters unless images is a bijection on [0, n).
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  Element operator[](Element h) const { return images_[h]; }
  const std::vector<Element>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;

  /// Cycle notation over element indices, fixed points omitted; "()" for the
  /// identity.
  std::string cycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Element> images_;
};

/// lambda(g)[h] = g h
Permutation left_translation(const FiniteGroup& g, Element x);
/// rho(g)[h] = h g^-1, so that rho is a homomorphism G -> Perm(G).
Permutation right_translation(const FiniteGroup& g, Element x);

}  // namespace braceblock
