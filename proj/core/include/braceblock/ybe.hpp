#pragma once

#include <utility>
#include <vector>

#include "braceblock/brace.hpp"

namespace braceblock {

/// A map B x B -> B x B over the carrier [0, n), materialized as an n x n table.
class YbeMap {
 public:
  YbeMap() = default;
  YbeMap(std::size_t order, std::vector<std::pair<Element, Element>> images);

  std::size_t order() const { return order_; }
  std::pair<Element, Element> operator()(Element a, Element b) const {
    return images_[a * order_ + b];
  }
  const std::vector<std::pair<Element, Element>>& images() const { return images_; }

  bool is_bijective() const;

  static YbeMap flip(std::size_t n);
  static YbeMap identity(std::size_t n);

 private:
  std::size_t order_ = 0;
  std::vector<std::pair<Element, Element>> images_;
};

/// R(a,b) = (a^-1 (a o b), bar(a^-1 (a o b)) o a o b), with a^-1 the dot
/// inverse and bar the circle inverse. Throws NotABrace unless (dot, circ)
/// passes verify_brace.
YbeMap ybe_map(const BinaryOpTable& dot, const BinaryOpTable& circ);
/// R'(a,b) = ((a o b) a^-1, bar((a o b) a^-1) o a o b)
YbeMap ybe_inverse_map(const BinaryOpTable& dot, const BinaryOpTable& circ);

/// (R x id)(id x R)(R x id) = (id x R)(R x id)(id x R) on all n^3 triples.
CheckReport check_braid(const YbeMap& r, int threads = 1);
/// Writing R(a,b) = (sigma_a(b), tau_b(a)), every sigma_a and tau_b is a bijection.
CheckReport check_nondegenerate(const YbeMap& r);
/// R' . R = R . R' = id on B^2.
CheckReport check_inverse_pair(const YbeMap& r, const YbeMap& r_prime);
/// Passes when (R . R = id) <=> (dot is commutative). The detail records both
/// sides.
CheckReport check_involutive(const YbeMap& r, const BinaryOpTable& dot);
bool is_involutive(const YbeMap& r);

}  // namespace braceblock
