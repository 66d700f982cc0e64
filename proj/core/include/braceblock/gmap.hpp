#pragma once

#include <vector>

#include "braceblock/group.hpp"

namespace braceblock {

/// A total function G -> G stored as its image table.
struct GMap {
  std::vector<Element> images;

  Element operator()(Element g) const { return images[g]; }
  std::size_t size() const { return images.size(); }

  bool operator==(const GMap&) const = default;
  auto operator<=>(const GMap&) const = default;
};

GMap identity_map(const FiniteGroup& g);
GMap zero_map(const FiniteGroup& g);

/// (f . g)(x) = f(g(x))
GMap compose(const GMap& f, const GMap& g);

/// h -> g h g^-1
GMap conjugation_map(const FiniteGroup& g, Element x);

bool is_endomorphism(const FiniteGroup& g, const GMap& f);

}  // namespace braceblock
