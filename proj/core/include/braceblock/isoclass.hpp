#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "braceblock/brace.hpp"

namespace braceblock {

/// Isomorphism invariants. Equal for isomorphic groups; not a complete
/// invariant.
struct IsoFingerprint {
  std::size_t order = 0;
  bool abelian = false;
  /// (element order, count), ascending by order.
  std::vector<std::pair<int, std::size_t>> order_multiset;
  std::size_t center_size = 0;
  std::size_t derived_size = 0;

  bool operator==(const IsoFingerprint&) const = default;
  std::string to_string() const;
};

IsoFingerprint fingerprint(const FiniteGroup& g);
IsoFingerprint fingerprint(const BinaryOpTable& op);

inline constexpr std::size_t kDefaultIsoBudget = 5'000'000;

/// Fingerprint filter, then a search over images of a minimal generating set
/// of g for one extending to a bijective homomorphism. Throws TooLarge when
/// the number of candidate assignments exceeds the budget.
bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                    std::size_t budget = kDefaultIsoBudget);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Abelian groups of order <= 24 (invariant-factor names such as "C4xC2"),
/// dihedral and quaternion groups, and the products appearing in the worked
/// examples, e.g. "C2xSL(2,3)".
const std::vector<NamedGroup>& default_iso_catalog();

/// First catalog name isomorphic to g, else the fingerprint string.
std::string identify(const FiniteGroup& g,
                     const std::vector<NamedGroup>& catalog = default_iso_catalog());
std::string identify(const BinaryOpTable& op,
                     const std::vector<NamedGroup>& catalog = default_iso_catalog());

}  // namespace braceblock
