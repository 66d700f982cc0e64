#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braceblock/error.hpp"

namespace braceblock {

/// Index of a group element. Index 0 is always the identity.
using Element = std::uint16_t;

inline constexpr Element kIdentity = 0;

/// Desk-scale guard shared by every constructor in the library.
inline constexpr std::size_t kMaxOrder = 200;

/// A subset of a finite group with O(1) membership and a sorted listing.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t universe, std::span<const Element> members);

  bool contains(Element g) const { return g < mask_.size() && mask_[g] != 0; }
  std::size_t size() const { return items_.size(); }
  const std::vector<Element>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const ElementSet& other) const { return items_ == other.items_; }

 private:
  std::vector<Element> items_;
  std::vector<char> mask_;
};

/// A finite group given by a validated Cayley table. Immutable once built.
class FiniteGroup {
 public:
  /// Validates the table (identity at index 0, inverses, associativity) and
  /// populates the structural caches. Throws Error on the first violation with
  /// the offending element or triple named.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& rows,
                                std::vector<std::string> names = {}, std::string name = {},
                                std::vector<Element> generators = {});

  /// Same as from_table but for a flat row-major table.
  static FiniteGroup from_flat(std::size_t order, std::vector<Element> table,
                               std::vector<std::string> names = {}, std::string name = {},
                               std::vector<Element> generators = {});

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }

  Element mul(Element g, Element h) const { return table_[g * order_ + h]; }
  Element inv(Element g) const { return inverses_[g]; }
  Element pow(Element g, long long exponent) const;
  /// g h g^-1
  Element conjugate(Element g, Element h) const { return mul(mul(g, h), inv(g)); }
  /// g h g^-1 h^-1
  Element commutator(Element g, Element h) const {
    return mul(mul(g, h), mul(inv(g), inv(h)));
  }

  const std::vector<Element>& table() const { return table_; }
  std::vector<std::vector<Element>> rows() const;

  const std::string& element_name(Element g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(std::string_view element_name) const;

  const ElementSet& center() const { return center_; }
  const ElementSet& commutator_subgroup() const { return derived_; }
  bool is_abelian() const { return center_.size() == order_; }

  int element_order(Element g) const { return orders_[g]; }

  /// A generating set: curated for catalog groups, otherwise a small one found
  /// by search.
  const std::vector<Element>& generators() const { return generators_; }

  ElementSet subgroup_closure(std::span<const Element> gens) const;

 private:
  FiniteGroup() = default;
  void build_caches(std::vector<Element> generators);

  std::size_t order_ = 0;
  std::string name_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<int> orders_;
  std::vector<std::string> names_;
  std::vector<Element> generators_;
  ElementSet center_;
  ElementSet derived_;
};

ElementSet center(const FiniteGroup& g);
ElementSet commutator_subgroup(const FiniteGroup& g);
bool nilpotency_class_at_most_two(const FiniteGroup& g);
int element_order(const FiniteGroup& g, Element x);
ElementSet subgroup_closure(const FiniteGroup& g, std::span<const Element> gens);

/// Smallest generating set found by exhaustive search over 1- and 2-element
/// sets, falling back to greedy extension for groups needing more.
std::vector<Element> find_generating_set(const FiniteGroup& g);

}  // namespace braceblock
