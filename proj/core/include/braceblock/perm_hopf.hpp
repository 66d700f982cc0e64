#pragma once

#include <vector>

#include "braceblock/brace.hpp"
#include "braceblock/permutation.hpp"

namespace braceblock {

/// A subgroup of Perm(G) stored as its sorted element list.
class PermSubgroup {
 public:
  PermSubgroup() = default;
  /// Closure of gens under composition; the degree comes from the first
  /// generator, or must be given when gens is empty.
  static PermSubgroup generated_by(std::vector<Permutation> gens, std::size_t degree);
  /// Takes an element list that the caller knows is closed; deduplicates.
  static PermSubgroup from_elements(std::vector<Permutation> elements,
                                    std::vector<Permutation> generators = {});

  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const;
  bool is_closed() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// eta_g : h -> g psi_beta(g) h psi_beta(g)^-1, checked against
/// lambda(g psi_beta(g)) rho(psi_beta(g)). Throws NotCommutatorCentral.
Permutation eta(const FiniteGroup& g, const GMap& psi, const EndoWord& beta, Element x);

/// N = { left o-translations }.
PermSubgroup translations_of(const BinaryOpTable& op);

/// Unique transitivity: for all g, h exactly one eta in N with eta[g] = h.
bool is_regular(std::size_t n, const PermSubgroup& sub);

/// Conjugation by every left op-translation maps N into itself. With op the
/// dot table this is G-stability.
bool is_stable_under(const PermSubgroup& sub, const BinaryOpTable& op);

/// ^k eta_g = eta_{k g psi_beta(g) k^-1 psi_beta(g)^-1} for all k, g.
CheckReport stability_conjugate_formula_check(const FiniteGroup& g, const GMap& psi,
                                              const EndoWord& beta);

struct GrouplikeCount {
  std::size_t by_center = 0;  ///< |{g : g psi_beta(g) in Z(G)}|
  std::size_t by_fixed = 0;   ///< |{eta in N : ^k eta = eta for all k}|
  bool agree() const { return by_center == by_fixed; }
};

GrouplikeCount grouplike_count(const FiniteGroup& g, const GMap& psi, const EndoWord& beta);

}  // namespace braceblock
