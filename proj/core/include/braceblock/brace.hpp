#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braceblock/maps.hpp"

namespace braceblock {

/// Outcome of an exhaustive check. On failure the witness holds the lowest
/// lexicographic counterexample (unused coordinates are zero).
struct CheckReport {
  std::string check;
  bool passed = true;
  std::optional<std::array<Element, 3>> witness;
  std::string detail;
  std::size_t cases = 0;

  explicit operator bool() const { return passed; }
};

/// Where an operation came from: the map-spec of psi and the word spec.
struct OpSource {
  std::string psi;
  std::string word;
  bool operator==(const OpSource&) const = default;
};

/// A binary operation on the carrier [0, n) stored as a row-major table.
class BinaryOpTable {
 public:
  BinaryOpTable() = default;
  BinaryOpTable(std::size_t order, std::vector<Element> table, std::vector<OpSource> sources = {});

  std::size_t order() const { return order_; }
  Element operator()(Element a, Element b) const { return table_[a * order_ + b]; }
  const std::vector<Element>& table() const { return table_; }

  /// Provenance of every source merged into this table, first one canonical.
  const std::vector<OpSource>& sources() const { return sources_; }
  void add_source(OpSource s) { sources_.push_back(std::move(s)); }

  /// Inverse table; valid only for group tables with identity 0.
  std::vector<Element> inverses() const;
  bool is_commutative() const;

  /// The table as a validated group (throws if it is not one).
  FiniteGroup as_group(std::string name = {}) const;

  /// FNV-1a 64-bit digest of the row-major table as little-endian uint16.
  std::string digest() const;

  bool same_table(const BinaryOpTable& other) const { return table_ == other.table_; }

 private:
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<OpSource> sources_;
};

BinaryOpTable dot_table(const FiniteGroup& g);

/// g o h = g psi_alpha(g) h psi_alpha(g)^-1, verified to be a group.
/// Throws NotCommutatorCentral unless psi is in CC(G).
BinaryOpTable circle_table(const FiniteGroup& g, const GMap& psi, const EndoWord& alpha,
                           OpSource source = {});

/// Identity 0, inverses and associativity. When psi_alpha is given, also
/// checks that the inverse of g is psi_alpha(g)^-1 g^-1 psi_alpha(g).
CheckReport verify_group_table(const FiniteGroup& g, const BinaryOpTable& op,
                               const GMap* psi_alpha = nullptr, int threads = 1);

/// a o (b . c) = (a o b) . a^-1 . (a o c) over all n^3 triples, with a^-1 the
/// dot inverse.
CheckReport verify_brace(const BinaryOpTable& dot, const BinaryOpTable& circ, int threads = 1);

/// a .' b = b . a
BinaryOpTable opposite_table(const BinaryOpTable& dot);
/// a ^o b = (a^-1 o b^-1)^-1 with inverses in (B, .)
BinaryOpTable hat_opposite(const BinaryOpTable& dot, const BinaryOpTable& circ);

/// -1 - alpha*, i.e. (id, -1) followed by the terms of alpha with negated
/// coefficients, so that beta(g) = g^-1 alpha*(g)^-1.
EndoWord class_two_opposite_word(const FiniteGroup& g, const EndoWord& alpha);

struct BlockSource {
  GMap psi;
  std::string psi_spec;
  EndoWord word;
};

struct DedupMerge {
  std::size_t kept;
  OpSource merged;
};

/// A verified family of operations, any ordered pair of which is a brace.
struct BraceBlock {
  std::vector<BinaryOpTable> ops;
  std::vector<DedupMerge> merges;
  bool pairwise_brace = false;
  std::size_t pairs_checked = 0;
};

struct BuildOptions {
  /// Skip the images-commute precondition; brace failures then surface as
  /// BraceFailure with a witness.
  bool skip_precondition = false;
  int threads = 1;
};

/// Throws EmptyBlock, ImagesDoNotCommute (naming the pair), or BraceFailure
/// (with the first witness).
BraceBlock build_block(const FiniteGroup& g, const std::vector<BlockSource>& sources,
                       const BuildOptions& options = {});

/// Exhaustive check of the five congruences mod Z(G) for psi_alpha over all
/// g, h and the given word pairs: psi_a(1) = 1; psi_{a+b} = psi_{b+a};
/// psi_a(gh) = psi_a(g) psi_a(h); psi_a(g)^-1 = psi_a(g^-1);
/// psi_a(gh) psi_a(g)^-1 = psi_a(h). Witness layout: {g, h, pair index}.
std::array<CheckReport, 5> verify_lemma_congruences(
    const FiniteGroup& g, const GMap& psi,
    const std::vector<std::pair<EndoWord, EndoWord>>& word_pairs);

}  // namespace braceblock
