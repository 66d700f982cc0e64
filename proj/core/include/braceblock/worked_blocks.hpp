#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braceblock/brace.hpp"
#include "braceblock/environment.hpp"

namespace braceblock {

/// One column of the quaternion block: a label, the word spec, and the
/// expected values of alpha at a and b (element names).
struct QuaternionColumn {
  std::string label;
  std::string word;
  std::string at_a;
  std::string at_b;
};

/// The sixteen words with psi = id on quaternion8, in table column order.
const std::vector<QuaternionColumn>& quaternion_block_columns();

struct QuaternionReproduction {
  FiniteGroup group;
  BraceBlock block;
  std::vector<std::string> iso_types;  ///< per op, block order
  /// Columns whose alpha(a), alpha(b) differ from the tabulated names
  /// exactly (they always agree modulo the center; the reproduction throws
  /// otherwise).
  std::vector<std::string> exact_mismatches;
};

QuaternionReproduction reproduce_quaternion_block(int threads = 1);

/// Commuting involutions {1, (ab), (cd), (ab)(cd), ...} pairing the points of
/// {1..n} other than `fixed` in ascending order; fixed = 0 means none is
/// skipped (n even).
std::vector<Element> elementary_involutions(const FiniteGroup& sn, int n, int fixed);

/// Sources (sign_map(tau), word 1) for each tau.
std::vector<BlockSource> sign_map_sources(const FiniteGroup& sn, const std::vector<Element>& taus);

/// Sources (metacyclic_map(n), word 1) for 0 <= n < q.
std::vector<BlockSource> metacyclic_sources(const FiniteGroup& m, int q);

/// Sources (det_row_map(t), word w) for t = 1, 2 and w in {0, 1, -1}.
std::vector<BlockSource> gl_sources(const FiniteGroup& gl);

}  // namespace braceblock
