#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braceblock/group.hpp"

namespace braceblock {

/// Parameterized description of a catalog group. Parses from and prints to
/// strings such as "quaternion8", "cyclic(4)", "metacyclic(7,3,2)", "gl(2,3)"
/// and "direct_product(cyclic(2),sl(2,3))".
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Quaternion8, Symmetric, Metacyclic, GL, SL, DirectProduct };

  Kind kind = Kind::Cyclic;
  std::vector<int> params;
  std::vector<GroupSpec> factors;

  static GroupSpec cyclic(int n) { return {Kind::Cyclic, {n}, {}}; }
  static GroupSpec dihedral(int n) { return {Kind::Dihedral, {n}, {}}; }
  static GroupSpec quaternion8() { return {Kind::Quaternion8, {}, {}}; }
  static GroupSpec symmetric(int n) { return {Kind::Symmetric, {n}, {}}; }
  static GroupSpec metacyclic(int p, int q, int d) { return {Kind::Metacyclic, {p, q, d}, {}}; }
  static GroupSpec gl(int n, int q) { return {Kind::GL, {n, q}, {}}; }
  static GroupSpec sl(int n, int q) { return {Kind::SL, {n, q}, {}}; }
  static GroupSpec direct_product(std::vector<GroupSpec> fs) {
    return {Kind::DirectProduct, {}, std::move(fs)};
  }

  static GroupSpec parse(std::string_view text);
  std::string to_string() const;
};

/// Builds the catalog group. Element orderings (identity always first):
///   cyclic(n)            x^i
///   dihedral(n)          r^i s^j at index i + n*j, order 2n
///   quaternion8          [1,a,a2,a3,b,ab,a2b,a3b]
///   symmetric(n)         one-line notation, lexicographic; names in cycle form
///   metacyclic(p,q,d)    s^i t^j at index i*q + j, with t s t^-1 = s^d
///   gl(2,q), sl(2,q)     identity, then row-major entries lexicographic
///   direct_product       (g,h) at index g*|H| + h
FiniteGroup make_catalog_group(const GroupSpec& spec);
FiniteGroup make_catalog_group(std::string_view spec);

/// Smallest d > 1 with d^q = 1 mod p, if any.
std::optional<int> default_metacyclic_root(int p, int q);

/// 2x2 matrix over F_q in row-major order.
using Matrix2 = std::array<int, 4>;

/// Recovers the matrix of a gl/sl catalog element from its name.
std::optional<Matrix2> matrix_of(const FiniteGroup& g, Element x);
std::string matrix_name(const Matrix2& m);

}  // namespace braceblock
