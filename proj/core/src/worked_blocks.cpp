#include "braceblock/worked_blocks.hpp"

#include "braceblock/catalog.hpp"
#include "braceblock/isoclass.hpp"

namespace braceblock {

const std::vector<QuaternionColumn>& quaternion_block_columns() {
  static const std::vector<QuaternionColumn> columns{
      {"0", "0", "1", "1"},
      {"-1", "-1", "a3", "a2b"},
      {"phi1_a_b", "f1", "a3b", "a3"},
      {"phi1_b_a", "f1_b_a", "a2b", "ab"},
      {"alpha_a_b", "f2+f3", "1", "b"},
      {"alpha_a_ab", "f2_a_ab+f3_a_ab", "1", "ab"},
      {"alpha_b_a", "f2_b_a+f3_b_a", "a", "1"},
      {"alpha_b_ab", "f2_b_ab+f3_b_ab", "a3b", "1"},
      {"alpha_ab_a", "f2_ab_a+f3_ab_a", "a", "a3"},
      {"alpha_ab_b", "f2_ab_b+f3_ab_b", "b", "a2b"},
      {"phi4_a_b", "f4", "a3", "ab"},
      {"phi4_b_a", "f4_b_a", "a3b", "a2b"},
      {"phi4_ab_b", "f4_ab_b", "a2b", "a3"},
      {"beta_a_b", "-1-f4", "1", "a"},
      {"beta_b_a", "-1-f4_b_a", "b", "1"},
      {"beta_ab_b", "-1-f4_ab_b", "a3b", "ab"},
  };
  return columns;
}

QuaternionReproduction reproduce_quaternion_block(int threads) {
  QuaternionReproduction out{make_catalog_group(GroupSpec::quaternion8()), {}, {}, {}};
  const FiniteGroup& g = out.group;
  const MapEnvironment env(g);
  const Element a = *g.find("a");
  const Element b = *g.find("b");

  std::vector<BlockSource> sources;
  for (const auto& col : quaternion_block_columns()) {
    const EndoWord w = env.parse(col.word);
    const Element at_a = w(g, a);
    const Element at_b = w(g, b);
    const Element want_a = *g.find(col.at_a);
    const Element want_b = *g.find(col.at_b);
    auto same_mod_z = [&](Element x, Element y) { return g.center().contains(g.mul(g.inv(x), y)); };
    if (!same_mod_z(at_a, want_a) || !same_mod_z(at_b, want_b)) {
      throw Error(ErrorKind::BraceFailure,
                  "column " + col.label + ": word gives (" + g.element_name(at_a) + ", " +
                      g.element_name(at_b) + "), table has (" + col.at_a + ", " + col.at_b +
                      ") even modulo the center");
    }
    if (at_a != want_a || at_b != want_b) out.exact_mismatches.push_back(col.label);
    sources.push_back(BlockSource{identity_map(g), "id", w});
  }
  BuildOptions options;
  options.threads = threads;
  out.block = build_block(g, sources, options);
  for (const auto& op : out.block.ops) out.iso_types.push_back(identify(op));
  return out;
}

std::vector<Element> elementary_involutions(const FiniteGroup& sn, int n, int fixed) {
  std::vector<int> points;
  for (int p = 1; p <= n; ++p) {
    if (p != fixed) points.push_back(p);
  }
  if (points.size() % 2 != 0) {
    throw Error(ErrorKind::BadParameters, "an odd number of points remain to be paired");
  }
  std::vector<Element> transpositions;
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
    const std::string name =
        "(" + std::to_string(points[i]) + std::to_string(points[i + 1]) + ")";
    auto x = sn.find(name);
    if (!x) throw Error(ErrorKind::UnknownName, "no element named '" + name + "' in " + sn.name());
    transpositions.push_back(*x);
  }
  std::vector<Element> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << transpositions.size()); ++mask) {
    Element acc = kIdentity;
    for (std::size_t i = 0; i < transpositions.size(); ++i) {
      if (mask & (std::size_t{1} << i)) acc = sn.mul(acc, transpositions[i]);
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<BlockSource> sign_map_sources(const FiniteGroup& sn,
                                          const std::vector<Element>& taus) {
  std::vector<BlockSource> out;
  for (Element tau : taus) {
    out.push_back(BlockSource{sign_map(sn, tau), "sign:" + sn.element_name(tau),
                              EndoWord::integer(sn, 1)});
  }
  return out;
}

std::vector<BlockSource> metacyclic_sources(const FiniteGroup& m, int q) {
  std::vector<BlockSource> out;
  for (int n = 0; n < q; ++n) {
    out.push_back(
        BlockSource{metacyclic_map(m, n), "meta:" + std::to_string(n), EndoWord::integer(m, 1)});
  }
  return out;
}

std::vector<BlockSource> gl_sources(const FiniteGroup& gl) {
  std::vector<BlockSource> out;
  for (int t = 1; t <= 2; ++t) {
    const GMap psi = det_row_map(gl, t);
    for (int w : {0, 1, -1}) {
      out.push_back(BlockSource{psi, "det:" + std::to_string(t), EndoWord::integer(gl, w)});
    }
  }
  return out;
}

}  // namespace braceblock
