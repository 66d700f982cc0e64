#include "braceblock/brace.hpp"

#include <cstdio>

#include "braceblock/parallel.hpp"

namespace braceblock {
namespace {

using Triple = std::array<Element, 3>;

std::string triple_string(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
         ")";
}

CheckReport failed(std::string check, Triple witness, std::string detail, std::size_t cases) {
  CheckReport r;
  r.check = std::move(check);
  r.passed = false;
  r.witness = witness;
  r.detail = std::move(detail);
  r.cases = cases;
  return r;
}

CheckReport passed(std::string check, std::size_t cases) {
  CheckReport r;
  r.check = std::move(check);
  r.cases = cases;
  return r;
}

/// x == y modulo the center.
bool congruent(const FiniteGroup& g, Element x, Element y) {
  return g.center().contains(g.mul(g.inv(x), y));
}

}  // namespace

BinaryOpTable::BinaryOpTable(std::size_t order, std::vector<Element> table,
                             std::vector<OpSource> sources)
    : order_(order), table_(std::move(table)), sources_(std::move(sources)) {
  if (table_.size() != order_ * order_) {
    throw Error(ErrorKind::BadTable, "operation table is not " + std::to_string(order_) + "x" +
                                         std::to_string(order_));
  }
}

std::vector<Element> BinaryOpTable::inverses() const {
  std::vector<Element> inv(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == kIdentity) {
        inv[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  return inv;
}

bool BinaryOpTable::is_commutative() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

FiniteGroup BinaryOpTable::as_group(std::string name) const {
  return FiniteGroup::from_flat(order_, table_, {}, std::move(name));
}

std::string BinaryOpTable::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Element e : table_) {
    for (int shift : {0, 8}) {
      h ^= static_cast<std::uint8_t>(e >> shift);
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

BinaryOpTable dot_table(const FiniteGroup& g) {
  return BinaryOpTable(g.order(), g.table(), {OpSource{"id", "0"}});
}

BinaryOpTable circle_table(const FiniteGroup& g, const GMap& psi, const EndoWord& alpha,
                           OpSource source) {
  if (!is_commutator_central(g, psi)) {
    throw Error(ErrorKind::NotCommutatorCentral,
                "psi '" + source.psi + "' does not map [G,G] into Z(G)");
  }
  const GMap p = psi_alpha_map(g, psi, alpha);
  const std::size_t n = g.order();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    const Element left = g.mul(x, p(x));
    const Element right = g.inv(p(x));
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = g.mul(g.mul(left, static_cast<Element>(b)), right);
    }
  }
  if (source.word.empty()) source.word = alpha.to_string();
  BinaryOpTable op(n, std::move(table), {std::move(source)});
  if (auto rep = verify_group_table(g, op, &p); !rep) {
    throw Error(ErrorKind::BadTable, "circle operation is not a group: " + rep.detail);
  }
  return op;
}

CheckReport verify_group_table(const FiniteGroup& g, const BinaryOpTable& op,
                               const GMap* psi_alpha, int threads) {
  const std::size_t n = op.order();
  const std::string name = "group_table";
  if (n != g.order()) return failed(name, {0, 0, 0}, "carrier sizes differ", 0);
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Element>(x);
    if (op(kIdentity, e) != e || op(e, kIdentity) != e) {
      return failed(name, {e, 0, 0}, "0 is not the identity at " + std::to_string(x), x);
    }
  }
  const auto inv = op.inverses();
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Element>(x);
    if (op(e, inv[e]) != kIdentity || op(inv[e], e) != kIdentity) {
      return failed(name, {e, 0, 0}, "no two-sided inverse for " + std::to_string(x), x);
    }
    if (psi_alpha != nullptr) {
      const Element p = (*psi_alpha)(e);
      const Element expected = g.mul(g.mul(g.inv(p), g.inv(e)), p);
      if (inv[e] != expected) {
        return failed(name, {e, inv[e], expected},
                      "inverse of " + std::to_string(x) + " differs from psi(g)^-1 g^-1 psi(g)",
                      x);
      }
    }
  }
  auto hit = detail::first_hit<Triple>(n, threads, [&](std::size_t a) -> std::optional<Triple> {
    const auto ea = static_cast<Element>(a);
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = op(ea, static_cast<Element>(b));
      for (std::size_t c = 0; c < n; ++c) {
        const auto ec = static_cast<Element>(c);
        if (op(ab, ec) != op(ea, op(static_cast<Element>(b), ec))) {
          return Triple{ea, static_cast<Element>(b), ec};
        }
      }
    }
    return std::nullopt;
  });
  if (hit) return failed(name, *hit, "associativity fails at " + triple_string(*hit), n * n * n);
  return passed(name, n * n * n);
}

CheckReport verify_brace(const BinaryOpTable& dot, const BinaryOpTable& circ, int threads) {
  const std::size_t n = dot.order();
  const std::string name = "brace";
  if (circ.order() != n) return failed(name, {0, 0, 0}, "carrier sizes differ", 0);
  const auto inv = dot.inverses();
  auto hit = detail::first_hit<Triple>(n, threads, [&](std::size_t a) -> std::optional<Triple> {
    const auto ea = static_cast<Element>(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto eb = static_cast<Element>(b);
      const Element left = dot(circ(ea, eb), inv[ea]);
      for (std::size_t c = 0; c < n; ++c) {
        const auto ec = static_cast<Element>(c);
        if (circ(ea, dot(eb, ec)) != dot(left, circ(ea, ec))) return Triple{ea, eb, ec};
      }
    }
    return std::nullopt;
  });
  if (hit) {
    return failed(name, *hit, "a o (b . c) != (a o b) . a^-1 . (a o c) at " + triple_string(*hit),
                  n * n * n);
  }
  return passed(name, n * n * n);
}

BinaryOpTable opposite_table(const BinaryOpTable& dot) {
  const std::size_t n = dot.order();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = dot(static_cast<Element>(b), static_cast<Element>(a));
    }
  }
  return BinaryOpTable(n, std::move(table));
}

BinaryOpTable hat_opposite(const BinaryOpTable& dot, const BinaryOpTable& circ) {
  const std::size_t n = dot.order();
  const auto inv = dot.inverses();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = inv[circ(inv[a], inv[b])];
    }
  }
  return BinaryOpTable(n, std::move(table));
}

EndoWord class_two_opposite_word(const FiniteGroup& g, const EndoWord& alpha) {
  // -(alpha*) reverses alpha* back into alpha's order with negated coefficients.
  return EndoWord::integer(g, -1) + (-reverse_word(alpha));
}

BraceBlock build_block(const FiniteGroup& g, const std::vector<BlockSource>& sources,
                       const BuildOptions& options) {
  if (sources.empty()) throw Error(ErrorKind::EmptyBlock, "a block needs at least one operation");

  if (!options.skip_precondition) {
    for (std::size_t i = 0; i < sources.size(); ++i) {
      for (std::size_t j = i + 1; j < sources.size(); ++j) {
        if (sources[i].psi == sources[j].psi) continue;
        if (!images_commute_mod_center(g, sources[i].psi, sources[j].psi)) {
          throw Error(ErrorKind::ImagesDoNotCommute,
                      "[psi(G), psi'(G)] is not central for psi = '" + sources[i].psi_spec +
                          "', psi' = '" + sources[j].psi_spec + "'");
        }
      }
    }
  }

  BraceBlock block;
  for (const auto& s : sources) {
    BinaryOpTable op = circle_table(g, s.psi, s.word, OpSource{s.psi_spec, s.word.to_string()});
    bool merged = false;
    for (std::size_t k = 0; k < block.ops.size(); ++k) {
      if (block.ops[k].same_table(op)) {
        block.ops[k].add_source(op.sources().front());
        block.merges.push_back(DedupMerge{k, op.sources().front()});
        merged = true;
        break;
      }
    }
    if (!merged) block.ops.push_back(std::move(op));
  }

  for (std::size_t i = 0; i < block.ops.size(); ++i) {
    for (std::size_t j = 0; j < block.ops.size(); ++j) {
      auto rep = verify_brace(block.ops[i], block.ops[j], options.threads);
      ++block.pairs_checked;
      if (!rep) {
        throw Error(ErrorKind::BraceFailure, "(op " + std::to_string(i) + ", op " +
                                                 std::to_string(j) + "): " + rep.detail);
      }
    }
  }
  block.pairwise_brace = true;
  return block;
}

std::array<CheckReport, 5> verify_lemma_congruences(
    const FiniteGroup& g, const GMap& psi,
    const std::vector<std::pair<EndoWord, EndoWord>>& word_pairs) {
  std::array<CheckReport, 5> out;
  const std::array<const char*, 5> names{"lemma.identity", "lemma.commute_sum",
                                         "lemma.multiplicative", "lemma.inverse",
                                         "lemma.quotient"};
  for (std::size_t k = 0; k < 5; ++k) out[k].check = names[k];
  const std::size_t n = g.order();

  auto fail = [&](std::size_t part, Element x, Element y, std::size_t pair, const char* what) {
    if (!out[part].passed) return;
    out[part].passed = false;
    out[part].witness = Triple{x, y, static_cast<Element>(pair)};
    out[part].detail = std::string(what) + " at g=" + g.element_name(x) +
                       ", h=" + g.element_name(y) + ", pair " + std::to_string(pair);
  };

  for (std::size_t w = 0; w < word_pairs.size(); ++w) {
    const auto& [alpha, beta] = word_pairs[w];
    const GMap sum_ab = psi_alpha_map(g, psi, alpha + beta);
    const GMap sum_ba = psi_alpha_map(g, psi, beta + alpha);
    for (std::size_t x = 0; x < n; ++x) {
      const auto e = static_cast<Element>(x);
      ++out[1].cases;
      if (!congruent(g, sum_ab(e), sum_ba(e))) fail(1, e, 0, w, "psi_{a+b} != psi_{b+a}");
    }
    for (const EndoWord* word : {&alpha, &beta}) {
      const GMap p = psi_alpha_map(g, psi, *word);
      ++out[0].cases;
      if (p(kIdentity) != kIdentity) fail(0, kIdentity, 0, w, "psi_a(1) != 1");
      for (std::size_t x = 0; x < n; ++x) {
        const auto ex = static_cast<Element>(x);
        ++out[3].cases;
        if (!congruent(g, g.inv(p(ex)), p(g.inv(ex)))) {
          fail(3, ex, 0, w, "psi_a(g)^-1 != psi_a(g^-1)");
        }
        for (std::size_t y = 0; y < n; ++y) {
          const auto ey = static_cast<Element>(y);
          const Element pxy = p(g.mul(ex, ey));
          out[2].cases += 1;
          out[4].cases += 1;
          if (!congruent(g, pxy, g.mul(p(ex), p(ey)))) {
            fail(2, ex, ey, w, "psi_a(gh) != psi_a(g) psi_a(h)");
          }
          if (!congruent(g, g.mul(pxy, g.inv(p(ex))), p(ey))) {
            fail(4, ex, ey, w, "psi_a(gh) psi_a(g)^-1 != psi_a(h)");
          }
        }
      }
    }
  }
  return out;
}

}  // namespace braceblock
