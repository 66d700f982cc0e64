#include "braceblock/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

namespace braceblock {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotEndomorphism: return "NotEndomorphism";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotCommutatorCentral: return "NotCommutatorCentral";
    case ErrorKind::ImagesDoNotCommute: return "ImagesDoNotCommute";
    case ErrorKind::BraceFailure: return "BraceFailure";
    case ErrorKind::EmptyBlock: return "EmptyBlock";
    case ErrorKind::NotABrace: return "NotABrace";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

ElementSet::ElementSet(std::size_t universe, std::span<const Element> members)
    : mask_(universe, 0) {
  for (Element g : members) {
    if (g < universe && !mask_[g]) {
      mask_[g] = 1;
      items_.push_back(g);
    }
  }
  std::sort(items_.begin(), items_.end());
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& rows,
                                    std::vector<std::string> names, std::string name,
                                    std::vector<Element> generators) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorKind::BadTable, "row " + std::to_string(i) + " has " +
                                           std::to_string(rows[i].size()) + " entries, expected " +
                                           std::to_string(n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return from_flat(n, std::move(flat), std::move(names), std::move(name), std::move(generators));
}

FiniteGroup FiniteGroup::from_flat(std::size_t order, std::vector<Element> table,
                                   std::vector<std::string> names, std::string name,
                                   std::vector<Element> generators) {
  if (order == 0) throw Error(ErrorKind::BadTable, "empty table");
  if (order > kMaxOrder) {
    throw Error(ErrorKind::TooLarge, "order " + std::to_string(order) + " exceeds " +
                                         std::to_string(kMaxOrder));
  }
  if (table.size() != order * order) throw Error(ErrorKind::BadTable, "table is not square");
  for (Element e : table) {
    if (e >= order) {
      throw Error(ErrorKind::BadTable, "entry " + std::to_string(e) + " out of range");
    }
  }
  if (!names.empty() && names.size() != order) {
    throw Error(ErrorKind::BadTable, "expected " + std::to_string(order) + " names");
  }

  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.name_ = std::move(name);

  const std::size_t n = order;
  for (std::size_t x = 0; x < n; ++x) {
    if (g.table_[x] != x || g.table_[x * n] != x) {
      throw Error(ErrorKind::NoIdentity,
                  "element 0 is not a two-sided identity (fails at " + std::to_string(x) + ")");
    }
  }

  g.inverses_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (g.table_[x * n + y] == 0 && g.table_[y * n + x] == 0) {
        g.inverses_[x] = static_cast<Element>(y);
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::MissingInverse, "element " + std::to_string(x) + " has no inverse");
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = g.table_[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (g.table_[ab * n + c] != g.table_[a * n + g.table_[b * n + c]]) {
          throw Error(ErrorKind::NotAssociative, "(" + std::to_string(a) + "," +
                                                     std::to_string(b) + "," +
                                                     std::to_string(c) + ")");
        }
      }
    }
  }

  if (names.empty()) {
    names.resize(n);
    for (std::size_t x = 0; x < n; ++x) names[x] = std::to_string(x);
  }
  g.names_ = std::move(names);
  g.build_caches(std::move(generators));
  return g;
}

void FiniteGroup::build_caches(std::vector<Element> generators) {
  const std::size_t n = order_;
  orders_.assign(n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    Element acc = static_cast<Element>(x);
    int k = 1;
    while (acc != kIdentity) {
      acc = mul(acc, static_cast<Element>(x));
      ++k;
    }
    orders_[x] = k;
  }

  std::vector<Element> central;
  for (std::size_t z = 0; z < n; ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = mul(static_cast<Element>(z), static_cast<Element>(x)) ==
           mul(static_cast<Element>(x), static_cast<Element>(z));
    }
    if (ok) central.push_back(static_cast<Element>(z));
  }
  center_ = ElementSet(n, central);

  std::vector<Element> comms;
  std::vector<char> seen(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Element c = commutator(static_cast<Element>(x), static_cast<Element>(y));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  }
  derived_ = subgroup_closure(comms);

  if (generators.empty() && n > 1) {
    generators_ = find_generating_set(*this);
  } else {
    if (subgroup_closure(generators).size() != n) {
      throw Error(ErrorKind::BadParameters, "curated generators do not generate the group");
    }
    generators_ = std::move(generators);
  }
}

Element FiniteGroup::pow(Element g, long long exponent) const {
  const long long m = orders_[g];
  long long e = exponent % m;
  if (e < 0) e += m;
  Element acc = kIdentity;
  for (long long i = 0; i < e; ++i) acc = mul(acc, g);
  return acc;
}

std::vector<std::vector<Element>> FiniteGroup::rows() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    out[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                  table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  }
  return out;
}

std::optional<Element> FiniteGroup::find(std::string_view element_name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == element_name) return static_cast<Element>(i);
  }
  return std::nullopt;
}

ElementSet FiniteGroup::subgroup_closure(std::span<const Element> gens) const {
  // In a finite group, closure under products alone yields a subgroup.
  std::vector<char> in(order_, 0);
  std::vector<Element> items{kIdentity};
  in[kIdentity] = 1;
  std::deque<Element> frontier{kIdentity};
  while (!frontier.empty()) {
    Element x = frontier.front();
    frontier.pop_front();
    for (Element s : gens) {
      Element y = mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        items.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  return ElementSet(order_, items);
}

ElementSet center(const FiniteGroup& g) { return g.center(); }

ElementSet commutator_subgroup(const FiniteGroup& g) { return g.commutator_subgroup(); }

bool nilpotency_class_at_most_two(const FiniteGroup& g) {
  const auto& z = g.center();
  const auto& d = g.commutator_subgroup();
  return std::all_of(d.begin(), d.end(), [&](Element x) { return z.contains(x); });
}

int element_order(const FiniteGroup& g, Element x) { return g.element_order(x); }

ElementSet subgroup_closure(const FiniteGroup& g, std::span<const Element> gens) {
  return g.subgroup_closure(gens);
}

std::vector<Element> find_generating_set(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return {};

  // Candidates in descending element order, ties by index.
  std::vector<Element> cand(n - 1);
  std::iota(cand.begin(), cand.end(), Element{1});
  std::stable_sort(cand.begin(), cand.end(), [&](Element a, Element b) {
    return g.element_order(a) > g.element_order(b);
  });

  for (Element x : cand) {
    if (static_cast<std::size_t>(g.element_order(x)) == n) return {x};
  }
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      std::array<Element, 2> pair{cand[i], cand[j]};
      if (g.subgroup_closure(pair).size() == n) {
        return {std::min(pair[0], pair[1]), std::max(pair[0], pair[1])};
      }
    }
  }
  std::vector<Element> gens;
  ElementSet current = g.subgroup_closure(gens);
  while (current.size() < n) {
    for (Element x : cand) {
      if (!current.contains(x)) {
        gens.push_back(x);
        current = g.subgroup_closure(gens);
        break;
      }
    }
  }
  return gens;
}

}  // namespace braceblock
