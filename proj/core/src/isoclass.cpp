#include "braceblock/isoclass.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "braceblock/catalog.hpp"

namespace braceblock {
namespace {

// Extends gens -> images to a map on g; nullopt if inconsistent or not injective.
std::optional<std::vector<Element>> extend_injective(const FiniteGroup& g, const FiniteGroup& h,
                                                     const std::vector<Element>& gens,
                                                     const std::vector<Element>& images) {
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> f(g.order(), kUnset);
  std::vector<char> used(h.order(), 0);
  f[kIdentity] = kIdentity;
  used[kIdentity] = 1;
  std::deque<Element> frontier{kIdentity};
  while (!frontier.empty()) {
    const Element x = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = g.mul(x, gens[i]);
      const Element fy = h.mul(f[x], images[i]);
      if (f[y] == kUnset) {
        if (used[fy]) return std::nullopt;
        used[fy] = 1;
        f[y] = fy;
        frontier.push_back(y);
      } else if (f[y] != fy) {
        return std::nullopt;
      }
    }
  }
  return f;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const ElementSet& sub, std::string name) {
  const auto& items = sub.items();
  std::map<Element, Element> index;
  for (std::size_t i = 0; i < items.size(); ++i) index[items[i]] = static_cast<Element>(i);
  std::vector<Element> table(items.size() * items.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < items.size(); ++i) {
    names.push_back(g.element_name(items[i]));
    for (std::size_t j = 0; j < items.size(); ++j) {
      table[i * items.size() + j] = index.at(g.mul(items[i], items[j]));
    }
  }
  return FiniteGroup::from_flat(items.size(), std::move(table), std::move(names), std::move(name));
}

FiniteGroup times_c2(const FiniteGroup& h, std::string name) {
  const std::size_t m = h.order();
  const std::size_t n = 2 * m;
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    names[x] = (x < m ? "" : "c") + h.element_name(static_cast<Element>(x % m));
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t hi = (x / m) ^ (y / m);
      table[x * n + y] = static_cast<Element>(
          hi * m + h.mul(static_cast<Element>(x % m), static_cast<Element>(y % m)));
    }
  }
  return FiniteGroup::from_flat(n, std::move(table), std::move(names), std::move(name));
}

// Invariant-factor lists d1 >= d2 >= ... with d_{i+1} | d_i and product n.
void invariant_factors(int n, int bound, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (int d = std::min(n, bound); d >= 2; --d) {
    if (n % d != 0 || bound % d != 0) continue;
    // Remaining factors must divide d, so n/d must be a product of divisors of d.
    int rest = n / d;
    int r = rest;
    for (int p = 2; p <= r; ++p) {
      while (r % p == 0 && d % p == 0) r /= p;
    }
    if (r != 1) continue;
    cur.push_back(d);
    invariant_factors(rest, d, cur, out);
    cur.pop_back();
  }
}

std::vector<NamedGroup> build_catalog() {
  std::vector<NamedGroup> out;
  for (int n = 1; n <= 24; ++n) {
    std::vector<std::vector<int>> lists;
    std::vector<int> cur;
    invariant_factors(n, n, cur, lists);
    for (const auto& l : lists) {
      if (l.empty()) {
        out.push_back({"C1", make_catalog_group(GroupSpec::cyclic(1))});
        continue;
      }
      std::string name;
      std::vector<GroupSpec> fs;
      for (int d : l) {
        if (!name.empty()) name += "x";
        name += "C" + std::to_string(d);
        fs.push_back(GroupSpec::cyclic(d));
      }
      GroupSpec spec = fs.size() == 1 ? fs.front() : GroupSpec::direct_product(fs);
      out.push_back({name, make_catalog_group(spec)});
    }
  }
  out.push_back({"S3", make_catalog_group(GroupSpec::dihedral(3))});
  for (int n = 4; n <= 8; ++n) {
    out.push_back({"D" + std::to_string(n), make_catalog_group(GroupSpec::dihedral(n))});
  }
  out.push_back({"Q8", make_catalog_group(GroupSpec::quaternion8())});
  out.push_back({"C7:C3", make_catalog_group(GroupSpec::metacyclic(7, 3, 2))});
  const FiniteGroup s4 = make_catalog_group(GroupSpec::symmetric(4));
  out.push_back({"A4", subgroup_as_group(s4, s4.commutator_subgroup(), "A4")});
  out.push_back({"S4", s4});
  out.push_back({"SL(2,3)", make_catalog_group(GroupSpec::sl(2, 3))});
  out.push_back({"GL(2,3)", make_catalog_group(GroupSpec::gl(2, 3))});
  out.push_back({"C2xSL(2,3)", make_catalog_group(GroupSpec::direct_product(
                                   {GroupSpec::cyclic(2), GroupSpec::sl(2, 3)}))});
  const FiniteGroup s5 = make_catalog_group(GroupSpec::symmetric(5));
  const FiniteGroup a5 = subgroup_as_group(s5, s5.commutator_subgroup(), "A5");
  out.push_back({"A5", a5});
  out.push_back({"S5", s5});
  out.push_back({"C2xA5", times_c2(a5, "C2xA5")});
  return out;
}

}  // namespace

std::string IsoFingerprint::to_string() const {
  std::string out = "order=" + std::to_string(order) + (abelian ? " abelian" : " nonabelian") +
                    " orders={";
  for (std::size_t i = 0; i < order_multiset.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(order_multiset[i].first) + ":" + std::to_string(order_multiset[i].second);
  }
  out += "} |Z|=" + std::to_string(center_size) + " |G'|=" + std::to_string(derived_size);
  return out;
}

IsoFingerprint fingerprint(const FiniteGroup& g) {
  IsoFingerprint fp;
  fp.order = g.order();
  fp.abelian = g.is_abelian();
  std::map<int, std::size_t> counts;
  for (std::size_t x = 0; x < g.order(); ++x) ++counts[g.element_order(static_cast<Element>(x))];
  fp.order_multiset.assign(counts.begin(), counts.end());
  fp.center_size = g.center().size();
  fp.derived_size = g.commutator_subgroup().size();
  return fp;
}

IsoFingerprint fingerprint(const BinaryOpTable& op) { return fingerprint(op.as_group()); }

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h, std::size_t budget) {
  if (!(fingerprint(g) == fingerprint(h))) return false;
  const auto& gens = g.generators();
  if (gens.empty()) return true;

  std::vector<std::vector<Element>> candidates(gens.size());
  std::size_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t y = 0; y < h.order(); ++y) {
      if (h.element_order(static_cast<Element>(y)) == g.element_order(gens[i])) {
        candidates[i].push_back(static_cast<Element>(y));
      }
    }
    if (candidates[i].empty()) return false;
    total *= candidates[i].size();
    if (total > budget) {
      throw Error(ErrorKind::TooLarge, "isomorphism search exceeds budget of " +
                                           std::to_string(budget) + " assignments");
    }
  }

  std::vector<Element> images(gens.size());
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == gens.size()) return extend_injective(g, h, gens, images).has_value();
    for (Element y : candidates[i]) {
      images[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

const std::vector<NamedGroup>& default_iso_catalog() {
  static const std::vector<NamedGroup> catalog = build_catalog();
  return catalog;
}

std::string identify(const FiniteGroup& g, const std::vector<NamedGroup>& catalog) {
  for (const auto& entry : catalog) {
    if (entry.group.order() == g.order() && are_isomorphic(g, entry.group)) return entry.name;
  }
  return fingerprint(g).to_string();
}

std::string identify(const BinaryOpTable& op, const std::vector<NamedGroup>& catalog) {
  return identify(op.as_group(), catalog);
}

}  // namespace braceblock
