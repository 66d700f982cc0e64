#include "braceblock/perm_hopf.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace braceblock {

PermSubgroup PermSubgroup::generated_by(std::vector<Permutation> gens, std::size_t degree) {
  PermSubgroup out;
  out.degree_ = gens.empty() ? degree : gens.front().degree();
  for (const auto& p : gens) {
    if (p.degree() != out.degree_) {
      throw Error(ErrorKind::BadParameters, "generators have different degrees");
    }
  }
  std::set<Permutation> seen{Permutation::identity(out.degree_)};
  std::deque<Permutation> frontier{Permutation::identity(out.degree_)};
  while (!frontier.empty()) {
    const Permutation x = frontier.front();
    frontier.pop_front();
    for (const auto& s : gens) {
      Permutation y = x * s;
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  out.elements_.assign(seen.begin(), seen.end());
  out.generators_ = std::move(gens);
  return out;
}

PermSubgroup PermSubgroup::from_elements(std::vector<Permutation> elements,
                                         std::vector<Permutation> generators) {
  PermSubgroup out;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  out.degree_ = elements.empty() ? 0 : elements.front().degree();
  out.elements_ = std::move(elements);
  out.generators_ = std::move(generators);
  return out;
}

bool PermSubgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermSubgroup::is_closed() const {
  for (const auto& x : elements_) {
    for (const auto& y : elements_) {
      if (!contains(x * y)) return false;
    }
  }
  return true;
}

Permutation eta(const FiniteGroup& g, const GMap& psi, const EndoWord& beta, Element x) {
  if (!is_commutator_central(g, psi)) {
    throw Error(ErrorKind::NotCommutatorCentral, "psi does not map [G,G] into Z(G)");
  }
  const Element p = psi(beta(g, x));
  std::vector<Element> images(g.order());
  for (std::size_t h = 0; h < g.order(); ++h) {
    images[h] = g.mul(g.mul(g.mul(x, p), static_cast<Element>(h)), g.inv(p));
  }
  Permutation direct(std::move(images));
  if (direct != left_translation(g, g.mul(x, p)) * right_translation(g, p)) {
    throw Error(ErrorKind::BadTable, "eta disagrees with lambda(g psi(g)) rho(psi(g))");
  }
  return direct;
}

PermSubgroup translations_of(const BinaryOpTable& op) {
  const std::size_t n = op.order();
  std::vector<Permutation> all;
  all.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Element> images(n);
    for (std::size_t b = 0; b < n; ++b) {
      images[b] = op(static_cast<Element>(a), static_cast<Element>(b));
    }
    all.emplace_back(std::move(images));
  }
  std::vector<Permutation> gens;
  const FiniteGroup as_group = op.as_group();
  for (Element x : as_group.generators()) gens.push_back(all[x]);
  return PermSubgroup::from_elements(std::move(all), std::move(gens));
}

bool is_regular(std::size_t n, const PermSubgroup& sub) {
  if (sub.size() != n || sub.degree() != n) return false;
  std::vector<char> hit(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::fill(hit.begin(), hit.end(), 0);
    for (const auto& e : sub.elements()) {
      auto& h = hit[e[static_cast<Element>(g)]];
      if (h) return false;
      h = 1;
    }
  }
  return true;
}

bool is_stable_under(const PermSubgroup& sub, const BinaryOpTable& op) {
  const PermSubgroup conj = translations_of(op);
  for (const auto& k : conj.elements()) {
    const Permutation k_inv = k.inverse();
    for (const auto& e : sub.elements()) {
      if (!sub.contains(k * e * k_inv)) return false;
    }
  }
  return true;
}

CheckReport stability_conjugate_formula_check(const FiniteGroup& g, const GMap& psi,
                                              const EndoWord& beta) {
  CheckReport out;
  out.check = "conjugate_formula";
  const std::size_t n = g.order();
  std::vector<Permutation> etas;
  etas.reserve(n);
  for (std::size_t x = 0; x < n; ++x) etas.push_back(eta(g, psi, beta, static_cast<Element>(x)));
  for (std::size_t k = 0; k < n; ++k) {
    const auto ek = static_cast<Element>(k);
    const Permutation lk = left_translation(g, ek);
    const Permutation lk_inv = lk.inverse();
    for (std::size_t x = 0; x < n; ++x) {
      const auto ex = static_cast<Element>(x);
      ++out.cases;
      const Element p = psi(beta(g, ex));
      const Element idx = g.mul(g.mul(g.mul(g.mul(ek, ex), p), g.inv(ek)), g.inv(p));
      if (lk * etas[x] * lk_inv != etas[idx]) {
        out.passed = false;
        out.witness = std::array<Element, 3>{ek, ex, 0};
        out.detail = "conjugate of eta_" + g.element_name(ex) + " by " + g.element_name(ek) +
                     " is not eta_" + g.element_name(idx);
        return out;
      }
    }
  }
  return out;
}

GrouplikeCount grouplike_count(const FiniteGroup& g, const GMap& psi, const EndoWord& beta) {
  GrouplikeCount out;
  const std::size_t n = g.order();
  std::vector<Permutation> lefts;
  for (std::size_t k = 0; k < n; ++k) lefts.push_back(left_translation(g, static_cast<Element>(k)));
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = static_cast<Element>(x);
    if (g.center().contains(g.mul(ex, psi(beta(g, ex))))) ++out.by_center;
    const Permutation e = eta(g, psi, beta, ex);
    const bool fixed = std::all_of(lefts.begin(), lefts.end(),
                                   [&](const Permutation& k) { return k * e == e * k; });
    if (fixed) ++out.by_fixed;
  }
  return out;
}

}  // namespace braceblock
