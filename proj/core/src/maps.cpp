#include "braceblock/maps.hpp"

#include <array>
#include <deque>
#include <numeric>

#include "braceblock/catalog.hpp"

namespace braceblock {
namespace {

// Non-throwing core of extend_from_generators. Returns nullopt when the
// assignment is inconsistent; sets `complete` to false when gens do not reach
// every element.
std::optional<GMap> try_extend(const FiniteGroup& g, std::span<const Element> gens,
                               std::span<const Element> images, bool& complete) {
  constexpr Element kUnset = static_cast<Element>(-1);
  const std::size_t n = g.order();
  std::vector<Element> f(n, kUnset);
  f[kIdentity] = kIdentity;
  std::deque<Element> frontier{kIdentity};
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Element x = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = g.mul(x, gens[i]);
      const Element fy = g.mul(f[x], images[i]);
      if (f[y] == kUnset) {
        f[y] = fy;
        ++reached;
        frontier.push_back(y);
      } else if (f[y] != fy) {
        complete = true;
        return std::nullopt;
      }
    }
  }
  complete = reached == n;
  if (!complete) return std::nullopt;
  return GMap{std::move(f)};
}

void require_endomorphism(const FiniteGroup& g, const GMap& f, const char* what) {
  if (!is_endomorphism(g, f)) {
    throw Error(ErrorKind::NotEndomorphism, std::string(what) + " is not an endomorphism");
  }
}

}  // namespace

GMap identity_map(const FiniteGroup& g) {
  std::vector<Element> img(g.order());
  std::iota(img.begin(), img.end(), Element{0});
  return GMap{std::move(img)};
}

GMap zero_map(const FiniteGroup& g) { return GMap{std::vector<Element>(g.order(), kIdentity)}; }

GMap compose(const GMap& f, const GMap& g) {
  GMap out{std::vector<Element>(g.size())};
  for (std::size_t x = 0; x < g.size(); ++x) out.images[x] = f(g(static_cast<Element>(x)));
  return out;
}

GMap conjugation_map(const FiniteGroup& g, Element x) {
  GMap out{std::vector<Element>(g.order())};
  for (std::size_t h = 0; h < g.order(); ++h) {
    out.images[h] = g.conjugate(x, static_cast<Element>(h));
  }
  return out;
}

bool is_endomorphism(const FiniteGroup& g, const GMap& f) {
  const std::size_t n = g.order();
  if (f.size() != n) return false;
  for (Element y : f.images) {
    if (y >= n) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ea = static_cast<Element>(a);
      const auto eb = static_cast<Element>(b);
      if (f(g.mul(ea, eb)) != g.mul(f(ea), f(eb))) return false;
    }
  }
  return true;
}

GMap extend_from_generators(const FiniteGroup& g, std::span<const Element> gens,
                            std::span<const Element> images) {
  if (gens.size() != images.size()) {
    throw Error(ErrorKind::BadParameters, "generator and image lists differ in length");
  }
  for (Element x : images) {
    if (x >= g.order()) throw Error(ErrorKind::BadParameters, "image out of range");
  }
  bool complete = false;
  auto f = try_extend(g, gens, images, complete);
  if (!complete) throw Error(ErrorKind::BadParameters, "generators do not generate the group");
  if (!f) {
    std::string desc;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i > 0) desc += ",";
      desc += g.element_name(gens[i]) + "->" + g.element_name(images[i]);
    }
    throw Error(ErrorKind::NotAHomomorphism, "assignment " + desc + " does not extend");
  }
  return *f;
}

std::vector<GMap> enumerate_endomorphisms(const FiniteGroup& g, std::size_t budget) {
  const auto& gens = g.generators();
  if (gens.empty()) return {identity_map(g)};

  std::vector<std::vector<Element>> candidates(gens.size());
  std::size_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int ord = g.element_order(gens[i]);
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (ord % g.element_order(static_cast<Element>(y)) == 0) {
        candidates[i].push_back(static_cast<Element>(y));
      }
    }
    total *= candidates[i].size();
    if (total > budget) {
      throw Error(ErrorKind::TooLarge, "endomorphism search exceeds budget of " +
                                           std::to_string(budget) + " candidate tuples");
    }
  }

  std::vector<GMap> out;
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<Element> images(gens.size());
  for (;;) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pos[i]];
    bool complete = false;
    if (auto f = try_extend(g, gens, images, complete)) out.push_back(std::move(*f));
    // Odometer with the first generator most significant.
    std::size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++pos[i] < candidates[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool is_abelian_map(const FiniteGroup& g, const GMap& psi) {
  require_endomorphism(g, psi, "psi");
  std::vector<char> in_image(g.order(), 0);
  std::vector<Element> image;
  for (Element y : psi.images) {
    if (!in_image[y]) {
      in_image[y] = 1;
      image.push_back(y);
    }
  }
  for (Element x : image) {
    for (Element y : image) {
      if (g.mul(x, y) != g.mul(y, x)) return false;
    }
  }
  return true;
}

bool is_commutator_central(const FiniteGroup& g, const GMap& psi) {
  require_endomorphism(g, psi, "psi");
  for (Element d : g.commutator_subgroup()) {
    if (!g.center().contains(psi(d))) return false;
  }
  return true;
}

bool images_commute_mod_center(const FiniteGroup& g, const GMap& psi, const GMap& psi_prime) {
  require_endomorphism(g, psi, "psi");
  require_endomorphism(g, psi_prime, "psi'");
  const ElementSet a(g.order(), psi.images);
  const ElementSet b(g.order(), psi_prime.images);
  for (Element x : a) {
    for (Element y : b) {
      if (!g.center().contains(g.commutator(x, y))) return false;
    }
  }
  return true;
}

GMap sign_map(const FiniteGroup& g, Element tau) {
  if (g.mul(tau, tau) != kIdentity) {
    throw Error(ErrorKind::NotInvolution, g.element_name(tau) + " does not square to 1");
  }
  GMap f{std::vector<Element>(g.order())};
  for (std::size_t x = 0; x < g.order(); ++x) {
    f.images[x] = g.commutator_subgroup().contains(static_cast<Element>(x)) ? kIdentity : tau;
  }
  if (!is_endomorphism(g, f)) {
    throw Error(ErrorKind::NotAHomomorphism,
                "sign-type map is not a homomorphism on " + g.name());
  }
  return f;
}

GMap metacyclic_map(const FiniteGroup& g, int n) {
  const auto s = g.find("s");
  const auto t = g.find("t");
  if (!s || !t) throw Error(ErrorKind::BadParameters, g.name() + " has no generators s, t");
  const std::array<Element, 2> gens{*s, *t};
  const std::array<Element, 2> images{kIdentity, g.pow(*t, n)};
  return extend_from_generators(g, gens, images);
}

GMap det_row_map(const FiniteGroup& g, int row) {
  GroupSpec spec;
  try {
    spec = GroupSpec::parse(g.name());
  } catch (const Error&) {
    throw Error(ErrorKind::BadParameters, "det_row_map needs a gl(2,q) catalog group");
  }
  if (spec.kind != GroupSpec::Kind::GL) {
    throw Error(ErrorKind::BadParameters, "det_row_map needs a gl(2,q) catalog group");
  }
  if (row < 1 || row > 2) throw Error(ErrorKind::BadParameters, "row must be 1 or 2");
  const int q = spec.params[1];
  GMap f{std::vector<Element>(g.order())};
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Matrix2 a = *matrix_of(g, static_cast<Element>(x));
    const int d = ((a[0] * a[3] - a[1] * a[2]) % q + q) % q;
    const Matrix2 img = row == 1 ? Matrix2{d, 0, 0, 1} : Matrix2{1, 0, 0, d};
    const auto idx = g.find(matrix_name(img));
    if (!idx) throw Error(ErrorKind::BadParameters, "missing diagonal matrix in " + g.name());
    f.images[x] = *idx;
  }
  return f;
}

}  // namespace braceblock
