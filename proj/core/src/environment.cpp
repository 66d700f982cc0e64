#include "braceblock/environment.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "braceblock/catalog.hpp"

namespace braceblock {
namespace {

Element element_named(const FiniteGroup& g, std::string_view name) {
  auto x = g.find(name);
  if (!x) {
    throw Error(ErrorKind::UnknownName,
                "no element named '" + std::string(name) + "' in " + g.name());
  }
  return *x;
}

GMap from_generator_table(const FiniteGroup& g, std::string_view at_a, std::string_view at_b) {
  const std::array<Element, 2> gens{element_named(g, "a"), element_named(g, "b")};
  const std::array<Element, 2> imgs{element_named(g, at_a), element_named(g, at_b)};
  return extend_from_generators(g, gens, imgs);
}

GMap inverse_of(const GMap& f) {
  GMap out{std::vector<Element>(f.size())};
  for (std::size_t x = 0; x < f.size(); ++x) out.images[f.images[x]] = static_cast<Element>(x);
  return out;
}

void define_quaternion_maps(const FiniteGroup& g, MapEnvironment& env) {
  // Generator tables (images of a, b).
  const std::array<std::array<const char*, 2>, 4> table{{
      {"a3b", "a3"},
      {"a2b", "a3"},
      {"b", "ab"},
      {"a3", "ab"},
  }};
  std::array<GMap, 4> base;
  for (std::size_t k = 0; k < 4; ++k) {
    base[k] = from_generator_table(g, table[k][0], table[k][1]);
    env.define("f" + std::to_string(k + 1), base[k]);
  }
  // sigma: a -> s, b -> t for distinct s, t in {a, b, ab}; each is an
  // automorphism of the quaternion group.
  const std::array<const char*, 3> letters{"a", "b", "ab"};
  for (const char* s : letters) {
    for (const char* t : letters) {
      if (std::string_view(s) == t) continue;
      const GMap sigma = from_generator_table(g, s, t);
      const GMap sigma_inv = inverse_of(sigma);
      for (std::size_t k = 0; k < 4; ++k) {
        env.define("f" + std::to_string(k + 1) + "_" + s + "_" + t,
                   compose(sigma, compose(base[k], sigma_inv)));
      }
    }
  }
}

}  // namespace

MapEnvironment::MapEnvironment(const FiniteGroup& g) : group_(&g) {
  named_.emplace("id", identity_map(g));
  named_.emplace("zero", zero_map(g));
  if (g.name() == "quaternion8") define_quaternion_maps(g, *this);
}

void MapEnvironment::define(std::string name, GMap map) {
  named_.insert_or_assign(std::move(name), std::move(map));
}

const std::vector<GMap>& MapEnvironment::endomorphisms() const {
  if (!endos_) endos_ = enumerate_endomorphisms(*group_);
  return *endos_;
}

std::optional<GMap> MapEnvironment::resolve(std::string_view name) const {
  if (auto it = named_.find(name); it != named_.end()) return it->second;
  if (name.size() > 1 && name[0] == 'e' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    if (name.size() > 7) return std::nullopt;
    const std::size_t k = std::stoul(std::string(name.substr(1)));
    const auto& all = endomorphisms();
    if (k < all.size()) return all[k];
  }
  return std::nullopt;
}

NameResolver MapEnvironment::resolver() const {
  return [this](std::string_view name) { return resolve(name); };
}

EndoWord MapEnvironment::parse(std::string_view word_spec) const {
  return parse_word(*group_, word_spec, resolver());
}

GMap parse_map_spec(const FiniteGroup& g, std::string_view spec, const MapEnvironment& env) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  spec = strip(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    if (auto m = env.resolve(spec)) return *m;
    throw Error(ErrorKind::UnknownName, "unknown map '" + std::string(spec) + "'");
  }
  const std::string_view head = spec.substr(0, colon);
  const std::string_view body = strip(spec.substr(colon + 1));
  auto parse_int = [&](std::string_view s) {
    s = strip(s);
    if (s.empty() || s.size() > 6 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorKind::ParseError,
                  "map spec '" + std::string(spec) + "': expected an integer, got '" +
                      std::string(s) + "'");
    }
    return std::stoi(std::string(s));
  };

  if (head == "gens") {
    std::vector<Element> gens;
    std::vector<Element> imgs;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string_view::npos) comma = body.size();
      const std::string_view item = strip(body.substr(pos, comma - pos));
      const auto arrow = item.find("->");
      if (arrow == std::string_view::npos) {
        throw Error(ErrorKind::ParseError, "map spec '" + std::string(spec) +
                                               "': expected 'x->y', got '" + std::string(item) +
                                               "'");
      }
      gens.push_back(element_named(g, strip(item.substr(0, arrow))));
      imgs.push_back(element_named(g, strip(item.substr(arrow + 2))));
      pos = comma + 1;
    }
    return extend_from_generators(g, gens, imgs);
  }
  if (head == "sign") return sign_map(g, element_named(g, body));
  if (head == "det") return det_row_map(g, parse_int(body));
  if (head == "meta") return metacyclic_map(g, parse_int(body));
  throw Error(ErrorKind::ParseError,
              "map spec '" + std::string(spec) + "': unknown kind '" + std::string(head) + "'");
}

}  // namespace braceblock
