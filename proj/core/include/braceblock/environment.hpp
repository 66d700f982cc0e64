#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braceblock/maps.hpp"

namespace braceblock {

/// Named endomorphisms available to word specs for one group:
///   id, zero           always
///   e0, e1, ...        the enumerate_endomorphisms order (computed lazily)
///   f1..f4             the quaternion generator tables, on quaternion8
///   fK_s_t             sigma . fK . sigma^-1, sigma: a -> s, b -> t, on quaternion8
/// plus anything added with define().
class MapEnvironment {
 public:
  explicit MapEnvironment(const FiniteGroup& g);

  void define(std::string name, GMap map);
  std::optional<GMap> resolve(std::string_view name) const;
  NameResolver resolver() const;

  EndoWord parse(std::string_view word_spec) const;

  const std::vector<GMap>& endomorphisms() const;

 private:
  const FiniteGroup* group_;
  std::map<std::string, GMap, std::less<>> named_;
  mutable std::optional<std::vector<GMap>> endos_;
};

/// map-spec grammar used on the command line and in block reports:
///   "id" | "zero" | "gens:a->a3b,b->a3" | "sign:(12)(35)" | "det:1" | "meta:2"
/// or any name known to the environment.
GMap parse_map_spec(const FiniteGroup& g, std::string_view spec, const MapEnvironment& env);

}  // namespace braceblock
