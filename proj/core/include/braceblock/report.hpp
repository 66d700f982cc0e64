#pragma once

#include <nlohmann/json.hpp>

#include "braceblock/brace.hpp"
#include "braceblock/isoclass.hpp"
#include "braceblock/perm_hopf.hpp"
#include "braceblock/ybe.hpp"

namespace braceblock {

using Json = nlohmann::ordered_json;

/// {"name", "order", "elements", "table"}; identity first, row-major.
Json group_to_json(const FiniteGroup& g);
/// Inverse of group_to_json; validates the table.
FiniteGroup group_from_json(const Json& j);

/// {"group", "images"}
Json map_to_json(const FiniteGroup& g, const GMap& f);
GMap map_from_json(const FiniteGroup& g, const Json& j);

Json fingerprint_to_json(const IsoFingerprint& fp);

Json check_to_json(const CheckReport& r);

/// {"group", "ops": [{"id", "psi", "word", "table_digest", "iso_type"}],
///  "pairwise_brace", "dedup_merges"}
Json block_to_json(const FiniteGroup& g, const BraceBlock& block,
                   const std::vector<std::string>& iso_types);

/// {"group", "dot", "circ", "R", "checks": {"braid", "nondegenerate", "involutive"}}
Json ybe_to_json(const FiniteGroup& g, std::size_t dot_id, std::size_t circ_id, const YbeMap& r,
                 bool braid, bool nondegenerate, bool involutive);

struct HgsSummary {
  std::string psi;
  std::string word;
  std::vector<std::string> generators;  ///< cycle notation
  bool regular = false;
  bool stable = false;
  std::size_t grouplikes = 0;
  std::string iso_type;
};

/// {"group", "psi", "word", "N_generators", "regular", "stable", "grouplikes", "N_iso_type"}
Json hgs_to_json(const FiniteGroup& g, const HgsSummary& s);

}  // namespace braceblock
