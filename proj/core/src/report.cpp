#include "braceblock/report.hpp"

namespace braceblock {
namespace {

[[noreturn]] void bad_json(const std::string& what) {
  throw Error(ErrorKind::ParseError, "malformed JSON: " + what);
}

}  // namespace

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["elements"] = g.names();
  Json rows = Json::array();
  for (const auto& r : g.rows()) rows.push_back(r);
  j["table"] = std::move(rows);
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("table") || !j["table"].is_array()) {
    bad_json("group needs a 'table' array");
  }
  std::vector<std::vector<Element>> rows;
  try {
    for (const auto& r : j["table"]) rows.push_back(r.get<std::vector<Element>>());
  } catch (const nlohmann::json::exception& e) {
    bad_json(std::string("group table: ") + e.what());
  }
  std::vector<std::string> names;
  if (j.contains("elements")) names = j["elements"].get<std::vector<std::string>>();
  if (j.contains("order") && j["order"].get<std::size_t>() != rows.size()) {
    bad_json("'order' does not match the table");
  }
  return FiniteGroup::from_table(rows, std::move(names), j.value("name", std::string{}));
}

Json map_to_json(const FiniteGroup& g, const GMap& f) {
  Json j;
  j["group"] = g.name();
  j["images"] = f.images;
  return j;
}

GMap map_from_json(const FiniteGroup& g, const Json& j) {
  if (!j.is_object() || !j.contains("images")) bad_json("map needs 'images'");
  GMap f{j["images"].get<std::vector<Element>>()};
  if (f.size() != g.order()) bad_json("map has the wrong number of images");
  for (Element y : f.images) {
    if (y >= g.order()) bad_json("map image out of range");
  }
  return f;
}

Json fingerprint_to_json(const IsoFingerprint& fp) {
  Json j;
  j["order"] = fp.order;
  j["abelian"] = fp.abelian;
  Json orders = Json::array();
  for (const auto& [o, c] : fp.order_multiset) orders.push_back({o, c});
  j["order_multiset"] = std::move(orders);
  j["center_size"] = fp.center_size;
  j["derived_size"] = fp.derived_size;
  return j;
}

Json check_to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["passed"] = r.passed;
  j["cases"] = r.cases;
  if (r.witness) j["witness"] = *r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json block_to_json(const FiniteGroup& g, const BraceBlock& block,
                   const std::vector<std::string>& iso_types) {
  Json j;
  j["group"] = g.name();
  Json ops = Json::array();
  for (std::size_t i = 0; i < block.ops.size(); ++i) {
    const auto& op = block.ops[i];
    Json o;
    o["id"] = i;
    o["psi"] = op.sources().empty() ? "" : op.sources().front().psi;
    o["word"] = op.sources().empty() ? "" : op.sources().front().word;
    o["table_digest"] = op.digest();
    o["iso_type"] = i < iso_types.size() ? iso_types[i] : "";
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  j["pairwise_brace"] = block.pairwise_brace;
  Json merges = Json::array();
  for (const auto& m : block.merges) {
    merges.push_back(Json{{"kept", m.kept}, {"psi", m.merged.psi}, {"word", m.merged.word}});
  }
  j["dedup_merges"] = std::move(merges);
  return j;
}

Json ybe_to_json(const FiniteGroup& g, std::size_t dot_id, std::size_t circ_id, const YbeMap& r,
                 bool braid, bool nondegenerate, bool involutive) {
  Json j;
  j["group"] = g.name();
  j["dot"] = dot_id;
  j["circ"] = circ_id;
  Json rows = Json::array();
  for (std::size_t a = 0; a < r.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < r.order(); ++b) {
      auto [x, y] = r(static_cast<Element>(a), static_cast<Element>(b));
      row.push_back({x, y});
    }
    rows.push_back(std::move(row));
  }
  j["R"] = std::move(rows);
  j["checks"] = {{"braid", braid}, {"nondegenerate", nondegenerate}, {"involutive", involutive}};
  return j;
}

Json hgs_to_json(const FiniteGroup& g, const HgsSummary& s) {
  Json j;
  j["group"] = g.name();
  j["psi"] = s.psi;
  j["word"] = s.word;
  j["N_generators"] = s.generators;
  j["regular"] = s.regular;
  j["stable"] = s.stable;
  j["grouplikes"] = s.grouplikes;
  j["N_iso_type"] = s.iso_type;
  return j;
}

}  // namespace braceblock
