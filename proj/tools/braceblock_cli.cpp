// braceblock: command-line front end.
//
// Exit status: 0 when every check passes, 1 on a verification failure, 2 on
// a usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "braceblock/catalog.hpp"
#include "braceblock/environment.hpp"
#include "braceblock/report.hpp"
#include "braceblock/sampling.hpp"
#include "braceblock/worked_blocks.hpp"

namespace bb = braceblock;
using bb::Json;

namespace {

constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct Globals {
  bool json = false;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string command;
};

void emit(const Globals& g, Json body, const std::function<void(std::ostream&)>& text) {
  if (g.json) {
    Json out;
    out["command"] = g.command;
    for (auto& [k, v] : body.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
  } else {
    text(std::cout);
  }
}

void print_rows(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << line << "\n";
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> iso_types_of(const bb::BraceBlock& block) {
  std::vector<std::string> out;
  for (const auto& op : block.ops) out.push_back(bb::identify(op));
  return out;
}

void print_block(std::ostream& os, const bb::FiniteGroup& g, const bb::BraceBlock& block,
                 const std::vector<std::string>& iso) {
  os << "group " << g.name() << ", " << block.ops.size() << " operations, "
     << block.pairs_checked << " ordered pairs checked, pairwise brace: "
     << yes_no(block.pairwise_brace) << "\n";
  std::vector<std::vector<std::string>> rows{{"id", "psi", "word", "digest", "type"}};
  for (std::size_t i = 0; i < block.ops.size(); ++i) {
    const auto& src = block.ops[i].sources().front();
    rows.push_back({std::to_string(i), src.psi, src.word, block.ops[i].digest(), iso[i]});
  }
  print_rows(os, rows);
  for (const auto& m : block.merges) {
    os << "merged " << m.merged.psi << " / " << m.merged.word << " into op " << m.kept << "\n";
  }
}

void emit_block(const Globals& gl, const bb::FiniteGroup& g, const bb::BraceBlock& block,
                Json extra = Json::object(), const std::string& out_path = {}) {
  const auto iso = iso_types_of(block);
  Json body = bb::block_to_json(g, block, iso);
  for (auto& [k, v] : extra.items()) body[k] = v;
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw bb::Error(bb::ErrorKind::BadParameters, "cannot write " + out_path);
    f << body.dump(2) << "\n";
  }
  emit(gl, body, [&](std::ostream& os) {
    print_block(os, g, block, iso);
    for (auto& [k, v] : extra.items()) os << k << ": " << v.dump() << "\n";
  });
}

// ---- subcommands ---------------------------------------------------------

int cmd_group(const Globals& gl, const std::string& spec) {
  const auto g = bb::make_catalog_group(spec);
  Json body = bb::group_to_json(g);
  emit(gl, body, [&](std::ostream& os) {
    auto names_of = [&](const bb::ElementSet& s) {
      std::string out;
      for (bb::Element x : s) out += (out.empty() ? "" : " ") + g.element_name(x);
      return out;
    };
    os << g.name() << ", order " << g.order() << "\n";
    os << "center: " << names_of(g.center()) << "\n";
    os << "commutator subgroup: " << names_of(g.commutator_subgroup()) << "\n";
    os << "nilpotency class <= 2: " << yes_no(bb::nilpotency_class_at_most_two(g)) << "\n";
    if (g.order() <= 24) {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> head{"*"};
      for (const auto& n : g.names()) head.push_back(n);
      rows.push_back(head);
      for (std::size_t a = 0; a < g.order(); ++a) {
        std::vector<std::string> r{g.element_name(static_cast<bb::Element>(a))};
        for (std::size_t b = 0; b < g.order(); ++b) {
          r.push_back(g.element_name(g.mul(static_cast<bb::Element>(a), static_cast<bb::Element>(b))));
        }
        rows.push_back(r);
      }
      print_rows(os, rows);
    }
  });
  return 0;
}

int cmd_endos(const Globals& gl, const std::string& spec, bool only_abelian, bool only_cc) {
  const auto g = bb::make_catalog_group(spec);
  const auto all = bb::enumerate_endomorphisms(g);
  Json list = Json::array();
  std::vector<std::vector<std::string>> rows{{"name", "abelian", "cc", "generator images"}};
  for (std::size_t i = 0; i < all.size(); ++i) {
    const bool ab = bb::is_abelian_map(g, all[i]);
    const bool cc = bb::is_commutator_central(g, all[i]);
    if ((only_abelian && !ab) || (only_cc && !cc)) continue;
    const std::string name = "e" + std::to_string(i);
    std::string gens;
    for (bb::Element x : g.generators()) {
      gens += (gens.empty() ? "" : ", ") + g.element_name(x) + "->" + g.element_name(all[i](x));
    }
    list.push_back(Json{{"name", name}, {"images", all[i].images}, {"abelian", ab}, {"cc", cc}});
    rows.push_back({name, yes_no(ab), yes_no(cc), gens});
  }
  Json body{{"group", g.name()}, {"count", list.size()}, {"endomorphisms", list}};
  emit(gl, body, [&](std::ostream& os) {
    os << g.name() << ": " << list.size() << " endomorphisms\n";
    print_rows(os, rows);
  });
  return 0;
}

int cmd_block(const Globals& gl, const std::string& spec, const std::vector<std::string>& psis,
              const std::vector<std::string>& words, bool force, const std::string& out) {
  const auto g = bb::make_catalog_group(spec);
  const bb::MapEnvironment env(g);
  std::vector<bb::BlockSource> sources;
  for (const auto& p : psis) {
    const bb::GMap psi = bb::parse_map_spec(g, p, env);
    for (const auto& w : words) sources.push_back({psi, p, env.parse(w)});
  }
  bb::BuildOptions options;
  options.skip_precondition = force;
  options.threads = gl.threads;
  emit_block(gl, g, bb::build_block(g, sources, options), Json::object(), out);
  return 0;
}

/// Rebuilds op `id` of a block file from its recorded psi and word.
bb::BinaryOpTable op_from_block_file(const bb::FiniteGroup& g, const bb::MapEnvironment& env,
                                     const Json& block, std::size_t id) {
  const auto& ops = block.at("ops");
  if (id >= ops.size()) {
    throw bb::Error(bb::ErrorKind::BadParameters, "block has no op " + std::to_string(id));
  }
  const auto& o = ops.at(id);
  const std::string psi_spec = o.at("psi").get<std::string>();
  const std::string word_spec = o.at("word").get<std::string>();
  auto op = bb::circle_table(g, bb::parse_map_spec(g, psi_spec, env), env.parse(word_spec),
                             {psi_spec, word_spec});
  if (o.contains("table_digest") && o["table_digest"].get<std::string>() != op.digest()) {
    throw bb::Error(bb::ErrorKind::ParseError,
                    "op " + std::to_string(id) + " does not rebuild to its recorded digest");
  }
  return op;
}

int cmd_ybe(const Globals& gl, const std::string& path, std::size_t dot_id, std::size_t circ_id) {
  std::ifstream f(path);
  if (!f) throw bb::Error(bb::ErrorKind::BadParameters, "cannot read " + path);
  Json block;
  try {
    block = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw bb::Error(bb::ErrorKind::ParseError, path + ": " + e.what());
  }
  const auto g = bb::make_catalog_group(block.at("group").get<std::string>());
  const bb::MapEnvironment env(g);
  const auto dot = op_from_block_file(g, env, block, dot_id);
  const auto circ = op_from_block_file(g, env, block, circ_id);

  const auto r = bb::ybe_map(dot, circ);
  const auto rp = bb::ybe_inverse_map(dot, circ);
  const auto braid = bb::check_braid(r, gl.threads);
  const auto braid_p = bb::check_braid(rp, gl.threads);
  const auto nondeg = bb::check_nondegenerate(r);
  const auto nondeg_p = bb::check_nondegenerate(rp);
  const auto inverse = bb::check_inverse_pair(r, rp);
  const auto invol = bb::check_involutive(r, dot);

  Json body = bb::ybe_to_json(g, dot_id, circ_id, r, braid.passed && braid_p.passed,
                              nondeg.passed && nondeg_p.passed, bb::is_involutive(r));
  Json reports = Json::array();
  for (const auto* c : {&braid, &braid_p, &nondeg, &nondeg_p, &inverse, &invol}) {
    reports.push_back(bb::check_to_json(*c));
  }
  body["reports"] = reports;
  const bool ok = braid && braid_p && nondeg && nondeg_p && inverse && invol;
  emit(gl, body, [&](std::ostream& os) {
    os << "R on " << g.name() << " from ops (" << dot_id << ", " << circ_id << ")\n";
    std::vector<std::vector<std::string>> rows{{"check", "map", "result", "detail"}};
    rows.push_back({"braid", "R", braid ? "pass" : "FAIL", braid.detail});
    rows.push_back({"braid", "R'", braid_p ? "pass" : "FAIL", braid_p.detail});
    rows.push_back({"nondegenerate", "R", nondeg ? "pass" : "FAIL", nondeg.detail});
    rows.push_back({"nondegenerate", "R'", nondeg_p ? "pass" : "FAIL", nondeg_p.detail});
    rows.push_back({"inverse pair", "R, R'", inverse ? "pass" : "FAIL", inverse.detail});
    rows.push_back({"involutive", "R", invol ? "pass" : "FAIL", invol.detail});
    print_rows(os, rows);
  });
  return ok ? 0 : kVerificationFailure;
}

int cmd_hgs(const Globals& gl, const std::string& spec, const std::string& psi_spec,
            const std::string& word_spec) {
  const auto g = bb::make_catalog_group(spec);
  const bb::MapEnvironment env(g);
  const bb::GMap psi = bb::parse_map_spec(g, psi_spec, env);
  const bb::EndoWord beta = env.parse(word_spec);
  const auto op = bb::circle_table(g, psi, beta, {psi_spec, word_spec});
  const auto n = bb::translations_of(op);
  const auto count = bb::grouplike_count(g, psi, beta);
  const auto formula = bb::stability_conjugate_formula_check(g, psi, beta);

  bb::HgsSummary s;
  s.psi = psi_spec;
  s.word = beta.to_string();
  for (const auto& p : n.generators()) s.generators.push_back(p.cycles());
  s.regular = bb::is_regular(g.order(), n);
  s.stable = bb::is_stable_under(n, bb::dot_table(g));
  s.grouplikes = count.by_center;
  s.iso_type = bb::identify(op);
  Json body = bb::hgs_to_json(g, s);
  body["grouplikes_by_fixed_points"] = count.by_fixed;
  body["conjugate_formula"] = bb::check_to_json(formula);
  const bool ok = s.regular && s.stable && count.agree() && formula.passed;
  emit(gl, body, [&](std::ostream& os) {
    os << "N for psi = " << s.psi << ", word = " << s.word << " on " << g.name() << "\n";
    std::string gens;
    for (const auto& c : s.generators) gens += (gens.empty() ? "" : ", ") + c;
    print_rows(os, {{"generators", gens},
                    {"type", s.iso_type},
                    {"regular", yes_no(s.regular)},
                    {"G-stable", yes_no(s.stable)},
                    {"conjugate formula", formula ? "pass" : "FAIL " + formula.detail},
                    {"grouplikes", std::to_string(count.by_center) + " (fixed points: " +
                                       std::to_string(count.by_fixed) + ")"}});
  });
  return ok ? 0 : kVerificationFailure;
}

int cmd_q8(const Globals& gl) {
  const auto rep = bb::reproduce_quaternion_block(gl.threads);
  std::map<std::string, int> multiset;
  for (const auto& t : rep.iso_types) ++multiset[t];
  Json extra;
  Json labels = Json::array();
  for (const auto& c : bb::quaternion_block_columns()) labels.push_back(c.label);
  extra["labels"] = labels;
  extra["iso_multiset"] = multiset;
  extra["exact_mismatches"] = rep.exact_mismatches;
  emit_block(gl, rep.group, rep.block, extra);
  return rep.block.ops.size() == 16 ? 0 : kVerificationFailure;
}

int cmd_sn(const Globals& gl, int n, int fixed, const std::vector<std::string>& tau_names,
           bool force) {
  const auto g = bb::make_catalog_group(bb::GroupSpec::symmetric(n));
  std::vector<bb::Element> taus;
  if (tau_names.empty()) {
    taus = bb::elementary_involutions(g, n, fixed);
  } else {
    for (const auto& t : tau_names) {
      auto x = g.find(t);
      if (!x) throw bb::Error(bb::ErrorKind::UnknownName, "no element named '" + t + "'");
      taus.push_back(*x);
    }
  }
  bb::BuildOptions options;
  options.skip_precondition = force;
  options.threads = gl.threads;
  emit_block(gl, g, bb::build_block(g, bb::sign_map_sources(g, taus), options));
  return 0;
}

int cmd_metacyclic(const Globals& gl, int p, int q, int d) {
  if (d == 0) {
    auto root = bb::default_metacyclic_root(p, q);
    if (!root) throw bb::Error(bb::ErrorKind::BadParameters, "no d with d^q = 1 mod p, d != 1");
    d = *root;
  }
  const auto g = bb::make_catalog_group(bb::GroupSpec::metacyclic(p, q, d));
  bb::BuildOptions options;
  options.threads = gl.threads;
  const auto block = bb::build_block(g, bb::metacyclic_sources(g, q), options);
  Json extra{{"distinct_tables", block.ops.size()}, {"stated_count", q - 1}};
  emit_block(gl, g, block, extra);
  return 0;
}

int cmd_gl(const Globals& gl, int n, int q) {
  const auto g = bb::make_catalog_group(bb::GroupSpec::gl(n, q));
  bb::BuildOptions options;
  options.threads = gl.threads;
  emit_block(gl, g, bb::build_block(g, bb::gl_sources(g), options));
  return 0;
}

int cmd_lemma(const Globals& gl, const std::string& spec, int trials) {
  const auto g = bb::make_catalog_group(spec);
  auto sampler = bb::WordSampler::over_endomorphisms(g, gl.seed);
  Json results = Json::array();
  std::size_t failures = 0;
  std::size_t psi_count = 0;
  std::string first_failure;
  for (std::size_t i = 0; i < sampler.pool().size(); ++i) {
    const bb::GMap& psi = sampler.pool()[i];
    if (!bb::is_commutator_central(g, psi)) continue;
    ++psi_count;
    std::vector<std::pair<bb::EndoWord, bb::EndoWord>> pairs;
    for (int t = 0; t < trials; ++t) pairs.emplace_back(sampler.next(), sampler.next());
    const auto reps = bb::verify_lemma_congruences(g, psi, pairs);
    Json parts = Json::array();
    for (const auto& r : reps) {
      parts.push_back(bb::check_to_json(r));
      if (!r) {
        ++failures;
        if (first_failure.empty()) first_failure = "e" + std::to_string(i) + ": " + r.detail;
      }
    }
    results.push_back(Json{{"psi", "e" + std::to_string(i)}, {"parts", parts}});
  }
  Json body{{"group", g.name()}, {"seed", gl.seed}, {"trials", trials},
            {"cc_maps", psi_count}, {"failures", failures}, {"results", results}};
  emit(gl, body, [&](std::ostream& os) {
    os << g.name() << ": " << psi_count << " commutator-central maps x " << trials
       << " word pairs, " << failures << " failing parts\n";
    if (!first_failure.empty()) os << "first failure: " << first_failure << "\n";
  });
  return failures == 0 ? 0 : kVerificationFailure;
}

bool is_verification_kind(bb::ErrorKind k) {
  switch (k) {
    case bb::ErrorKind::BraceFailure:
    case bb::ErrorKind::ImagesDoNotCommute:
    case bb::ErrorKind::NotABrace:
    case bb::ErrorKind::NotCommutatorCentral:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brace blocks from commutator-central maps on finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json, "Emit JSON instead of text");
  app.add_option("--threads", gl.threads, "Worker threads for exhaustive checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", gl.seed, "Seed for randomized trials");

  std::string spec;
  auto* group = app.add_subcommand("group", "Print a catalog group");
  group->add_option("spec", spec, "Group spec, e.g. quaternion8 or gl(2,3)")->required();

  bool only_abelian = false;
  bool only_cc = false;
  auto* endos = app.add_subcommand("endos", "Enumerate endomorphisms");
  endos->add_option("spec", spec)->required();
  endos->add_flag("--abelian", only_abelian, "Only maps with abelian image");
  endos->add_flag("--cc", only_cc, "Only commutator-central maps");

  std::vector<std::string> psis;
  std::vector<std::string> words;
  bool force = false;
  std::string out_path;
  auto* block = app.add_subcommand("block", "Build and verify a brace block");
  block->add_option("spec", spec)->required();
  block->add_option("--psi", psis, "Map spec (repeatable)")->allow_extra_args(false);
  block->add_option("--word", words, "Word spec (repeatable)")->allow_extra_args(false);
  block->add_flag("--force", force, "Skip the images-commute precondition");
  block->add_option("--out", out_path, "Also write the block report to this file");

  std::string block_file;
  std::size_t dot_id = 0;
  std::size_t circ_id = 0;
  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter checks for two ops of a block file");
  ybe->add_option("block_file", block_file)->required()->check(CLI::ExistingFile);
  ybe->add_option("--dot", dot_id)->required();
  ybe->add_option("--circ", circ_id)->required();

  std::string psi_spec = "id";
  std::string word_spec = "1";
  auto* hgs = app.add_subcommand("hgs", "Regular G-stable subgroup for (psi, word)");
  hgs->add_option("spec", spec)->required();
  hgs->add_option("--psi", psi_spec);
  hgs->add_option("--word", word_spec);

  auto* q8 = app.add_subcommand("q8-reproduce", "The sixteen-op quaternion block");

  int n = 0;
  int fixed = 0;
  std::vector<std::string> taus;
  auto* sn = app.add_subcommand("sn-block", "Sign-map block over commuting involutions");
  sn->add_option("n", n)->required()->check(CLI::Range(2, 5));
  sn->add_option("--fixed", fixed, "Point left out of the pairing");
  sn->add_option("--tau", taus, "Explicit involutions, e.g. (12) (repeatable)")->allow_extra_args(false);
  sn->add_flag("--force", force, "Skip the images-commute precondition");

  int p = 0;
  int q = 0;
  int d = 0;
  auto* meta = app.add_subcommand("metacyclic-block", "Block on the metacyclic group of order pq");
  meta->add_option("p", p)->required();
  meta->add_option("q", q)->required();
  meta->add_option("--d", d, "Root with d^q = 1 mod p (default: smallest)");

  auto* glb = app.add_subcommand("gl-block", "Determinant-row block on GL(n,q)");
  glb->add_option("n", n)->required();
  glb->add_option("q", q)->required();

  int trials = 50;
  auto* lemma = app.add_subcommand("lemma-check", "Congruence checks over random word pairs");
  lemma->add_option("spec", spec)->required();
  lemma->add_option("--trials", trials)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }
  if (psis.empty()) psis.push_back("id");
  if (words.empty()) words.push_back("1");
  for (int i = 1; i < argc; ++i) gl.command += (i > 1 ? " " : "") + std::string(argv[i]);

  try {
    if (*group) return cmd_group(gl, spec);
    if (*endos) return cmd_endos(gl, spec, only_abelian, only_cc);
    if (*block) return cmd_block(gl, spec, psis, words, force, out_path);
    if (*ybe) return cmd_ybe(gl, block_file, dot_id, circ_id);
    if (*hgs) return cmd_hgs(gl, spec, psi_spec, word_spec);
    if (*q8) return cmd_q8(gl);
    if (*sn) return cmd_sn(gl, n, fixed, taus, force);
    if (*meta) return cmd_metacyclic(gl, p, q, d);
    if (*glb) return cmd_gl(gl, n, q);
    if (*lemma) return cmd_lemma(gl, spec, trials);
  } catch (const bb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_verification_kind(e.kind()) ? kVerificationFailure : kUsageError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
