// Command-line front end: build, verify, convert and render the artifacts
// of the lattice/representation toolkit. Exit codes: 0 success, 1 a
// verification failed (reports still written), 2 bad input, schema or size
// cap problems.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latrep/direct_system.hpp"
#include "latrep/errors.hpp"
#include "latrep/hom.hpp"
#include "latrep/homogeneity.hpp"
#include "latrep/ideal.hpp"
#include "latrep/io.hpp"
#include "latrep/iso.hpp"
#include "latrep/presentation.hpp"
#include "latrep/rep_sequence.hpp"
#include "latrep/tree.hpp"

namespace fs = std::filesystem;
using namespace latrep;
using io::json;

namespace {

struct caps {
  int max_vertices = 50000;
  int max_carrier_congruence = 16;
  int max_carrier_maps = 12;
  long max_results = 0;  // 0 = library defaults

  static caps from_env() {
    caps c;
    if (const char* v = std::getenv("LATREP_MAX_VERTICES")) c.max_vertices = std::atoi(v);
    if (const char* v = std::getenv("LATREP_MAX_CARRIER")) {
      c.max_carrier_congruence = std::atoi(v);
      c.max_carrier_maps = std::atoi(v);
    }
    if (const char* v = std::getenv("LATREP_MAX_RESULTS")) c.max_results = std::atol(v);
    return c;
  }

  congruence_limits congruence() const {
    congruence_limits l;
    l.max_carrier = max_carrier_congruence;
    if (max_results > 0) l.max_congruences = static_cast<int>(max_results);
    return l;
  }
  map_enum_limits maps() const {
    map_enum_limits l;
    l.max_carrier = max_carrier_maps;
    if (max_results > 0) l.max_maps = max_results;
    return l;
  }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      throw format_error("not an integer list: " + text);
    }
  }
  return out;
}

// Path string to embed in an emitted file so it resolves from that file's
// directory. Keeps outputs byte-deterministic across working directories.
std::string ref_from(const fs::path& out_file, const fs::path& target) {
  std::error_code ec;
  fs::path rel = fs::relative(target, out_file.parent_path().empty()
                                          ? fs::path(".")
                                          : out_file.parent_path(),
                              ec);
  if (ec || rel.empty()) return target.string();
  return rel.string();
}

void emit_text(const std::optional<std::string>& out, const std::string& text) {
  if (out)
    io::write_file_atomic(*out, text);
  else
    std::cout << text;
}

int cmd_lattice_check(const std::string& file,
                      const std::optional<std::string>& out) {
  finite_usl s = io::load_usl(file);
  axiom_report r = check_busl_axioms(s);
  std::ostringstream text;
  for (const auto& c : r.checks) {
    text << "eq " << c.equation << " (" << c.name << "): ";
    if (!c.applicable)
      text << "skipped (no bound designated)";
    else if (c.pass)
      text << "pass";
    else {
      text << "fail, witness";
      for (int w : c.witness)
        if (w >= 0) text << " " << w;
    }
    text << "\n";
  }
  text << (r.pass() ? "verdict: pass\n" : "verdict: fail\n");
  emit_text(out, text.str());
  return r.pass() ? 0 : 1;
}

int cmd_lattice_make(const std::string& family, int param,
                     const std::string& out) {
  finite_lattice l = make_standard(parse_family(family), param);
  io::save_json(out, io::lattice_to_json(l));
  return 0;
}

int cmd_lattice_dual(const std::string& file, const std::string& out) {
  io::save_json(out, io::lattice_to_json(dual(io::load_lattice(file))));
  return 0;
}

int cmd_adjoint(const std::string& hom_file, const std::string& prefix) {
  usl_hom h = io::load_hom(hom_file);
  hom_verdict hv = check_hom(h.source, h.target, h.map, hom_kind::usl);
  if (!hv.ok) throw domain_error("input is not an usl hom: " + hv.reason);
  usl_hom adj = galois_adjoint(h);
  fs::path src_path = prefix + ".source.json";
  fs::path tgt_path = prefix + ".target.json";
  fs::path hom_path = prefix + ".hom.json";
  io::save_json(src_path, io::lattice_to_json(dual(as_lattice(h.target))));
  io::save_json(tgt_path, io::lattice_to_json(dual(as_lattice(h.source))));
  io::save_json(hom_path,
                io::hom_to_json(adj, ref_from(hom_path, src_path),
                                ref_from(hom_path, tgt_path)));
  std::cout << "adjoint map:";
  for (int v : adj.map) std::cout << " " << v;
  std::cout << "\n";
  return 0;
}

int cmd_quotient(const std::string& lattice_file, const std::string& ideal,
                 const std::string& prefix) {
  finite_usl l = io::load_usl(lattice_file);
  std::vector<int> members = parse_int_list(ideal);
  ideal_verdict iv = is_ideal(l, members);
  if (!iv.ok)
    throw domain_error("not an ideal (" + iv.reason + ", witness " +
                       std::to_string(iv.witness_a) + "," +
                       std::to_string(iv.witness_b) + ")");
  quotient_result qr = quotient_by_ideal(l, members);
  fs::path q_path = prefix + ".quotient.json";
  fs::path p_path = prefix + ".projection.json";
  io::save_json(q_path, io::usl_to_json(qr.quotient));
  io::save_json(p_path,
                io::hom_to_json(qr.projection, ref_from(p_path, lattice_file),
                                ref_from(p_path, q_path)));
  std::cout << "quotient size: " << qr.quotient.n << "\n";
  return 0;
}

int cmd_present(const std::string& file, const std::string& out) {
  presented_usl p = io::load_presentation(file);
  presentation_result r = quotient_presentation(p);
  io::save_json(out, io::usl_to_json(r.usl));
  std::cout << "classes:";
  for (int c : r.class_of) std::cout << " " << c;
  std::cout << "\n";
  return 0;
}

int cmd_congruence(const std::string& algebra_file,
                   const std::optional<std::string>& out,
                   const std::optional<std::string>& lattice_out,
                   const std::optional<std::string>& structure_out,
                   const caps& limits) {
  finite_algebra a = io::load_algebra(algebra_file);
  congruence_lattice cl = enumerate_congruences(a, limits.congruence());
  json rep;
  rep["count"] = static_cast<int>(cl.members.size());
  rep["members"] = json::array();
  for (const auto& p : cl.members) rep["members"].push_back(p.block_string());
  rep["order"] = json::array();
  for (int i = 0; i < cl.lattice.n; ++i) {
    json row = json::array();
    for (int j = 0; j < cl.lattice.n; ++j)
      row.push_back(cl.lattice.leq(i, j) ? 1 : 0);
    rep["order"].push_back(row);
  }
  if (out)
    io::save_json(*out, rep);
  else
    std::cout << io::dump(rep);
  if (lattice_out) io::save_json(*lattice_out, io::lattice_to_json(cl.lattice));
  if (structure_out) {
    rel_structure s = rel_structure::from_congruences(cl);
    std::string lattice_ref =
        lattice_out ? ref_from(*structure_out, *lattice_out) : std::string();
    io::save_json(*structure_out, io::structure_to_json(s, lattice_ref));
  }
  return 0;
}

int cmd_clfa(const std::string& lattice_file, const std::string& algebra_file,
             const caps& limits) {
  finite_usl l = io::load_usl(lattice_file);
  finite_algebra a = io::load_algebra(algebra_file);
  clfa_verdict v = clfa_verify(l, a, limits.congruence());
  std::cout << "congruences: " << v.conlat.members.size() << "\n";
  if (v.ok) {
    std::cout << "isomorphic: yes\nwitness:";
    for (int w : v.witness) std::cout << " " << w;
    std::cout << "\n";
    return 0;
  }
  std::cout << "isomorphic: no\n";
  return 1;
}

int cmd_pudlak_build(const std::string& lattice_file, int stages,
                     std::optional<int> seed, const std::string& variant,
                     int max_vertices, const std::string& out) {
  finite_lattice l = io::load_lattice(lattice_file);
  int seed_color = seed.value_or(l.top());
  rep_sequence r = build_rep_sequence(l, seed_color, parse_variant(variant),
                                      stages, max_vertices);
  if (r.capped || r.stage_count() != stages + 1)
    throw size_error("vertex cap " + std::to_string(max_vertices) +
                     " reached before stage " + std::to_string(stages));
  fs::path out_path = out;
  io::save_json(out_path,
                io::graph_to_json(r.stages.back(), ref_from(out_path, lattice_file)));
  std::cout << "stages: " << stages << "\nvertices: "
            << r.stages.back().vertex_count()
            << "\nedges: " << r.stages.back().edge_count() << "\n";
  return 0;
}

int cmd_pudlak_verify(const std::string& graph_file, std::optional<int> depth,
                      const std::string& variant,
                      const std::optional<std::string>& out) {
  io::graph_file gf = io::load_graph(graph_file);
  rep_sequence r = sequence_from_graph(gf.lattice, gf.graph,
                                       parse_variant(variant), -1);
  int d = depth.value_or(r.stage_count() - 1);
  rep_report rep = rep_verify(r, d);

  std::ostringstream text;
  for (const auto& s : rep.per_stage) {
    text << "stage " << s.stage << ": zero-identity "
         << (s.zero_identity ? "pass" : "fail") << ", monotonicity "
         << (s.monotone ? "pass" : "fail");
    if (!s.monotone) text << " (colors " << s.mono_m << "," << s.mono_n << ")";
    text << ", meet-fidelity " << (s.meet_fidelity ? "pass" : "fail");
    if (!s.meet_fidelity) text << " (colors " << s.meet_m << "," << s.meet_n << ")";
    text << "\n";
  }
  for (const auto& s : rep.separations) {
    text << "separation " << s.m << " !<= " << s.n << ": ";
    if (s.found)
      text << "witness (" << s.x << "," << s.y << ") at stage " << s.stage;
    else
      text << "no witness up to depth";
    text << "\n";
  }
  for (const auto& s : rep.stabilizations)
    if (!s.conclusive)
      text << "join " << s.m << "," << s.n << " at stage " << s.stage
           << ": unstabilized at depth\n";
  text << "max stabilization depth: " << rep.max_stabilization_depth() << "\n";
  bool ok = rep.exact_ok() && rep.separations_ok();
  text << (ok ? "verdict: pass\n" : "verdict: fail\n");
  emit_text(out, text.str());

  return ok ? 0 : 1;
}

int cmd_homogeneity(const std::optional<std::string>& structure_file,
                    const std::optional<std::string>& algebra_file,
                    const std::optional<std::string>& out, const caps& limits) {
  rel_structure s;
  if (structure_file)
    s = io::load_structure(*structure_file);
  else if (algebra_file)
    s = rel_structure::from_congruences(
        enumerate_congruences(io::load_algebra(*algebra_file), limits.congruence()));
  else
    throw format_error("homogeneity needs --structure or --algebra");
  homogeneity_report rep = homogeneity_check(s, limits.maps());
  json j;
  j["homogeneous"] = rep.homogeneous;
  j["quadruples_scanned"] = rep.quadruples;
  j["premise_count"] = rep.premise_count;
  j["max_chain_length"] = rep.max_chain_length;
  if (!rep.homogeneous) j["counterexample"] = rep.counterexample;
  if (out)
    io::save_json(*out, j);
  else
    std::cout << io::dump(j);
  return rep.homogeneous ? 0 : 1;
}

int cmd_tree_demo(const std::string& lattice_file, int levels,
                  std::optional<int> stages, const std::string& branch,
                  const std::optional<std::string>& shift,
                  std::optional<int> seed, int max_vertices,
                  const std::string& variant, const std::string& out) {
  finite_lattice logical = io::load_lattice(lattice_file);
  finite_lattice rep_lattice = dual(logical);
  int seed_color = seed.value_or(rep_lattice.top());
  std::vector<int> m;
  if (shift) {
    m = parse_int_list(*shift);
    if (m.empty()) throw format_error("empty shift list");
  }
  // The base tree must reach every padded word, m.back()+1 positions deep.
  int base_bound = m.empty() ? levels : m.back() + 1;
  int built = stages.value_or(std::max(levels, base_bound));
  rep_sequence r = build_rep_sequence(rep_lattice, seed_color,
                                      parse_variant(variant), built, max_vertices);
  if (r.stage_count() < base_bound + 1)
    throw size_error("vertex cap reached before " + std::to_string(base_bound) +
                     " stages were built");

  std::vector<tree_map> owned;
  owned.push_back(identity_tree(r, base_bound));
  if (!m.empty()) {
    int bound = static_cast<int>(m.size()) - 1;
    if (levels > bound)
      throw domain_error("levels exceed the shifted tree bound");
    theta_string root(m[0] + 1, 0);
    owned.push_back(subtree_shift(owned[0], space_sizes(r, bound), root, m, bound));
  }
  std::vector<const tree_map*> nest;
  for (const auto& t : owned) nest.push_back(&t);

  theta_string choices = branch.empty()
                             ? theta_string(nest.back()->bound(), 0)
                             : theta_string(parse_int_list(branch));
  branch_build b = build_g(nest, r, choices);

  json trace;
  trace["choices"] = b.choices;
  trace["g"] = b.g;
  json gk;
  for (int k = 0; k < r.lattice.n; ++k) gk[std::to_string(k)] = b.gk[k];
  trace["g_k"] = gk;
  json prefix_table = json::array();
  for (size_t len = 0; len <= b.choices.size(); ++len) {
    theta_string p(b.choices.begin(), b.choices.begin() + len);
    prefix_table.push_back({{"sigma", p}, {"image", nest.back()->apply(p)}});
  }
  trace["tree"] = prefix_table;

  bool ok = true;
  json reductions = json::array();
  for (int k = 0; k < logical.n; ++k)
    for (int m = 0; m < logical.n; ++m) {
      if (!logical.leq(k, m)) continue;
      reduction_verdict v = check_reduction(b, r, k, m);
      reductions.push_back({{"k", k},
                            {"m", m},
                            {"ok", v.ok},
                            {"witness", v.witness_position}});
      if (!v.ok) ok = false;
    }
  trace["reductions"] = reductions;
  io::save_json(out, trace);
  return ok ? 0 : 1;
}

int cmd_render_dot(const std::string& graph_file,
                   const std::optional<std::string>& out) {
  io::graph_file gf = io::load_graph(graph_file);
  emit_text(out, io::graph_to_dot(gf.graph));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattice and representation toolkit"};
  app.require_subcommand(1);
  caps limits = caps::from_env();

  std::string in_file, out_file, prefix, family = "chain", variant = "B";
  std::string lattice_file, algebra_file, ideal, branch;
  std::optional<std::string> opt_out, structure_file, opt_algebra, shift,
      lattice_out, structure_out;
  int param = 1, stages = 1, levels = 1;
  std::optional<int> seed, depth, demo_stages;
  int max_vertices = limits.max_vertices;

  auto* check = app.add_subcommand("lattice-check", "run the axiom suite on a file");
  check->add_option("file", in_file, "usl/lattice JSON")->required();
  check->add_option("--out", opt_out, "write the report here");

  auto* make = app.add_subcommand("lattice-make", "emit a standard lattice");
  make->add_option("--family", family, "chain|boolean|mn|n5")->required();
  make->add_option("--param", param, "size parameter");
  make->add_option("--out", out_file, "output lattice file")->required();

  auto* dualc = app.add_subcommand("lattice-dual", "order-reversed lattice");
  dualc->add_option("--lattice", lattice_file, "input lattice")->required();
  dualc->add_option("--out", out_file, "output lattice file")->required();

  auto* adjoint = app.add_subcommand("adjoint", "Galois adjoint of a hom");
  adjoint->add_option("--hom", in_file, "hom JSON")->required();
  adjoint->add_option("--out-prefix", prefix, "prefix for the emitted files")
      ->required();

  auto* quot = app.add_subcommand("quotient", "quotient by an ideal");
  quot->add_option("--lattice", lattice_file, "input usl")->required();
  quot->add_option("--ideal", ideal, "comma-separated ideal members")->required();
  quot->add_option("--out-prefix", prefix, "prefix for the emitted files")
      ->required();

  auto* present = app.add_subcommand("present", "quotient of a presentation");
  present->add_option("--presentation", in_file, "presentation JSON")->required();
  present->add_option("--out", out_file, "output usl file")->required();

  auto* cong = app.add_subcommand("congruence", "congruence lattice of an algebra");
  cong->add_option("--algebra", algebra_file, "algebra JSON")->required();
  cong->add_option("--out", opt_out, "report file");
  cong->add_option("--lattice-out", lattice_out, "emit the lattice");
  cong->add_option("--structure-out", structure_out, "emit the relation family");

  auto* clfa = app.add_subcommand(
      "clfa", "is the lattice the algebra's congruence lattice?");
  clfa->add_option("--lattice", lattice_file, "candidate lattice")->required();
  clfa->add_option("--algebra", algebra_file, "algebra JSON")->required();

  auto* pbuild = app.add_subcommand("pudlak-build", "staged colored graph of a lattice");
  pbuild->add_option("--lattice", lattice_file, "lattice JSON")->required();
  pbuild->add_option("--stages", stages, "stages to build")->required();
  pbuild->add_option("--seed-color", seed, "seed color (default: top)");
  pbuild->add_option("--rule-variant", variant, "A|B (default B)");
  pbuild->add_option("--max-vertices", max_vertices, "vertex cap");
  pbuild->add_option("--out", out_file, "output graph file")->required();

  auto* pverify = app.add_subcommand("pudlak-verify", "verify a staged graph");
  pverify->add_option("--graph", in_file, "graph JSON")->required();
  pverify->add_option("--depth", depth, "stage bound (default: all)");
  pverify->add_option("--rule-variant", variant, "A|B tag for the report");
  pverify->add_option("--out", opt_out, "write the report here");

  auto* homog = app.add_subcommand(
      "homogeneity", "chain-transfer property of a relation family");
  homog->add_option("--structure", structure_file, "relation family JSON");
  homog->add_option("--algebra", opt_algebra, "use the algebra's congruence family");
  homog->add_option("--out", opt_out, "report file");

  auto* tree = app.add_subcommand("tree-demo", "branch build over a dualized chain");
  tree->add_option("--lattice", lattice_file, "logical lattice JSON")->required();
  tree->add_option("--levels", levels, "branch length")->required();
  tree->add_option("--stages", demo_stages, "stages to build (default: levels)");
  tree->add_option("--branch", branch, "comma-separated choices");
  tree->add_option("--shift", shift, "explicit shift values m0,m1,...");
  tree->add_option("--seed-color", seed, "seed color in the dual");
  tree->add_option("--max-vertices", max_vertices, "vertex cap");
  tree->add_option("--rule-variant", variant, "A|B (default B)");
  tree->add_option("--out", out_file, "trace file")->required();

  auto* render = app.add_subcommand("render-dot", "DOT text for a graph file");
  render->add_option("--graph", in_file, "graph JSON")->required();
  render->add_option("--out", opt_out, "write DOT here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*check) return cmd_lattice_check(in_file, opt_out);
    if (*make) return cmd_lattice_make(family, param, out_file);
    if (*dualc) return cmd_lattice_dual(lattice_file, out_file);
    if (*adjoint) return cmd_adjoint(in_file, prefix);
    if (*quot) return cmd_quotient(lattice_file, ideal, prefix);
    if (*present) return cmd_present(in_file, out_file);
    if (*cong)
      return cmd_congruence(algebra_file, opt_out, lattice_out, structure_out,
                            limits);
    if (*clfa) return cmd_clfa(lattice_file, algebra_file, limits);
    if (*pbuild)
      return cmd_pudlak_build(lattice_file, stages, seed, variant, max_vertices,
                              out_file);
    if (*pverify) return cmd_pudlak_verify(in_file, depth, variant, opt_out);
    if (*homog) return cmd_homogeneity(structure_file, opt_algebra, opt_out, limits);
    if (*tree)
      return cmd_tree_demo(lattice_file, levels, demo_stages, branch, shift,
                           seed, max_vertices, variant, out_file);
    if (*render) return cmd_render_dot(in_file, opt_out);
  } catch (const format_error& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const size_error& e) {
    std::cerr << "size cap error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
