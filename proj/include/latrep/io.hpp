#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "latrep/algebra.hpp"
#include "latrep/colored_graph.hpp"
#include "latrep/hom.hpp"
#include "latrep/homogeneity.hpp"
#include "latrep/presentation.hpp"
#include "latrep/usl.hpp"

namespace latrep::io {

using json = nlohmann::json;

// Reads a whole file; format_error on missing/unreadable.
std::string read_file(const std::filesystem::path& path);
// Write-then-rename so failures never leave partial files behind.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

json parse(const std::string& text, const std::string& what);
json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const json& j);
std::string dump(const json& j);

// { "n": int, "join": [[int]], "unit": int, "bound": int|null,
//   optional "meet": [[int]] }
json usl_to_json(const finite_usl& s);
json lattice_to_json(const finite_lattice& l);
finite_usl usl_from_json(const json& j);
// Uses the stored meet table when present, otherwise derives it.
finite_lattice lattice_from_json(const json& j);
finite_usl load_usl(const std::filesystem::path& path);
finite_lattice load_lattice(const std::filesystem::path& path);

// { "source": path, "target": path, "map": [int], "kind": "usl"|"busl" }
// Paths resolve relative to the hom file's directory.
usl_hom load_hom(const std::filesystem::path& path);
json hom_to_json(const usl_hom& h, const std::string& source_path,
                 const std::string& target_path);

// { "n": int, "ops": [ { "arity": int, "table": nested int arrays } ] }
json algebra_to_json(const finite_algebra& a);
finite_algebra algebra_from_json(const json& j);
finite_algebra load_algebra(const std::filesystem::path& path);

// { "m": int, "preorder": [[0|1]], "join": [[int]] }
json presentation_to_json(const presented_usl& p);
presented_usl presentation_from_json(const json& j);
presented_usl load_presentation(const std::filesystem::path& path);

// { "lattice": path, "vertices": [ {"id": int, "stage": int} ],
//   "edges": [ [u, v, color] ] }
struct graph_file {
  colored_graph graph;
  finite_lattice lattice;
  std::string lattice_path;
};
json graph_to_json(const colored_graph& g, const std::string& lattice_path);
graph_file load_graph(const std::filesystem::path& path);

// { "n": int, "lattice": path|null, "relations": { "<k>": [[int]] } }
json structure_to_json(const rel_structure& s, const std::string& lattice_path);
rel_structure structure_from_json(const json& j);
rel_structure load_structure(const std::filesystem::path& path);

// Deterministic DOT: vertices in id order with stage annotations, edges in
// stored order with the color as label.
std::string graph_to_dot(const colored_graph& g);

json partition_to_json(const partition& p);
partition partition_from_json(const json& j, int n);

}  // namespace latrep::io
