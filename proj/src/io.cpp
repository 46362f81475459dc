#include "latrep/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "latrep/errors.hpp"

namespace latrep::io {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw format_error("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw format_error("cannot write file: " + tmp.string());
    out << content;
    if (!out.flush()) throw format_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw format_error("cannot rename into place: " + path.string());
  }
}

json parse(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw format_error("invalid JSON in " + what);
  return j;
}

json load_json(const fs::path& path) {
  return parse(read_file(path), path.string());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void save_json(const fs::path& path, const json& j) {
  write_file_atomic(path, dump(j));
}

namespace {

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw format_error(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

op_table table_from_json(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw format_error(std::string("missing table field \"") + key + "\"");
  op_table t;
  for (const auto& row : j[key]) {
    if (!row.is_array()) throw format_error(std::string(key) + " row not an array");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw format_error(std::string(key) + " entry not an integer");
      r.push_back(v.get<int>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

fs::path resolve(const fs::path& referrer, const std::string& ref) {
  fs::path p(ref);
  if (p.is_absolute()) return p;
  return referrer.parent_path() / p;
}

}  // namespace

json usl_to_json(const finite_usl& s) {
  json j;
  j["n"] = s.n;
  j["join"] = s.join;
  j["unit"] = s.unit;
  j["bound"] = s.bound ? json(*s.bound) : json(nullptr);
  return j;
}

json lattice_to_json(const finite_lattice& l) {
  json j = usl_to_json(l);
  j["meet"] = l.meet;
  return j;
}

finite_usl usl_from_json(const json& j) {
  finite_usl s;
  s.n = require_int(j, "n");
  s.join = table_from_json(j, "join");
  s.unit = require_int(j, "unit");
  if (j.contains("bound") && !j["bound"].is_null())
    s.bound = j["bound"].get<int>();
  validate_shape(s);
  return s;
}

finite_lattice lattice_from_json(const json& j) {
  finite_usl s = usl_from_json(j);
  if (j.contains("meet") && !j["meet"].is_null()) {
    finite_lattice l;
    static_cast<finite_usl&>(l) = s;
    l.meet = table_from_json(j, "meet");
    validate_shape(l);
    if (!l.bound) l.bound = l.top();
    return l;
  }
  return as_lattice(s);
}

finite_usl load_usl(const fs::path& path) { return usl_from_json(load_json(path)); }

finite_lattice load_lattice(const fs::path& path) {
  return lattice_from_json(load_json(path));
}

usl_hom load_hom(const fs::path& path) {
  json j = load_json(path);
  if (!j.contains("source") || !j.contains("target") || !j.contains("map"))
    throw format_error("hom file needs source, target and map");
  usl_hom h;
  h.source = load_usl(resolve(path, j["source"].get<std::string>()));
  h.target = load_usl(resolve(path, j["target"].get<std::string>()));
  h.map = j["map"].get<std::vector<int>>();
  h.kind = hom_kind::usl;
  if (j.contains("kind")) {
    std::string k = j["kind"].get<std::string>();
    if (k == "busl")
      h.kind = hom_kind::busl;
    else if (k != "usl")
      throw format_error("hom kind must be \"usl\" or \"busl\"");
  }
  return h;
}

json hom_to_json(const usl_hom& h, const std::string& source_path,
                 const std::string& target_path) {
  json j;
  j["source"] = source_path;
  j["target"] = target_path;
  j["map"] = h.map;
  j["kind"] = h.kind == hom_kind::busl ? "busl" : "usl";
  return j;
}

namespace {

void flatten_table(const json& j, int depth, int n, std::vector<int>& out) {
  if (depth == 0) {
    if (!j.is_number_integer())
      throw format_error("operation table entry not an integer");
    out.push_back(j.get<int>());
    return;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw format_error("operation table has wrong shape");
  for (const auto& sub : j) flatten_table(sub, depth - 1, n, out);
}

json nest_table(const std::vector<int>& flat, int depth, int n, size_t& pos) {
  if (depth == 0) return flat[pos++];
  json arr = json::array();
  for (int i = 0; i < n; ++i) arr.push_back(nest_table(flat, depth - 1, n, pos));
  return arr;
}

}  // namespace

json algebra_to_json(const finite_algebra& a) {
  json j;
  j["n"] = a.n;
  j["ops"] = json::array();
  for (const auto& f : a.ops) {
    size_t pos = 0;
    json op;
    op["arity"] = f.arity;
    op["table"] = nest_table(f.table, f.arity, a.n, pos);
    j["ops"].push_back(op);
  }
  return j;
}

finite_algebra algebra_from_json(const json& j) {
  finite_algebra a;
  a.n = require_int(j, "n");
  if (!j.contains("ops") || !j["ops"].is_array())
    throw format_error("algebra file needs an ops array");
  for (const auto& op : j["ops"]) {
    operation f;
    f.arity = require_int(op, "arity");
    if (f.arity < 0) throw format_error("negative arity");
    if (!op.contains("table")) throw format_error("operation needs a table");
    flatten_table(op["table"], f.arity, a.n, f.table);
    a.ops.push_back(std::move(f));
  }
  validate_shape(a);
  return a;
}

finite_algebra load_algebra(const fs::path& path) {
  return algebra_from_json(load_json(path));
}

json presentation_to_json(const presented_usl& p) {
  json j;
  j["m"] = p.m;
  json pre = json::array();
  for (const auto& row : p.preorder) {
    json r = json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    pre.push_back(r);
  }
  j["preorder"] = pre;
  j["join"] = p.joinop;
  return j;
}

presented_usl presentation_from_json(const json& j) {
  presented_usl p;
  p.m = require_int(j, "m");
  op_table pre = table_from_json(j, "preorder");
  for (const auto& row : pre) {
    std::vector<bool> r;
    for (int v : row) {
      if (v != 0 && v != 1) throw format_error("preorder entries must be 0 or 1");
      r.push_back(v == 1);
    }
    p.preorder.push_back(r);
  }
  p.joinop = table_from_json(j, "join");
  validate(p);
  return p;
}

presented_usl load_presentation(const fs::path& path) {
  return presentation_from_json(load_json(path));
}

json graph_to_json(const colored_graph& g, const std::string& lattice_path) {
  json j;
  j["lattice"] = lattice_path;
  j["vertices"] = json::array();
  for (int x = 0; x < g.vertex_count(); ++x)
    j["vertices"].push_back({{"id", x}, {"stage", g.vertex_stage[x]}});
  j["edges"] = json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({e.u, e.v, e.color});
  return j;
}

graph_file load_graph(const fs::path& path) {
  json j = load_json(path);
  graph_file gf;
  if (!j.contains("lattice"))
    throw format_error("graph file needs a lattice path");
  gf.lattice_path = j["lattice"].get<std::string>();
  gf.lattice = load_lattice(resolve(path, gf.lattice_path));
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw format_error("graph file needs a vertices array");
  gf.graph.lattice_n = gf.lattice.n;
  int expect = 0;
  for (const auto& v : j["vertices"]) {
    if (require_int(v, "id") != expect++)
      throw format_error("vertex ids must be 0..V-1 in order");
    gf.graph.vertex_stage.push_back(require_int(v, "stage"));
  }
  if (!j.contains("edges") || !j["edges"].is_array())
    throw format_error("graph file needs an edges array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw format_error("edge must be [u, v, color]");
    gf.graph.edges.push_back(
        {e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  }
  validate(gf.graph, gf.lattice);
  return gf;
}

json partition_to_json(const partition& p) {
  json j = json::array();
  for (const auto& b : p.blocks()) j.push_back(b);
  return j;
}

partition partition_from_json(const json& j, int n) {
  if (!j.is_array()) throw format_error("partition must be an array of blocks");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j) {
    if (!b.is_array()) throw format_error("partition block must be an array");
    blocks.push_back(b.get<std::vector<int>>());
  }
  return partition::from_blocks(n, blocks);
}

json structure_to_json(const rel_structure& s, const std::string& lattice_path) {
  json j;
  j["n"] = s.n;
  j["lattice"] = lattice_path.empty() ? json(nullptr) : json(lattice_path);
  json rels;
  for (size_t k = 0; k < s.relations.size(); ++k)
    rels[std::to_string(k)] = partition_to_json(s.relations[k]);
  j["relations"] = rels;
  return j;
}

rel_structure structure_from_json(const json& j) {
  rel_structure s;
  s.n = require_int(j, "n");
  if (!j.contains("relations") || !j["relations"].is_object())
    throw format_error("structure file needs a relations object");
  std::vector<std::pair<int, partition>> keyed;
  for (const auto& [key, val] : j["relations"].items()) {
    int k;
    try {
      k = std::stoi(key);
    } catch (...) {
      throw format_error("relation key is not an integer: " + key);
    }
    keyed.emplace_back(k, partition_from_json(val, s.n));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [k, p] : keyed) s.relations.push_back(std::move(p));
  validate(s);
  return s;
}

rel_structure load_structure(const fs::path& path) {
  return structure_from_json(load_json(path));
}

std::string graph_to_dot(const colored_graph& g) {
  std::ostringstream out;
  out << "graph theta {\n";
  for (int x = 0; x < g.vertex_count(); ++x)
    out << "  v" << x << " [label=\"v" << x << " s" << g.vertex_stage[x]
        << "\"];\n";
  for (const auto& e : g.edges)
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.color
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace latrep::io
