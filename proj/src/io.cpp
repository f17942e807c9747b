#include "rctw/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rctw/errors.hpp"

namespace rctw {

namespace {

constexpr int kMaxVertices = 1 << 16;

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_count(std::string_view tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line) + ": " + what + " '" + std::string(tok) + "' is not an integer",
                     line);
  return value;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using nlohmann::json;

json vertex_list(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError("decomposition document: " + what, 0); }

std::vector<Vertex> read_vertices(const json& j, int n, const char* field) {
  if (!j.is_array()) schema_error(std::string(field) + " must be an array");
  std::vector<Vertex> out;
  for (const auto& item : j) {
    if (!item.is_number_integer()) schema_error(std::string(field) + " holds a non-integer");
    const auto v = item.get<long long>();
    if (v < 1 || v > n) schema_error(std::string(field) + " holds vertex " + std::to_string(v) + " outside 1.." +
                                     std::to_string(n));
    out.push_back(static_cast<Vertex>(v - 1));
  }
  return out;
}

int read_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer()) schema_error(std::string("missing integer '") + field + "'");
  return j[field].get<int>();
}

std::vector<int> read_indices(const json& j, int count, const char* field) {
  if (!j.is_array()) schema_error(std::string(field) + " must be an array");
  std::vector<int> out;
  for (const auto& item : j) {
    if (!item.is_number_integer()) schema_error(std::string(field) + " holds a non-integer");
    const auto v = item.get<long long>();
    if (v < 0 || v >= count) schema_error(std::string(field) + " refers to missing node " + std::to_string(v));
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

Graph read_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  long long declared = 0;
  int seen_edges = 0;
  std::vector<Edge> edges;
  std::set<Edge> distinct;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    const auto where = "line " + std::to_string(lineno) + ": ";
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(where + "second problem line", lineno);
      if (tok.size() != 4 || tok[1] != "edge") throw ParseError(where + "expected 'p edge <n> <m>'", lineno);
      const long long nv = parse_count(tok[2], lineno, "vertex count");
      declared = parse_count(tok[3], lineno, "edge count");
      if (nv < 0 || nv > kMaxVertices)
        throw ParseError(where + "vertex count must lie in 0.." + std::to_string(kMaxVertices), lineno);
      if (declared < 0) throw ParseError(where + "negative edge count", lineno);
      n = static_cast<int>(nv);
    } else if (tok[0] == "e") {
      if (n < 0) throw ParseError(where + "edge before the problem line", lineno);
      if (tok.size() != 3) throw ParseError(where + "expected 'e <u> <v>'", lineno);
      const long long u = parse_count(tok[1], lineno, "endpoint");
      const long long v = parse_count(tok[2], lineno, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(where + "endpoint outside 1.." + std::to_string(n), lineno);
      if (u == v) throw ParseError(where + "self-loop at vertex " + std::to_string(u), lineno);
      const Edge e{static_cast<Vertex>(std::min(u, v) - 1), static_cast<Vertex>(std::max(u, v) - 1)};
      if (!distinct.insert(e).second) throw ParseError(where + "repeated edge", lineno);
      edges.push_back(e);
      ++seen_edges;
    } else {
      throw ParseError(where + "unrecognized line '" + std::string(tok[0]) + "'", lineno);
    }
  }
  if (n < 0) throw ParseError("missing 'p edge' problem line", 0);
  if (seen_edges != declared)
    throw ParseError("problem line declares " + std::to_string(declared) + " edges but " +
                         std::to_string(seen_edges) + " were listed",
                     0);
  return Graph::from_edges(n, edges);
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'", 0);
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Fingerprint fingerprint(const Graph& g) {
  Fingerprint fp;
  fp.n = g.num_vertices();
  fp.m = g.num_edges();
  for (auto [u, v] : g.edges())
    fp.edge_hash += splitmix64((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
  return fp;
}

std::string write_document(const Graph& g, const NiceHTreeDecomposition& d) {
  const auto fp = fingerprint(g);
  char hash[19];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fp.edge_hash));
  json doc;
  doc["format"] = "rctw-decomposition";
  doc["version"] = kDocumentVersion;
  doc["graph"] = {{"n", fp.n}, {"m", fp.m}, {"edge_hash", hash}};
  doc["c"] = d.c;
  doc["width"] = d.width;
  doc["modulator"] = vertex_list(d.modulator.to_vector());
  doc["components"] = json::array();
  for (const auto& comp : d.components) {
    json nodes = json::array();
    for (const auto& node : comp.rd.nodes) {
      if (node.children.empty()) {
        nodes.push_back({{"vertex", comp.vertices.at(node.vertex) + 1}});
      } else {
        nodes.push_back({{"children", node.children}});
      }
    }
    doc["components"].push_back(
        {{"vertices", vertex_list(comp.vertices)}, {"rank_decomposition", {{"width", comp.rd.width}, {"nodes", nodes}}}});
  }
  doc["tree"] = json::array();
  for (int t = 0; t < d.num_nodes(); ++t) {
    const auto& node = d.nodes[t];
    json j = {{"id", t}, {"kind", std::string(to_string(node.kind))}, {"bag", vertex_list(node.bag)},
              {"children", node.children}};
    if (node.kind == NodeKind::Introduce || node.kind == NodeKind::Forget) j["vertex"] = node.vertex + 1;
    if (node.kind == NodeKind::BoundaryLeaf) j["component"] = node.component;
    doc["tree"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

DecompositionDocument read_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("decomposition document is not valid JSON: ") + e.what(), 0);
  }
  try {
    if (!doc.is_object()) schema_error("top level must be an object");
    if (doc.value("format", "") != "rctw-decomposition") schema_error("unknown format tag");
    if (read_int(doc, "version") != kDocumentVersion)
      schema_error("unsupported version " + std::to_string(read_int(doc, "version")));
    DecompositionDocument out;
    const auto& graph = doc.at("graph");
    out.graph.n = read_int(graph, "n");
    out.graph.m = read_int(graph, "m");
    if (out.graph.n < 0 || out.graph.n > kMaxVertices) schema_error("vertex count out of range");
    const std::string hash = graph.at("edge_hash").get<std::string>();
    std::uint64_t h = 0;
    auto [ptr, ec] = std::from_chars(hash.data(), hash.data() + hash.size(), h, 16);
    if (ec != std::errc() || ptr != hash.data() + hash.size()) schema_error("edge_hash is not hexadecimal");
    out.graph.edge_hash = h;
    const int n = out.graph.n;

    auto& d = out.decomposition;
    d.c = read_int(doc, "c");
    d.width = read_int(doc, "width");
    d.modulator = VertexSet::of(n, read_vertices(doc.at("modulator"), n, "modulator"));
    for (const auto& jc : doc.at("components")) {
      ModulatorComponent comp;
      comp.vertices = read_vertices(jc.at("vertices"), n, "component vertices");
      const auto& jr = jc.at("rank_decomposition");
      comp.rd.width = read_int(jr, "width");
      const auto& nodes = jr.at("nodes");
      const int count = static_cast<int>(nodes.size());
      for (const auto& jn : nodes) {
        RankDecomposition::Node node;
        if (jn.contains("vertex")) {
          const auto v = read_vertices(json::array({jn["vertex"]}), n, "leaf vertex")[0];
          auto it = std::find(comp.vertices.begin(), comp.vertices.end(), v);
          if (it == comp.vertices.end()) schema_error("leaf vertex " + std::to_string(v + 1) + " is not in its component");
          node.vertex = static_cast<Vertex>(it - comp.vertices.begin());
        } else {
          node.children = read_indices(jn.at("children"), count, "rank decomposition children");
        }
        comp.rd.nodes.push_back(std::move(node));
      }
      d.components.push_back(std::move(comp));
    }
    const auto& tree = doc.at("tree");
    const int count = static_cast<int>(tree.size());
    for (int t = 0; t < count; ++t) {
      const auto& jn = tree[t];
      if (read_int(jn, "id") != t) schema_error("tree node ids must be 0, 1, 2, ... in order");
      NiceNode node;
      const std::string kind = jn.at("kind").get<std::string>();
      if (!parse_node_kind(kind, node.kind)) schema_error("unknown node kind '" + kind + "'");
      node.bag = read_vertices(jn.at("bag"), n, "bag");
      node.children = read_indices(jn.at("children"), count, "children");
      if (node.kind == NodeKind::Introduce || node.kind == NodeKind::Forget)
        node.vertex = read_vertices(json::array({jn.at("vertex")}), n, "vertex")[0];
      if (node.kind == NodeKind::BoundaryLeaf) {
        node.component = read_int(jn, "component");
        if (node.component < 0 || node.component >= static_cast<int>(d.components.size()))
          schema_error("boundary leaf refers to missing component " + std::to_string(node.component));
      }
      d.nodes.push_back(std::move(node));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("decomposition document: ") + e.what(), 0);
  }
}

DecompositionDocument read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open decomposition file '" + path + "'", 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_document(buffer.str());
}

void require_fingerprint(const Graph& g, const DecompositionDocument& doc) {
  if (!(fingerprint(g) == doc.graph))
    throw FingerprintMismatch("decomposition was written for a different graph (n=" + std::to_string(doc.graph.n) +
                              ", m=" + std::to_string(doc.graph.m) + ")");
}

}  // namespace rctw
