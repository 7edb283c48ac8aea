#include "minorforge/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace minorforge {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw InputError("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object())
    malformed(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end())
    malformed(std::string("missing key '") + key + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    malformed(std::string(what) + " must be an integer");
  auto v = j.get<long long>();
  if (v < -(1LL << 31) || v >= (1LL << 31))
    malformed(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> as_int_list(const Json& j, const char* what) {
  if (!j.is_array())
    malformed(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j)
    out.push_back(as_int(e, what));
  return out;
}

Edge as_edge(const Json& j) {
  auto pair = as_int_list(j, "edge");
  if (pair.size() != 2)
    malformed("edges must be [u,v] pairs");
  return {pair[0], pair[1]};
}

Link as_link(const Json& j, const char* what) {
  auto q = as_int_list(j, what);
  if (q.size() != 4)
    malformed(std::string(what) + " entries must be [i,j,u,v]");
  return {q[0], q[1], q[2], q[3]};
}

Json edges_json(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  Json out = Json::array();
  for (auto [u, v] : edges)
    out.push_back({u, v});
  return out;
}

Json links_json(std::vector<Link> links) {
  std::sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
    return std::tie(a.i, a.j, a.u, a.v) < std::tie(b.i, b.j, b.u, b.v);
  });
  Json out = Json::array();
  for (const auto& l : links)
    out.push_back({l.i, l.j, l.u, l.v});
  return out;
}

std::string set_label(const Label& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// Node fill colors for up to 12 groups, then cycling.
constexpr std::array<const char*, 12> kPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
    "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb"};

std::string render_dot(const Graph& g, const std::vector<VertexSet>& groups,
                       const std::vector<Link>& bold, const std::map<Vertex, int>* colors) {
  std::vector<int> group(g.order(), -1);
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (Vertex v : groups[i])
      if (g.contains(v))
        group[v] = static_cast<int>(i);
  std::set<Edge> bold_edges;
  for (const auto& l : bold)
    bold_edges.insert(make_edge(l.u, l.v));

  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v << " [label=\"";
    if (g.labels())
      os << set_label((*g.labels())[v]);
    else
      os << v;
    os << "\"";
    if (group[v] >= 0) {
      os << ", style=filled, fillcolor=\"" << kPalette[group[v] % kPalette.size()] << "\"";
      if (colors) {
        auto it = colors->find(v);
        if (it != colors->end())
          os << ", shape=" << (it->second == 1 ? "circle" : "box");
      }
    }
    os << "];\n";
  }
  for (auto [u, v] : g.edges()) {
    os << "  " << u << " -- " << v;
    if (bold_edges.count({u, v}))
      os << " [style=bold, penwidth=3]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["edges"] = edges_json(g.edges());
  if (g.labels())
    j["labels"] = *g.labels();
  return j;
}

Json to_json(const Hypergraph& h) {
  Json j;
  j["m"] = h.ground();
  j["edges"] = h.hyperedges();
  return j;
}

Json to_json(const PartitionCertificate& p) {
  Json j;
  j["parts"] = p.parts;
  Json sides = Json::array();
  for (const auto& s : p.sides)
    sides.push_back({s.side_a, s.side_b});
  j["sides"] = sides;
  return j;
}

Json to_json(const OddExpansion& x) {
  Json j;
  Json trees = Json::array();
  for (const auto& t : x.trees) {
    Json tj;
    tj["vs"] = sorted_unique(t.vertices);
    tj["es"] = edges_json(t.edges);
    trees.push_back(tj);
  }
  j["trees"] = trees;
  Json colors = Json::object();
  for (auto [v, c] : x.colors)  // std::map: numeric key order
    colors[std::to_string(v)] = c;
  j["colors"] = colors;
  j["connectors"] = links_json(x.connectors);
  return j;
}

Json to_json(const MinorModel& m) {
  Json j;
  Json sets = Json::array();
  for (const auto& s : m.branch_sets)
    sets.push_back(sorted_unique(s));
  j["branch_sets"] = sets;
  j["links"] = links_json(m.links);
  return j;
}

Json to_json(const Coloring& c) { return Json(c.colors); }

Json to_json(const ZigzagWitness& w) {
  Json j;
  j["sequence"] = w.sequence;
  j["coloring"] = to_json(w.coloring);
  return j;
}

Json to_json(const DefectWitness& d) {
  Json j;
  j["u"] = d.u;
  j["x1"] = d.coloring.x1;
  j["x2"] = d.coloring.x2;
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.ok();
  j["violations"] = r.violations;
  return j;
}

Graph graph_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const auto& ej = field(j, "edges");
  if (!ej.is_array())
    malformed("'edges' must be an array");
  std::vector<Edge> edges;
  for (const auto& e : ej)
    edges.push_back(as_edge(e));
  std::optional<std::vector<Label>> labels;
  if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
    if (!it->is_array())
      malformed("'labels' must be an array");
    labels.emplace();
    for (const auto& l : *it)
      labels->push_back(as_int_list(l, "label"));
  }
  return Graph(n, std::move(edges), std::move(labels));
}

Hypergraph hypergraph_from_json(const Json& j) {
  const int m = as_int(field(j, "m"), "m");
  const auto& ej = field(j, "edges");
  if (!ej.is_array())
    malformed("'edges' must be an array");
  std::vector<Label> edges;
  for (const auto& e : ej)
    edges.push_back(as_int_list(e, "hyperedge"));
  return Hypergraph(m, std::move(edges));
}

PartitionCertificate partition_from_json(const Json& j) {
  PartitionCertificate p;
  const auto& parts = field(j, "parts");
  if (!parts.is_array())
    malformed("'parts' must be an array");
  for (const auto& part : parts)
    p.parts.push_back(as_int_list(part, "part"));
  const auto& sides = field(j, "sides");
  if (!sides.is_array())
    malformed("'sides' must be an array");
  for (const auto& s : sides) {
    if (!s.is_array() || s.size() != 2)
      malformed("each side entry must be [[A],[B]]");
    p.sides.push_back({as_int_list(s[0], "side"), as_int_list(s[1], "side")});
  }
  return p;
}

OddExpansion expansion_from_json(const Json& j) {
  OddExpansion x;
  const auto& trees = field(j, "trees");
  if (!trees.is_array())
    malformed("'trees' must be an array");
  for (const auto& t : trees) {
    Tree tree;
    tree.vertices = as_int_list(field(t, "vs"), "vs");
    const auto& es = field(t, "es");
    if (!es.is_array())
      malformed("'es' must be an array");
    for (const auto& e : es)
      tree.edges.push_back(as_edge(e));
    x.trees.push_back(std::move(tree));
  }
  const auto& colors = field(j, "colors");
  if (!colors.is_object())
    malformed("'colors' must be an object");
  for (auto& [key, value] : colors.items()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || ptr != key.data() + key.size())
      malformed("color key '" + key + "' is not a vertex id");
    x.colors[v] = as_int(value, "color");
  }
  const auto& conns = field(j, "connectors");
  if (!conns.is_array())
    malformed("'connectors' must be an array");
  for (const auto& c : conns)
    x.connectors.push_back(as_link(c, "connector"));
  return x;
}

MinorModel minor_model_from_json(const Json& j) {
  MinorModel m;
  const auto& sets = field(j, "branch_sets");
  if (!sets.is_array())
    malformed("'branch_sets' must be an array");
  for (const auto& s : sets)
    m.branch_sets.push_back(as_int_list(s, "branch set"));
  const auto& links = field(j, "links");
  if (!links.is_array())
    malformed("'links' must be an array");
  for (const auto& l : links)
    m.links.push_back(as_link(l, "link"));
  return m;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string to_dot(const Graph& g) { return render_dot(g, {}, {}, nullptr); }

std::string to_dot(const Graph& g, const OddExpansion& x) {
  std::vector<VertexSet> groups;
  for (const auto& t : x.trees)
    groups.push_back(t.vertices);
  return render_dot(g, groups, x.connectors, &x.colors);
}

std::string to_dot(const Graph& g, const MinorModel& m) {
  return render_dot(g, m.branch_sets, m.links, nullptr);
}

}  // namespace minorforge
