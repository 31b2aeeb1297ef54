#include "qwl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "json.hpp"
#include "qwl/error.hpp"

namespace qwl {

using ordered_json = nlohmann::ordered_json;

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

namespace {

std::vector<Edge> checked_edges(std::size_t vertex_count,
                                std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a >= vertex_count || b >= vertex_count) {
      throw ConstructionError("edge (" + std::to_string(a) + "," +
                              std::to_string(b) + ") has an endpoint >= " +
                              std::to_string(vertex_count));
    }
    if (a == b) {
      throw ConstructionError("self-loop (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
    }
    out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> as_pairs(std::span<const Edge> edges) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

LabeledGraph::LabeledGraph(std::size_t vertex_count,
                           std::span<const std::pair<Vertex, Vertex>> edges,
                           RoleMap roles)
    : vertex_count_(vertex_count), roles_(std::move(roles)) {
  if (vertex_count == 0) throw ConstructionError("graph needs at least one vertex");
  init(checked_edges(vertex_count, edges));
}

LabeledGraph::LabeledGraph(std::size_t vertex_count, std::span<const Edge> edges,
                           RoleMap roles)
    : LabeledGraph(vertex_count, as_pairs(edges), std::move(roles)) {}

void LabeledGraph::init(std::vector<Edge> edges) {
  for (const auto& [label, tag] : roles_) {
    if (label >= vertex_count_) {
      throw ConstructionError("role for unknown vertex " + std::to_string(label));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adjacency_.assign(vertex_count_, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool LabeledGraph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count_ || b >= vertex_count_) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::size_t LabeledGraph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

bool LabeledGraph::is_connected() const {
  return connected_components(*this).size() == 1;
}

bool LabeledGraph::is_tree() const {
  return edges_.size() + 1 == vertex_count_ && is_connected();
}

std::vector<std::uint32_t> bfs_distances_from(const LabeledGraph& g,
                                              Vertex source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

std::size_t bfs_distance(const LabeledGraph& g, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw PreconditionError("bfs_distance: label out of range");
  }
  auto d = bfs_distances_from(g, u)[v];
  if (d == kUnreachable) {
    throw UnreachableError("vertex " + std::to_string(v) +
                           " is unreachable from " + std::to_string(u));
  }
  return d;
}

DistanceOracle::DistanceOracle(const LabeledGraph& g, std::size_t cache_budget)
    : graph_(&g), n_(g.vertex_count()) {
  if (n_ > cache_budget) return;
  table_.resize(n_ * n_);
  for (Vertex s = 0; s < n_; ++s) {
    auto row = bfs_distances_from(g, s);
    std::copy(row.begin(), row.end(), table_.begin() + s * n_);
  }
}

std::size_t DistanceOracle::distance(Vertex u, Vertex v) const {
  if (table_.empty()) return bfs_distance(*graph_, u, v);
  auto d = table_[static_cast<std::size_t>(u) * n_ + v];
  if (d == kUnreachable) {
    throw UnreachableError("vertex " + std::to_string(v) +
                           " is unreachable from " + std::to_string(u));
  }
  return d;
}

LabeledGraph cartesian_product(const LabeledGraph& g, const LabeledGraph& h) {
  const auto gv = static_cast<Vertex>(g.vertex_count());
  const auto hv = static_cast<Vertex>(h.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(gv * h.edge_count() + hv * g.edge_count());
  for (Vertex a = 0; a < gv; ++a) {
    for (const Edge& e : h.edges()) edges.emplace_back(a * hv + e.u, a * hv + e.v);
  }
  for (Vertex b = 0; b < hv; ++b) {
    for (const Edge& e : g.edges()) edges.emplace_back(e.u * hv + b, e.v * hv + b);
  }
  return LabeledGraph(static_cast<std::size_t>(gv) * hv, edges);
}

std::vector<std::vector<Vertex>> connected_components(
    const LabeledGraph& g, std::span<const Edge> removed_edges) {
  std::vector<char> removed(g.edge_count(), 0);
  for (const Edge& e : removed_edges) {
    auto idx = g.edge_index(e);
    if (idx < removed.size()) removed[idx] = 1;
  }
  const std::size_t n = g.vertex_count();
  std::vector<int> component(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    component[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (component[y] >= 0) continue;
        if (!removed_edges.empty() && removed[g.edge_index(Edge(x, y))]) continue;
        component[y] = id;
        stack.push_back(y);
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::int64_t induced_edge_count(const LabeledGraph& g,
                                std::span<const Vertex> vertices) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : vertices) in.at(v) = 1;
  std::int64_t count = 0;
  for (const Edge& e : g.edges()) count += (in[e.u] && in[e.v]) ? 1 : 0;
  return count;
}

LabeledGraph relabel(const LabeledGraph& g, std::span<const Vertex> new_label) {
  if (new_label.size() != g.vertex_count()) {
    throw PreconditionError("relabel: permutation size mismatch");
  }
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : new_label) {
    if (v >= g.vertex_count() || seen[v]) {
      throw PreconditionError("relabel: not a permutation");
    }
    seen[v] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(new_label[e.u], new_label[e.v]);
  RoleMap roles;
  for (const auto& [v, tag] : g.roles()) roles.emplace(new_label[v], tag);
  return LabeledGraph(g.vertex_count(), edges, std::move(roles));
}

LabeledGraph make_cycle(std::size_t length) {
  if (length < 3) throw DomainError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < length; ++i) {
    edges.emplace_back(i, static_cast<Vertex>((i + 1) % length));
  }
  return LabeledGraph(length, edges);
}

LabeledGraph make_path(std::size_t length) {
  if (length < 1) throw DomainError("a path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < length; ++i) edges.emplace_back(i, i + 1);
  return LabeledGraph(length, edges);
}

std::string export_graph(const LabeledGraph& g, GraphFormat format) {
  if (format == GraphFormat::dot) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 0) out << "  " << v << ";\n";
    }
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
  }
  ordered_json doc;
  doc["vertex_count"] = g.vertex_count();
  auto edges = ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  auto roles = ordered_json::object();
  for (const auto& [v, tag] : g.roles()) roles[std::to_string(v)] = tag;
  doc["roles"] = std::move(roles);
  return doc.dump() + "\n";
}

namespace {

ordered_json parse_or_throw(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw ConstructionError(std::string("invalid JSON: ") + e.what());
  }
}

Vertex parse_label(const std::string& key) {
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  if (ec != std::errc() || ptr != key.data() + key.size()) {
    throw ConstructionError("role key is not a vertex label: " + key);
  }
  return v;
}

std::vector<Edge> parse_edges(const ordered_json& arr) {
  if (!arr.is_array()) throw ConstructionError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned()) {
      throw ConstructionError("edge entries must be [u, v] pairs of labels");
    }
    auto a = pair[0].get<Vertex>();
    auto b = pair[1].get<Vertex>();
    if (a == b) throw ConstructionError("self-loop " + pair.dump());
    edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

LabeledGraph import_json_edgelist(std::string_view text) {
  auto doc = parse_or_throw(text);
  if (!doc.is_object() || !doc.contains("vertex_count") ||
      !doc["vertex_count"].is_number_unsigned() || !doc.contains("edges")) {
    throw ConstructionError("expected {\"vertex_count\": N, \"edges\": [...]}");
  }
  auto n = doc["vertex_count"].get<std::size_t>();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : parse_edges(doc["edges"])) pairs.emplace_back(e.u, e.v);
  RoleMap roles;
  if (doc.contains("roles")) {
    if (!doc["roles"].is_object()) throw ConstructionError("\"roles\" must be an object");
    for (const auto& [key, tag] : doc["roles"].items()) {
      if (!tag.is_string()) throw ConstructionError("role tags must be strings");
      roles.emplace(parse_label(key), tag.get<std::string>());
    }
  }
  return LabeledGraph(n, pairs, std::move(roles));
}

std::string cut_family_to_json(const CutFamily& family) {
  ordered_json doc;
  doc["multiplicity"] = family.multiplicity;
  auto cuts = ordered_json::array();
  for (const EdgeCut& cut : family.cuts) {
    ordered_json c;
    c["name"] = cut.name;
    auto edges = ordered_json::array();
    for (const Edge& e : cut.edges) edges.push_back({e.u, e.v});
    c["edges"] = std::move(edges);
    c["small_side"] = cut.small_side;
    cuts.push_back(std::move(c));
  }
  doc["cuts"] = std::move(cuts);
  return doc.dump() + "\n";
}

CutFamily cut_family_from_json(std::string_view text) {
  auto doc = parse_or_throw(text);
  if (!doc.is_object() || !doc.contains("multiplicity") || !doc.contains("cuts") ||
      !doc["multiplicity"].is_number_integer() || !doc["cuts"].is_array()) {
    throw ConstructionError("expected {\"multiplicity\": k, \"cuts\": [...]}");
  }
  CutFamily family;
  family.multiplicity = doc["multiplicity"].get<int>();
  if (family.multiplicity < 1) throw ConstructionError("multiplicity must be positive");
  for (const auto& c : doc["cuts"]) {
    if (!c.is_object() || !c.contains("name") || !c.contains("edges") ||
        !c.contains("small_side")) {
      throw ConstructionError("cut entries need name, edges and small_side");
    }
    EdgeCut cut;
    cut.name = c["name"].get<std::string>();
    cut.edges = parse_edges(c["edges"]);
    if (cut.edges.empty()) throw ConstructionError("cut " + cut.name + " has no edges");
    cut.small_side = c["small_side"].get<std::vector<Vertex>>();
    family.cuts.push_back(std::move(cut));
  }
  return family;
}

bool is_multiset_partition(const LabeledGraph& g, const CutFamily& family,
                           std::string* why) {
  std::vector<int> times(g.edge_count(), 0);
  for (const EdgeCut& cut : family.cuts) {
    for (const Edge& e : cut.edges) {
      auto idx = g.edge_index(e);
      if (idx == g.edge_count()) {
        if (why) *why = "cut " + cut.name + " lists non-edge " + to_string(e);
        return false;
      }
      ++times[idx];
    }
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] != family.multiplicity) {
      if (why) {
        *why = "edge " + to_string(g.edges()[i]) + " covered " +
               std::to_string(times[i]) + " times, expected " +
               std::to_string(family.multiplicity);
      }
      return false;
    }
  }
  return true;
}

}  // namespace qwl
