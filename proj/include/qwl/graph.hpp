#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwl {

using Vertex = std::uint32_t;

// Undirected edge stored with u < v so that equality and ordering are
// canonical.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

using RoleMap = std::map<Vertex, std::string>;

// Immutable simple undirected graph on the dense labels 0..vertex_count-1.
class LabeledGraph {
 public:
  // Normalizes the input: endpoints sorted, duplicates dropped, edges sorted.
  // Throws ConstructionError on self-loops or out-of-range endpoints.
  LabeledGraph(std::size_t vertex_count,
               std::span<const std::pair<Vertex, Vertex>> edges,
               RoleMap roles = {});
  LabeledGraph(std::size_t vertex_count, std::span<const Edge> edges,
               RoleMap roles = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  const RoleMap& roles() const { return roles_; }

  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  // Position of `e` in edges(), or edge_count() when absent.
  std::size_t edge_index(const Edge& e) const;

  bool is_connected() const;
  bool is_tree() const;

  // Same edges and vertex count; roles are metadata and not compared.
  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  void init(std::vector<Edge> edges);

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  RoleMap roles_;
};

// Named edge cut together with the component designated as its small side.
struct EdgeCut {
  std::string name;
  std::vector<Edge> edges;
  std::vector<Vertex> small_side;
};

// Cover of the host edge multiset in which every edge appears exactly
// `multiplicity` times.
struct CutFamily {
  int multiplicity = 1;
  std::vector<EdgeCut> cuts;
};

// Length of a shortest u-v path. Throws UnreachableError when no path exists.
std::size_t bfs_distance(const LabeledGraph& g, Vertex u, Vertex v);

// Distances from `source` to every vertex; unreachable vertices hold
// kUnreachable.
inline constexpr std::uint32_t kUnreachable = 0xffffffffu;
std::vector<std::uint32_t> bfs_distances_from(const LabeledGraph& g,
                                              Vertex source);

// Distance queries with an all-pairs table for graphs at or below
// `cache_budget` vertices, plain BFS otherwise.
class DistanceOracle {
 public:
  static constexpr std::size_t kDefaultCacheBudget = 1024;

  explicit DistanceOracle(const LabeledGraph& g,
                          std::size_t cache_budget = kDefaultCacheBudget);

  std::size_t distance(Vertex u, Vertex v) const;
  bool cached() const { return !table_.empty(); }

 private:
  const LabeledGraph* graph_;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
};

// Vertex (a, b) of g x h receives label a * |V(h)| + b.
LabeledGraph cartesian_product(const LabeledGraph& g, const LabeledGraph& h);

// Components of g with `removed_edges` deleted. Each component is sorted and
// components are ordered by their smallest label.
std::vector<std::vector<Vertex>> connected_components(
    const LabeledGraph& g, std::span<const Edge> removed_edges = {});

// Number of edges of g with both endpoints in `vertices`.
std::int64_t induced_edge_count(const LabeledGraph& g,
                                std::span<const Vertex> vertices);

// Graph with vertex v renamed to new_label[v]; roles follow their vertex.
LabeledGraph relabel(const LabeledGraph& g, std::span<const Vertex> new_label);

LabeledGraph make_cycle(std::size_t length);
LabeledGraph make_path(std::size_t length);

enum class GraphFormat { dot, json_edgelist };

std::string export_graph(const LabeledGraph& g, GraphFormat format);
LabeledGraph import_json_edgelist(std::string_view text);

std::string cut_family_to_json(const CutFamily& family);
CutFamily cut_family_from_json(std::string_view text);

// Reports whether the cuts' edge multiset equals every edge of g repeated
// family.multiplicity times. On failure `why` (if given) names the first
// offending edge.
bool is_multiset_partition(const LabeledGraph& g, const CutFamily& family,
                           std::string* why = nullptr);

}  // namespace qwl
