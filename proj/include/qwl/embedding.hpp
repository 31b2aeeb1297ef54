#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwl/graph.hpp"
#include "qwl/hosts.hpp"
#include "qwl/qcube.hpp"

namespace qwl {

enum class Routing {
  // The unique path in an acyclic host.
  tree_unique,
  // Cylinder labels (3 * column + row): one column step into the target
  // row first, then a walk along that row.
  dimension_ordered_cylinder,
};

std::string_view to_string(Routing routing);

struct HostPath {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  std::vector<Edge> edges() const;
};

// Bijection from guest labels to host labels plus the rule used to route
// every guest edge through the host.
class EmbeddingInstance {
 public:
  // Throws PreconditionError when `map` is not a bijection onto the host
  // labels or the routing does not fit the host.
  EmbeddingInstance(QCube guest, LabeledGraph host, std::vector<Vertex> map,
                    Routing routing, std::optional<HostKind> host_kind = std::nullopt);

  const QCube& guest() const { return guest_; }
  const LabeledGraph& host() const { return host_; }
  const std::vector<Vertex>& map() const { return map_; }
  Routing routing() const { return routing_; }
  std::optional<HostKind> host_kind() const { return host_kind_; }

  Vertex image(Vertex guest_label) const { return map_[guest_label]; }
  // Guest labels whose images lie in `host_labels`.
  std::vector<Vertex> preimage(std::span<const Vertex> host_labels) const;

 private:
  friend HostPath route(const EmbeddingInstance&, const Edge&);

  QCube guest_;
  LabeledGraph host_;
  std::vector<Vertex> map_;
  Routing routing_;
  std::optional<HostKind> host_kind_;
  // Tree routing: BFS parent and depth from vertex 0.
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> depth_;
};

// Identity map onto a host built by the hosts module, routed per host kind.
EmbeddingInstance lex_embedding(const QCube& guest, const HostSpec& host);

// Sum over guest edges of the host distance between their images.
std::int64_t wirelength_by_distance(const EmbeddingInstance& e);
std::int64_t wirelength_by_distance(const QCube& guest, const DistanceOracle& host,
                                    std::span<const Vertex> map);

// Host path carrying `guest_edge`. Throws PreconditionError if it is not a
// guest edge.
HostPath route(const EmbeddingInstance& e, const Edge& guest_edge);

struct CongestionReport {
  std::vector<std::int64_t> per_edge;          // aligned with host().edges()
  std::map<std::string, std::int64_t> per_cut;  // filled when a family is given
  std::int64_t wirelength = 0;

  std::int64_t at(const LabeledGraph& host, const Edge& e) const;
};

CongestionReport congestion_per_edge(const EmbeddingInstance& e);
// Also sums per_edge over each cut of `family`.
CongestionReport congestion_per_edge(const EmbeddingInstance& e, const CutFamily& family);

std::string to_json(const CongestionReport& report, const LabeledGraph& host);
// CSV with header "host_edge_u,host_edge_v,congestion".
std::string to_csv(const CongestionReport& report, const LabeledGraph& host);

// sum of guest degrees over `guest_side` minus twice its induced edge count.
std::int64_t congestion_lemma_value(const QCube& guest, std::span<const Vertex> guest_side);

struct CutCheck {
  std::string name;
  bool splits_in_two = false;      // removal leaves exactly small_side and its complement
  bool intra_paths_avoid = false;  // guest edges inside one side never use the cut
  bool crossing_paths_once = false;  // crossing guest edges use exactly one cut edge
  bool small_side_maximum = false;   // both preimages induce I(|side|) edges
  std::int64_t lemma_value = 0;      // congestion_lemma_value on the small side preimage
  std::int64_t routed_congestion = 0;  // sum of per-edge congestion over the cut
  std::int64_t crossing_edges = 0;     // guest edges with one end on each side
  std::string detail;

  bool passed() const {
    return splits_in_two && intra_paths_avoid && crossing_paths_once && small_side_maximum;
  }
};

struct CutVerificationReport {
  bool partition_ok = false;
  std::string partition_detail;
  std::vector<CutCheck> cuts;

  bool passed() const;
  std::string summary() const;
};

CutVerificationReport verify_cut_family(const EmbeddingInstance& e, const CutFamily& family);

// (1/k) * sum of congestion_lemma_value over the cuts. Refuses with
// PreconditionError unless verify_cut_family passes; throws ConsistencyError
// if the sum is not divisible by the multiplicity.
std::int64_t wirelength_by_cuts(const EmbeddingInstance& e, const CutFamily& family);

}  // namespace qwl
