#include "qwl/embedding.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "json.hpp"
#include "qwl/error.hpp"

namespace qwl {

std::string_view to_string(Routing routing) {
  switch (routing) {
    case Routing::tree_unique: return "tree-unique";
    case Routing::dimension_ordered_cylinder: return "dimension-ordered-cylinder";
  }
  return "unknown";
}

std::vector<Edge> HostPath::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < vertices.size(); ++i) out.emplace_back(vertices[i - 1], vertices[i]);
  return out;
}

EmbeddingInstance::EmbeddingInstance(QCube guest, LabeledGraph host, std::vector<Vertex> map,
                                     Routing routing, std::optional<HostKind> host_kind)
    : guest_(std::move(guest)),
      host_(std::move(host)),
      map_(std::move(map)),
      routing_(routing),
      host_kind_(host_kind) {
  const std::size_t n = guest_.graph.vertex_count();
  if (host_.vertex_count() != n) {
    throw PreconditionError("guest has " + std::to_string(n) + " vertices, host has " +
                            std::to_string(host_.vertex_count()));
  }
  if (map_.size() != n) throw PreconditionError("embedding map has the wrong size");
  std::vector<char> hit(n, 0);
  for (Vertex v : map_) {
    if (v >= n || hit[v]) throw PreconditionError("embedding map is not a bijection");
    hit[v] = 1;
  }
  if (routing_ == Routing::dimension_ordered_cylinder) {
    if (host_kind_ != HostKind::cylinder) {
      throw PreconditionError("dimension-ordered routing needs a cylinder host");
    }
    return;
  }
  if (!host_.is_tree()) throw PreconditionError("tree-unique routing needs an acyclic connected host");
  parent_.assign(n, 0);
  depth_.assign(n, kUnreachable);
  std::queue<Vertex> frontier;
  depth_[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : host_.neighbors(x)) {
      if (depth_[y] != kUnreachable) continue;
      depth_[y] = depth_[x] + 1;
      parent_[y] = x;
      frontier.push(y);
    }
  }
}

std::vector<Vertex> EmbeddingInstance::preimage(std::span<const Vertex> host_labels) const {
  std::vector<Vertex> inverse(map_.size());
  for (Vertex g = 0; g < map_.size(); ++g) inverse[map_[g]] = g;
  std::vector<Vertex> out;
  out.reserve(host_labels.size());
  for (Vertex h : host_labels) out.push_back(inverse.at(h));
  std::sort(out.begin(), out.end());
  return out;
}

EmbeddingInstance lex_embedding(const QCube& guest, const HostSpec& host) {
  std::vector<Vertex> identity(guest.graph.vertex_count());
  for (Vertex v = 0; v < identity.size(); ++v) identity[v] = v;
  const Routing routing = host.kind == HostKind::cylinder ? Routing::dimension_ordered_cylinder
                                                          : Routing::tree_unique;
  return EmbeddingInstance(guest, host.graph, std::move(identity), routing, host.kind);
}

std::int64_t wirelength_by_distance(const QCube& guest, const DistanceOracle& host,
                                    std::span<const Vertex> map) {
  std::int64_t total = 0;
  for (const Edge& e : guest.graph.edges()) {
    total += static_cast<std::int64_t>(host.distance(map[e.u], map[e.v]));
  }
  return total;
}

std::int64_t wirelength_by_distance(const EmbeddingInstance& e) {
  DistanceOracle oracle(e.host());
  return wirelength_by_distance(e.guest(), oracle, e.map());
}

HostPath route(const EmbeddingInstance& e, const Edge& guest_edge) {
  if (!e.guest().graph.has_edge(guest_edge)) {
    throw PreconditionError(to_string(guest_edge) + " is not an edge of the guest");
  }
  const Vertex from = e.image(guest_edge.u);
  const Vertex to = e.image(guest_edge.v);
  HostPath path;
  switch (e.routing_) {
    case Routing::dimension_ordered_cylinder: {
      const Vertex target_row = to % 3, target_col = to / 3;
      Vertex col = from / 3;
      path.vertices.push_back(from);
      if (from % 3 != target_row) path.vertices.push_back(3 * col + target_row);
      while (col != target_col) {
        col = col < target_col ? col + 1 : col - 1;
        path.vertices.push_back(3 * col + target_row);
      }
      return path;
    }
    case Routing::tree_unique: {
      std::vector<Vertex> up{from}, down{to};
      Vertex a = from, b = to;
      while (e.depth_[a] > e.depth_[b]) up.push_back(a = e.parent_[a]);
      while (e.depth_[b] > e.depth_[a]) down.push_back(b = e.parent_[b]);
      while (a != b) {
        up.push_back(a = e.parent_[a]);
        down.push_back(b = e.parent_[b]);
      }
      down.pop_back();  // the meeting vertex is already in `up`
      path.vertices = std::move(up);
      path.vertices.insert(path.vertices.end(), down.rbegin(), down.rend());
      return path;
    }
  }
  throw PreconditionError("unknown routing kind");
}

std::int64_t CongestionReport::at(const LabeledGraph& host, const Edge& e) const {
  const auto idx = host.edge_index(e);
  if (idx >= per_edge.size()) throw PreconditionError(to_string(e) + " is not a host edge");
  return per_edge[idx];
}

CongestionReport congestion_per_edge(const EmbeddingInstance& e) {
  CongestionReport report;
  report.per_edge.assign(e.host().edge_count(), 0);
  for (const Edge& guest_edge : e.guest().graph.edges()) {
    for (const Edge& h : route(e, guest_edge).edges()) {
      ++report.per_edge[e.host().edge_index(h)];
      ++report.wirelength;
    }
  }
  return report;
}

CongestionReport congestion_per_edge(const EmbeddingInstance& e, const CutFamily& family) {
  auto report = congestion_per_edge(e);
  for (const EdgeCut& cut : family.cuts) {
    std::int64_t sum = 0;
    for (const Edge& h : cut.edges) sum += report.at(e.host(), h);
    report.per_cut[cut.name] = sum;
  }
  return report;
}

std::string to_json(const CongestionReport& report, const LabeledGraph& host) {
  nlohmann::ordered_json doc;
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.per_edge.size(); ++i) {
    const Edge& e = host.edges()[i];
    edges.push_back({{"u", e.u}, {"v", e.v}, {"congestion", report.per_edge[i]}});
  }
  doc["edges"] = std::move(edges);
  doc["cuts"] = report.per_cut;
  doc["wirelength"] = report.wirelength;
  return doc.dump() + "\n";
}

std::string to_csv(const CongestionReport& report, const LabeledGraph& host) {
  std::ostringstream out;
  out << "host_edge_u,host_edge_v,congestion\n";
  for (std::size_t i = 0; i < report.per_edge.size(); ++i) {
    out << host.edges()[i].u << ',' << host.edges()[i].v << ',' << report.per_edge[i] << '\n';
  }
  return out.str();
}

std::int64_t congestion_lemma_value(const QCube& guest, std::span<const Vertex> guest_side) {
  std::int64_t degrees = 0;
  for (Vertex v : guest_side) degrees += static_cast<std::int64_t>(guest.graph.degree(v));
  return degrees - 2 * induced_edge_count(guest.graph, guest_side);
}

bool CutVerificationReport::passed() const {
  return partition_ok &&
         std::all_of(cuts.begin(), cuts.end(), [](const CutCheck& c) { return c.passed(); });
}

std::string CutVerificationReport::summary() const {
  std::ostringstream out;
  out << "partition: " << (partition_ok ? "ok" : "FAIL " + partition_detail) << '\n';
  for (const CutCheck& c : cuts) {
    out << c.name << ": split=" << c.splits_in_two << " intra=" << c.intra_paths_avoid
        << " crossing=" << c.crossing_paths_once << " maximum=" << c.small_side_maximum
        << " lemma=" << c.lemma_value << " routed=" << c.routed_congestion;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  return out.str();
}

CutVerificationReport verify_cut_family(const EmbeddingInstance& e, const CutFamily& family) {
  const LabeledGraph& host = e.host();
  const QCube& guest = e.guest();
  const std::size_t count = host.vertex_count();

  CutVerificationReport report;
  report.partition_ok = is_multiset_partition(host, family, &report.partition_detail);

  const auto congestion = congestion_per_edge(e);
  // side[c][guest label] = 1 when the image lies on cut c's small side.
  std::vector<std::vector<char>> side(family.cuts.size(), std::vector<char>(count, 0));
  std::vector<std::vector<std::size_t>> cuts_of_edge(host.edge_count());

  for (std::size_t c = 0; c < family.cuts.size(); ++c) {
    const EdgeCut& cut = family.cuts[c];
    CutCheck check;
    check.name = cut.name;

    std::vector<Vertex> small = cut.small_side;
    std::sort(small.begin(), small.end());
    small.erase(std::unique(small.begin(), small.end()), small.end());
    const bool proper = !small.empty() && small.size() < count && small.back() < count;

    bool edges_known = !cut.edges.empty();
    for (const Edge& h : cut.edges) {
      const auto idx = host.edge_index(h);
      if (idx == host.edge_count()) {
        edges_known = false;
        check.detail = "non-edge " + to_string(h);
        continue;
      }
      cuts_of_edge[idx].push_back(c);
      check.routed_congestion += congestion.per_edge[idx];
    }

    if (proper && edges_known) {
      const auto parts = connected_components(host, cut.edges);
      check.splits_in_two = parts.size() == 2 && (parts[0] == small || parts[1] == small);
      if (!check.splits_in_two) {
        check.detail = "removal leaves " + std::to_string(parts.size()) + " components";
      }
    } else if (!proper) {
      check.detail = "small side is empty, the whole graph, or out of range";
    }

    if (proper) {
      std::vector<Vertex> large;
      std::vector<char> in_small(count, 0);
      for (Vertex v : small) in_small[v] = 1;
      for (Vertex v = 0; v < count; ++v) {
        if (!in_small[v]) large.push_back(v);
      }
      const auto small_pre = e.preimage(small);
      const auto large_pre = e.preimage(large);
      for (Vertex g : small_pre) side[c][g] = 1;
      check.lemma_value = congestion_lemma_value(guest, small_pre);
      const auto n = guest.n;
      check.small_side_maximum =
          induced_edge_count(guest.graph, small_pre) ==
              iso_closed_form(static_cast<std::int64_t>(small.size()), n) &&
          induced_edge_count(guest.graph, large_pre) ==
              iso_closed_form(static_cast<std::int64_t>(large.size()), n);
    }
    report.cuts.push_back(std::move(check));
  }

  // Conditions on routed paths: count, per guest edge, how many cut edges of
  // each cut its path uses.
  std::vector<char> intra_ok(family.cuts.size(), 1), crossing_ok(family.cuts.size(), 1);
  std::vector<int> hits(family.cuts.size(), 0);
  for (const Edge& guest_edge : guest.graph.edges()) {
    std::fill(hits.begin(), hits.end(), 0);
    for (const Edge& h : route(e, guest_edge).edges()) {
      for (std::size_t c : cuts_of_edge[host.edge_index(h)]) ++hits[c];
    }
    for (std::size_t c = 0; c < family.cuts.size(); ++c) {
      const bool crossing = side[c][guest_edge.u] != side[c][guest_edge.v];
      if (crossing) {
        ++report.cuts[c].crossing_edges;
        if (hits[c] != 1) crossing_ok[c] = 0;
      } else if (hits[c] != 0) {
        intra_ok[c] = 0;
      }
    }
  }
  for (std::size_t c = 0; c < family.cuts.size(); ++c) {
    // Path conditions are meaningless when the cut does not split the host.
    report.cuts[c].intra_paths_avoid = intra_ok[c] && report.cuts[c].splits_in_two;
    report.cuts[c].crossing_paths_once = crossing_ok[c] && report.cuts[c].splits_in_two;
  }
  return report;
}

std::int64_t wirelength_by_cuts(const EmbeddingInstance& e, const CutFamily& family) {
  const auto report = verify_cut_family(e, family);
  if (!report.passed()) {
    throw PreconditionError("cut family failed verification:\n" + report.summary());
  }
  std::int64_t total = 0;
  for (const CutCheck& c : report.cuts) total += c.lemma_value;
  if (total % family.multiplicity != 0) {
    throw ConsistencyError("cut total " + std::to_string(total) +
                           " is not divisible by multiplicity " +
                           std::to_string(family.multiplicity));
  }
  return total / family.multiplicity;
}

}  // namespace qwl
