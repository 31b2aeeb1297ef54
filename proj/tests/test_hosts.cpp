#include <algorithm>

#include "doctest.h"
#include "qwl/error.hpp"
#include "qwl/hosts.hpp"
#include "qwl/qcube.hpp"

using namespace qwl;

namespace {

std::vector<Edge> edges_of(const LabeledGraph& g) { return {g.edges().begin(), g.edges().end()}; }

std::vector<Edge> sorted(std::vector<Edge> e) {
  std::sort(e.begin(), e.end());
  return e;
}

const EdgeCut& cut_named(const HostSpec& h, const std::string& name) {
  for (const auto& c : h.cut_family.cuts)
    if (c.name == name) return c;
  FAIL("no cut " << name);
  throw;
}

std::size_t count_prefix(const HostSpec& h, const std::string& prefix) {
  return std::count_if(h.cut_family.cuts.begin(), h.cut_family.cuts.end(),
                       [&](const EdgeCut& c) { return c.name.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST_CASE("cylinder construction and cuts") {
  const auto h = build_cylinder(2);
  CHECK(h.graph.vertex_count() == 9);
  CHECK(h.graph.edge_count() == 15);
  CHECK(h.cut_family.multiplicity == 2);
  const auto& x1 = cut_named(h, "X_1^1");
  CHECK(x1.edges == std::vector<Edge>{Edge(0, 3), Edge(1, 4), Edge(2, 5)});
  CHECK(x1.small_side == std::vector<Vertex>{0, 1, 2});
  const auto& y0 = cut_named(h, "Y_0");
  CHECK(std::count(y0.edges.begin(), y0.edges.end(), Edge(0, 1)) == 1);
  CHECK(std::count(y0.edges.begin(), y0.edges.end(), Edge(0, 2)) == 1);
  CHECK(y0.edges.size() == 6);
  CHECK(y0.small_side == std::vector<Vertex>{0, 3, 6});
  CHECK(h.graph.roles().at(4) == "row:1;col:2");

  for (int n = 2; n <= 5; ++n) {
    const auto c = build_cylinder(n);
    const auto m = pow3(n - 1);
    CHECK(c.graph.edge_count() == static_cast<std::size_t>(3 * m + 3 * (m - 1)));
    CHECK(count_prefix(c, "X_") == static_cast<std::size_t>(2 * (m - 1)));
    CHECK(count_prefix(c, "Y_") == 3);
  }
  CHECK_THROWS_AS(build_cylinder(1), DomainError);
}

TEST_CASE("caterpillar construction and cuts") {
  const auto h = build_caterpillar(2);
  CHECK(edges_of(h.graph) == sorted({{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {3, 6}, {6, 7},
                                     {6, 8}}));
  CHECK(cut_named(h, "S_1").small_side == std::vector<Vertex>{0, 1, 2});
  CHECK(h.graph.roles().at(3) == "spine");
  CHECK(h.graph.roles().at(4) == "leaf");
  for (int n = 2; n <= 4; ++n) {
    const auto c = build_caterpillar(n);
    CHECK(count_prefix(c, "T_") == static_cast<std::size_t>(2 * pow3(n - 1)));
    CHECK(count_prefix(c, "S_") == static_cast<std::size_t>(pow3(n - 1) - 1));
  }
  CHECK_THROWS_AS(build_caterpillar(1), DomainError);
}

TEST_CASE("firecracker construction and cuts") {
  const auto h = build_firecracker(2);
  CHECK(edges_of(h.graph) == sorted({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7},
                                     {7, 8}}));
  const auto q = build_qcube(3);
  const auto h3 = build_firecracker(3);
  for (const auto& cut : h3.cut_family.cuts) {
    if (cut.name.rfind("R_", 0) == 0) {
      CHECK(induced_edge_count(q.graph, cut.small_side) == 1);
    }
  }
  for (int n = 2; n <= 4; ++n) {
    const auto f = build_firecracker(n);
    const auto m = static_cast<std::size_t>(pow3(n - 1));
    CHECK(count_prefix(f, "S_") == m - 1);
    CHECK(count_prefix(f, "R_") == m);
    CHECK(count_prefix(f, "T_") == m);
  }
  CHECK(h.graph.roles().at(3) == "link-leaf");
  CHECK(h.graph.roles().at(4) == "center");
  CHECK_THROWS_AS(build_firecracker(0), DomainError);
}

TEST_CASE("banana construction and cuts") {
  const auto h = build_banana(2);
  CHECK(edges_of(h.graph) == sorted({{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                     {6, 8}}));
  CHECK(cut_named(h, "T_1").small_side == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(h.graph.roles().at(4) == "root");
  CHECK(h.graph.roles().at(6) == "center");
  for (int n = 2; n <= 4; ++n) {
    const auto b = build_banana(n);
    const auto half_up = static_cast<std::size_t>((pow3(n) + 1) / 2);
    CHECK(count_prefix(b, "S^1_") == half_up - 3);
    CHECK(count_prefix(b, "S^2_") == half_up - 3);
    CHECK(cut_named(b, "T_1").small_side.size() == static_cast<std::size_t>(pow3(n) / 2));
  }
  CHECK_THROWS_AS(build_banana(1), DomainError);
}

TEST_CASE("every host is sized 3^n, trees are trees, families partition") {
  for (HostKind kind : kAllHostKinds) {
    for (int n = 2; n <= 5; ++n) {
      const auto h = build_host(kind, n);
      CHECK(h.kind == kind);
      CHECK(h.graph.vertex_count() == static_cast<std::size_t>(pow3(n)));
      CHECK(h.graph.is_connected());
      if (kind != HostKind::cylinder) {
        CHECK(h.graph.edge_count() == static_cast<std::size_t>(pow3(n) - 1));
        CHECK(h.graph.is_tree());
        CHECK(h.cut_family.multiplicity == 1);
        CHECK(h.cut_family.cuts.size() == h.graph.edge_count());
      }
      std::string why;
      CHECK_MESSAGE(is_multiset_partition(h.graph, h.cut_family, &why), why);
    }
  }
}

TEST_CASE("every small side induces the maximum number of guest edges") {
  for (int n = 2; n <= 4; ++n) {
    const auto q = build_qcube(n);
    for (HostKind kind : kAllHostKinds) {
      const auto h = build_host(kind, n);
      for (const auto& cut : h.cut_family.cuts) {
        const auto k = static_cast<std::int64_t>(cut.small_side.size());
        INFO(to_string(kind) << " n=" << n << " " << cut.name);
        CHECK(induced_edge_count(q.graph, cut.small_side) == iso_closed_form(k, n));
      }
    }
  }
}

TEST_CASE("cylinder rows induce (n-1) 3^{n-1} guest edges") {
  for (int n = 2; n <= 5; ++n) {
    const auto q = build_qcube(n);
    for (Vertex j = 0; j < 3; ++j) {
      std::vector<Vertex> row;
      for (Vertex c = 0; c < pow3(n - 1); ++c) row.push_back(3 * c + j);
      CHECK(induced_edge_count(q.graph, row) == (n - 1) * pow3(n - 1));
    }
  }
}

TEST_CASE("preorder_labels") {
  const auto path = make_path(3);
  CHECK(preorder_labels(path, 0) == std::vector<Vertex>{0, 1, 2});

  std::vector<std::pair<Vertex, Vertex>> star_edges{{2, 0}, {2, 1}, {2, 3}};
  LabeledGraph star(4, star_edges);
  const auto star_labels = preorder_labels(star, 2);
  CHECK(star_labels[2] == 0);

  // Caterpillar on structural ids (spine 0,1,2; leaves 3..8) rooted at the
  // first spine vertex with leaves visited before the spine.
  std::vector<std::pair<Vertex, Vertex>> cat{{0, 1}, {1, 2}, {0, 3}, {0, 4},
                                             {1, 5}, {1, 6}, {2, 7}, {2, 8}};
  LabeledGraph structural(9, cat);
  const auto labels = preorder_labels(structural, 0, [](Vertex a, Vertex b) {
    const bool al = a >= 3, bl = b >= 3;
    return al != bl ? al : a < b;
  });
  CHECK(relabel(structural, labels) == build_caterpillar(2).graph);

  CHECK_THROWS_AS(preorder_labels(make_cycle(3), 0), PreconditionError);
}

TEST_CASE("host kind names") {
  for (HostKind kind : kAllHostKinds) CHECK(parse_host_kind(to_string(kind)) == kind);
  CHECK_FALSE(parse_host_kind("torus").has_value());
}
