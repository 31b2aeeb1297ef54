#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qwl/error.hpp"
#include "qwl/graph.hpp"
#include "qwl/hosts.hpp"
#include "qwl/qcube.hpp"

using namespace qwl;

namespace {

LabeledGraph triangle() {
  std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {1, 2}, {0, 2}};
  return LabeledGraph(3, e);
}

std::size_t degree_sum(const LabeledGraph& g) {
  std::size_t s = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) s += g.degree(v);
  return s;
}

}  // namespace

TEST_CASE("build_graph normalizes and validates") {
  auto c3 = triangle();
  CHECK(c3.vertex_count() == 3);
  CHECK(c3.edge_count() == 3);

  LabeledGraph single(1, std::span<const Edge>{});
  CHECK(single.edge_count() == 0);
  CHECK(single.is_connected());

  std::vector<std::pair<Vertex, Vertex>> messy{{2, 1}, {1, 2}, {0, 1}};
  LabeledGraph g(3, messy);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge(0, 1));
  CHECK(g.edges()[1] == Edge(1, 2));

  std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
  CHECK_THROWS_WITH_AS(LabeledGraph(3, loop), "self-loop (1,1)", ConstructionError);
  std::vector<std::pair<Vertex, Vertex>> out_of_range{{0, 3}};
  CHECK_THROWS_AS(LabeledGraph(3, out_of_range), ConstructionError);
}

TEST_CASE("Q_2^3 edge list from digit adjacency is 4-regular with 18 edges") {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < 9; ++a)
    for (Vertex b = a + 1; b < 9; ++b)
      if (testing::ternary_adjacent(2, a, b)) pairs.emplace_back(a, b);
  LabeledGraph g(9, pairs);
  CHECK(g.edge_count() == 18);
  for (Vertex v = 0; v < 9; ++v) CHECK(g.degree(v) == 4);
}

TEST_CASE("bfs_distance") {
  CHECK(bfs_distance(triangle(), 0, 2) == 1);
  CHECK(bfs_distance(make_path(3), 0, 2) == 2);
  CHECK(bfs_distance(make_path(3), 1, 1) == 0);
  CHECK(bfs_distance(build_banana(2).graph, 1, 7) == 6);

  std::vector<std::pair<Vertex, Vertex>> one{{0, 1}};
  LabeledGraph split(3, one);
  CHECK_THROWS_AS(bfs_distance(split, 0, 2), UnreachableError);
  DistanceOracle cached(split);
  CHECK(cached.cached());
  CHECK_THROWS_AS(cached.distance(2, 0), UnreachableError);
}

TEST_CASE("distances agree with Floyd-Warshall and satisfy the triangle inequality") {
  for (HostKind kind : kAllHostKinds) {
    const auto g = build_host(kind, 3).graph;
    const auto reference = testing::floyd_warshall(g);
    DistanceOracle cached(g);
    DistanceOracle uncached(g, 0);
    CHECK_FALSE(uncached.cached());
    std::mt19937 rng(17);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.vertex_count() - 1));
    for (int trial = 0; trial < 300; ++trial) {
      const Vertex a = pick(rng), b = pick(rng), c = pick(rng);
      REQUIRE(cached.distance(a, b) == static_cast<std::size_t>(reference[a][b]));
      REQUIRE(uncached.distance(a, b) == cached.distance(a, b));
      CHECK(cached.distance(a, b) == cached.distance(b, a));
      CHECK(cached.distance(a, c) <= cached.distance(a, b) + cached.distance(b, c));
    }
  }
}

TEST_CASE("cartesian_product") {
  const auto c3 = make_cycle(3);
  const auto torus = cartesian_product(c3, c3);
  CHECK(torus.vertex_count() == 9);
  CHECK(torus.edge_count() == 18);
  for (Vertex v = 0; v < 9; ++v) CHECK(torus.degree(v) == 4);

  CHECK(cartesian_product(c3, LabeledGraph(1, std::span<const Edge>{})) == c3);

  const auto cube = cartesian_product(c3, torus);
  CHECK(cube.vertex_count() == 27);
  CHECK(cube.edge_count() == 81);
  CHECK(cartesian_product(torus, c3) == cube);

  // |V| and |E| rule on unequal factors.
  const auto p4 = make_path(4);
  const auto prod = cartesian_product(p4, torus);
  CHECK(prod.vertex_count() == 4 * 9);
  CHECK(prod.edge_count() == 4 * 18 + 9 * 3);
  CHECK(degree_sum(prod) == 2 * prod.edge_count());
}

TEST_CASE("connected_components") {
  const auto cat = build_caterpillar(2).graph;
  const std::vector<Edge> spine{Edge(0, 3)};
  CHECK(connected_components(cat, spine).size() == 2);
  CHECK(connected_components(cat).size() == 1);

  const auto cyl = build_cylinder(2).graph;
  const std::vector<Edge> rows{Edge(3, 6), Edge(4, 7), Edge(5, 8)};
  const auto parts = connected_components(cyl, rows);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 6);
  CHECK(parts[1].size() == 3);

  // Always a partition of the labels.
  std::set<Vertex> seen;
  std::size_t total = 0;
  for (const auto& p : connected_components(cyl, std::vector<Edge>{Edge(0, 1), Edge(0, 2)})) {
    total += p.size();
    seen.insert(p.begin(), p.end());
  }
  CHECK(total == 9);
  CHECK(seen.size() == 9);
}

TEST_CASE("degree sum equals twice the edge count for every built graph") {
  for (int n = 1; n <= 4; ++n) {
    const auto q = build_qcube(n).graph;
    CHECK(degree_sum(q) == 2 * q.edge_count());
  }
  for (HostKind kind : kAllHostKinds) {
    for (int n = 2; n <= 4; ++n) {
      const auto h = build_host(kind, n).graph;
      CHECK(degree_sum(h) == 2 * h.edge_count());
    }
  }
}

TEST_CASE("export formats") {
  const auto dot = export_graph(triangle(), GraphFormat::dot);
  CHECK(dot == "graph G {\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");

  const auto json = export_graph(build_qcube(2).graph, GraphFormat::json_edgelist);
  CHECK(json.rfind("{\"vertex_count\":9,\"edges\":[[0,1],[0,2],[0,3],", 0) == 0);
  const auto back = import_json_edgelist(json);
  CHECK(back == build_qcube(2).graph);
  CHECK(back.edge_count() == 18);
  CHECK(back.roles().at(5) == "digit-tuple:12");
  CHECK(export_graph(back, GraphFormat::json_edgelist) == json);
}

TEST_CASE("json re-export is byte-stable for random graphs") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Vertex n = 1 + rng() % 20;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < 40 && n > 1; ++i) {
      const Vertex a = rng() % n, b = rng() % n;
      if (a != b) pairs.emplace_back(a, b);
    }
    RoleMap roles;
    if (n > 3) roles[3] = "tag" + std::to_string(trial);
    LabeledGraph g(n, pairs, roles);
    const auto text = export_graph(g, GraphFormat::json_edgelist);
    const auto again = import_json_edgelist(text);
    CHECK(again == g);
    CHECK(again.roles() == g.roles());
    CHECK(export_graph(again, GraphFormat::json_edgelist) == text);
  }
}

TEST_CASE("import rejects malformed input") {
  CHECK_THROWS_AS(import_json_edgelist("{not json"), ConstructionError);
  CHECK_THROWS_AS(import_json_edgelist("{\"vertex_count\":3}"), ConstructionError);
  CHECK_THROWS_AS(import_json_edgelist("{\"vertex_count\":3,\"edges\":[[0,5]]}"),
                  ConstructionError);
  CHECK_THROWS_AS(import_json_edgelist("{\"vertex_count\":3,\"edges\":[[1,1]]}"),
                  ConstructionError);
  CHECK_THROWS_AS(import_json_edgelist("{\"vertex_count\":3,\"edges\":[[0]]}"),
                  ConstructionError);
}

TEST_CASE("cut families round-trip through JSON") {
  const auto host = build_firecracker(2);
  const auto text = cut_family_to_json(host.cut_family);
  const auto back = cut_family_from_json(text);
  CHECK(back.multiplicity == 1);
  REQUIRE(back.cuts.size() == host.cut_family.cuts.size());
  CHECK(back.cuts[0].name == "S_1");
  CHECK(cut_family_to_json(back) == text);
  CHECK_THROWS_AS(cut_family_from_json("{\"multiplicity\":0,\"cuts\":[]}"), ConstructionError);
}

TEST_CASE("multiset partition check") {
  const auto host = build_caterpillar(2);
  CHECK(is_multiset_partition(host.graph, host.cut_family));
  auto broken = host.cut_family;
  broken.cuts.pop_back();
  std::string why;
  CHECK_FALSE(is_multiset_partition(host.graph, broken, &why));
  CHECK(why.find("covered 0 times") != std::string::npos);
}
