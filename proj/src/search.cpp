#include "qwl/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "json.hpp"
#include "qwl/embedding.hpp"
#include "qwl/error.hpp"

namespace qwl {

std::string_view to_string(SearchMethod method) {
  switch (method) {
    case SearchMethod::exhaustive: return "exhaustive";
    case SearchMethod::anneal: return "anneal";
    case SearchMethod::swap_descent: return "swap-descent";
  }
  return "unknown";
}

namespace {

// Dense distance matrix plus guest adjacency, shared read-only by workers.
struct Instance {
  std::size_t n = 0;
  std::vector<std::uint32_t> dist;
  std::vector<Edge> guest_edges;
  std::vector<std::vector<Vertex>> guest_neighbors;

  Instance(const QCube& guest, const LabeledGraph& host) : n(host.vertex_count()) {
    if (guest.graph.vertex_count() != n) {
      throw PreconditionError("guest and host vertex counts differ");
    }
    if (!host.is_connected()) throw PreconditionError("host must be connected");
    dist.resize(n * n);
    for (Vertex s = 0; s < n; ++s) {
      auto row = bfs_distances_from(host, s);
      std::copy(row.begin(), row.end(), dist.begin() + s * n);
    }
    guest_edges.assign(guest.graph.edges().begin(), guest.graph.edges().end());
    guest_neighbors.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      auto nb = guest.graph.neighbors(v);
      guest_neighbors[v].assign(nb.begin(), nb.end());
    }
  }

  std::uint32_t d(Vertex a, Vertex b) const { return dist[a * n + b]; }

  std::int64_t wirelength(std::span<const Vertex> map) const {
    std::int64_t total = 0;
    for (const Edge& e : guest_edges) total += d(map[e.u], map[e.v]);
    return total;
  }

  // Change in wirelength if guest vertices a and b exchange images.
  std::int64_t swap_delta(std::span<const Vertex> map, Vertex a, Vertex b) const {
    std::int64_t delta = 0;
    const Vertex ha = map[a], hb = map[b];
    for (Vertex w : guest_neighbors[a]) {
      if (w == b) continue;
      delta += static_cast<std::int64_t>(d(hb, map[w])) - d(ha, map[w]);
    }
    for (Vertex w : guest_neighbors[b]) {
      if (w == a) continue;
      delta += static_cast<std::int64_t>(d(ha, map[w])) - d(hb, map[w]);
    }
    return delta;
  }
};

struct Candidate {
  std::int64_t wirelength = std::numeric_limits<std::int64_t>::max();
  std::vector<Vertex> map;
  std::uint64_t evaluated = 0;

  bool better_than(const Candidate& other) const {
    if (wirelength != other.wirelength) return wirelength < other.wirelength;
    return map < other.map;
  }
};

// Runs work(i) for i in [0, count) on up to `threads` workers.
template <typename Work>
void parallel_for(std::size_t count, unsigned threads, Work work) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) work(i);
    });
  }
}

std::int64_t checked_wirelength(const QCube& guest, const LabeledGraph& host,
                                const SearchResult& result) {
  DistanceOracle oracle(host);
  const auto again = wirelength_by_distance(guest, oracle, result.best_map);
  if (again != result.best_wirelength) {
    throw ConsistencyError("search result does not re-evaluate to its wirelength");
  }
  return again;
}

}  // namespace

SearchResult exhaustive_search(const QCube& guest, const LabeledGraph& host,
                               const ExhaustiveOptions& options) {
  const std::size_t n = host.vertex_count();
  if (n > options.max_vertices || n > 12) {
    throw BudgetError("exhaustive search over " + std::to_string(n) +
                      "! bijections exceeds the budget of " +
                      std::to_string(options.max_vertices) + " vertices");
  }
  const Instance instance(guest, host);

  // One block per image of guest vertex 0; blocks are independent.
  std::vector<Candidate> block_best(n);
  parallel_for(n, options.threads, [&](std::size_t first) {
    // Smallest map of the block: first image, then the others ascending.
    std::vector<Vertex> map{static_cast<Vertex>(first)};
    for (Vertex v = 0; v < n; ++v) {
      if (v != first) map.push_back(v);
    }

    Candidate& best = block_best[first];
    do {
      ++best.evaluated;
      const auto wl = instance.wirelength(map);
      if (wl < best.wirelength) {
        best.wirelength = wl;
        best.map = map;
      }
    } while (std::next_permutation(map.begin() + 1, map.end()));
  });

  Candidate best;
  std::uint64_t evaluated = 0;
  for (const Candidate& c : block_best) {
    evaluated += c.evaluated;
    if (c.better_than(best)) best = c;
  }
  SearchResult result{best.wirelength, best.map, evaluated, SearchMethod::exhaustive, 0};
  checked_wirelength(guest, host, result);
  return result;
}

namespace {

Candidate run_restart(const Instance& instance, const LocalSearchOptions& options,
                      std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  const std::size_t n = instance.n;

  Candidate c;
  c.map.resize(n);
  std::iota(c.map.begin(), c.map.end(), 0);
  std::shuffle(c.map.begin(), c.map.end(), rng);
  std::int64_t current = instance.wirelength(c.map);
  c.evaluated = 1;
  c.wirelength = current;
  std::vector<Vertex> best_map = c.map;

  std::size_t budget = options.steps;
  if (options.method == SearchMethod::anneal && n > 1) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double temperature = options.initial_temperature;
    const std::size_t anneal_steps = budget / 2;
    for (std::size_t s = 0; s < anneal_steps; ++s, --budget) {
      const Vertex a = pick(rng);
      const Vertex b = pick(rng);
      if (a == b) continue;
      ++c.evaluated;
      const auto delta = instance.swap_delta(c.map, a, b);
      if (delta <= 0 || coin(rng) < std::exp(-static_cast<double>(delta) / temperature)) {
        std::swap(c.map[a], c.map[b]);
        current += delta;
        if (current < c.wirelength) {
          c.wirelength = current;
          best_map = c.map;
        }
      }
      temperature *= options.cooling;
    }
    c.map = best_map;
    current = c.wirelength;
  }

  // First-improvement descent over all transpositions until a local optimum
  // or the move budget runs out.
  bool improved = true;
  while (improved && budget > 0) {
    improved = false;
    for (Vertex a = 0; a < n && budget > 0; ++a) {
      for (Vertex b = a + 1; b < n && budget > 0; ++b, --budget) {
        ++c.evaluated;
        const auto delta = instance.swap_delta(c.map, a, b);
        if (delta < 0) {
          std::swap(c.map[a], c.map[b]);
          current += delta;
          improved = true;
        }
      }
    }
  }
  if (current < c.wirelength) {
    c.wirelength = current;
  } else {
    c.map = best_map;
  }
  return c;
}

}  // namespace

SearchResult local_search(const QCube& guest, const LabeledGraph& host,
                          const LocalSearchOptions& options) {
  const Instance instance(guest, host);
  Candidate best;
  best.map.resize(instance.n);
  std::iota(best.map.begin(), best.map.end(), 0);
  best.wirelength = instance.wirelength(best.map);
  best.evaluated = 1;

  std::vector<Candidate> runs(options.restarts);
  parallel_for(options.restarts, options.threads,
               [&](std::size_t r) { runs[r] = run_restart(instance, options, r); });

  std::uint64_t evaluated = best.evaluated;
  for (const Candidate& c : runs) {
    evaluated += c.evaluated;
    if (c.wirelength < best.wirelength) best = c;
  }
  SearchResult result{best.wirelength, best.map, evaluated, options.method, options.seed};
  checked_wirelength(guest, host, result);
  return result;
}

std::string to_json(const SearchResult& result) {
  nlohmann::ordered_json doc;
  doc["method"] = to_string(result.method);
  doc["seed"] = result.seed;
  doc["best_wirelength"] = result.best_wirelength;
  doc["evaluated"] = result.evaluated;
  doc["best_map"] = result.best_map;
  return doc.dump() + "\n";
}

std::string counterexample_report(HostKind kind, int n, const SearchResult& result,
                                  std::int64_t formula_value) {
  const auto host = build_host(kind, n);
  const auto guest = build_qcube(n);
  const Routing routing =
      kind == HostKind::cylinder ? Routing::dimension_ordered_cylinder : Routing::tree_unique;
  const EmbeddingInstance instance(guest, host.graph, result.best_map, routing, kind);

  nlohmann::ordered_json doc;
  doc["kind"] = "counterexample";
  doc["host"] = to_string(kind);
  doc["n"] = n;
  doc["formula"] = formula_value;
  doc["method"] = to_string(result.method);
  doc["seed"] = result.seed;
  doc["wirelength_by_distance"] = wirelength_by_distance(instance);
  doc["wirelength_by_congestion"] = congestion_per_edge(instance).wirelength;
  doc["map"] = result.best_map;
  return doc.dump() + "\n";
}

}  // namespace qwl
