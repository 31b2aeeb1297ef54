#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwl/graph.hpp"
#include "qwl/hosts.hpp"
#include "qwl/qcube.hpp"

namespace qwl {

enum class SearchMethod { exhaustive, anneal, swap_descent };

std::string_view to_string(SearchMethod method);

struct SearchResult {
  std::int64_t best_wirelength = 0;
  std::vector<Vertex> best_map;  // guest label -> host label
  std::uint64_t evaluated = 0;   // embeddings (or swap moves) evaluated
  SearchMethod method = SearchMethod::exhaustive;
  std::uint64_t seed = 0;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

struct ExhaustiveOptions {
  std::size_t max_vertices = 9;
  unsigned threads = 1;
};

// Minimum distance-sum wirelength over every bijection. Among minimizers the
// lexicographically smallest map is returned, independent of thread count.
// Throws BudgetError above options.max_vertices.
SearchResult exhaustive_search(const QCube& guest, const LabeledGraph& host,
                               const ExhaustiveOptions& options = {});

struct LocalSearchOptions {
  std::size_t restarts = 100;
  std::size_t steps = 20000;  // swap evaluations per restart
  std::uint64_t seed = 1;
  SearchMethod method = SearchMethod::swap_descent;
  double initial_temperature = 4.0;
  double cooling = 0.9995;  // geometric factor applied after every anneal step
  unsigned threads = 1;
};

// Best wirelength over the identity map and `restarts` random starts, each
// improved by 2-swap descent (optionally preceded by annealing). Fully
// determined by the options, including the seed; the thread count does not
// change the result.
SearchResult local_search(const QCube& guest, const LabeledGraph& host,
                          const LocalSearchOptions& options = {});

std::string to_json(const SearchResult& result);

// Report emitted when a search beats the closed-form value: the instance,
// the map, and the wirelength evaluated by distance sum and by routed
// congestion.
std::string counterexample_report(HostKind kind, int n, const SearchResult& result,
                                  std::int64_t formula_value);

}  // namespace qwl
