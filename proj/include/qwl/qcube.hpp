#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwl/graph.hpp"

namespace qwl {

std::int64_t pow3(int exponent);

// An n-digit base-3 word (x_{n-1}, ..., x_0) identified with its rank
// sum x_i * 3^i in lexicographic order.
class TernaryWord {
 public:
  TernaryWord(int n, Vertex label);
  static TernaryWord from_digits(const std::vector<int>& most_significant_first);

  int size() const { return n_; }
  Vertex label() const { return label_; }
  // Digit x_position, position 0 being least significant.
  int digit(int position) const;
  std::vector<int> digits() const;  // most significant first
  std::string to_string() const;    // e.g. "012"

  friend bool operator==(const TernaryWord&, const TernaryWord&) = default;

 private:
  int n_;
  Vertex label_;
};

// Replaces every digit x by 2 - x. Preserves adjacency in Q_n^3.
TernaryWord digit_complement(const TernaryWord& w);

// The 3-ary n-cube with lexicographic labels.
struct QCube {
  int n = 0;
  LabeledGraph graph;
};

inline constexpr int kDefaultMaxCubeDimension = 6;

QCube build_qcube(int n, int max_n = kDefaultMaxCubeDimension);

struct TernaryDecomposition {
  std::int64_t k = 0;
  std::vector<int> exponents;  // non-increasing; sum of 3^e equals k
};

TernaryDecomposition ternary_decompose(std::int64_t k);

// Maximum number of edges induced by k vertices of Q_n^3 (closed form from
// the ternary decomposition of k).
std::int64_t iso_closed_form(std::int64_t k, int n);

// Edges induced by the first k labels.
std::int64_t lex_prefix_induced(const QCube& q, std::int64_t k);

inline constexpr std::size_t kDefaultExhaustiveIsoBudget = 12;

// Exact maximum over every k-subset. Refuses (BudgetError) above `budget`
// vertices.
std::int64_t brute_force_iso(const QCube& q, std::int64_t k,
                             std::size_t budget = kDefaultExhaustiveIsoBudget);

struct IsoProfile {
  int n = 0;
  std::vector<std::int64_t> induced;  // induced[k-1] = I(k)
  std::vector<std::int64_t> delta;    // delta[k-1] = I(k) - I(k-1), delta(1) = 0
};

IsoProfile iso_profile(int n, int max_n = kDefaultMaxCubeDimension);

// CSV with header "k,I,delta".
std::string to_csv(const IsoProfile& profile);

}  // namespace qwl
