#include "qwl/qcube.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "qwl/error.hpp"

namespace qwl {

std::int64_t pow3(int exponent) {
  if (exponent < 0 || exponent > 39) throw DomainError("pow3: exponent out of range");
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= 3;
  return r;
}

TernaryWord::TernaryWord(int n, Vertex label) : n_(n), label_(label) {
  if (n < 1 || n > 20) throw DomainError("ternary word length must be in 1..20");
  if (label >= pow3(n)) {
    throw DomainError("label " + std::to_string(label) + " has more than " +
                      std::to_string(n) + " ternary digits");
  }
}

TernaryWord TernaryWord::from_digits(const std::vector<int>& most_significant_first) {
  std::int64_t label = 0;
  for (int d : most_significant_first) {
    if (d < 0 || d > 2) throw DomainError("ternary digit out of range");
    label = label * 3 + d;
  }
  return TernaryWord(static_cast<int>(most_significant_first.size()),
                     static_cast<Vertex>(label));
}

int TernaryWord::digit(int position) const {
  if (position < 0 || position >= n_) throw DomainError("digit position out of range");
  return static_cast<int>((label_ / pow3(position)) % 3);
}

std::vector<int> TernaryWord::digits() const {
  std::vector<int> out(n_);
  Vertex rest = label_;
  for (int i = n_ - 1; i >= 0; --i) {
    out[i] = static_cast<int>(rest % 3);
    rest /= 3;
  }
  return out;
}

std::string TernaryWord::to_string() const {
  std::string s;
  for (int d : digits()) s.push_back(static_cast<char>('0' + d));
  return s;
}

TernaryWord digit_complement(const TernaryWord& w) {
  // 2 - x_i in every position is (3^n - 1) - label.
  return TernaryWord(w.size(), static_cast<Vertex>(pow3(w.size()) - 1 - w.label()));
}

QCube build_qcube(int n, int max_n) {
  if (n < 1 || n > max_n) {
    throw BudgetError("Q_n^3 dimension " + std::to_string(n) + " outside 1.." +
                      std::to_string(max_n));
  }
  const auto count = static_cast<Vertex>(pow3(n));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * count);
  RoleMap roles;
  for (Vertex u = 0; u < count; ++u) {
    for (int p = 0; p < n; ++p) {
      const auto place = static_cast<Vertex>(pow3(p));
      const Vertex d = (u / place) % 3;
      // Every unequal digit is +-1 mod 3 from d, so each factor is a triangle.
      for (Vertex e = d + 1; e < 3; ++e) edges.emplace_back(u, u + (e - d) * place);
    }
    roles.emplace(u, "digit-tuple:" + TernaryWord(n, u).to_string());
  }
  return QCube{n, LabeledGraph(count, edges, std::move(roles))};
}

TernaryDecomposition ternary_decompose(std::int64_t k) {
  if (k < 1) throw DomainError("ternary_decompose needs k >= 1");
  TernaryDecomposition out{k, {}};
  std::vector<int> low_first;
  int position = 0;
  for (std::int64_t rest = k; rest > 0; rest /= 3, ++position) {
    for (std::int64_t d = rest % 3; d > 0; --d) low_first.push_back(position);
  }
  out.exponents.assign(low_first.rbegin(), low_first.rend());
  return out;
}

std::int64_t iso_closed_form(std::int64_t k, int n) {
  if (n < 1) throw DomainError("iso_closed_form needs n >= 1");
  if (k < 1 || k > pow3(n)) {
    throw DomainError("k = " + std::to_string(k) + " outside 1..3^" + std::to_string(n));
  }
  const auto decomposition = ternary_decompose(k);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < decomposition.exponents.size(); ++i) {
    const int e = decomposition.exponents[i];
    if (e > n) throw DomainError("exponent exceeds cube dimension");
    total += (e + static_cast<std::int64_t>(i)) * pow3(e);
  }
  return total;
}

std::int64_t lex_prefix_induced(const QCube& q, std::int64_t k) {
  if (k < 1 || k > static_cast<std::int64_t>(q.graph.vertex_count())) {
    throw DomainError("lex_prefix_induced: k out of range");
  }
  std::int64_t count = 0;
  for (const Edge& e : q.graph.edges()) count += (e.v < k) ? 1 : 0;
  return count;
}

std::int64_t brute_force_iso(const QCube& q, std::int64_t k, std::size_t budget) {
  const std::size_t n = q.graph.vertex_count();
  if (n > budget || n > 30) {
    throw BudgetError("brute_force_iso: " + std::to_string(n) +
                      " vertices exceeds the exhaustive budget of " +
                      std::to_string(std::min<std::size_t>(budget, 30)) +
                      "; use lex_prefix_induced instead");
  }
  if (k < 1 || k > static_cast<std::int64_t>(n)) {
    throw DomainError("brute_force_iso: k out of range");
  }
  std::vector<std::uint32_t> adjacent(n, 0);
  for (const Edge& e : q.graph.edges()) {
    adjacent[e.u] |= 1u << e.v;
    adjacent[e.v] |= 1u << e.u;
  }
  const std::uint32_t limit = 1u << n;
  std::int64_t best = 0;
  // Gosper's hack: every mask with popcount k in increasing order.
  for (std::uint32_t mask = (1u << k) - 1; mask < limit;) {
    std::int64_t induced = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      induced += std::popcount(adjacent[std::countr_zero(rest)] & mask);
    }
    best = std::max(best, induced / 2);
    const std::uint32_t low = mask & -mask;
    const std::uint32_t ripple = mask + low;
    if (ripple == 0) break;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  return best;
}

IsoProfile iso_profile(int n, int max_n) {
  if (n < 1 || n > max_n) {
    throw BudgetError("iso_profile: n outside 1.." + std::to_string(max_n));
  }
  IsoProfile profile;
  profile.n = n;
  const auto count = pow3(n);
  for (std::int64_t k = 1; k <= count; ++k) {
    profile.induced.push_back(iso_closed_form(k, n));
    profile.delta.push_back(k == 1 ? 0 : profile.induced[k - 1] - profile.induced[k - 2]);
  }
  return profile;
}

std::string to_csv(const IsoProfile& profile) {
  std::ostringstream out;
  out << "k,I,delta\n";
  for (std::size_t i = 0; i < profile.induced.size(); ++i) {
    out << i + 1 << ',' << profile.induced[i] << ',' << profile.delta[i] << '\n';
  }
  return out.str();
}

}  // namespace qwl
