#include "doctest.h"
#include "oracles.hpp"
#include "qwl/error.hpp"
#include "qwl/qcube.hpp"

using namespace qwl;

TEST_CASE("TernaryWord label/digit bijection") {
  for (int n = 1; n <= 4; ++n) {
    for (Vertex label = 0; label < pow3(n); ++label) {
      const TernaryWord w(n, label);
      CHECK(TernaryWord::from_digits(w.digits()) == w);
      std::int64_t rank = 0;
      for (int i = 0; i < n; ++i) rank += w.digit(i) * pow3(i);
      CHECK(rank == label);
    }
  }
  CHECK(TernaryWord(3, 5).to_string() == "012");
  CHECK_THROWS_AS(TernaryWord(2, 9), DomainError);
  CHECK_THROWS_AS(TernaryWord::from_digits({0, 3}), DomainError);
}

TEST_CASE("build_qcube sizes and adjacency") {
  const auto q1 = build_qcube(1);
  CHECK(q1.graph == make_cycle(3));

  const auto q2 = build_qcube(2);
  CHECK(q2.graph.vertex_count() == 9);
  CHECK(q2.graph.edge_count() == 18);

  const auto q3 = build_qcube(3);
  CHECK(q3.graph.edge_count() == 81);
  const auto c3 = make_cycle(3);
  CHECK(q3.graph == cartesian_product(c3, cartesian_product(c3, c3)));
  CHECK(q3.graph.roles().at(5) == "digit-tuple:012");

  for (int n = 1; n <= 6; ++n) {
    const auto q = build_qcube(n);
    CHECK(q.graph.edge_count() == static_cast<std::size_t>(n * pow3(n)));
    for (Vertex v = 0; v < q.graph.vertex_count(); ++v) {
      REQUIRE(q.graph.degree(v) == static_cast<std::size_t>(2 * n));
    }
  }

  for (int n = 1; n <= 3; ++n) {
    const auto q = build_qcube(n);
    for (Vertex a = 0; a < pow3(n); ++a)
      for (Vertex b = 0; b < pow3(n); ++b)
        REQUIRE(q.graph.has_edge(a, b) == testing::ternary_adjacent(n, a, b));
  }

  CHECK_THROWS_AS(build_qcube(0), BudgetError);
  CHECK_THROWS_AS(build_qcube(7), BudgetError);
}

TEST_CASE("ternary_decompose") {
  CHECK(ternary_decompose(8).exponents == std::vector<int>{1, 1, 0, 0});
  CHECK(ternary_decompose(9).exponents == std::vector<int>{2});
  CHECK(ternary_decompose(13).exponents == std::vector<int>{2, 1, 0});
  for (std::int64_t k = 1; k <= 729; ++k) {
    const auto d = ternary_decompose(k);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < d.exponents.size(); ++i) {
      sum += pow3(d.exponents[i]);
      if (i > 0) CHECK(d.exponents[i] <= d.exponents[i - 1]);
    }
    CHECK(sum == k);
  }
  CHECK_THROWS_AS(ternary_decompose(0), DomainError);
}

TEST_CASE("iso_closed_form examples") {
  CHECK(iso_closed_form(2, 2) == 1);
  CHECK(iso_closed_form(9, 2) == 18);
  CHECK(iso_closed_form(13, 3) == 26);
  CHECK(iso_closed_form(12, 3) == 24);
  CHECK_THROWS_AS(iso_closed_form(10, 2), DomainError);
  CHECK_THROWS_AS(iso_closed_form(0, 2), DomainError);
}

TEST_CASE("lex_prefix_induced") {
  CHECK(lex_prefix_induced(build_qcube(2), 3) == 3);
  CHECK(lex_prefix_induced(build_qcube(2), 1) == 0);
  CHECK(lex_prefix_induced(build_qcube(3), 12) == 24);
  for (int n = 1; n <= 4; ++n) {
    const auto q = build_qcube(n);
    for (std::int64_t k = 1; k <= pow3(n); ++k) {
      REQUIRE(lex_prefix_induced(q, k) == iso_closed_form(k, n));
    }
  }
}

TEST_CASE("brute_force_iso against the recursive oracle and the closed form") {
  CHECK(brute_force_iso(build_qcube(1), 2) == 1);
  CHECK(brute_force_iso(build_qcube(2), 4) == 4);
  CHECK(brute_force_iso(build_qcube(2), 6) == 9);
  for (int n = 1; n <= 2; ++n) {
    const auto q = build_qcube(n);
    for (std::int64_t k = 1; k <= pow3(n); ++k) {
      const auto exhaustive = brute_force_iso(q, k);
      CHECK(exhaustive == testing::max_induced_recursive(q.graph, static_cast<int>(k)));
      CHECK(exhaustive == iso_closed_form(k, n));
    }
  }
  CHECK_THROWS_AS(brute_force_iso(build_qcube(3), 5), BudgetError);
  CHECK(brute_force_iso(build_qcube(3), 27, 27) == 81);
}

TEST_CASE("iso_profile") {
  CHECK(iso_profile(2).delta == std::vector<std::int64_t>{0, 1, 2, 1, 2, 3, 2, 3, 4});
  CHECK(iso_profile(1).delta == std::vector<std::int64_t>{0, 1, 2});
  CHECK(iso_profile(3).induced.back() == 81);
  for (int n = 1; n <= 6; ++n) {
    const auto p = iso_profile(n);
    CHECK(p.delta.front() == 0);
    CHECK(p.delta.back() == 2 * n);
    for (std::size_t i = 0; i < p.delta.size(); ++i) {
      CHECK(p.delta[i] >= 0);
      CHECK(p.delta[i] <= 2 * n);
    }
  }
  const auto csv = to_csv(iso_profile(1));
  CHECK(csv == "k,I,delta\n1,0,0\n2,1,1\n3,3,2\n");
}

TEST_CASE("cut symmetry of the isoperimetric function on a regular graph") {
  for (int n = 1; n <= 4; ++n) {
    const auto total = pow3(n);
    for (std::int64_t k = 1; k < total; ++k) {
      CHECK(2 * n * k - 2 * iso_closed_form(k, n) ==
            2 * n * (total - k) - 2 * iso_closed_form(total - k, n));
    }
  }
}

TEST_CASE("digit_complement is an adjacency-preserving involution") {
  CHECK(digit_complement(TernaryWord(2, 0)).label() == 8);
  CHECK(digit_complement(TernaryWord(2, 4)).label() == 4);
  CHECK(digit_complement(TernaryWord(3, 5)).label() == 21);
  for (int n = 1; n <= 3; ++n) {
    const auto q = build_qcube(n);
    for (Vertex a = 0; a < pow3(n); ++a) {
      const auto ca = digit_complement(TernaryWord(n, a));
      CHECK(digit_complement(ca).label() == a);
      for (Vertex b = 0; b < pow3(n); ++b) {
        const auto cb = digit_complement(TernaryWord(n, b)).label();
        REQUIRE(q.graph.has_edge(a, b) == q.graph.has_edge(ca.label(), cb));
      }
    }
    // Hence every lex suffix is as dense as the prefix of the same size.
    for (std::int64_t k = 1; k <= pow3(n); ++k) {
      std::vector<Vertex> suffix;
      for (std::int64_t v = pow3(n) - k; v < pow3(n); ++v) suffix.push_back(static_cast<Vertex>(v));
      CHECK(induced_edge_count(q.graph, suffix) == iso_closed_form(k, n));
    }
  }
}
