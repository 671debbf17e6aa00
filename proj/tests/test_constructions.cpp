#include <cmath>
#include <set>

#include "doctest.h"
#include "qsys/constructions.hpp"
#include "qsys/count.hpp"

using namespace qsys;

TEST_CASE("family sizes") {
  CHECK(turan_t4(8).hypergraph.num_edges() == 16);
  CHECK(turan_t4(10).hypergraph.num_edges() == 36);
  CHECK(turan_t4(12).hypergraph.num_edges() == 81);
  CHECK(d4_construction(8).hypergraph.num_edges() == 36);
  CHECK(d4_construction(9).hypergraph.num_edges() == 60);
  CHECK(t4_formula(8).numerator == 16);
  CHECK(d4_formula(8).numerator == 36);
  CHECK(b4_formula(8).numerator == 40);
  CHECK(b4_formula(6).numerator == 10);
  CHECK(b4_best_split(6).a == 5);
  CHECK(turan_t4(0).hypergraph.num_edges() == 0);
  CHECK_THROWS_AS(b4_construction(0), std::invalid_argument);
}

TEST_CASE("odd construction at n = 8") {
  const auto b4 = b4_construction(8);
  CHECK(b4.params.a == 6u);
  CHECK(b4.hypergraph.num_edges() == 40);
  CHECK(std::fabs(6.0 - 4.0) < std::sqrt(24.0) / 2 + 1);
}

TEST_CASE("formulas equal the built families for n in [4, 64]") {
  for (std::size_t n = 4; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(turan_t4(n).hypergraph.num_edges() == t4_formula(n).numerator);
    CHECK(d4_construction(n).hypergraph.num_edges() == d4_formula(n).numerator);
    CHECK(b4_construction(n).hypergraph.num_edges() == b4_formula(n).numerator);
  }
}

TEST_CASE("the odd split stays near n/2") {
  for (std::size_t n = 4; n <= 200; ++n) {
    CAPTURE(n);
    const auto split = b4_best_split(n);
    const double a = static_cast<double>(split.a);
    CHECK(std::fabs(a - n / 2.0) < std::sqrt(3.0 * n) / 2 + 1);
    // Scanning every a gives the same maximum.
    Count best = 0;
    for (std::size_t x = 1; x < n; ++x)
      best = std::max(best, binomial(x, 3) * (n - x) + binomial(n - x, 3) * x);
    CHECK(split.edges == best);
  }
}

TEST_CASE("part layout") {
  const auto t4 = turan_t4(10);
  const std::vector<std::pair<Vertex, Vertex>> want{{0, 3}, {3, 6}, {6, 8}, {8, 10}};
  CHECK(t4.part_ranges() == want);
  const auto d4 = d4_construction(9);
  CHECK(d4.partition.part_sizes() == std::vector<std::size_t>{4, 5});
}

TEST_CASE("c formulas") {
  CHECK(c_formula("cP3_exact", 12).numerator == 120);
  CHECK(c_formula("cP3_exact", 12).is_integer());
  const auto p2 = c_formula("cP2_lead", 16);
  CHECK(p2.leading_term);
  CHECK(p2.as_double() == 128.0);
  CHECK(c_formula("cP4_lead", 12).as_double() == doctest::Approx(80.0));
  CHECK(c_formula("cC3_lead", 12).as_double() == 108.0);
  CHECK(c_formula("cC3_lead", 7).as_double() == doctest::Approx(36.75));
  CHECK_THROWS_AS(c_formula("cP5_lead", 12), std::invalid_argument);
  CHECK_THROWS_AS(c_formula("cP2_lead", 5), std::invalid_argument);
}

TEST_CASE("P2 sharpness edges share the fixed pair") {
  const auto s = sharpness_p2(12, 2);
  REQUIRE(s.added_edges.size() == 2);
  // {0,1,3,4} and {0,1,3,5}: the pairs {c,d} are taken in lexicographic order.
  CHECK(s.added_edges[0] == Edge4(0, 1, 3, 4));
  CHECK(s.added_edges[1] == Edge4(0, 1, 3, 5));
  for (const Edge4& e : s.added_edges) CHECK((e.contains(0) && e.contains(1)));
  CHECK(s.hypergraph.num_edges() == 81 + 2);
  for (const Edge4& e : s.added_edges) {
    const auto p = s.partition.profile(e);
    CHECK(p == std::vector<int>{2, 2, 0, 0});
  }
  CHECK_THROWS_AS(sharpness_p2(12, 4), std::invalid_argument);
}

TEST_CASE("P3 sharpness edges are disjoint inside the larger part") {
  const auto s = sharpness_p3(16, 2);
  CHECK(s.hypergraph.num_edges() == 786);
  CHECK(s.added_edges[0].intersection_size(s.added_edges[1]) == 0);
  for (const Edge4& e : s.added_edges) CHECK(s.partition.profile(e) == std::vector<int>{0, 4});
  CHECK_THROWS_AS(sharpness_p3(16, 3), std::invalid_argument);
  CHECK(sharpness_p3(9, 1).added_edges.front() == Edge4(4, 5, 6, 7));
}

TEST_CASE("P4 sharpness edges are 2+2") {
  const auto s = sharpness_p4(12, 1);
  REQUIRE(s.added_edges.size() == 1);
  CHECK(s.partition.profile(s.added_edges[0]) == std::vector<int>{2, 2});
  CHECK_FALSE(s.partition.conforms(s.added_edges[0]));
  CHECK_THROWS_AS(sharpness_p4(12, 2), std::invalid_argument);
}

TEST_CASE("C3 sharpness packing") {
  const auto packing = greedy_c3_packing(12);
  CHECK(packing.size() == 3);
  const auto s = sharpness_c3(12, packing.size());
  for (std::size_t i = 0; i < s.added_edges.size(); ++i) {
    CHECK(s.partition.profile(s.added_edges[i]) == std::vector<int>{4, 0});
    for (std::size_t j = i + 1; j < s.added_edges.size(); ++j)
      CHECK(s.added_edges[i].intersection_size(s.added_edges[j]) <= 1);
  }
  CHECK_THROWS_AS(sharpness_c3(12, packing.size() + 1), std::invalid_argument);
}

TEST_CASE("sharpness totals split over the added edges") {
  const auto s = sharpness_p2(12, 2);
  const auto p2 = builtin_pattern("P2");
  Count sum = 0;
  for (const Edge4& e : s.added_edges) sum += count_through_edge(s.hypergraph, p2, e).value;
  CHECK(count_copies(s.hypergraph, p2).value == sum);
  CHECK(count_copies_generic(s.hypergraph, p2).value == sum);
}

TEST_CASE("constructions by name") {
  CHECK(construct_by_name("t4", 12, 0).hypergraph.num_edges() == 81);
  CHECK(construct_by_name("sharpness-c3", 12, 2).added_edges.size() == 2);
  CHECK_THROWS_AS(construct_by_name("t5", 12, 0), std::invalid_argument);
  CHECK_THROWS_AS(construct_by_name("t4", 12, 1), std::invalid_argument);
}
