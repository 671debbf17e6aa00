#include "doctest.h"
#include "qsys/constructions.hpp"
#include "qsys/count.hpp"
#include "qsys/turan.hpp"

using namespace qsys;

TEST_CASE("below the pattern order everything is allowed") {
  for (std::size_t n : {4, 5, 6}) {
    const auto r = exact_ex(n, builtin_pattern("P2"));
    CHECK(r.status == TuranStatus::exact);
    CHECK(r.value == binomial(n, 4));
    CHECK(r.witness.num_edges() == r.value);
  }
  CHECK(exact_ex(3, builtin_pattern("C3")).value == 0);
}

TEST_CASE("ex(6, C3)") {
  const auto c3 = builtin_pattern("C3");
  const auto r = exact_ex(6, c3);
  CHECK(r.status == TuranStatus::exact);
  CHECK(r.value >= b4_formula(6).numerator);
  CHECK(r.value == 10);
  CHECK(count_copies_generic(r.witness, c3).value == 0);
  CHECK(r.seeded_from == "b4");
}

TEST_CASE("P3 at n = 8 is at least d4(8)") {
  TuranBudget budget;
  budget.max_nodes = 200'000;
  const auto r = exact_ex(8, builtin_pattern("P3"), budget);
  CHECK(r.value >= d4_formula(8).numerator);
  CHECK(r.value <= binomial(8, 4));
  CHECK(count_copies_generic(r.witness, builtin_pattern("P3")).value == 0);
}

TEST_CASE("node budget gives a reproducible lower bound") {
  TuranBudget budget;
  budget.max_nodes = 500;
  const auto a = exact_ex(8, builtin_pattern("P2"), budget);
  const auto b = exact_ex(8, builtin_pattern("P2"), budget);
  CHECK(a.status == TuranStatus::lower_bound);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.value >= t4_formula(8).numerator);
}

TEST_CASE("user patterns without a seed construction") {
  const Pattern pair(6, {Edge4(0, 1, 2, 3), Edge4(0, 1, 4, 5)}, "pair");
  const auto r = exact_ex(6, pair);
  CHECK(r.status == TuranStatus::exact);
  CHECK(r.seeded_from.empty());
  CHECK(count_copies_generic(r.witness, pair).value == 0);
  // Edges of a 6-vertex 4-graph are complements of pairs; two edges meet in
  // two vertices iff those pairs are disjoint. So this is the largest
  // intersecting family of pairs in K6, a star or a triangle: 5 edges.
  CHECK(r.value == 5);
}
