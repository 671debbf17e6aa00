#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "qsys/constructions.hpp"
#include "qsys/count.hpp"
#include "qsys/random.hpp"

using namespace qsys;

namespace {

const char* const kBuiltins[] = {"P2", "P3", "P4", "C3"};

Hypergraph4 complete(std::size_t n) {
  Hypergraph4 h(n);
  for_each_quadruple(n, [&](const Edge4& e) { h.add_edge(e); });
  return h;
}

// Copies by definition: sets of |F| host edges spanning exactly f vertices
// that form a copy of F. With equal vertex and edge counts, any
// edge-preserving injection of F into such a set is an isomorphism.
Count subset_oracle(const Hypergraph4& h, const Pattern& p) {
  const auto& edges = h.edges();
  const std::size_t k = p.num_edges();
  Count total = 0;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (edges.size() < k) return 0;
  while (true) {
    std::vector<Vertex> verts;
    for (std::size_t i : pick)
      for (Vertex v : edges[i].vertices()) verts.push_back(v);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() == p.order()) {
      Hypergraph4 sub(h.num_vertices());
      for (std::size_t i : pick) sub.add_edge(edges[i]);
      if (count_injections(sub, p) > 0) ++total;
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == edges.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

}  // namespace

TEST_CASE("a pattern hosted by itself has one copy") {
  for (const char* name : kBuiltins) {
    const auto p = builtin_pattern(name);
    CHECK(count_copies_generic(p.as_hypergraph(), p).value == 1);
    CHECK(count_copies(p.as_hypergraph(), p).value == 1);
  }
}

TEST_CASE("C3 in the complete 6-vertex 4-graph") {
  const auto k6 = complete(6);
  CHECK(count_copies_generic(k6, builtin_pattern("C3")).value == 15);
  CHECK(count_C3(k6).value == 15);
}

TEST_CASE("specialized counters match the generic counter") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const std::size_t n = 7 + i % 6;
    const double density = (i % 3 == 0) ? 0.1 : (i % 3 == 1) ? 0.3 : 0.5;
    const auto h = random_hypergraph(n, density, 1000 + i);
    for (const char* name : kBuiltins) {
      const auto p = builtin_pattern(name);
      const auto fast = count_copies(h, p);
      CHECK(fast.method == CountMethod::specialized);
      CHECK(fast.value == count_copies_generic(h, p).value);
    }
  }
}

TEST_CASE("generic counter against edge-subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto h = random_hypergraph(8, 0.25, seed);
    for (const char* name : kBuiltins) {
      const auto p = builtin_pattern(name);
      CHECK(count_copies_generic(h, p).value == subset_oracle(h, p));
    }
  }
}

TEST_CASE("deletion identity") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto h = random_hypergraph(10, 0.35, 500 + seed);
    REQUIRE(h.num_edges() > 0);
    const Edge4 e = h.sorted_edges()[seed * 7 % h.num_edges()];
    Hypergraph4 without = h;
    without.remove_edge(e);
    for (const char* name : kBuiltins) {
      const auto p = builtin_pattern(name);
      const Count through = count_through_edge(h, p, e).value;
      CHECK(count_copies(h, p).value - count_copies(without, p).value == through);
      CHECK(count_through_added_edge(without, p, e) == through);
      CHECK(has_copy_through_added_edge(without, p, e) == (through > 0));
      CHECK(has_copy_through_added_edge(without, p, e, false) == (through > 0));
    }
  }
}

TEST_CASE("count_through_edge requires an edge of the host") {
  Hypergraph4 h(8);
  CHECK_THROWS_AS(count_through_edge(h, builtin_pattern("P2"), Edge4(0, 1, 2, 3)),
                  std::invalid_argument);
}

TEST_CASE("single copy of P2, through each of its edges") {
  const auto p2 = builtin_pattern("P2");
  const auto h = p2.as_hypergraph();
  for (const Edge4& e : h.edges()) CHECK(count_through_edge(h, p2, e).value == 1);
}

TEST_CASE("adding edges never lowers counts") {
  auto h = random_hypergraph(9, 0.2, 77);
  std::vector<Count> last(4, 0);
  for_each_quadruple(9, [&](const Edge4& e) {
    if (h.num_edges() > 60 || h.has_edge(e)) return;
    h.add_edge(e);
    for (std::size_t i = 0; i < 4; ++i) {
      const Count now = count_copies(h, builtin_pattern(kBuiltins[i])).value;
      CHECK(now >= last[i]);
      last[i] = now;
    }
  });
}

TEST_CASE("raw injection counts divide by Aut") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto h = random_hypergraph(9, 0.4, seed);
    for (const char* name : kBuiltins) {
      const auto p = builtin_pattern(name);
      CHECK(count_injections(h, p) % automorphism_count(p) == 0);
    }
  }
}

TEST_CASE("patterns larger than the host") {
  const auto k6 = complete(6);
  for (const char* name : {"P2", "P3", "P4"}) {
    CHECK(count_copies_generic(k6, builtin_pattern(name)).value == 0);
    CHECK(count_copies(k6, builtin_pattern(name)).value == 0);
  }
  CHECK(count_copies(Hypergraph4(0), builtin_pattern("C3")).value == 0);
}

TEST_CASE("extremal families are pattern free") {
  for (std::size_t n : {8, 12, 16}) {
    CHECK(count_P2(turan_t4(n).hypergraph).value == 0);
    CHECK(count_P3(d4_construction(n).hypergraph).value == 0);
    CHECK(count_P4(b4_construction(n).hypergraph).value == 0);
    CHECK(count_C3(b4_construction(n).hypergraph).value == 0);
  }
  CHECK(count_copies_generic(turan_t4(12).hypergraph, builtin_pattern("P2")).value == 0);
}

TEST_CASE("generic counter handles user patterns") {
  // Two edges sharing two vertices.
  const Pattern pair(6, {Edge4(0, 1, 2, 3), Edge4(0, 1, 4, 5)}, "pair");
  CHECK(automorphism_count(pair) == 16);
  // In K6, each edge meets 6 edges in exactly two vertices: 15 * 6 / 2.
  CHECK(count_copies(complete(6), pair).value == 45);
  CHECK(count_copies(complete(6), pair).method == CountMethod::generic);

  const Pattern too_big(9, {Edge4(0, 1, 2, 3), Edge4(4, 5, 6, 7), Edge4(5, 6, 7, 8)});
  CHECK_THROWS_AS(count_copies_generic(complete(9), too_big), std::invalid_argument);
}

TEST_CASE("minimum over added edges") {
  const auto d4 = d4_construction(12);
  const auto r = min_added_edge_copies(d4.hypergraph, builtin_pattern("P3"), &d4.partition);
  CHECK(r.c_value.value == 120);
  CHECK(r.candidates == binomial(12, 4) - d4.hypergraph.num_edges());
  CHECK(std::is_sorted(r.argmin_edges.begin(), r.argmin_edges.end()));
  CHECK(r.part_profiles.size() == r.argmin_edges.size());
  for (const Edge4& e : r.argmin_edges)
    CHECK(count_through_added_edge(d4.hypergraph, builtin_pattern("P3"), e) == 120);

  const auto threaded =
      min_added_edge_copies(d4.hypergraph, builtin_pattern("P3"), &d4.partition, 3);
  CHECK(threaded.c_value.value == r.c_value.value);
  CHECK(threaded.argmin_edges == r.argmin_edges);

  CHECK_THROWS_AS(min_added_edge_copies(complete(6), builtin_pattern("C3")),
                  std::invalid_argument);
}

TEST_CASE("C3 minimum over B4(12) stays below 3 (n/2)^2") {
  const auto b4 = b4_construction(12);
  const auto r = min_added_edge_copies(b4.hypergraph, builtin_pattern("C3"), &b4.partition);
  CHECK(r.c_value.value <= 108);
  CHECK(r.c_value.value == 45);
}

TEST_CASE("sharpness P3 edge count equals its total") {
  const auto s = sharpness_p3(12, 1);
  const Edge4 e = s.added_edges.front();
  const auto p3 = builtin_pattern("P3");
  const Count through = count_through_edge(s.hypergraph, p3, e).value;
  CHECK(through == count_P3(s.hypergraph).value);
  const auto d4 = d4_construction(12);
  CHECK(through == count_through_added_edge(d4.hypergraph, p3, e));
}
