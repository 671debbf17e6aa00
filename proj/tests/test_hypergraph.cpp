#include <sstream>

#include "doctest.h"
#include "qsys/constructions.hpp"
#include "qsys/hypergraph.hpp"
#include "qsys/random.hpp"

using namespace qsys;

TEST_CASE("edges are stored sorted") {
  const Edge4 e(3, 1, 0, 2);
  CHECK(e == Edge4(0, 1, 2, 3));
  CHECK(e.to_string() == "{0,1,2,3}");
  CHECK_THROWS_AS(Edge4(0, 1, 1, 2), std::invalid_argument);
  CHECK(Edge4(0, 1, 2, 3).intersection_size(Edge4(2, 3, 4, 5)) == 2);
}

TEST_CASE("empty hypergraphs") {
  Hypergraph4 zero(0);
  CHECK(zero.num_vertices() == 0);
  CHECK(zero.num_edges() == 0);

  Hypergraph4 h(7);
  CHECK(h.num_edges() == 0);
  for (Vertex v = 0; v < 7; ++v) CHECK(h.degree({v}) == 0);
  CHECK(h.degree({0, 1}) == 0);
  CHECK(h.degree({0, 1, 2}) == 0);
}

TEST_CASE("add_edge is idempotent and bounds checked") {
  Hypergraph4 h(4);
  CHECK(h.add_edge(Edge4(0, 1, 2, 3)));
  CHECK_FALSE(h.add_edge(Edge4(3, 2, 1, 0)));
  CHECK(h.num_edges() == 1);
  CHECK(h.has_edge(Edge4(0, 1, 2, 3)));
  CHECK_THROWS_AS(h.add_edge(Edge4(0, 1, 2, 4)), std::out_of_range);
  CHECK(h.degree({0, 1, 2}) == 1);
  CHECK(h.link({0, 1, 2}) == std::vector<Vertex>{3});
  CHECK_THROWS(h.degree(std::span<const Vertex>{}));
}

TEST_CASE("remove_edge keeps queries consistent") {
  auto h = random_hypergraph(9, 0.4, 7);
  const auto before = h.num_edges();
  const Edge4 victim = h.sorted_edges().at(before / 2);
  const auto d = h.degree({victim[0], victim[1]});
  CHECK(h.remove_edge(victim));
  CHECK_FALSE(h.remove_edge(victim));
  CHECK_FALSE(h.has_edge(victim));
  CHECK(h.num_edges() == before - 1);
  CHECK(h.degree({victim[0], victim[1]}) == d - 1);
  for (const Edge4& e : h.edges()) CHECK(h.has_edge(e));
}

TEST_CASE("sparse hosts above the bitmap limit") {
  Hypergraph4 h(200);
  CHECK(h.add_edge(Edge4(10, 150, 199, 3)));
  CHECK(h.has_edge(Edge4(3, 10, 150, 199)));
  CHECK_FALSE(h.has_edge(Edge4(3, 10, 150, 198)));
  CHECK(h.degree({199}) == 1);
}

TEST_CASE("degrees and links in small constructions") {
  const auto t4 = turan_t4(8);
  for (Vertex v = 0; v < 8; ++v) CHECK(t4.hypergraph.degree({v}) == 8);

  const auto d4 = d4_construction(8);
  CHECK(d4.hypergraph.link({0, 1, 2}).empty());
  CHECK(d4.hypergraph.link({4, 5, 6}).empty());

  Hypergraph4 k5(5);
  for_each_quadruple(5, [&](const Edge4& e) { k5.add_edge(e); });
  CHECK(k5.link({0, 1, 2}) == std::vector<Vertex>{3, 4});
}

TEST_CASE("degree oracle and handshake identities") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto h = random_hypergraph(10, 0.3, seed);
    Count by_vertex = 0, by_pair = 0, by_triple = 0;
    for (Vertex a = 0; a < 10; ++a) {
      by_vertex += h.degree({a});
      for (Vertex b = a + 1; b < 10; ++b) {
        by_pair += h.degree({a, b});
        for (Vertex c = b + 1; c < 10; ++c) {
          Count scan = 0;
          for (const Edge4& e : h.edges()) scan += e.contains(a) && e.contains(b) && e.contains(c);
          CHECK(h.degree({a, b, c}) == scan);
          CHECK(h.link({a, b, c}).size() == scan);
          by_triple += scan;
        }
      }
    }
    CHECK(by_vertex == 4 * h.num_edges());
    CHECK(by_pair == 6 * h.num_edges());
    CHECK(by_triple == 4 * h.num_edges());
  }
}

TEST_CASE("text format round trip") {
  std::istringstream in("4\n0 1 2 3\n");
  const auto r = read_hypergraph(in);
  CHECK(r.hypergraph.num_vertices() == 4);
  CHECK(r.hypergraph.num_edges() == 1);

  const auto t4 = turan_t4(12).hypergraph;
  std::stringstream buffer;
  write_hypergraph(t4, buffer);
  const auto back = read_hypergraph(buffer);
  CHECK(back.hypergraph == t4);
  CHECK(back.warnings.empty());
}

TEST_CASE("writer emits lexicographic order") {
  Hypergraph4 h(6);
  h.add_edge(Edge4(2, 3, 4, 5));
  h.add_edge(Edge4(0, 1, 2, 3));
  std::ostringstream out;
  write_hypergraph(h, out);
  CHECK(out.str() == "6\n0 1 2 3\n2 3 4 5\n");
}

TEST_CASE("parser errors and warnings") {
  {
    std::istringstream in("8\n0 1 2 9\n");
    try {
      read_hypergraph(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  {
    std::istringstream in("# comment\n5\n\n0 1 2 3\n3 2 1 0\n");
    const auto r = read_hypergraph(in);
    CHECK(r.hypergraph.num_edges() == 1);
    CHECK(r.warnings.size() == 1);
  }
  for (const char* bad : {"", "x\n", "5\n0 1 2\n", "5\n0 1 2 2\n", "5\n0 1 2 3 4\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_hypergraph(in), ParseError);
  }
}

TEST_CASE("checked arithmetic refuses to wrap") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS(checked_add(~Count{0}, 1));
  CHECK_THROWS(checked_mul(Count{1} << 40, Count{1} << 40));
  CHECK_THROWS(checked_sub(1, 2));
  CHECK(binomial(64, 4) == 635376);
  CHECK(binomial(3, 4) == 0);
}
