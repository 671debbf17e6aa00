// Structural counters for the books P2, P3, P4 and the expanded triangle C3.
//
// Each counter enumerates a canonical core that a copy determines uniquely,
// so every copy (a set of host edges) is produced exactly once.
//
// Books. In P_l = {S+a_1, ..., S+a_l, A} with |S| = 3 and A disjoint from S,
// two book edges meet in exactly S while A meets each book edge in one
// vertex. Hence S is the only triple lying in two edges of the copy, the
// apex set {a_i} is the link of S inside the copy, and A is the single edge
// missing S. A copy is therefore the same thing as a triple S, an l-subset of
// link_H(S), and an edge A through the apexes avoiding S:
//   P2: sum over S, {a,b} in link(S):   #{A in H : a,b in A, A n S = 0}
//   P3: sum over S, {a,b,c} in link(S): #{d notin S : abcd in H}
//   P4: sum over A in H:                #{S : S n A = 0, S+x in H for x in A}
//
// C3. In {p+q, q+r, p+r} with p, q, r disjoint pairs, any two edges meet in
// exactly one of the pairs, so the pairs are recovered from the edge set.
// A copy is a triangle {p, q, r} in the graph on vertex pairs where p ~ q iff
// p, q are disjoint and p+q is an edge. The loop below starts from an edge
// h = p+q (one of its three pair splits) and counts the completing pairs r;
// each triangle is met once from each of its three edges.

#include <algorithm>

#include "qsys/count.hpp"

namespace qsys {
namespace {

CopyCount make_count(const Hypergraph4& host, const char* name, Count value) {
  CopyCount out;
  out.value = value;
  out.method = CountMethod::specialized;
  out.pattern = name;
  out.host = describe_host(host);
  return out;
}

}  // namespace

CopyCount count_P2(const Hypergraph4& host) {
  const auto& idx = host.index();
  Count total = 0;
  idx.for_each_triple([&](const std::array<Vertex, 3>& s, std::span<const Vertex> link) {
    for (std::size_t i = 0; i < link.size(); ++i) {
      for (std::size_t j = i + 1; j < link.size(); ++j) {
        const Vertex a = link[i], b = link[j];
        // Edges through {a,b} avoiding S, by inclusion-exclusion over S.
        Count through = idx.pair_degree(a, b);
        Count meeting = 0;
        for (Vertex x : s) meeting = checked_add(meeting, idx.triple_degree(a, b, x));
        Count doubly = 0;
        for (int u = 0; u < 3; ++u)
          for (int w = u + 1; w < 3; ++w)
            if (host.has_edge(Edge4(a, b, s[u], s[w]))) ++doubly;
        total = checked_add(total, checked_sub(checked_add(through, doubly), meeting));
      }
    }
  });
  return make_count(host, "P2", total);
}

CopyCount count_P3(const Hypergraph4& host) {
  const auto& idx = host.index();
  Count total = 0;
  idx.for_each_triple([&](const std::array<Vertex, 3>& s, std::span<const Vertex> link) {
    const std::size_t k = link.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        for (std::size_t l = j + 1; l < k; ++l) {
          const Vertex a = link[i], b = link[j], c = link[l];
          Count outside = idx.triple_degree(a, b, c);
          for (Vertex x : s)
            if (host.has_edge(Edge4(a, b, c, x))) --outside;
          total = checked_add(total, outside);
        }
  });
  return make_count(host, "P3", total);
}

CopyCount count_P4(const Hypergraph4& host) {
  Count total = 0;
  for (const Edge4& a : host.edges()) {
    // Pick the apex with the shortest incidence list to enumerate S + apex.
    Vertex pivot = a[0];
    for (Vertex v : a.vertices())
      if (host.incident(v).size() < host.incident(pivot).size()) pivot = v;
    for (const Edge4& h : host.incident(pivot)) {
      std::array<Vertex, 3> s{};
      int k = 0;
      bool disjoint = true;
      for (Vertex v : h.vertices()) {
        if (v == pivot) continue;
        if (a.contains(v)) disjoint = false;
        s[k++] = v;
      }
      if (!disjoint) continue;
      const bool full = std::all_of(a.vertices().begin(), a.vertices().end(), [&](Vertex x) {
        return x == pivot || host.has_edge(Edge4(s[0], s[1], s[2], x));
      });
      if (full) total = checked_add(total, 1);
    }
  }
  return make_count(host, "P4", total);
}

CopyCount count_C3(const Hypergraph4& host) {
  // The three ways to split an edge {v0,v1,v2,v3} into two disjoint pairs.
  static constexpr int kSplits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  Count incidences = 0;
  for (const Edge4& h : host.edges()) {
    for (const auto& split : kSplits) {
      const Vertex p0 = h[split[0]], p1 = h[split[1]];
      const Vertex q0 = h[split[2]], q1 = h[split[3]];
      for (const Edge4& g : host.incident(p0)) {
        if (!g.contains(p1) || g.contains(q0) || g.contains(q1)) continue;
        std::array<Vertex, 2> r{};
        int k = 0;
        for (Vertex v : g.vertices())
          if (v != p0 && v != p1) r[k++] = v;
        if (host.has_edge(Edge4(q0, q1, r[0], r[1]))) incidences = checked_add(incidences, 1);
      }
    }
  }
  if (incidences % 3 != 0) {
    throw std::logic_error("C3 edge incidences not divisible by 3");
  }
  return make_count(host, "C3", incidences / 3);
}

}  // namespace qsys
