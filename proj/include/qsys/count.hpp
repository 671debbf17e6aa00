#ifndef QSYS_COUNT_HPP
#define QSYS_COUNT_HPP

// Exact copy counting of a pattern 4-graph F in a host H.
//
// A copy of F is a set of |F| host edges on f vertices forming a (not
// necessarily induced) subhypergraph isomorphic to F. Equivalently, the
// number of copies is the number of injections V(F) -> V(H) that map every
// edge of F to an edge of H, divided by Aut(F).
//
// Two routes compute it:
//  * count_copies_generic: backtracking over injections, usable for any
//    pattern with f <= 8;
//  * count_P2 / count_P3 / count_P4 / count_C3: structural counters that
//    enumerate each copy exactly once through a canonical core (see
//    count_specialized.cpp for the uniqueness arguments).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsys/checked.hpp"
#include "qsys/hypergraph.hpp"
#include "qsys/pattern.hpp"

namespace qsys {

class Partition;

enum class CountMethod { generic, specialized };
std::string_view to_string(CountMethod m);

struct CopyCount {
  Count value = 0;
  CountMethod method = CountMethod::generic;
  std::string pattern;
  std::string host;
};

/// "n=<n>,m=<edges>"
std::string describe_host(const Hypergraph4& h);

/// Number of edge-preserving injections V(F) -> V(H), before Aut division.
Count count_injections(const Hypergraph4& host, const Pattern& pattern);

/// Copies of F in H by backtracking. Requires f <= 8.
CopyCount count_copies_generic(const Hypergraph4& host, const Pattern& pattern);

CopyCount count_P2(const Hypergraph4& host);
CopyCount count_P3(const Hypergraph4& host);
CopyCount count_P4(const Hypergraph4& host);
CopyCount count_C3(const Hypergraph4& host);

/// Dispatches built-in patterns (by name) to their specialized counter and
/// everything else to the generic one.
CopyCount count_copies(const Hypergraph4& host, const Pattern& pattern);

/// Copies of F in H that use edge e (in any role). Requires e in H.
/// Satisfies count(H) - count(H - e) = count_through_edge(H, F, e).
CopyCount count_through_edge(const Hypergraph4& host, const Pattern& pattern, const Edge4& e);

/// Copies of F in H + e that use e, without materializing H + e.
/// e may or may not already be an edge of H.
Count count_through_added_edge(const Hypergraph4& host, const Pattern& pattern, const Edge4& e);

/// Whether H + e holds at least one copy of F through e. Stops at the first.
/// Pass use_index = false when H changes between calls, so the pair/triple
/// index is not rebuilt each time.
bool has_copy_through_added_edge(const Hypergraph4& host, const Pattern& pattern,
                                 const Edge4& e, bool use_index = true);

struct MinAddedEdgeResult {
  CopyCount c_value;
  /// Every non-edge attaining the minimum, lexicographically sorted.
  std::vector<Edge4> argmin_edges;
  /// Per-part intersection sizes of each argmin edge, parallel to
  /// argmin_edges. Empty when no partition was supplied.
  std::vector<std::vector<int>> part_profiles;
  Count candidates = 0;
};

/// Minimum over non-edges e of the copies of F through e in H + e.
/// Throws std::invalid_argument if H is complete.
/// With threads > 1 the candidate list is split into contiguous chunks;
/// the result does not depend on the thread count.
MinAddedEdgeResult min_added_edge_copies(const Hypergraph4& host, const Pattern& pattern,
                                         const Partition* partition = nullptr,
                                         unsigned threads = 1);

}  // namespace qsys

#endif  // QSYS_COUNT_HPP
