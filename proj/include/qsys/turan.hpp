#ifndef QSYS_TURAN_HPP
#define QSYS_TURAN_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include "qsys/checked.hpp"
#include "qsys/hypergraph.hpp"
#include "qsys/pattern.hpp"

namespace qsys {

struct TuranBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds max_time{60'000};
};

enum class TuranStatus { exact, lower_bound };
std::string_view to_string(TuranStatus s);

struct TuranResult {
  std::size_t n = 0;
  std::string pattern;
  Count value = 0;
  TuranStatus status = TuranStatus::lower_bound;
  /// F-free, with exactly `value` edges.
  Hypergraph4 witness;
  std::uint64_t nodes_explored = 0;
  std::uint64_t elapsed_ms = 0;
  /// Name of the construction that seeded the lower bound, if any.
  std::string seeded_from;
};

/// Largest number of edges in an n-vertex F-free 4-graph, by branch and
/// bound over the 4-sets of [0, n) in lexicographic order.
///
/// Each include branch only looks for copies of F through the new edge. A
/// branch is cut when even taking every remaining 4-set cannot beat the best
/// graph so far. Built-in patterns start from their extremal construction.
///
/// The single symmetry break used: when one edge alone is F-free, the first
/// 4-set {0,1,2,3} is forced in. Any non-empty F-free graph can be relabelled
/// to contain it, so this keeps the search exact. Ordering vertices by degree
/// is not combined with it, since the two normalizations can conflict.
///
/// Node exhaustion is deterministic; hitting the time limit is not.
TuranResult exact_ex(std::size_t n, const Pattern& pattern, const TuranBudget& budget = {});

}  // namespace qsys

#endif  // QSYS_TURAN_HPP
