#ifndef QSYS_PATTERN_HPP
#define QSYS_PATTERN_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qsys/checked.hpp"
#include "qsys/hypergraph.hpp"

namespace qsys {

/// Largest pattern order accepted by the automorphism brute force.
inline constexpr std::size_t kMaxAutomorphismOrder = 12;
/// Largest pattern order accepted by the copy counters.
inline constexpr std::size_t kMaxCountingOrder = 8;

/// A small fixed 4-graph on vertices 0..f-1 with no isolated vertices.
class Pattern {
 public:
  /// Throws std::invalid_argument on duplicate edges, out-of-range vertices,
  /// or a vertex that lies in no edge.
  Pattern(std::size_t order, std::vector<Edge4> edges, std::string name = {});

  std::size_t order() const { return order_; }
  const std::vector<Edge4>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::string& name() const { return name_; }

  /// The pattern viewed as a host hypergraph.
  Hypergraph4 as_hypergraph() const;

 private:
  std::size_t order_;
  std::vector<Edge4> edges_;
  std::string name_;
};

enum class BuiltinPattern { P2, P3, P4, C3 };

/// Books P2, P3, P4 share the triple {0,1,2}; their apexes start at 3.
/// P2 = {0123, 0124, 3456}, P3 = {0123, 0124, 0125, 3456},
/// P4 = {0123, 0124, 0125, 0126, 3456}.
/// C3 blows the triangle up on the pairs {0,1}, {2,3}, {4,5}.
Pattern builtin_pattern(BuiltinPattern which);
/// Accepts "P2", "P3", "P4", "C3" (case-insensitive).
Pattern builtin_pattern(std::string_view name);
bool is_builtin_name(std::string_view name);

/// Builds a pattern from a hypergraph file's contents.
Pattern pattern_from_hypergraph(const Hypergraph4& h, std::string name);

/// Number of vertex permutations mapping the edge set onto itself,
/// by brute force over all f! permutations.
Count automorphism_count(const Pattern& pattern);

}  // namespace qsys

#endif  // QSYS_PATTERN_HPP
