#ifndef QSYS_SRC_EMBEDDER_HPP
#define QSYS_SRC_EMBEDDER_HPP

#include <array>
#include <optional>
#include <vector>

#include "qsys/checked.hpp"
#include "qsys/hypergraph.hpp"
#include "qsys/pattern.hpp"

namespace qsys::detail {

// One backtracking step: map the still-unmapped vertices of a pattern edge
// jointly onto the free vertices of a host edge that contains the images of
// its already-mapped vertices.
struct EmbedStep {
  int edge = -1;
  std::vector<Vertex> mapped;  // pattern vertices of `edge` mapped earlier
  std::vector<Vertex> fresh;   // pattern vertices of `edge` mapped here
  std::vector<int> checks;     // other pattern edges fully mapped after this step
};

// Greedy most-constrained-first edge order. With `first` set, that edge is
// step 0 (the anchor); otherwise step 0 is the edge overlapping the others
// the most.
std::vector<EmbedStep> plan_embedding(const Pattern& pattern, std::optional<int> first);

// Counts edge-preserving injections of a pattern into host (+ extra edge).
class Embedder {
 public:
  // With use_index, edges through 2 or 3 mapped vertices come from the
  // host's SubsetDegreeIndex; otherwise from incidence lists only (for hosts
  // that are being mutated between calls).
  Embedder(const Hypergraph4& host, const Pattern& pattern, const Edge4* extra,
           bool stop_at_first, bool use_index = true);

  // All injections.
  Count count_all();
  // Injections sending some pattern edge onto `anchor`. Each injection maps
  // at most one pattern edge onto a given 4-set, so no injection repeats.
  Count count_anchored(const Edge4& anchor);

 private:
  bool is_edge(const Edge4& e) const;
  bool stopped() const { return stop_at_first_ && count_ > 0; }
  void extend(std::size_t step);
  void try_host_edge(std::size_t step, const Edge4& h);
  void assign_fresh(std::size_t step, std::array<Vertex, 4> order);
  bool checks_pass(const EmbedStep& s) const;

  const Hypergraph4& host_;
  const Pattern& pattern_;
  const Edge4* extra_;  // null, or an edge not present in host_
  const SubsetDegreeIndex* index_;
  bool stop_at_first_;
  std::vector<EmbedStep> plan_;
  std::vector<Vertex> map_;    // pattern vertex -> host vertex
  std::vector<char> used_;     // host vertex already an image
  Count count_ = 0;
};

}  // namespace qsys::detail

#endif  // QSYS_SRC_EMBEDDER_HPP
