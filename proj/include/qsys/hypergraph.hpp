#ifndef QSYS_HYPERGRAPH_HPP
#define QSYS_HYPERGRAPH_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qsys/checked.hpp"

namespace qsys {

using Vertex = std::uint32_t;

/// Largest supported vertex count. Edge keys pack four 16-bit labels.
inline constexpr std::size_t kMaxVertices = 0xFFFF;
/// Up to this many vertices membership uses a bitmap over all 4-subsets.
inline constexpr std::size_t kDenseLimit = 96;

/// A 4-element vertex set, always stored in increasing order.
class Edge4 {
 public:
  /// Sorts the vertices. Throws std::invalid_argument if they are not distinct.
  Edge4(Vertex a, Vertex b, Vertex c, Vertex d);
  explicit Edge4(std::span<const Vertex> vertices);

  const std::array<Vertex, 4>& vertices() const { return v_; }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  Vertex max_vertex() const { return v_[3]; }

  bool contains(Vertex x) const {
    return v_[0] == x || v_[1] == x || v_[2] == x || v_[3] == x;
  }
  std::size_t intersection_size(const Edge4& other) const;

  /// Injective 64-bit key; lexicographic order of keys matches edge order.
  std::uint64_t key() const {
    return (std::uint64_t{v_[0]} << 48) | (std::uint64_t{v_[1]} << 32) |
           (std::uint64_t{v_[2]} << 16) | std::uint64_t{v_[3]};
  }

  auto operator<=>(const Edge4&) const = default;
  bool operator==(const Edge4&) const = default;

  std::string to_string() const;

 private:
  std::array<Vertex, 4> v_;
};

std::ostream& operator<<(std::ostream& os, const Edge4& e);

class Hypergraph4;

/// Pair and triple degrees plus triple links, derived from an edge set.
///
/// Built in one pass over the edges; the owning hypergraph rebuilds it on
/// the first query after a mutation.
class SubsetDegreeIndex {
 public:
  explicit SubsetDegreeIndex(const Hypergraph4& h);

  Count pair_degree(Vertex a, Vertex b) const;
  Count triple_degree(Vertex a, Vertex b, Vertex c) const;
  /// Edges containing {a, b}.
  std::span<const Edge4> pair_edges(Vertex a, Vertex b) const;
  /// Vertices w with {a,b,c,w} an edge, increasing.
  std::span<const Vertex> triple_link(Vertex a, Vertex b, Vertex c) const;

  /// Visits every triple (sorted) whose link is non-empty.
  template <typename Fn>
  void for_each_triple(Fn&& fn) const {
    for (const auto& [key, link] : links_) {
      fn(unpack_triple(key), std::span<const Vertex>(link));
    }
  }

  static std::uint64_t pair_key(Vertex a, Vertex b);
  static std::uint64_t triple_key(Vertex a, Vertex b, Vertex c);

 private:
  static std::array<Vertex, 3> unpack_triple(std::uint64_t key);

  std::unordered_map<std::uint64_t, std::vector<Edge4>> pairs_;
  std::unordered_map<std::uint64_t, std::vector<Vertex>> links_;
};

/// A simple 4-uniform hypergraph on vertices 0..n-1.
///
/// Membership and per-vertex incidence lists are kept current on every
/// mutation; pair/triple degrees live in a SubsetDegreeIndex that is built
/// lazily. Const member functions are safe to call from concurrent readers.
class Hypergraph4 {
 public:
  explicit Hypergraph4(std::size_t n = 0);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Returns false if the edge was already present.
  bool add_edge(const Edge4& e);
  /// Returns false if the edge was absent.
  bool remove_edge(const Edge4& e);
  bool has_edge(const Edge4& e) const {
    if (!dense_.empty()) {
      if (e.max_vertex() >= n_) return false;
      const std::uint64_t r = rank(e);
      return (dense_[r >> 6] >> (r & 63)) & 1;
    }
    return position_.contains(e.key());
  }

  /// Edges in an unspecified but deterministic order.
  const std::vector<Edge4>& edges() const { return edges_; }
  std::vector<Edge4> sorted_edges() const;
  /// Edges containing v.
  std::span<const Edge4> incident(Vertex v) const;

  /// Number of edges containing s, for 1 <= |s| <= 3.
  Count degree(std::span<const Vertex> s) const;
  Count degree(std::initializer_list<Vertex> s) const {
    return degree(std::span<const Vertex>(s.begin(), s.size()));
  }
  /// Vertices w with s + {w} an edge, for |s| = 3; increasing.
  std::vector<Vertex> link(std::span<const Vertex> s) const;
  std::vector<Vertex> link(std::initializer_list<Vertex> s) const {
    return link(std::span<const Vertex>(s.begin(), s.size()));
  }

  const SubsetDegreeIndex& index() const;

  /// Same vertex count and same edge set.
  bool operator==(const Hypergraph4& other) const;

 private:
  void check_edge(const Edge4& e) const;
  // Colexicographic rank of e among the 4-subsets of [0, n).
  static std::uint64_t rank(const Edge4& e) {
    return kBinomialTable[e[0]][1] + kBinomialTable[e[1]][2] + kBinomialTable[e[2]][3] +
           kBinomialTable[e[3]][4];
  }
  static constexpr auto kBinomialTable = [] {
    std::array<std::array<std::uint64_t, 5>, kDenseLimit + 1> t{};
    for (std::size_t v = 0; v <= kDenseLimit; ++v) {
      t[v][0] = 1;
      for (std::size_t k = 1; k <= 4; ++k) t[v][k] = v == 0 ? 0 : t[v - 1][k - 1] + t[v - 1][k];
    }
    return t;
  }();
  void set_dense(const Edge4& e, bool value);
  void check_subset(std::span<const Vertex> s) const;

  // Copyable holder for the lazily built index.
  class IndexCache {
   public:
    IndexCache() = default;
    IndexCache(const IndexCache& other);
    IndexCache& operator=(const IndexCache& other);
    std::shared_ptr<const SubsetDegreeIndex> get(const Hypergraph4& owner) const;
    void invalidate();

   private:
    mutable std::mutex mutex_;
    mutable std::shared_ptr<const SubsetDegreeIndex> index_;
  };

  std::size_t n_;
  std::vector<Edge4> edges_;
  std::unordered_map<std::uint64_t, std::size_t> position_;
  std::vector<std::vector<Edge4>> incidence_;
  // Membership bitmap over all 4-subsets; empty above kDenseLimit vertices.
  std::vector<std::uint64_t> dense_;
  IndexCache cache_;
};

/// Thrown by read_hypergraph; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ReadResult {
  Hypergraph4 hypergraph;
  /// One message per duplicate edge that was dropped.
  std::vector<std::string> warnings;
};

/// Text format: first line n, then one edge per line as four 0-based
/// vertex indices. Blank lines and lines starting with '#' are skipped.
ReadResult read_hypergraph(std::istream& in);
ReadResult read_hypergraph_file(const std::string& path);
/// Writes edges in lexicographic order.
void write_hypergraph(const Hypergraph4& h, std::ostream& out);
void write_hypergraph_file(const Hypergraph4& h, const std::string& path);

/// Calls fn(Edge4) for every 4-subset of [0, n) in lexicographic order.
template <typename Fn>
void for_each_quadruple(std::size_t n, Fn&& fn) {
  for (Vertex a = 0; a + 3 < n; ++a)
    for (Vertex b = a + 1; b + 2 < n; ++b)
      for (Vertex c = b + 1; c + 1 < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) fn(Edge4(a, b, c, d));
}

}  // namespace qsys

#endif  // QSYS_HYPERGRAPH_HPP
