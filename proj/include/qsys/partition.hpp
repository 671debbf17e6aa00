#ifndef QSYS_PARTITION_HPP
#define QSYS_PARTITION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsys/checked.hpp"
#include "qsys/hypergraph.hpp"

namespace qsys {

/// Which edge profile a partition rewards.
///  transversal4: 4 parts, one vertex in each.
///  two_two:      2 parts, two vertices in each.
///  odd_odd:      2 parts, an odd number in each.
enum class PartitionMode { transversal4, two_two, odd_odd };

std::string_view to_string(PartitionMode mode);
/// Accepts "transversal4", "two_two", "odd_odd" (hyphens allowed).
PartitionMode parse_partition_mode(std::string_view text);
int part_count(PartitionMode mode);

class Partition {
 public:
  /// Throws std::invalid_argument if a part id is out of range for the mode.
  Partition(PartitionMode mode, std::vector<std::uint8_t> assignment);
  /// Contiguous ranges: part 0 gets [0, sizes[0]), part 1 the next sizes[1], ...
  static Partition from_sizes(PartitionMode mode, const std::vector<std::size_t>& sizes);

  PartitionMode mode() const { return mode_; }
  int num_parts() const { return part_count(mode_); }
  std::size_t num_vertices() const { return assignment_.size(); }
  int part_of(Vertex v) const { return assignment_[v]; }
  const std::vector<std::uint8_t>& assignment() const { return assignment_; }
  std::vector<std::size_t> part_sizes() const;

  void move(Vertex v, int part);

  /// Number of vertices of e in each part.
  std::vector<int> profile(const Edge4& e) const;
  bool conforms(const Edge4& e) const;

  bool operator==(const Partition&) const = default;

 private:
  PartitionMode mode_;
  std::vector<std::uint8_t> assignment_;
};

/// Profile as "a+b(+c+d)" in part order.
std::string profile_string(const std::vector<int>& counts);

/// Whether a per-part intersection profile conforms to the mode.
bool profile_conforms(PartitionMode mode, const std::vector<int>& counts);

/// Number of 4-sets conforming to the partition (edges of the complete
/// conforming hypergraph on these parts).
Count conforming_tuple_count(const Partition& partition);

/// The bad/good/missing accounting of a host against a partition.
/// B: edges that do not conform; G: edges that do; M: conforming 4-sets
/// that are not edges, kept as a count (use for_each_missing to list them).
struct Decomposition {
  std::vector<Edge4> bad;
  std::vector<Edge4> good;
  Count missing = 0;
  Count objective() const { return good.size(); }
};

/// Throws std::invalid_argument if the partition's vertex count differs from H's.
Decomposition decompose(const Hypergraph4& h, const Partition& partition);

/// Visits the conforming non-edges in lexicographic order.
void for_each_missing(const Hypergraph4& h, const Partition& partition,
                      const std::function<void(const Edge4&)>& fn);
std::vector<Edge4> missing_tuples(const Hypergraph4& h, const Partition& partition);

/// Number of edges conforming to the partition (|G|).
Count partition_objective(const Hypergraph4& h, const Partition& partition);

/// True if no single-vertex move strictly increases the objective.
bool is_locally_optimal(const Hypergraph4& h, const Partition& partition);

inline constexpr std::uint64_t kDefaultSeed = 20090405;

struct StabilityReport {
  Partition partition;
  Count objective = 0;  // |G|
  Count bad = 0;        // |B|
  Count missing = 0;    // |M|
  /// |B| + |M|: deletions plus additions turning H into the complete
  /// conforming hypergraph on the reported parts.
  Count edit_distance = 0;
  unsigned restarts = 0;
  std::uint64_t seed = 0;
  bool locally_optimal = false;
  bool exhaustive = false;
};

struct PartitionSearchOptions {
  unsigned restarts = 16;
  std::uint64_t seed = kDefaultSeed;
  /// Extra restart from a known partition (e.g. a construction's parts).
  std::optional<Partition> hint;
  unsigned threads = 1;
};

/// Best-improvement hill climbing over single-vertex moves from seeded
/// uniform random assignments (plus the hint, if any). Deterministic for a
/// given seed; ties between restarts go to the lowest restart index.
StabilityReport optimize_partition(const Hypergraph4& h, PartitionMode mode,
                                   const PartitionSearchOptions& options = {});

/// Global optimum by exhaustive enumeration up to relabelling of parts.
/// Limits: n <= 24 for two-part modes, n <= 12 for transversal4.
StabilityReport exact_partition(const Hypergraph4& h, PartitionMode mode);

}  // namespace qsys

#endif  // QSYS_PARTITION_HPP
