#ifndef QSYS_CONSTRUCTIONS_HPP
#define QSYS_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsys/checked.hpp"
#include "qsys/hypergraph.hpp"
#include "qsys/partition.hpp"

namespace qsys {

struct ConstructionParams {
  std::size_t n = 0;
  std::optional<std::size_t> a;  // size of the first part, odd construction only
  std::size_t q = 0;
  std::optional<std::uint64_t> seed;  // all generators are deterministic
};

struct ConstructionResult {
  std::string name;
  Hypergraph4 hypergraph;
  Partition partition;
  ConstructionParams params;
  /// Edges added on top of the base family; empty for pure families.
  std::vector<Edge4> added_edges;

  /// Half-open vertex range [first, last) of each part.
  std::vector<std::pair<Vertex, Vertex>> part_ranges() const;
};

/// Complete 4-partite 4-graph with part sizes floor((n+i)/4), i = 3,2,1,0,
/// on contiguous vertex ranges from vertex 0.
ConstructionResult turan_t4(std::size_t n);

/// All 2+2 sets across parts of sizes floor(n/2) then ceil(n/2).
ConstructionResult d4_construction(std::size_t n);

/// All 3+1 and 1+3 sets across parts of sizes a, n-a with a the best split.
ConstructionResult b4_construction(std::size_t n);

struct OddSplit {
  std::size_t a = 0;
  Count edges = 0;
};

/// Size a of the first part maximizing C(a,3)(n-a) + C(n-a,3)a. The value
/// is symmetric under a <-> n-a; the scan covers ceil(n/2) <= a <= n-1 and
/// keeps the smallest maximizer, so the first part is the larger one.
OddSplit b4_best_split(std::size_t n);

Count t4_edges(std::size_t n);
Count d4_edges(std::size_t n);

/// Exact value (denominator 1) or a leading term kept as a reduced fraction.
struct FormulaValue {
  std::string name;
  std::size_t n = 0;
  Count numerator = 0;
  Count denominator = 1;
  bool leading_term = false;

  double as_double() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  bool is_integer() const { return denominator == 1; }
};

FormulaValue t4_formula(std::size_t n);
FormulaValue d4_formula(std::size_t n);
FormulaValue b4_formula(std::size_t n);

/// Names: t4, d4, b4, cP3_exact (exact); cP2_lead = 2(n/4)^3,
/// cP4_lead = 4 C(n/2, 3), cC3_lead = 3 (n/2)^2 (leading terms).
/// Throws std::invalid_argument on an unknown name or n below the pattern order.
FormulaValue c_formula(std::string_view name, std::size_t n);

/// T4(n) plus q edges {a, b, c, d}: a, b the first two vertices of part 0
/// and {c, d} the first q pairs (lexicographic) of part 1.
ConstructionResult sharpness_p2(std::size_t n, std::size_t q);

/// D4(n) plus q disjoint 4-sets inside the larger part, lowest vertices first.
ConstructionResult sharpness_p3(std::size_t n, std::size_t q);

/// B4(n) plus q disjoint 4-sets with two vertices in each part.
ConstructionResult sharpness_p4(std::size_t n, std::size_t q);

/// B4(n) plus q 4-sets inside the first (larger) part, pairwise meeting in
/// at most one vertex, picked by a greedy lexicographic scan.
ConstructionResult sharpness_c3(std::size_t n, std::size_t q);

/// The full greedy packing that sharpness_c3 draws from.
std::vector<Edge4> greedy_c3_packing(std::size_t n);

/// Builds one of the families by CLI name: t4, d4, b4, sharpness-p2,
/// sharpness-p3, sharpness-p4, sharpness-c3.
ConstructionResult construct_by_name(std::string_view name, std::size_t n, std::size_t q);

}  // namespace qsys

#endif  // QSYS_CONSTRUCTIONS_HPP
