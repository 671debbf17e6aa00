#include "qsys/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace qsys {

Pattern::Pattern(std::size_t order, std::vector<Edge4> edges, std::string name)
    : order_(order), edges_(std::move(edges)), name_(std::move(name)) {
  std::vector<bool> covered(order_, false);
  std::unordered_set<std::uint64_t> seen;
  for (const Edge4& e : edges_) {
    if (e.max_vertex() >= order_) {
      throw std::invalid_argument("pattern edge " + e.to_string() + " outside [0, " +
                                  std::to_string(order_) + ")");
    }
    if (!seen.insert(e.key()).second) {
      throw std::invalid_argument("duplicate pattern edge " + e.to_string());
    }
    for (Vertex v : e.vertices()) covered[v] = true;
  }
  for (std::size_t v = 0; v < order_; ++v) {
    if (!covered[v]) {
      throw std::invalid_argument("pattern vertex " + std::to_string(v) + " lies in no edge");
    }
  }
}

Hypergraph4 Pattern::as_hypergraph() const {
  Hypergraph4 h(order_);
  for (const Edge4& e : edges_) h.add_edge(e);
  return h;
}

Pattern builtin_pattern(BuiltinPattern which) {
  switch (which) {
    case BuiltinPattern::P2:
      return Pattern(7, {Edge4(0, 1, 2, 3), Edge4(0, 1, 2, 4), Edge4(3, 4, 5, 6)}, "P2");
    case BuiltinPattern::P3:
      return Pattern(7,
                     {Edge4(0, 1, 2, 3), Edge4(0, 1, 2, 4), Edge4(0, 1, 2, 5),
                      Edge4(3, 4, 5, 6)},
                     "P3");
    case BuiltinPattern::P4:
      return Pattern(7,
                     {Edge4(0, 1, 2, 3), Edge4(0, 1, 2, 4), Edge4(0, 1, 2, 5),
                      Edge4(0, 1, 2, 6), Edge4(3, 4, 5, 6)},
                     "P4");
    case BuiltinPattern::C3:
      return Pattern(6, {Edge4(0, 1, 2, 3), Edge4(2, 3, 4, 5), Edge4(0, 1, 4, 5)}, "C3");
  }
  throw std::invalid_argument("unknown builtin pattern");
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

bool is_builtin_name(std::string_view name) {
  const auto u = upper(name);
  return u == "P2" || u == "P3" || u == "P4" || u == "C3";
}

Pattern builtin_pattern(std::string_view name) {
  const auto u = upper(name);
  if (u == "P2") return builtin_pattern(BuiltinPattern::P2);
  if (u == "P3") return builtin_pattern(BuiltinPattern::P3);
  if (u == "P4") return builtin_pattern(BuiltinPattern::P4);
  if (u == "C3") return builtin_pattern(BuiltinPattern::C3);
  throw std::invalid_argument("unknown pattern '" + std::string(name) +
                              "' (expected P2, P3, P4 or C3)");
}

Pattern pattern_from_hypergraph(const Hypergraph4& h, std::string name) {
  return Pattern(h.num_vertices(), h.sorted_edges(), std::move(name));
}

Count automorphism_count(const Pattern& pattern) {
  const std::size_t f = pattern.order();
  if (f > kMaxAutomorphismOrder) {
    throw std::invalid_argument("automorphism brute force is limited to " +
                                std::to_string(kMaxAutomorphismOrder) + " vertices");
  }
  std::unordered_set<std::uint64_t> edge_keys;
  for (const Edge4& e : pattern.edges()) edge_keys.insert(e.key());

  std::vector<Vertex> perm(f);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  Count count = 0;
  do {
    // A permutation maps edges injectively, so "into" already means "onto".
    const bool preserves = std::all_of(pattern.edges().begin(), pattern.edges().end(),
                                       [&](const Edge4& e) {
                                         const Edge4 image(perm[e[0]], perm[e[1]], perm[e[2]],
                                                           perm[e[3]]);
                                         return edge_keys.contains(image.key());
                                       });
    if (preserves) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace qsys
