#include <algorithm>
#include <limits>
#include <thread>

#include "embedder.hpp"
#include "qsys/count.hpp"
#include "qsys/partition.hpp"

namespace qsys {

MinAddedEdgeResult min_added_edge_copies(const Hypergraph4& host, const Pattern& pattern,
                                         const Partition* partition, unsigned threads) {
  if (pattern.order() > kMaxCountingOrder) {
    throw std::invalid_argument("copy counting supports patterns with at most " +
                                std::to_string(kMaxCountingOrder) + " vertices");
  }
  if (partition != nullptr && partition->num_vertices() != host.num_vertices()) {
    throw std::invalid_argument("partition does not match the host's vertex count");
  }

  std::vector<Edge4> candidates;
  for_each_quadruple(host.num_vertices(), [&](const Edge4& e) {
    if (!host.has_edge(e)) candidates.push_back(e);
  });
  if (candidates.empty()) {
    throw std::invalid_argument("host has no non-edge to add");
  }

  const Count aut = automorphism_count(pattern);
  std::vector<Count> counts(candidates.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      detail::Embedder embedder(host, pattern, &candidates[i], false);
      const Count raw = embedder.count_anchored(candidates[i]);
      if (raw % aut != 0) throw std::logic_error("anchored injections not divisible by Aut");
      counts[i] = raw / aut;
    }
  };

  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(threads, candidates.size()));
  if (t == 1) {
    work(0, candidates.size());
  } else {
    std::vector<std::exception_ptr> errors(t);
    {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (candidates.size() + t - 1) / t;
      for (std::size_t k = 0; k < t; ++k) {
        pool.emplace_back([&, k] {
          try {
            work(std::min(candidates.size(), k * chunk),
                 std::min(candidates.size(), (k + 1) * chunk));
          } catch (...) {
            errors[k] = std::current_exception();
          }
        });
      }
    }
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  MinAddedEdgeResult result;
  result.candidates = candidates.size();
  result.c_value.method = CountMethod::generic;
  result.c_value.pattern = pattern.name();
  result.c_value.host = describe_host(host);
  result.c_value.value = *std::min_element(counts.begin(), counts.end());
  // Candidates were generated in lexicographic order.
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (counts[i] != result.c_value.value) continue;
    result.argmin_edges.push_back(candidates[i]);
    if (partition != nullptr) result.part_profiles.push_back(partition->profile(candidates[i]));
  }
  return result;
}

}  // namespace qsys
