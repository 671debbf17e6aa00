#include "qsys/report.hpp"

namespace qsys {

using json = nlohmann::ordered_json;

json edge_json(const Edge4& e) { return json::array({e[0], e[1], e[2], e[3]}); }

json count_report_json(const CopyCount& c, double elapsed_ms, std::uint64_t seed) {
  return json{{"pattern", c.pattern},
              {"host", c.host},
              {"method", std::string(to_string(c.method))},
              {"count", std::to_string(c.value)},
              {"elapsed_ms", elapsed_ms},
              {"seed", std::to_string(seed)}};
}

json min_added_json(const MinAddedEdgeResult& r, std::uint64_t seed) {
  json edges = json::array();
  for (const Edge4& e : r.argmin_edges) edges.push_back(edge_json(e));
  json profiles = json::array();
  for (const auto& p : r.part_profiles) profiles.push_back(profile_string(p));
  return json{{"pattern", r.c_value.pattern},
              {"host", r.c_value.host},
              {"method", std::string(to_string(r.c_value.method))},
              {"c_value", std::to_string(r.c_value.value)},
              {"candidates", std::to_string(r.candidates)},
              {"argmin_edges", edges},
              {"part_profiles", profiles},
              {"seed", std::to_string(seed)}};
}

json stability_json(const StabilityReport& r) {
  json sizes = json::array();
  for (std::size_t s : r.partition.part_sizes()) sizes.push_back(s);
  return json{{"mode", std::string(to_string(r.partition.mode()))},
              {"objective", std::to_string(r.objective)},
              {"part_sizes", sizes},
              {"assignment", r.partition.assignment()},
              {"B_size", std::to_string(r.bad)},
              {"M_size", std::to_string(r.missing)},
              {"edit_distance", std::to_string(r.edit_distance)},
              {"restarts", r.restarts},
              {"seed", std::to_string(r.seed)},
              {"locally_optimal", r.locally_optimal},
              {"exhaustive", r.exhaustive}};
}

json turan_json(const TuranResult& r, std::uint64_t seed) {
  return json{{"n", r.n},
              {"pattern", r.pattern},
              {"value", std::to_string(r.value)},
              {"status", std::string(to_string(r.status))},
              {"nodes_explored", std::to_string(r.nodes_explored)},
              {"elapsed_ms", r.elapsed_ms},
              {"seeded_from", r.seeded_from},
              {"seed", std::to_string(seed)}};
}

json sidecar_json(const ConstructionResult& r, std::uint64_t seed) {
  json ranges = json::array();
  for (const auto& [first, last] : r.part_ranges()) ranges.push_back(json::array({first, last}));
  json added = json::array();
  for (const Edge4& e : r.added_edges) added.push_back(edge_json(e));
  return json{{"construction", r.name},
              {"n", r.params.n},
              {"a", r.params.a ? json(*r.params.a) : json(nullptr)},
              {"q", r.params.q},
              {"part_ranges", ranges},
              {"added_edges", added},
              {"edges", std::to_string(r.hypergraph.num_edges())},
              {"seed", std::to_string(seed)}};
}

}  // namespace qsys
