#ifndef QSYS_REPORT_HPP
#define QSYS_REPORT_HPP

// JSON shapes for the command-line reports. Counts are emitted as decimal
// strings so consumers never truncate them.

#include <cstdint>
#include <optional>

#include "json.hpp"
#include "qsys/constructions.hpp"
#include "qsys/count.hpp"
#include "qsys/partition.hpp"
#include "qsys/turan.hpp"

namespace qsys {

nlohmann::ordered_json edge_json(const Edge4& e);

/// {pattern, host, method, count, elapsed_ms, seed}
nlohmann::ordered_json count_report_json(const CopyCount& c, double elapsed_ms, std::uint64_t seed);

/// {pattern, host, method, c_value, candidates, argmin_edges, part_profiles, seed}
nlohmann::ordered_json min_added_json(const MinAddedEdgeResult& r, std::uint64_t seed);

/// {mode, objective, part_sizes, B_size, M_size, edit_distance, restarts,
///  seed, locally_optimal, exhaustive}
nlohmann::ordered_json stability_json(const StabilityReport& r);

/// {n, pattern, value, status, nodes_explored, elapsed_ms, seeded_from, seed}
nlohmann::ordered_json turan_json(const TuranResult& r, std::uint64_t seed);

/// {construction, n, a, q, part_ranges, added_edges, edges, seed}
nlohmann::ordered_json sidecar_json(const ConstructionResult& r, std::uint64_t seed);

}  // namespace qsys

#endif  // QSYS_REPORT_HPP
