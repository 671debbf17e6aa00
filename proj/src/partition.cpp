#include "qsys/partition.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

namespace qsys {

std::string_view to_string(PartitionMode mode) {
  switch (mode) {
    case PartitionMode::transversal4:
      return "transversal4";
    case PartitionMode::two_two:
      return "two_two";
    case PartitionMode::odd_odd:
      return "odd_odd";
  }
  return "?";
}

PartitionMode parse_partition_mode(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), '-', '_');
  if (s == "transversal4") return PartitionMode::transversal4;
  if (s == "two_two") return PartitionMode::two_two;
  if (s == "odd_odd") return PartitionMode::odd_odd;
  throw std::invalid_argument("unknown partition mode '" + std::string(text) +
                              "' (expected transversal4, two_two or odd_odd)");
}

int part_count(PartitionMode mode) { return mode == PartitionMode::transversal4 ? 4 : 2; }

Partition::Partition(PartitionMode mode, std::vector<std::uint8_t> assignment)
    : mode_(mode), assignment_(std::move(assignment)) {
  for (auto p : assignment_) {
    if (p >= part_count(mode_)) {
      throw std::invalid_argument("part id " + std::to_string(p) + " invalid for mode " +
                                  std::string(to_string(mode_)));
    }
  }
}

Partition Partition::from_sizes(PartitionMode mode, const std::vector<std::size_t>& sizes) {
  if (static_cast<int>(sizes.size()) != part_count(mode)) {
    throw std::invalid_argument("wrong number of part sizes for mode " +
                                std::string(to_string(mode)));
  }
  std::vector<std::uint8_t> assignment;
  for (std::size_t p = 0; p < sizes.size(); ++p)
    assignment.insert(assignment.end(), sizes[p], static_cast<std::uint8_t>(p));
  return Partition(mode, std::move(assignment));
}

std::vector<std::size_t> Partition::part_sizes() const {
  std::vector<std::size_t> sizes(num_parts(), 0);
  for (auto p : assignment_) ++sizes[p];
  return sizes;
}

void Partition::move(Vertex v, int part) {
  if (part < 0 || part >= num_parts()) throw std::invalid_argument("bad part id");
  assignment_.at(v) = static_cast<std::uint8_t>(part);
}

std::vector<int> Partition::profile(const Edge4& e) const {
  std::vector<int> counts(num_parts(), 0);
  for (Vertex v : e.vertices()) ++counts[assignment_.at(v)];
  return counts;
}

bool profile_conforms(PartitionMode mode, const std::vector<int>& c) {
  switch (mode) {
    case PartitionMode::transversal4:
      return c[0] == 1 && c[1] == 1 && c[2] == 1 && c[3] == 1;
    case PartitionMode::two_two:
      return c[0] == 2;
    case PartitionMode::odd_odd:
      return c[0] % 2 == 1;
  }
  return false;
}

bool Partition::conforms(const Edge4& e) const { return profile_conforms(mode_, profile(e)); }

std::string profile_string(const std::vector<int>& counts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "+" : "") << counts[i];
  return os.str();
}

Count conforming_tuple_count(const Partition& partition) {
  const auto s = partition.part_sizes();
  switch (partition.mode()) {
    case PartitionMode::transversal4:
      return checked_mul(checked_mul(s[0], s[1]), checked_mul(s[2], s[3]));
    case PartitionMode::two_two:
      return checked_mul(binomial(s[0], 2), binomial(s[1], 2));
    case PartitionMode::odd_odd:
      return checked_add(checked_mul(binomial(s[0], 3), s[1]),
                         checked_mul(s[0], binomial(s[1], 3)));
  }
  return 0;
}

namespace {

void require_same_order(const Hypergraph4& h, const Partition& partition) {
  if (partition.num_vertices() != h.num_vertices()) {
    throw std::invalid_argument("partition covers " + std::to_string(partition.num_vertices()) +
                                " vertices but the host has " +
                                std::to_string(h.num_vertices()));
  }
}

}  // namespace

Decomposition decompose(const Hypergraph4& h, const Partition& partition) {
  require_same_order(h, partition);
  Decomposition d;
  for (const Edge4& e : h.sorted_edges()) (partition.conforms(e) ? d.good : d.bad).push_back(e);
  d.missing = checked_sub(conforming_tuple_count(partition), d.good.size());
  return d;
}

void for_each_missing(const Hypergraph4& h, const Partition& partition,
                      const std::function<void(const Edge4&)>& fn) {
  require_same_order(h, partition);
  for_each_quadruple(h.num_vertices(), [&](const Edge4& e) {
    if (partition.conforms(e) && !h.has_edge(e)) fn(e);
  });
}

std::vector<Edge4> missing_tuples(const Hypergraph4& h, const Partition& partition) {
  std::vector<Edge4> out;
  for_each_missing(h, partition, [&](const Edge4& e) { out.push_back(e); });
  return out;
}

Count partition_objective(const Hypergraph4& h, const Partition& partition) {
  require_same_order(h, partition);
  Count good = 0;
  for (const Edge4& e : h.edges())
    if (partition.conforms(e)) ++good;
  return good;
}

namespace {

struct Move {
  long long gain = 0;
  Vertex vertex = 0;
  int part = 0;
};

// Best strictly improving single-vertex move, ties to the lowest (vertex, part).
std::optional<Move> best_move(const Hypergraph4& h, const Partition& p) {
  const int parts = p.num_parts();
  std::optional<Move> best;
  std::vector<long long> gain(parts);
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    const int from = p.part_of(v);
    std::fill(gain.begin(), gain.end(), 0);
    for (const Edge4& e : h.incident(v)) {
      auto counts = p.profile(e);
      const bool before = profile_conforms(p.mode(), counts);
      --counts[from];
      for (int to = 0; to < parts; ++to) {
        if (to == from) continue;
        ++counts[to];
        gain[to] += static_cast<long long>(profile_conforms(p.mode(), counts)) -
                    static_cast<long long>(before);
        --counts[to];
      }
    }
    for (int to = 0; to < parts; ++to) {
      if (to == from || gain[to] <= 0) continue;
      if (!best || gain[to] > best->gain) best = Move{gain[to], v, to};
    }
  }
  return best;
}

Partition hill_climb(const Hypergraph4& h, Partition p) {
  while (auto m = best_move(h, p)) p.move(m->vertex, m->part);
  return p;
}

StabilityReport make_report(const Hypergraph4& h, Partition partition) {
  const Decomposition d = decompose(h, partition);
  StabilityReport r{std::move(partition)};
  r.objective = d.good.size();
  r.bad = d.bad.size();
  r.missing = d.missing;
  r.edit_distance = checked_add(r.bad, r.missing);
  r.locally_optimal = is_locally_optimal(h, r.partition);
  return r;
}

}  // namespace

bool is_locally_optimal(const Hypergraph4& h, const Partition& partition) {
  require_same_order(h, partition);
  return !best_move(h, partition).has_value();
}

StabilityReport optimize_partition(const Hypergraph4& h, PartitionMode mode,
                                   const PartitionSearchOptions& options) {
  const std::size_t n = h.num_vertices();
  if (n == 0) throw std::invalid_argument("partition search needs at least one vertex");
  if (options.restarts == 0) throw std::invalid_argument("restarts must be at least 1");
  const int parts = part_count(mode);

  std::vector<Partition> starts;
  std::mt19937_64 rng(options.seed);
  for (unsigned r = 0; r < options.restarts; ++r) {
    std::vector<std::uint8_t> assignment(n);
    for (auto& a : assignment) a = static_cast<std::uint8_t>(rng() % parts);
    starts.emplace_back(mode, std::move(assignment));
  }
  if (options.hint) {
    if (options.hint->mode() != mode) throw std::invalid_argument("hint has a different mode");
    require_same_order(h, *options.hint);
    starts.push_back(*options.hint);
  }

  std::vector<std::optional<Partition>> results(starts.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, starts.size()));
  auto worker = [&](unsigned t) {
    for (std::size_t i = t; i < starts.size(); i += threads) results[i] = hill_climb(h, starts[i]);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  std::size_t best = 0;
  Count best_objective = partition_objective(h, *results[0]);
  for (std::size_t i = 1; i < results.size(); ++i) {
    const Count obj = partition_objective(h, *results[i]);
    if (obj > best_objective) {
      best = i;
      best_objective = obj;
    }
  }
  StabilityReport report = make_report(h, std::move(*results[best]));
  report.restarts = static_cast<unsigned>(starts.size());
  report.seed = options.seed;
  return report;
}

StabilityReport exact_partition(const Hypergraph4& h, PartitionMode mode) {
  const std::size_t n = h.num_vertices();
  const int parts = part_count(mode);
  const std::size_t limit = parts == 4 ? 12 : 24;
  if (n > limit) {
    throw std::invalid_argument("exact partition search for mode " +
                                std::string(to_string(mode)) + " is limited to n <= " +
                                std::to_string(limit));
  }
  if (n == 0) throw std::invalid_argument("partition search needs at least one vertex");

  // Edges are scored once their largest vertex is assigned.
  std::vector<std::vector<Edge4>> closing(n);
  for (const Edge4& e : h.edges()) closing[e.max_vertex()].push_back(e);
  std::vector<Count> closing_after(n + 1, 0);
  for (std::size_t v = n; v-- > 0;) closing_after[v] = closing_after[v + 1] + closing[v].size();

  std::vector<std::uint8_t> assignment(n, 0), best_assignment(n, 0);
  long long best = -1;

  auto conforms = [&](const Edge4& e) {
    std::vector<int> counts(parts, 0);
    for (Vertex v : e.vertices()) ++counts[assignment[v]];
    return profile_conforms(mode, counts);
  };

  // Parts are interchangeable in every mode, so vertex v only opens part
  // (highest used + 1); this enumerates each set partition once.
  auto dfs = [&](auto&& self, std::size_t v, int used, Count score) -> void {
    if (static_cast<long long>(score + closing_after[v]) <= best) return;
    if (v == n) {
      best = static_cast<long long>(score);
      best_assignment = assignment;
      return;
    }
    const int top = std::min(used + 1, parts);
    for (int p = 0; p < top; ++p) {
      assignment[v] = static_cast<std::uint8_t>(p);
      Count gained = 0;
      for (const Edge4& e : closing[v]) gained += conforms(e);
      self(self, v + 1, std::max(used, p + 1), score + gained);
    }
  };
  dfs(dfs, 0, 0, 0);

  StabilityReport report = make_report(h, Partition(mode, best_assignment));
  report.exhaustive = true;
  return report;
}

}  // namespace qsys
