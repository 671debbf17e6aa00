#include <algorithm>
#include <numeric>
#include <sstream>

#include "embedder.hpp"
#include "qsys/count.hpp"

namespace qsys {
namespace detail {

std::vector<EmbedStep> plan_embedding(const Pattern& pattern, std::optional<int> first) {
  const auto& edges = pattern.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<char> covered(pattern.order(), 0);
  std::vector<char> placed(m, 0);
  std::vector<EmbedStep> plan;

  auto covered_count = [&](int i) {
    int c = 0;
    for (Vertex v : edges[i].vertices()) c += covered[v];
    return c;
  };
  auto overlap = [&](int i) {
    std::size_t total = 0;
    for (int j = 0; j < m; ++j)
      if (j != i) total += edges[i].intersection_size(edges[j]);
    return total;
  };

  auto place = [&](int i) {
    EmbedStep step;
    step.edge = i;
    for (Vertex v : edges[i].vertices()) (covered[v] ? step.mapped : step.fresh).push_back(v);
    for (Vertex v : step.fresh) covered[v] = 1;
    placed[i] = 1;
    for (int j = 0; j < m; ++j) {
      if (!placed[j] && covered_count(j) == 4) {
        step.checks.push_back(j);
        placed[j] = 1;
      }
    }
    plan.push_back(std::move(step));
  };

  if (first) {
    place(*first);
  }
  while (true) {
    int best = -1;
    int best_cov = -1;
    std::size_t best_overlap = 0;
    for (int i = 0; i < m; ++i) {
      if (placed[i]) continue;
      const int c = covered_count(i);
      const std::size_t o = overlap(i);
      if (c > best_cov || (c == best_cov && o > best_overlap)) {
        best = i;
        best_cov = c;
        best_overlap = o;
      }
    }
    if (best < 0) break;
    place(best);
  }
  return plan;
}

Embedder::Embedder(const Hypergraph4& host, const Pattern& pattern, const Edge4* extra,
                   bool stop_at_first, bool use_index)
    : host_(host),
      pattern_(pattern),
      extra_(extra != nullptr && !host.has_edge(*extra) ? extra : nullptr),
      index_(use_index ? &host.index() : nullptr),
      stop_at_first_(stop_at_first),
      map_(pattern.order(), 0),
      used_(host.num_vertices(), 0) {
  if (extra_ != nullptr && extra_->max_vertex() >= host.num_vertices()) {
    throw std::out_of_range("edge " + extra_->to_string() + " outside the host");
  }
}

bool Embedder::is_edge(const Edge4& e) const {
  return host_.has_edge(e) || (extra_ != nullptr && *extra_ == e);
}

bool Embedder::checks_pass(const EmbedStep& s) const {
  for (int j : s.checks) {
    const Edge4& pe = pattern_.edges()[j];
    if (!is_edge(Edge4(map_[pe[0]], map_[pe[1]], map_[pe[2]], map_[pe[3]]))) return false;
  }
  return true;
}

Count Embedder::count_all() {
  count_ = 0;
  if (pattern_.order() > host_.num_vertices()) return 0;
  plan_ = plan_embedding(pattern_, std::nullopt);
  extend(0);
  return count_;
}

Count Embedder::count_anchored(const Edge4& anchor) {
  count_ = 0;
  if (pattern_.order() > host_.num_vertices()) return 0;
  if (!is_edge(anchor)) return 0;
  for (int g = 0; g < static_cast<int>(pattern_.num_edges()) && !stopped(); ++g) {
    plan_ = plan_embedding(pattern_, g);
    // Step 0 maps the anchor edge's four vertices onto the anchor in all orders.
    try_host_edge(0, anchor);
  }
  return count_;
}

void Embedder::extend(std::size_t step) {
  if (stopped()) return;
  if (step == plan_.size()) {
    count_ = checked_add(count_, 1);
    return;
  }
  const EmbedStep& s = plan_[step];
  if (s.fresh.empty()) {
    // Only reachable for an edge whose vertices were all introduced by
    // steps that did not list it as a check; plan_embedding never emits it.
    const Edge4& pe = pattern_.edges()[s.edge];
    if (is_edge(Edge4(map_[pe[0]], map_[pe[1]], map_[pe[2]], map_[pe[3]])) && checks_pass(s)) {
      extend(step + 1);
    }
    return;
  }

  if (s.mapped.empty()) {
    for (const Edge4& h : host_.edges()) {
      try_host_edge(step, h);
      if (stopped()) return;
    }
    if (extra_ != nullptr) try_host_edge(step, *extra_);
    return;
  }

  if (index_ != nullptr && s.mapped.size() == 3) {
    const Vertex a = map_[s.mapped[0]], b = map_[s.mapped[1]], c = map_[s.mapped[2]];
    for (Vertex w : index_->triple_link(a, b, c)) {
      try_host_edge(step, Edge4(a, b, c, w));
      if (stopped()) return;
    }
    if (extra_ != nullptr && extra_->contains(a) && extra_->contains(b) && extra_->contains(c)) {
      try_host_edge(step, *extra_);
    }
    return;
  }
  if (index_ != nullptr && s.mapped.size() == 2) {
    const Vertex a = map_[s.mapped[0]], b = map_[s.mapped[1]];
    for (const Edge4& h : index_->pair_edges(a, b)) {
      try_host_edge(step, h);
      if (stopped()) return;
    }
    if (extra_ != nullptr && extra_->contains(a) && extra_->contains(b)) {
      try_host_edge(step, *extra_);
    }
    return;
  }

  // Scan the shortest incidence list among the mapped images.
  Vertex pivot = map_[s.mapped[0]];
  for (Vertex pv : s.mapped) {
    if (host_.incident(map_[pv]).size() < host_.incident(pivot).size()) pivot = map_[pv];
  }
  auto contains_mapped = [&](const Edge4& h) {
    return std::all_of(s.mapped.begin(), s.mapped.end(),
                       [&](Vertex pv) { return h.contains(map_[pv]); });
  };
  for (const Edge4& h : host_.incident(pivot)) {
    if (contains_mapped(h)) try_host_edge(step, h);
    if (stopped()) return;
  }
  if (extra_ != nullptr && contains_mapped(*extra_)) try_host_edge(step, *extra_);
}

void Embedder::try_host_edge(std::size_t step, const Edge4& h) {
  const EmbedStep& s = plan_[step];
  std::array<Vertex, 4> targets{};
  std::size_t k = 0;
  for (Vertex hv : h.vertices()) {
    const bool is_image = std::any_of(s.mapped.begin(), s.mapped.end(),
                                      [&](Vertex pv) { return map_[pv] == hv; });
    if (is_image) continue;
    if (used_[hv]) return;
    targets[k++] = hv;
  }
  if (k != s.fresh.size()) return;
  assign_fresh(step, targets);
}

void Embedder::assign_fresh(std::size_t step, std::array<Vertex, 4> order) {
  const EmbedStep& s = plan_[step];
  const std::size_t k = s.fresh.size();
  // order[0..k) is increasing, since h's vertices are.
  do {
    for (std::size_t i = 0; i < k; ++i) {
      map_[s.fresh[i]] = order[i];
      used_[order[i]] = 1;
    }
    if (checks_pass(s)) extend(step + 1);
    for (std::size_t i = 0; i < k; ++i) used_[order[i]] = 0;
    if (stopped()) return;
  } while (std::next_permutation(order.begin(), order.begin() + k));
}

}  // namespace detail

std::string_view to_string(CountMethod m) {
  return m == CountMethod::generic ? "generic" : "specialized";
}

std::string describe_host(const Hypergraph4& h) {
  std::ostringstream os;
  os << "n=" << h.num_vertices() << ",m=" << h.num_edges();
  return os.str();
}

namespace {

void require_countable(const Pattern& pattern) {
  if (pattern.order() > kMaxCountingOrder) {
    throw std::invalid_argument("copy counting supports patterns with at most " +
                                std::to_string(kMaxCountingOrder) + " vertices");
  }
}

Count divide_by_automorphisms(Count injections, const Pattern& pattern) {
  const Count aut = automorphism_count(pattern);
  if (injections % aut != 0) {
    throw std::logic_error("injection count " + std::to_string(injections) +
                           " not divisible by Aut = " + std::to_string(aut));
  }
  return injections / aut;
}

}  // namespace

Count count_injections(const Hypergraph4& host, const Pattern& pattern) {
  require_countable(pattern);
  detail::Embedder embedder(host, pattern, nullptr, false);
  return embedder.count_all();
}

CopyCount count_copies_generic(const Hypergraph4& host, const Pattern& pattern) {
  CopyCount out;
  out.method = CountMethod::generic;
  out.pattern = pattern.name();
  out.host = describe_host(host);
  out.value = divide_by_automorphisms(count_injections(host, pattern), pattern);
  return out;
}

CopyCount count_copies(const Hypergraph4& host, const Pattern& pattern) {
  if (is_builtin_name(pattern.name())) {
    const auto& name = pattern.name();
    if (name == "P2") return count_P2(host);
    if (name == "P3") return count_P3(host);
    if (name == "P4") return count_P4(host);
    if (name == "C3") return count_C3(host);
  }
  return count_copies_generic(host, pattern);
}

CopyCount count_through_edge(const Hypergraph4& host, const Pattern& pattern, const Edge4& e) {
  if (!host.has_edge(e)) {
    throw std::invalid_argument("edge " + e.to_string() + " is not in the host");
  }
  CopyCount out;
  out.method = CountMethod::generic;
  out.pattern = pattern.name();
  out.host = describe_host(host);
  out.value = count_through_added_edge(host, pattern, e);
  return out;
}

Count count_through_added_edge(const Hypergraph4& host, const Pattern& pattern, const Edge4& e) {
  require_countable(pattern);
  detail::Embedder embedder(host, pattern, &e, false);
  return divide_by_automorphisms(embedder.count_anchored(e), pattern);
}

bool has_copy_through_added_edge(const Hypergraph4& host, const Pattern& pattern,
                                 const Edge4& e, bool use_index) {
  require_countable(pattern);
  detail::Embedder embedder(host, pattern, &e, true, use_index);
  return embedder.count_anchored(e) > 0;
}

}  // namespace qsys
