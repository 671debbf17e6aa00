#include "qsys/turan.hpp"

#include "qsys/constructions.hpp"
#include "qsys/count.hpp"

namespace qsys {

std::string_view to_string(TuranStatus s) {
  return s == TuranStatus::exact ? "exact" : "lower_bound";
}

namespace {

class TuranSearch {
 public:
  TuranSearch(std::size_t n, const Pattern& pattern, const TuranBudget& budget)
      : pattern_(pattern),
        budget_(budget),
        current_(n),
        best_(n),
        start_(std::chrono::steady_clock::now()) {
    for_each_quadruple(n, [&](const Edge4& e) { candidates_.push_back(e); });
  }

  void seed(const Hypergraph4& witness) {
    best_ = witness;
    best_value_ = witness.num_edges();
  }

  // Returns true when the search space was exhausted.
  bool run() {
    std::size_t from = 0;
    if (!candidates_.empty() && !has_copy_through_added_edge(current_, pattern_, candidates_[0], false)) {
      current_.add_edge(candidates_[0]);
      from = 1;
    }
    dfs(from);
    return !aborted_;
  }

  const Hypergraph4& best() const { return best_; }
  Count best_value() const { return best_value_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if ((nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() - start_ > budget_.max_time) {
      return true;
    }
    return false;
  }

  void dfs(std::size_t i) {
    if (aborted_) return;
    if (out_of_budget()) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    const Count have = current_.num_edges();
    if (have > best_value_) {
      best_value_ = have;
      best_ = current_;
    }
    if (i == candidates_.size()) return;
    if (have + (candidates_.size() - i) <= best_value_) return;

    const Edge4& e = candidates_[i];
    if (!has_copy_through_added_edge(current_, pattern_, e, false)) {
      current_.add_edge(e);
      dfs(i + 1);
      current_.remove_edge(e);
    }
    dfs(i + 1);
  }

  const Pattern& pattern_;
  TuranBudget budget_;
  std::vector<Edge4> candidates_;
  Hypergraph4 current_;
  Hypergraph4 best_;
  Count best_value_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point start_;
};

std::optional<ConstructionResult> matching_construction(const Pattern& pattern, std::size_t n) {
  const auto& name = pattern.name();
  if (name == "P2") return turan_t4(n);
  if (name == "P3") return d4_construction(n);
  if (name == "P4" || name == "C3") {
    if (n == 0) return std::nullopt;
    return b4_construction(n);
  }
  return std::nullopt;
}

}  // namespace

TuranResult exact_ex(std::size_t n, const Pattern& pattern, const TuranBudget& budget) {
  if (pattern.order() > kMaxCountingOrder) {
    throw std::invalid_argument("Turán search supports patterns with at most " +
                                std::to_string(kMaxCountingOrder) + " vertices");
  }
  const auto start = std::chrono::steady_clock::now();
  TuranSearch search(n, pattern, budget);
  TuranResult result;
  result.n = n;
  result.pattern = pattern.name();

  if (auto c = matching_construction(pattern, n)) {
    // Only trusted as a seed once confirmed F-free.
    if (count_copies_generic(c->hypergraph, pattern).value == 0) {
      search.seed(c->hypergraph);
      result.seeded_from = c->name;
    }
  }

  const bool complete = search.run();
  result.status = complete ? TuranStatus::exact : TuranStatus::lower_bound;
  result.value = search.best_value();
  result.witness = search.best();
  result.nodes_explored = search.nodes();
  result.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count());
  if (count_copies_generic(result.witness, pattern).value != 0 ||
      result.witness.num_edges() != result.value) {
    throw std::logic_error("Turán witness failed verification");
  }
  return result;
}

}  // namespace qsys
