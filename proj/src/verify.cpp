#include "qsys/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "qsys/constructions.hpp"
#include "qsys/count.hpp"
#include "qsys/random.hpp"
#include "qsys/report.hpp"
#include "qsys/turan.hpp"

namespace qsys {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string expected;
  std::string actual;
  std::string detail;

  // Marks the check failed and appends to the detail.
  void fail(const std::string& what) {
    passed = false;
    if (detail.empty()) {
      detail = what;
    } else if (detail.size() < 400) {
      detail += "; " + what;
    }
  }
};

std::string fixed(double x, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

template <typename T>
std::string join(const std::vector<T>& items, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? sep : "") << items[i];
  return os.str();
}

// Shared state for one run: minimum-added-edge results are expensive and
// several checks need the same ones.
class Context {
 public:
  explicit Context(const VerifyOptions& options) : options_(options) {}

  const VerifyOptions& options() const { return options_; }

  static ConstructionResult base_for(const std::string& pattern, std::size_t n) {
    if (pattern == "P2") return turan_t4(n);
    if (pattern == "P3") return d4_construction(n);
    return b4_construction(n);
  }

  const MinAddedEdgeResult& c_star(const std::string& pattern, std::size_t n) {
    const auto key = std::make_pair(pattern, n);
    auto it = c_star_.find(key);
    if (it == c_star_.end()) {
      const auto base = base_for(pattern, n);
      it = c_star_
               .emplace(key, min_added_edge_copies(base.hypergraph, builtin_pattern(pattern),
                                                   &base.partition, options_.threads))
               .first;
    }
    return it->second;
  }

  // n * |1 - c*(n, F) / lead(n, F)|
  double lead_product(const std::string& pattern, std::size_t n, Count value) {
    const FormulaValue lead = c_formula("c" + pattern + "_lead", n);
    const double num = static_cast<double>(lead.numerator);
    const double scaled = static_cast<double>(value) * static_cast<double>(lead.denominator);
    return static_cast<double>(n) * std::fabs(num - scaled) / num;
  }

 private:
  VerifyOptions options_;
  std::map<std::pair<std::string, std::size_t>, MinAddedEdgeResult> c_star_;
};

// ---------------------------------------------------------------------------

Outcome check_edge_counts(Context& ctx) {
  Outcome out;
  out.expected = "|T4|=t4, |D4|=d4, |B4|=b4 for n in [4,64]";
  std::string tamper_note;
  std::size_t compared = 0;
  for (std::size_t n = 4; n <= 64; ++n) {
    auto t4 = turan_t4(n);
    if (ctx.options().tamper && n == 12) {
      const Edge4 victim = t4.hypergraph.sorted_edges().front();
      t4.hypergraph.remove_edge(victim);
      tamper_note = "tampered T4(12) is missing " + victim.to_string();
    }
    const std::pair<const char*, std::pair<Count, Count>> rows[] = {
        {"t4", {t4.hypergraph.num_edges(), t4_formula(n).numerator}},
        {"d4", {d4_construction(n).hypergraph.num_edges(), d4_formula(n).numerator}},
        {"b4", {b4_construction(n).hypergraph.num_edges(), b4_formula(n).numerator}},
    };
    for (const auto& [name, values] : rows) {
      ++compared;
      if (values.first != values.second) {
        out.fail(std::string(name) + "(" + std::to_string(n) + "): formula " +
                 std::to_string(values.second) + ", built " + std::to_string(values.first));
      }
    }
  }
  if (!tamper_note.empty()) out.detail += (out.detail.empty() ? "" : "; ") + tamper_note;
  out.actual = std::to_string(compared) + " comparisons" +
               (out.passed ? ", all equal" : ", mismatches found");
  return out;
}

Outcome check_pattern_freeness(Context&) {
  Outcome out;
  out.expected = "0 copies for n in {8,12,16,20}";
  std::vector<std::string> seen;
  for (std::size_t n : {8, 12, 16, 20}) {
    const auto t4 = turan_t4(n);
    const auto d4 = d4_construction(n);
    const auto b4 = b4_construction(n);
    const std::pair<const char*, Count> rows[] = {
        {"P2/T4", count_P2(t4.hypergraph).value},
        {"P3/D4", count_P3(d4.hypergraph).value},
        {"P4/B4", count_P4(b4.hypergraph).value},
        {"C3/B4", count_C3(b4.hypergraph).value},
    };
    for (const auto& [name, value] : rows) {
      if (value != 0) out.fail(std::string(name) + " n=" + std::to_string(n) + ": " +
                               std::to_string(value));
      seen.push_back(std::to_string(value));
    }
  }
  out.actual = "counts " + join(seen);
  return out;
}

Outcome check_oracle_equivalence(Context& ctx) {
  Outcome out;
  out.expected = "specialized == generic on 200 random hosts";
  static constexpr double kDensities[] = {0.1, 0.3, 0.5};
  const Pattern patterns[] = {builtin_pattern("P2"), builtin_pattern("P3"), builtin_pattern("P4"),
                              builtin_pattern("C3")};
  std::size_t mismatches = 0;
  Count total = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 7 + (i / 3) % 6;
    const double density = kDensities[i % 3];
    const auto h = random_hypergraph(n, density, ctx.options().seed + i);
    for (const Pattern& p : patterns) {
      const Count fast = count_copies(h, p).value;
      const Count slow = count_copies_generic(h, p).value;
      total = checked_add(total, slow);
      if (fast != slow) {
        ++mismatches;
        out.fail("host " + std::to_string(i) + " (n=" + std::to_string(n) + ", p=" +
                 fixed(density, 1) + ") " + p.name() + ": specialized " + std::to_string(fast) +
                 ", generic " + std::to_string(slow));
      }
    }
  }
  out.actual = std::to_string(mismatches) + " mismatches over 800 counts (sum " +
               std::to_string(total) + ")";
  return out;
}

Outcome check_automorphisms(Context&) {
  Outcome out;
  out.expected = "P2=24 P3=36 P4=144 C3=48";
  const std::pair<const char*, Count> want[] = {{"P2", 24}, {"P3", 36}, {"P4", 144}, {"C3", 48}};
  std::vector<std::string> got;
  for (const auto& [name, value] : want) {
    const Pattern p = builtin_pattern(name);
    const Count aut = automorphism_count(p);
    // Injections of F into itself are exactly its automorphisms.
    const Count self = count_injections(p.as_hypergraph(), p);
    got.push_back(std::string(name) + "=" + std::to_string(aut));
    if (aut != value) out.fail(std::string(name) + ": brute force gives " + std::to_string(aut));
    if (self != aut) {
      out.fail(std::string(name) + ": self-injections " + std::to_string(self) +
               " differ from " + std::to_string(aut));
    }
  }
  out.actual = join(got);
  return out;
}

// Whether an edge has exactly three points in some part of maximum size.
bool three_in_larger(const Partition& partition, const std::vector<int>& profile) {
  const auto sizes = partition.part_sizes();
  const std::size_t largest = *std::max_element(sizes.begin(), sizes.end());
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (profile[i] == 3 && sizes[i] == largest) return true;
  return false;
}

std::string profile_histogram(const std::vector<std::vector<int>>& profiles) {
  std::map<std::string, std::size_t> counts;
  for (const auto& p : profiles) ++counts[profile_string(p)];
  std::vector<std::string> parts;
  for (const auto& [k, v] : counts) parts.push_back(k + ":" + std::to_string(v));
  return join(parts, ",");
}

Outcome check_cp3_closed_form(Context& ctx) {
  Outcome out;
  std::vector<std::string> want, got;
  for (std::size_t n : {10, 12, 14, 16}) {
    const Count formula = c_formula("cP3_exact", n).numerator;
    const auto& r = ctx.c_star("P3", n);
    want.push_back(std::to_string(formula));
    got.push_back(std::to_string(r.c_value.value));
    if (r.c_value.value != formula) {
      out.fail("n=" + std::to_string(n) + ": oracle " + std::to_string(r.c_value.value) +
               ", closed form " + std::to_string(formula) + " (argmins " +
               profile_histogram(r.part_profiles) + ")");
    }
    const auto partition = Context::base_for("P3", n).partition;
    const auto bad = std::count_if(r.part_profiles.begin(), r.part_profiles.end(),
                                   [&](const auto& p) { return !three_in_larger(partition, p); });
    if (bad != 0) {
      out.fail("n=" + std::to_string(n) + ": " + std::to_string(bad) + " of " +
               std::to_string(r.argmin_edges.size()) +
               " argmin edges lack three points in the larger part (" +
               profile_histogram(r.part_profiles) + ")");
    }
  }
  out.expected = "c*=" + join(want, "/") + ", argmins 3 in larger part";
  out.actual = "c*=" + join(got, "/");
  return out;
}

Outcome check_argmin_p2(Context& ctx) {
  Outcome out;
  out.expected = "every argmin edge has two points in each of two parts";
  std::vector<std::string> got;
  for (std::size_t n : {12, 16}) {
    const auto& r = ctx.c_star("P2", n);
    got.push_back("n=" + std::to_string(n) + " c*=" + std::to_string(r.c_value.value) + " [" +
                  profile_histogram(r.part_profiles) + "]");
    for (std::size_t i = 0; i < r.argmin_edges.size(); ++i) {
      const auto& p = r.part_profiles[i];
      if (std::count(p.begin(), p.end(), 2) != 2) {
        out.fail("n=" + std::to_string(n) + ": argmin " + r.argmin_edges[i].to_string() +
                 " has profile " + profile_string(p));
        break;
      }
    }
  }
  out.actual = join(got, "; ");
  return out;
}

// Largest of the P4 products n|1 - c*/lead| over n in {12,16,20}.
double p4_product_bound(Context& ctx) {
  double bound = 0;
  for (std::size_t n : {12, 16, 20})
    bound = std::max(bound, ctx.lead_product("P4", n, ctx.c_star("P4", n).c_value.value));
  return bound;
}

Outcome check_leading_term_ratios(Context& ctx) {
  Outcome out;
  out.expected = "max/min of n|1-c*/lead| over n=12,16,20 at most 4";
  std::vector<std::string> got;
  for (const char* pattern : {"P2", "P4", "C3"}) {
    std::vector<double> products;
    std::vector<std::string> shown;
    for (std::size_t n : {12, 16, 20}) {
      const Count value = ctx.c_star(pattern, n).c_value.value;
      products.push_back(ctx.lead_product(pattern, n, value));
      shown.push_back(std::to_string(value) + "->" + fixed(products.back(), 3));
    }
    const double lo = *std::min_element(products.begin(), products.end());
    const double hi = *std::max_element(products.begin(), products.end());
    const bool ok = hi == 0 || (lo > 0 && hi / lo <= 4.0);
    got.push_back(std::string(pattern) + " " + join(shown, ",") + " ratio " +
                  (lo > 0 ? fixed(hi / lo, 3) : std::string(hi == 0 ? "0" : "inf")));
    if (!ok) out.fail(std::string(pattern) + ": products " + join(shown, ","));
  }
  out.actual = join(got, "; ");
  return out;
}

// Copies of F containing both e and f, by inclusion-exclusion.
Count copies_with_both(const Hypergraph4& h, const Pattern& p, const Edge4& e, const Edge4& f) {
  Hypergraph4 without_e = h, without_f = h;
  without_e.remove_edge(e);
  without_f.remove_edge(f);
  Hypergraph4 without_both = without_e;
  without_both.remove_edge(f);
  const Count plus = checked_add(count_copies(h, p).value, count_copies(without_both, p).value);
  const Count minus =
      checked_add(count_copies(without_e, p).value, count_copies(without_f, p).value);
  return checked_sub(plus, minus);
}

struct SharpnessFacts {
  Count total = 0;       // copies in H
  Count base_total = 0;  // copies in the base family
  std::vector<Count> per_edge;
  Count sum_per_edge = 0;
  Count shared = 0;  // copies containing two added edges, summed over pairs
  std::size_t max_overlap = 0;
};

SharpnessFacts sharpness_facts(const ConstructionResult& c, const Pattern& p) {
  SharpnessFacts f;
  f.total = count_copies(c.hypergraph, p).value;
  Hypergraph4 base = c.hypergraph;
  for (const Edge4& e : c.added_edges) base.remove_edge(e);
  f.base_total = count_copies(base, p).value;
  for (const Edge4& e : c.added_edges) {
    f.per_edge.push_back(count_through_edge(c.hypergraph, p, e).value);
    f.sum_per_edge = checked_add(f.sum_per_edge, f.per_edge.back());
  }
  for (std::size_t i = 0; i < c.added_edges.size(); ++i) {
    for (std::size_t j = i + 1; j < c.added_edges.size(); ++j) {
      f.max_overlap =
          std::max(f.max_overlap, c.added_edges[i].intersection_size(c.added_edges[j]));
      f.shared = checked_add(
          f.shared, copies_with_both(c.hypergraph, p, c.added_edges[i], c.added_edges[j]));
    }
  }
  return f;
}

std::string describe(const SharpnessFacts& f) {
  return "total " + std::to_string(f.total) + ", per-edge [" + join(f.per_edge, ",") +
         "], shared " + std::to_string(f.shared) + ", max overlap " +
         std::to_string(f.max_overlap);
}

void require_sum_identity(Outcome& out, const SharpnessFacts& f) {
  const Count fresh = checked_sub(f.total, f.base_total);
  if (f.shared != 0) out.fail(std::to_string(f.shared) + " copies contain two added edges");
  if (fresh != f.sum_per_edge) {
    out.fail("new copies " + std::to_string(fresh) + " != sum of per-edge counts " +
             std::to_string(f.sum_per_edge));
  }
}

Outcome check_sharpness_p2(Context&) {
  Outcome out;
  out.expected = "no copy holds two added edges; new copies = sum per-edge";
  const auto c = sharpness_p2(12, 2);
  const auto f = sharpness_facts(c, builtin_pattern("P2"));
  require_sum_identity(out, f);
  out.actual = describe(f);
  return out;
}

Outcome check_sharpness_p3(Context& ctx) {
  Outcome out;
  const Count c_star = ctx.c_star("P3", 16).c_value.value;
  out.expected = "disjoint added edges; new = sum per-edge; per-edge >= " + std::to_string(c_star);
  const auto c = sharpness_p3(16, 2);
  const auto f = sharpness_facts(c, builtin_pattern("P3"));
  require_sum_identity(out, f);
  if (f.max_overlap != 0) out.fail("added edges intersect");
  for (Count x : f.per_edge)
    if (x < c_star) out.fail("per-edge count " + std::to_string(x) + " below c*");
  out.actual = describe(f);
  return out;
}

Outcome check_sharpness_p4(Context& ctx) {
  Outcome out;
  const double bound = p4_product_bound(ctx);
  out.expected = "12|1-x/lead| <= " + fixed(bound, 3) + " (largest P4 product of c*)";
  const auto c = sharpness_p4(12, 1);
  const auto f = sharpness_facts(c, builtin_pattern("P4"));
  const double product = ctx.lead_product("P4", 12, f.per_edge.at(0));
  if (product > bound) out.fail("product " + fixed(product, 3) + " exceeds " + fixed(bound, 3));
  out.actual = "x=" + std::to_string(f.per_edge.at(0)) + ", product " + fixed(product, 3);
  return out;
}

Outcome check_sharpness_c3(Context&) {
  Outcome out;
  const std::size_t q = greedy_c3_packing(12).size();
  out.expected = "q=" + std::to_string(q) + ": overlaps <= 1, per-edge <= 108, no shared copy";
  const auto c = sharpness_c3(12, q);
  const auto f = sharpness_facts(c, builtin_pattern("C3"));
  require_sum_identity(out, f);
  if (f.max_overlap > 1) out.fail("two added sets share " + std::to_string(f.max_overlap));
  for (Count x : f.per_edge)
    if (x > 108) out.fail("per-edge count " + std::to_string(x) + " above 108");
  out.actual = describe(f);
  return out;
}

Outcome check_desk(Context& ctx) {
  Outcome out;
  out.expected = "copies >= q * c*(n,F) on every sharpness host";
  struct Host {
    const char* pattern;
    ConstructionResult c;
  };
  const std::size_t q_c3 = greedy_c3_packing(12).size();
  const Host hosts[] = {{"P2", sharpness_p2(12, 2)},
                        {"P3", sharpness_p3(16, 2)},
                        {"P4", sharpness_p4(12, 1)},
                        {"C3", sharpness_c3(12, q_c3)}};
  std::vector<std::string> got;
  for (const auto& [pattern, c] : hosts) {
    const std::size_t n = c.hypergraph.num_vertices();
    const Count total = count_copies(c.hypergraph, builtin_pattern(pattern)).value;
    const Count need = checked_mul(c.params.q, ctx.c_star(pattern, n).c_value.value);
    got.push_back(std::string(pattern) + " " + std::to_string(total) + ">=" +
                  std::to_string(need));
    if (total < need) {
      out.fail(std::string(pattern) + ": " + std::to_string(total) + " < " + std::to_string(need));
    }
  }
  out.actual = join(got, ", ");
  return out;
}

Outcome check_partition_recovery(Context& ctx) {
  Outcome out;
  out.expected = "search = exhaustive objective, |B|=|M|=0; sharpness-p3 B = added edges";
  struct Case {
    ConstructionResult c;
    PartitionMode mode;
  };
  const Case cases[] = {{turan_t4(10), PartitionMode::transversal4},
                        {d4_construction(12), PartitionMode::two_two},
                        {b4_construction(12), PartitionMode::odd_odd}};
  std::vector<std::string> got;
  for (const auto& [c, mode] : cases) {
    PartitionSearchOptions opts;
    opts.seed = ctx.options().seed;
    opts.hint = c.partition;
    opts.threads = ctx.options().threads;
    const auto found = optimize_partition(c.hypergraph, mode, opts);
    const auto exact = exact_partition(c.hypergraph, mode);
    got.push_back(c.name + " " + std::to_string(found.objective) + "/" +
                  std::to_string(exact.objective));
    if (found.objective != exact.objective) {
      out.fail(c.name + ": search " + std::to_string(found.objective) + ", exhaustive " +
               std::to_string(exact.objective));
    }
    if (found.bad != 0 || found.missing != 0) {
      out.fail(c.name + ": |B|=" + std::to_string(found.bad) + " |M|=" +
               std::to_string(found.missing));
    }
  }

  const auto s = sharpness_p3(16, 2);
  PartitionSearchOptions opts;
  opts.seed = ctx.options().seed;
  opts.hint = s.partition;
  opts.threads = ctx.options().threads;
  const auto found = optimize_partition(s.hypergraph, PartitionMode::two_two, opts);
  auto bad = decompose(s.hypergraph, found.partition).bad;
  std::sort(bad.begin(), bad.end());
  auto added = s.added_edges;
  std::sort(added.begin(), added.end());
  got.push_back("sharpness-p3 B=" + std::to_string(bad.size()) + " M=" +
                std::to_string(found.missing));
  if (bad != added) out.fail("sharpness-p3: B has " + std::to_string(bad.size()) + " edges");
  out.actual = join(got, ", ");
  return out;
}

// ex(6, C3) by trying all 2^15 4-graphs on 6 vertices. A copy of C3 is
// three edges that pairwise meet in two vertices, the three meets disjoint.
Count brute_force_ex6_c3() {
  std::vector<Edge4> sets;
  for_each_quadruple(6, [&](const Edge4& e) { sets.push_back(e); });
  std::vector<std::uint32_t> copies;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      for (std::size_t k = j + 1; k < sets.size(); ++k) {
        const Edge4 &a = sets[i], &b = sets[j], &c = sets[k];
        if (a.intersection_size(b) != 2 || b.intersection_size(c) != 2 ||
            a.intersection_size(c) != 2)
          continue;
        // Disjoint meets: no vertex lies in all three edges.
        const bool common = std::any_of(a.vertices().begin(), a.vertices().end(),
                                        [&](Vertex v) { return b.contains(v) && c.contains(v); });
        if (!common) copies.push_back((1u << i) | (1u << j) | (1u << k));
      }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << sets.size()); ++mask) {
    const bool free = std::none_of(copies.begin(), copies.end(),
                                   [&](std::uint32_t c) { return (mask & c) == c; });
    if (free) best = std::max(best, std::popcount(mask));
  }
  return static_cast<Count>(best);
}

Outcome check_turan(Context&) {
  Outcome out;
  std::vector<std::string> got;
  for (std::size_t n : {4, 5, 6}) {
    const auto r = exact_ex(n, builtin_pattern("P2"));
    got.push_back("ex(" + std::to_string(n) + ",P2)=" + std::to_string(r.value) + " " +
                  std::string(to_string(r.status)));
    if (r.value != binomial(n, 4) || r.status != TuranStatus::exact) {
      out.fail("ex(" + std::to_string(n) + ",P2) = " + std::to_string(r.value) + ", expected " +
               std::to_string(binomial(n, 4)));
    }
  }
  const Pattern c3 = builtin_pattern("C3");
  const auto r = exact_ex(6, c3);
  const Count brute = brute_force_ex6_c3();
  got.push_back("ex(6,C3)=" + std::to_string(r.value) + " " + std::string(to_string(r.status)) +
                " brute " + std::to_string(brute));
  if (r.value != brute || r.status != TuranStatus::exact) {
    out.fail("ex(6,C3) search " + std::to_string(r.value) + ", enumeration " +
             std::to_string(brute));
  }
  if (r.value < b4_formula(6).numerator) out.fail("ex(6,C3) below b4(6)");
  if (count_copies_generic(r.witness, c3).value != 0) out.fail("C3 witness has a copy");
  out.expected = "ex(n,P2)=C(n,4) for n=4..6; ex(6,C3)=" + std::to_string(brute) + " >= 10";
  out.actual = join(got, ", ");
  return out;
}

// Everything seeded in the library, serialized without timings.
std::string fingerprint(std::uint64_t seed, unsigned threads) {
  nlohmann::ordered_json doc;
  const auto h = random_hypergraph(10, 0.3, seed);
  std::ostringstream file;
  write_hypergraph(h, file);
  doc["random_host"] = file.str();
  for (const char* p : {"P2", "P3", "P4", "C3"})
    doc["counts"][p] = std::to_string(count_copies(h, builtin_pattern(p)).value);

  PartitionSearchOptions opts;
  opts.seed = seed;
  opts.restarts = 8;
  opts.threads = threads;
  doc["partition"] =
      stability_json(optimize_partition(random_hypergraph(12, 0.4, seed + 1),
                                        PartitionMode::odd_odd, opts));

  const auto d4 = d4_construction(10);
  doc["cmin"] = min_added_json(
      min_added_edge_copies(d4.hypergraph, builtin_pattern("P3"), &d4.partition, threads), seed);

  const auto t = exact_ex(6, builtin_pattern("C3"));
  auto tj = turan_json(t, seed);
  tj.erase("elapsed_ms");
  std::ostringstream witness;
  write_hypergraph(t.witness, witness);
  tj["witness"] = witness.str();
  doc["turan"] = tj;
  return doc.dump();
}

Outcome check_determinism(Context& ctx) {
  Outcome out;
  out.expected = "identical reports across reruns and thread counts";
  const std::uint64_t seed = ctx.options().seed;
  const unsigned many = std::max(2u, ctx.options().threads);
  const std::string first = fingerprint(seed, 1);
  const std::string second = fingerprint(seed, 1);
  const std::string threaded = fingerprint(seed, many);
  if (first != second) out.fail("rerun differs");
  if (first != threaded) out.fail("threads=" + std::to_string(many) + " differs");
  out.actual = "3 runs, " + std::to_string(first.size()) + " bytes each, " +
               (out.passed ? "identical" : "differ");
  return out;
}

using CheckFn = Outcome (*)(Context&);

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {{"edge-counts", 1, 10'000, "family sizes match their formulas, n in [4,64]"},
       check_edge_counts},
      {{"pattern-freeness", 2, 60'000, "T4, D4, B4 hold no copy of their pattern"},
       check_pattern_freeness},
      {{"oracle-equivalence", 3, 300'000, "specialized counters agree with backtracking"},
       check_oracle_equivalence},
      {{"automorphisms", 4, 1'000, "automorphism group orders of the built-ins"},
       check_automorphisms},
      {{"cp3-closed-form", 5, 300'000, "c(n,P3) over D4 against the closed form"},
       check_cp3_closed_form},
      {{"argmin-p2", 6, 300'000, "argmin edges for P2 over T4 are 2+2"}, check_argmin_p2},
      {{"leading-term-ratios", 7, 900'000, "n|1-c*/lead| stays within a factor 4"},
       check_leading_term_ratios},
      {{"sharpness-p2", 8, 150'000, "P2 sharpness host (12,2)"}, check_sharpness_p2},
      {{"sharpness-p3", 8, 150'000, "P3 sharpness host (16,2)"}, check_sharpness_p3},
      {{"sharpness-p4", 8, 150'000, "P4 sharpness host (12,1)"}, check_sharpness_p4},
      {{"sharpness-c3", 8, 150'000, "C3 sharpness host (12, full packing)"}, check_sharpness_c3},
      {{"desk-check", 9, 300'000, "sharpness hosts hold at least q c* copies"}, check_desk},
      {{"partition-recovery", 10, 300'000, "local search matches exhaustive partitions"},
       check_partition_recovery},
      {{"turan", 11, 120'000, "small Turán numbers by exhaustive search"}, check_turan},
      {{"determinism", 12, 600'000, "seeded outputs are reproducible"}, check_determinism},
  };
  return all;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::to_csv() const {
  std::ostringstream os;
  os << "id,criterion,status,expected,actual,detail\n";
  for (const auto& c : checks) {
    os << c.id << ',' << c.criterion << ',' << (c.passed ? "pass" : "fail") << ','
       << csv_field(c.expected) << ',' << csv_field(c.actual) << ',' << csv_field(c.detail)
       << '\n';
  }
  return os.str();
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.passed;
    rows.push_back({{"id", c.id},
                    {"criterion", c.criterion},
                    {"status", c.passed ? "pass" : "fail"},
                    {"expected", c.expected},
                    {"actual", c.actual},
                    {"detail", c.detail}});
  }
  return {{"seed", std::to_string(seed)},
          {"passed", passed},
          {"failed", checks.size() - passed},
          {"checks", rows}};
}

VerifyReport run_verification(const VerifyOptions& options) {
  for (const auto& id : options.only) {
    const bool known = std::any_of(entries().begin(), entries().end(),
                                   [&](const Entry& e) { return e.info.id == id; });
    if (!known) throw std::invalid_argument("unknown check '" + id + "'");
  }
  Context ctx(options);
  VerifyReport report;
  report.seed = options.seed;
  for (const auto& entry : entries()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), entry.info.id) == options.only.end())
      continue;
    CheckResult result;
    result.id = entry.info.id;
    result.criterion = entry.info.criterion;
    result.limit_ms = entry.info.limit_ms;
    const auto start = Clock::now();
    try {
      Outcome o = entry.fn(ctx);
      result.passed = o.passed;
      result.expected = std::move(o.expected);
      result.actual = std::move(o.actual);
      result.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (result.elapsed_ms > result.limit_ms) {
      result.passed = false;
      result.detail += (result.detail.empty() ? "" : "; ") + std::string("over the time limit");
    }
    if (options.on_result) options.on_result(result);
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace qsys
