#include "qsys/constructions.hpp"

#include <numeric>

namespace qsys {

std::vector<std::pair<Vertex, Vertex>> ConstructionResult::part_ranges() const {
  std::vector<std::pair<Vertex, Vertex>> ranges;
  Vertex start = 0;
  for (std::size_t size : partition.part_sizes()) {
    ranges.emplace_back(start, static_cast<Vertex>(start + size));
    start = static_cast<Vertex>(start + size);
  }
  return ranges;
}

namespace {

struct Range {
  Vertex begin;
  Vertex end;
};

std::vector<Range> contiguous(const std::vector<std::size_t>& sizes) {
  std::vector<Range> out;
  Vertex start = 0;
  for (std::size_t s : sizes) {
    out.push_back({start, static_cast<Vertex>(start + s)});
    start = static_cast<Vertex>(start + s);
  }
  return out;
}

std::vector<std::size_t> t4_sizes(std::size_t n) {
  return {(n + 3) / 4, (n + 2) / 4, (n + 1) / 4, n / 4};
}

std::vector<std::size_t> d4_sizes(std::size_t n) { return {n / 2, n - n / 2}; }

ConstructionResult base(std::string name, std::size_t n, PartitionMode mode,
                        const std::vector<std::size_t>& sizes) {
  return ConstructionResult{std::move(name), Hypergraph4(n), Partition::from_sizes(mode, sizes),
                            ConstructionParams{n, std::nullopt, 0, std::nullopt}, {}};
}

void add_extra(ConstructionResult& r, const Edge4& e) {
  if (!r.hypergraph.add_edge(e)) {
    throw std::logic_error("added edge " + e.to_string() + " already in the base family");
  }
  r.added_edges.push_back(e);
}

void require_q(std::size_t q, std::size_t max_q, const char* what) {
  if (q > max_q) {
    throw std::invalid_argument(std::string(what) + ": q = " + std::to_string(q) +
                                " exceeds the maximum " + std::to_string(max_q));
  }
}

}  // namespace

Count t4_edges(std::size_t n) {
  const auto s = t4_sizes(n);
  return checked_mul(checked_mul(s[0], s[1]), checked_mul(s[2], s[3]));
}

Count d4_edges(std::size_t n) { return checked_mul(binomial(n / 2, 2), binomial(n - n / 2, 2)); }

OddSplit b4_best_split(std::size_t n) {
  if (n == 0) throw std::invalid_argument("the odd construction needs n >= 1");
  const std::size_t lo = std::max<std::size_t>(1, (n + 1) / 2);
  const std::size_t hi = std::max(lo, n - 1);
  OddSplit best{lo, 0};
  bool first = true;
  for (std::size_t a = lo; a <= hi && a <= n; ++a) {
    const std::size_t b = n - a;
    const Count value =
        checked_add(checked_mul(binomial(a, 3), b), checked_mul(binomial(b, 3), a));
    if (first || value > best.edges) {
      best = {a, value};
      first = false;
    }
  }
  return best;
}

ConstructionResult turan_t4(std::size_t n) {
  auto r = base("t4", n, PartitionMode::transversal4, t4_sizes(n));
  const auto p = contiguous(t4_sizes(n));
  for (Vertex w = p[0].begin; w < p[0].end; ++w)
    for (Vertex x = p[1].begin; x < p[1].end; ++x)
      for (Vertex y = p[2].begin; y < p[2].end; ++y)
        for (Vertex z = p[3].begin; z < p[3].end; ++z) r.hypergraph.add_edge(Edge4(w, x, y, z));
  return r;
}

ConstructionResult d4_construction(std::size_t n) {
  auto r = base("d4", n, PartitionMode::two_two, d4_sizes(n));
  const auto p = contiguous(d4_sizes(n));
  for (Vertex a = p[0].begin; a < p[0].end; ++a)
    for (Vertex b = a + 1; b < p[0].end; ++b)
      for (Vertex c = p[1].begin; c < p[1].end; ++c)
        for (Vertex d = c + 1; d < p[1].end; ++d) r.hypergraph.add_edge(Edge4(a, b, c, d));
  return r;
}

ConstructionResult b4_construction(std::size_t n) {
  const OddSplit split = b4_best_split(n);
  const std::vector<std::size_t> sizes{split.a, n - split.a};
  auto r = base("b4", n, PartitionMode::odd_odd, sizes);
  r.params.a = split.a;
  const auto p = contiguous(sizes);
  // Three vertices from one part, one from the other.
  for (int side = 0; side < 2; ++side) {
    const Range& three = p[side];
    const Range& one = p[1 - side];
    for (Vertex a = three.begin; a < three.end; ++a)
      for (Vertex b = a + 1; b < three.end; ++b)
        for (Vertex c = b + 1; c < three.end; ++c)
          for (Vertex d = one.begin; d < one.end; ++d) r.hypergraph.add_edge(Edge4(a, b, c, d));
  }
  return r;
}

namespace {

FormulaValue exact_value(std::string name, std::size_t n, Count value) {
  return FormulaValue{std::move(name), n, value, 1, false};
}

FormulaValue leading(std::string name, std::size_t n, Count num, Count den) {
  const Count g = std::gcd(num, den);
  return FormulaValue{std::move(name), n, num / g, den / g, true};
}

}  // namespace

FormulaValue t4_formula(std::size_t n) { return exact_value("t4", n, t4_edges(n)); }
FormulaValue d4_formula(std::size_t n) { return exact_value("d4", n, d4_edges(n)); }
FormulaValue b4_formula(std::size_t n) { return exact_value("b4", n, b4_best_split(n).edges); }

FormulaValue c_formula(std::string_view name, std::size_t n) {
  auto require_order = [&](std::size_t f) {
    if (n < f) {
      throw std::invalid_argument(std::string(name) + " needs n >= " + std::to_string(f));
    }
  };
  const Count m = n;
  if (name == "t4") return t4_formula(n);
  if (name == "d4") return d4_formula(n);
  if (name == "b4") return b4_formula(n);
  if (name == "cP3_exact") {
    require_order(7);
    const Count value =
        checked_mul(checked_mul(4, binomial(n / 2 - 1, 2)), (n - n / 2) - 3);
    return exact_value("cP3_exact", n, value);
  }
  if (name == "cP2_lead") {
    // 2 (n/4)^3
    require_order(7);
    return leading("cP2_lead", n, checked_mul(checked_mul(m, m), m), 32);
  }
  if (name == "cP4_lead") {
    // 4 C(n/2, 3) = n (n-2) (n-4) / 12
    require_order(7);
    return leading("cP4_lead", n, checked_mul(checked_mul(m, m - 2), m - 4), 12);
  }
  if (name == "cC3_lead") {
    // 3 (n/2)^2
    require_order(6);
    return leading("cC3_lead", n, checked_mul(3, checked_mul(m, m)), 4);
  }
  throw std::invalid_argument("unknown formula '" + std::string(name) + "'");
}

ConstructionResult sharpness_p2(std::size_t n, std::size_t q) {
  auto r = turan_t4(n);
  r.name = "sharpness-p2";
  r.params.q = q;
  const auto p = contiguous(t4_sizes(n));
  const std::size_t x_size = p[1].end - p[1].begin;
  require_q(q, p[0].end - p[0].begin >= 2 ? binomial(x_size, 2) : 0, "sharpness-p2");
  const Vertex a = p[0].begin, b = p[0].begin + 1;
  std::size_t added = 0;
  for (Vertex c = p[1].begin; c < p[1].end && added < q; ++c)
    for (Vertex d = c + 1; d < p[1].end && added < q; ++d, ++added) add_extra(r, Edge4(a, b, c, d));
  return r;
}

ConstructionResult sharpness_p3(std::size_t n, std::size_t q) {
  auto r = d4_construction(n);
  r.name = "sharpness-p3";
  r.params.q = q;
  const auto p = contiguous(d4_sizes(n));
  const Range& larger = p[1];
  require_q(q, (larger.end - larger.begin) / 4, "sharpness-p3");
  for (std::size_t i = 0; i < q; ++i) {
    const Vertex s = larger.begin + static_cast<Vertex>(4 * i);
    add_extra(r, Edge4(s, s + 1, s + 2, s + 3));
  }
  return r;
}

ConstructionResult sharpness_p4(std::size_t n, std::size_t q) {
  auto r = b4_construction(n);
  r.name = "sharpness-p4";
  r.params.q = q;
  const std::size_t a = *r.params.a;
  require_q(q, std::min(a, n - a) / 2, "sharpness-p4");
  for (std::size_t i = 0; i < q; ++i) {
    const Vertex x = static_cast<Vertex>(2 * i);
    const Vertex y = static_cast<Vertex>(a + 2 * i);
    add_extra(r, Edge4(x, x + 1, y, y + 1));
  }
  return r;
}

std::vector<Edge4> greedy_c3_packing(std::size_t n) {
  const std::size_t a = b4_best_split(n).a;
  std::vector<Edge4> packing;
  for_each_quadruple(a, [&](const Edge4& e) {
    for (const Edge4& chosen : packing)
      if (chosen.intersection_size(e) > 1) return;
    packing.push_back(e);
  });
  return packing;
}

ConstructionResult sharpness_c3(std::size_t n, std::size_t q) {
  auto r = b4_construction(n);
  r.name = "sharpness-c3";
  r.params.q = q;
  const auto packing = greedy_c3_packing(n);
  require_q(q, packing.size(), "sharpness-c3");
  for (std::size_t i = 0; i < q; ++i) add_extra(r, packing[i]);
  return r;
}

ConstructionResult construct_by_name(std::string_view name, std::size_t n, std::size_t q) {
  auto no_q = [&] {
    if (q != 0) throw std::invalid_argument(std::string(name) + " takes no --q");
  };
  if (name == "t4") return no_q(), turan_t4(n);
  if (name == "d4") return no_q(), d4_construction(n);
  if (name == "b4") return no_q(), b4_construction(n);
  if (name == "sharpness-p2") return sharpness_p2(n, q);
  if (name == "sharpness-p3") return sharpness_p3(n, q);
  if (name == "sharpness-p4") return sharpness_p4(n, q);
  if (name == "sharpness-c3") return sharpness_c3(n, q);
  throw std::invalid_argument("unknown construction '" + std::string(name) + "'");
}

}  // namespace qsys
