#include "qsys/hypergraph.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qsys {

Edge4::Edge4(Vertex a, Vertex b, Vertex c, Vertex d) : v_{a, b, c, d} {
  std::sort(v_.begin(), v_.end());
  if (v_[0] == v_[1] || v_[1] == v_[2] || v_[2] == v_[3]) {
    throw std::invalid_argument("edge vertices must be distinct: " + to_string());
  }
}

Edge4::Edge4(std::span<const Vertex> vertices)
    : Edge4((vertices.size() == 4)
                ? Edge4(vertices[0], vertices[1], vertices[2], vertices[3])
                : throw std::invalid_argument("an edge needs exactly 4 vertices")) {}

std::size_t Edge4::intersection_size(const Edge4& other) const {
  std::size_t i = 0, j = 0, common = 0;
  while (i < 4 && j < 4) {
    if (v_[i] == other.v_[j]) {
      ++common;
      ++i;
      ++j;
    } else if (v_[i] < other.v_[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return common;
}

std::string Edge4::to_string() const {
  std::ostringstream os;
  os << '{' << v_[0] << ',' << v_[1] << ',' << v_[2] << ',' << v_[3] << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Edge4& e) { return os << e.to_string(); }

// ---------------------------------------------------------------------------
// SubsetDegreeIndex

std::uint64_t SubsetDegreeIndex::pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 16) | b;
}

std::uint64_t SubsetDegreeIndex::triple_key(Vertex a, Vertex b, Vertex c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | (std::uint64_t{b} << 16) | c;
}

std::array<Vertex, 3> SubsetDegreeIndex::unpack_triple(std::uint64_t key) {
  return {static_cast<Vertex>((key >> 32) & 0xFFFF), static_cast<Vertex>((key >> 16) & 0xFFFF),
          static_cast<Vertex>(key & 0xFFFF)};
}

SubsetDegreeIndex::SubsetDegreeIndex(const Hypergraph4& h) {
  pairs_.reserve(h.num_edges() * 2);
  links_.reserve(h.num_edges() * 2);
  for (const Edge4& e : h.edges()) {
    const auto& v = e.vertices();
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) pairs_[pair_key(v[i], v[j])].push_back(e);
    for (int skip = 0; skip < 4; ++skip) {
      std::array<Vertex, 3> t{};
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) t[k++] = v[i];
      links_[triple_key(t[0], t[1], t[2])].push_back(v[skip]);
    }
  }
  for (auto& [key, link] : links_) std::sort(link.begin(), link.end());
  for (auto& [key, list] : pairs_) std::sort(list.begin(), list.end());
}

Count SubsetDegreeIndex::pair_degree(Vertex a, Vertex b) const {
  return pair_edges(a, b).size();
}

std::span<const Edge4> SubsetDegreeIndex::pair_edges(Vertex a, Vertex b) const {
  auto it = pairs_.find(pair_key(a, b));
  if (it == pairs_.end()) return {};
  return it->second;
}

Count SubsetDegreeIndex::triple_degree(Vertex a, Vertex b, Vertex c) const {
  auto it = links_.find(triple_key(a, b, c));
  return it == links_.end() ? 0 : it->second.size();
}

std::span<const Vertex> SubsetDegreeIndex::triple_link(Vertex a, Vertex b, Vertex c) const {
  auto it = links_.find(triple_key(a, b, c));
  if (it == links_.end()) return {};
  return it->second;
}

// ---------------------------------------------------------------------------
// Hypergraph4

Hypergraph4::IndexCache::IndexCache(const IndexCache& other) {
  std::lock_guard lock(other.mutex_);
  index_ = other.index_;
}

Hypergraph4::IndexCache& Hypergraph4::IndexCache::operator=(const IndexCache& other) {
  if (this != &other) {
    std::shared_ptr<const SubsetDegreeIndex> copy;
    {
      std::lock_guard lock(other.mutex_);
      copy = other.index_;
    }
    std::lock_guard lock(mutex_);
    index_ = std::move(copy);
  }
  return *this;
}

std::shared_ptr<const SubsetDegreeIndex> Hypergraph4::IndexCache::get(
    const Hypergraph4& owner) const {
  std::lock_guard lock(mutex_);
  if (!index_) index_ = std::make_shared<const SubsetDegreeIndex>(owner);
  return index_;
}

void Hypergraph4::IndexCache::invalidate() {
  std::lock_guard lock(mutex_);
  index_.reset();
}

Hypergraph4::Hypergraph4(std::size_t n) : n_(n), incidence_(n) {
  if (n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxVertices));
  }
  if (n <= kDenseLimit) dense_.assign(binomial(n, 4) / 64 + 1, 0);
}

void Hypergraph4::set_dense(const Edge4& e, bool value) {
  if (dense_.empty()) return;
  const std::uint64_t r = rank(e);
  if (value) {
    dense_[r >> 6] |= std::uint64_t{1} << (r & 63);
  } else {
    dense_[r >> 6] &= ~(std::uint64_t{1} << (r & 63));
  }
}

void Hypergraph4::check_edge(const Edge4& e) const {
  if (e.max_vertex() >= n_) {
    throw std::out_of_range("edge " + e.to_string() + " has a vertex outside [0, " +
                            std::to_string(n_) + ")");
  }
}

void Hypergraph4::check_subset(std::span<const Vertex> s) const {
  if (s.empty() || s.size() > 3) {
    throw std::invalid_argument("degree queries take 1 to 3 vertices, got " +
                                std::to_string(s.size()));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n_) throw std::out_of_range("vertex " + std::to_string(s[i]) + " out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (s[i] == s[j]) throw std::invalid_argument("query vertices must be distinct");
  }
}

bool Hypergraph4::add_edge(const Edge4& e) {
  check_edge(e);
  auto [it, inserted] = position_.try_emplace(e.key(), edges_.size());
  if (!inserted) return false;
  edges_.push_back(e);
  set_dense(e, true);
  for (Vertex v : e.vertices()) incidence_[v].push_back(e);
  cache_.invalidate();
  return true;
}

bool Hypergraph4::remove_edge(const Edge4& e) {
  auto it = position_.find(e.key());
  if (it == position_.end()) return false;
  const std::size_t pos = it->second;
  position_.erase(it);
  if (pos + 1 != edges_.size()) {
    edges_[pos] = edges_.back();
    position_[edges_[pos].key()] = pos;
  }
  edges_.pop_back();
  set_dense(e, false);
  for (Vertex v : e.vertices()) {
    auto& list = incidence_[v];
    list.erase(std::find(list.begin(), list.end(), e));
  }
  cache_.invalidate();
  return true;
}

std::vector<Edge4> Hypergraph4::sorted_edges() const {
  std::vector<Edge4> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

std::span<const Edge4> Hypergraph4::incident(Vertex v) const {
  if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return incidence_[v];
}

const SubsetDegreeIndex& Hypergraph4::index() const {
  // The cache keeps the index alive until the next mutation.
  return *cache_.get(*this);
}

Count Hypergraph4::degree(std::span<const Vertex> s) const {
  check_subset(s);
  switch (s.size()) {
    case 1:
      return incidence_[s[0]].size();
    case 2:
      return index().pair_degree(s[0], s[1]);
    default:
      return index().triple_degree(s[0], s[1], s[2]);
  }
}

std::vector<Vertex> Hypergraph4::link(std::span<const Vertex> s) const {
  if (s.size() != 3) throw std::invalid_argument("link takes exactly 3 vertices");
  check_subset(s);
  auto l = index().triple_link(s[0], s[1], s[2]);
  return {l.begin(), l.end()};
}

bool Hypergraph4::operator==(const Hypergraph4& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const Edge4& e) { return other.has_edge(e); });
}

}  // namespace qsys
