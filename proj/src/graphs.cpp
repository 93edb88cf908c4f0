#include "signbound/graphs.hpp"

#include <algorithm>
#include <string>

#include "signbound/error.hpp"

namespace signbound {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void check_vertex(std::size_t v, std::size_t count) {
  if (v >= count) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range for " +
                       std::to_string(count) + " vertices");
  }
}

}  // namespace

// ------------------------------------------------------------------ VertexSet

VertexSet::VertexSet(std::size_t capacity, bool full)
    : capacity_(capacity), words_((capacity + 63) / 64, full ? ~std::uint64_t{0} : 0) {
  if (full && capacity % 64 != 0) words_.back() = (std::uint64_t{1} << (capacity % 64)) - 1;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return capacity_;
}

std::size_t VertexSet::next(std::size_t v) const {
  std::size_t start = v + 1;
  if (start >= capacity_) return capacity_;
  std::size_t i = start >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++i == words_.size()) return capacity_;
    w = words_[i];
  }
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return c;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t v = first(); v < capacity_; v = next(v)) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------- Graph

Graph::Graph(std::size_t vertex_count)
    : adj_(vertex_count, VertexSet(vertex_count)), loops_(vertex_count, false) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u, size());
  check_vertex(v, size());
  if (u == v) {
    loops_[u] = true;
    return;
  }
  adj_[u].set(v);
  adj_[v].set(u);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  check_vertex(u, size());
  check_vertex(v, size());
  return u == v ? loops_[u] : adj_[u].test(v);
}

bool Graph::is_independent(std::span<const std::size_t> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= size() || loops_[vertices[i]]) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || adj_[vertices[i]].test(vertices[j])) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- CirculantGraph

CirculantGraph::CirculantGraph(std::int64_t n, DifferenceSet diffs)
    : n_(n), diffs_(std::move(diffs)) {
  if (n_ < 1) throw InvalidInput("circulant graph needs n >= 1");
}

bool CirculantGraph::adjacent(std::size_t u, std::size_t v) const {
  check_vertex(u, vertex_count());
  check_vertex(v, vertex_count());
  std::int64_t diff = mod(static_cast<std::int64_t>(u) - static_cast<std::int64_t>(v), n_);
  for (std::int64_t d : diffs_.jumps()) {
    std::int64_t r = mod(d, n_);
    if (diff == r || mod(-diff, n_) == r) return true;
  }
  return false;
}

bool CirculantGraph::all_loops() const {
  return std::any_of(diffs_.jumps().begin(), diffs_.jumps().end(),
                     [this](std::int64_t d) { return d % n_ == 0; });
}

Graph CirculantGraph::to_graph() const {
  Graph g(vertex_count());
  for (std::int64_t u = 0; u < n_; ++u) {
    for (std::int64_t d : diffs_.jumps()) {
      g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(mod(u + d, n_)));
    }
  }
  g.set_vertex_transitive(true);
  return g;
}

// ------------------------------------------------------------ MCirculantGraph

MCirculantGraph::MCirculantGraph(std::int64_t n, VectorDifferenceSet diffs)
    : n_(n), diffs_(std::move(diffs)), count_(1) {
  if (n_ < 1) throw InvalidInput("m-circulant graph needs n >= 1");
  for (std::size_t k = 0; k < diffs_.dim(); ++k) {
    count_ *= static_cast<std::size_t>(n_);
    if (count_ > (std::size_t{1} << 24)) throw InvalidInput("m-circulant graph too large");
  }
}

IntVector MCirculantGraph::coords(std::size_t index) const {
  IntVector c(diffs_.dim());
  for (std::size_t k = c.size(); k-- > 0;) {
    c[k] = static_cast<std::int64_t>(index % static_cast<std::size_t>(n_));
    index /= static_cast<std::size_t>(n_);
  }
  return c;
}

std::size_t MCirculantGraph::index(std::span<const std::int64_t> coords) const {
  std::size_t idx = 0;
  for (std::int64_t c : coords) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(mod(c, n_));
  return idx;
}

bool MCirculantGraph::adjacent(std::size_t u, std::size_t v) const {
  check_vertex(u, vertex_count());
  check_vertex(v, vertex_count());
  IntVector cu = coords(u);
  IntVector cv = coords(v);
  for (const auto& d : diffs_.vectors()) {
    bool match = true;
    for (std::size_t k = 0; k < d.size() && match; ++k) match = mod(cu[k] - cv[k] - d[k], n_) == 0;
    if (match) return true;
  }
  return false;
}

bool MCirculantGraph::all_loops() const {
  return std::any_of(diffs_.vectors().begin(), diffs_.vectors().end(), [this](const IntVector& d) {
    return std::all_of(d.begin(), d.end(), [this](std::int64_t x) { return x % n_ == 0; });
  });
}

Graph MCirculantGraph::to_graph() const {
  Graph g(vertex_count());
  IntVector target(diffs_.dim());
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    IntVector cu = coords(u);
    for (const auto& d : diffs_.vectors()) {
      for (std::size_t k = 0; k < d.size(); ++k) target[k] = cu[k] + d[k];
      g.add_edge(u, index(target));
    }
  }
  g.set_vertex_transitive(true);
  return g;
}

// -------------------------------------------------------- BlockCirculantGraph

BlockCirculantGraph::BlockCirculantGraph(std::int64_t n, DifferenceMatrix diffs)
    : n_(n), diffs_(std::move(diffs)) {
  if (n_ < 1) throw InvalidInput("block circulant graph needs n >= 1");
}

std::size_t BlockCirculantGraph::index(std::size_t block, std::int64_t position) const {
  return block * static_cast<std::size_t>(n_) + static_cast<std::size_t>(mod(position, n_));
}

bool BlockCirculantGraph::adjacent(std::size_t u, std::size_t v) const {
  check_vertex(u, vertex_count());
  check_vertex(v, vertex_count());
  auto n = static_cast<std::size_t>(n_);
  std::size_t i = u / n;
  std::size_t j = v / n;
  std::int64_t shift = mod(static_cast<std::int64_t>(v % n) - static_cast<std::int64_t>(u % n), n_);
  const auto& entry = diffs_.at(i, j);
  return std::any_of(entry.begin(), entry.end(),
                     [&](std::int64_t d) { return mod(d, n_) == shift; });
}

bool BlockCirculantGraph::block_looped(std::size_t block) const {
  const auto& entry = diffs_.at(block, block);
  return std::any_of(entry.begin(), entry.end(), [this](std::int64_t d) { return d % n_ == 0; });
}

bool BlockCirculantGraph::all_loops() const {
  for (std::size_t i = 0; i < diffs_.m(); ++i) {
    if (!block_looped(i)) return false;
  }
  return true;
}

Graph BlockCirculantGraph::to_graph() const {
  Graph g(vertex_count());
  for (std::size_t i = 0; i < diffs_.m(); ++i) {
    for (std::size_t j = 0; j < diffs_.m(); ++j) {
      for (std::int64_t d : diffs_.at(i, j)) {
        for (std::int64_t u = 0; u < n_; ++u) g.add_edge(index(i, u), index(j, u + d));
      }
    }
  }
  // Single-block graphs are plain circulants.
  g.set_vertex_transitive(diffs_.m() == 1);
  return g;
}

// ---------------------------------------------------------- alpha estimation

namespace {

template <typename Family>
AlphaEntry solve_entry(const Family& family, std::uint64_t node_budget) {
  Graph g = family.to_graph();
  MisResult mis = max_independent_set_exact(g, node_budget);
  AlphaEntry e;
  e.size = mis.size;
  e.vertex_count = g.size();
  e.exact = mis.exact;
  e.witness = std::move(mis.witness);
  e.value = Rational(static_cast<std::int64_t>(e.size), static_cast<std::int64_t>(e.vertex_count));
  return e;
}

template <typename Family, typename Diffs>
AlphaSequence sequence_impl(const Diffs& diffs, std::int64_t n_from, std::int64_t n_to,
                            std::uint64_t node_budget) {
  if (n_from < 1) throw InvalidInput("alpha_sequence needs n_from >= 1");
  if (n_from > n_to) throw InvalidInput("alpha_sequence needs n_from <= n_to");
  AlphaSequence out;
  for (std::int64_t n = n_from; n <= n_to; ++n) {
    Family family(n, diffs);
    if (family.all_loops()) continue;
    out.emplace(n, solve_entry(family, node_budget));
  }
  return out;
}

template <typename Family, typename Diffs>
AlphaEstimate lower_bound_impl(const Diffs& diffs, std::int64_t n_max, std::uint64_t node_budget) {
  if (n_max < 1) throw InvalidInput("alpha_lower_bound needs n_max >= 1");
  AlphaEstimate est;
  est.per_n = sequence_impl<Family>(diffs, 1, n_max, node_budget);
  est.value = Rational(0);
  bool any_exact = false;
  for (const auto& [n, entry] : est.per_n) {
    if (entry.exact) {
      est.exact_per_n[n] = entry.size;
      any_exact = true;
    }
    if (est.witness_n == 0 || entry.value > est.value) {
      est.value = entry.value;
      est.witness_n = n;
      est.witness = entry.witness;
    }
  }
  est.greedy_only = !any_exact;
  return est;
}

}  // namespace

AlphaSequence alpha_sequence(const DifferenceSet& diffs, std::int64_t n_from, std::int64_t n_to,
                             std::uint64_t node_budget) {
  return sequence_impl<CirculantGraph>(diffs, n_from, n_to, node_budget);
}

AlphaSequence alpha_sequence(const VectorDifferenceSet& diffs, std::int64_t n_from,
                             std::int64_t n_to, std::uint64_t node_budget) {
  return sequence_impl<MCirculantGraph>(diffs, n_from, n_to, node_budget);
}

AlphaSequence alpha_sequence(const DifferenceMatrix& diffs, std::int64_t n_from, std::int64_t n_to,
                             std::uint64_t node_budget) {
  return sequence_impl<BlockCirculantGraph>(diffs, n_from, n_to, node_budget);
}

AlphaEstimate alpha_lower_bound(const DifferenceSet& diffs, std::int64_t n_max,
                                std::uint64_t node_budget) {
  return lower_bound_impl<CirculantGraph>(diffs, n_max, node_budget);
}

AlphaEstimate alpha_lower_bound(const VectorDifferenceSet& diffs, std::int64_t n_max,
                                std::uint64_t node_budget) {
  return lower_bound_impl<MCirculantGraph>(diffs, n_max, node_budget);
}

AlphaEstimate alpha_lower_bound(const DifferenceMatrix& diffs, std::int64_t n_max,
                                std::uint64_t node_budget) {
  return lower_bound_impl<BlockCirculantGraph>(diffs, n_max, node_budget);
}

// ---------------------------------------------------------------- replication

namespace {

void require_independent(const Graph& g, std::span<const std::size_t> witness) {
  if (!g.is_independent(witness)) throw InvalidInput("witness is not an independent set");
}

void require_factor(std::int64_t k) {
  if (k < 1) throw InvalidInput("replication factor must be >= 1");
}

}  // namespace

std::vector<std::size_t> replicate_witness(const DifferenceSet& diffs,
                                           std::span<const std::size_t> witness, std::int64_t n,
                                           std::int64_t k) {
  require_factor(k);
  require_independent(CirculantGraph(n, diffs).to_graph(), witness);
  std::vector<std::size_t> out;
  for (std::int64_t t = 0; t < k; ++t) {
    for (std::size_t s : witness) out.push_back(s + static_cast<std::size_t>(t * n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> replicate_witness(const VectorDifferenceSet& diffs,
                                           std::span<const std::size_t> witness, std::int64_t n,
                                           std::int64_t k) {
  require_factor(k);
  MCirculantGraph small(n, diffs);
  require_independent(small.to_graph(), witness);
  MCirculantGraph big(n * k, diffs);
  const std::size_t m = diffs.dim();
  std::size_t copies = 1;
  for (std::size_t i = 0; i < m; ++i) copies *= static_cast<std::size_t>(k);
  std::vector<std::size_t> out;
  IntVector shifted(m);
  for (std::size_t s : witness) {
    IntVector base = small.coords(s);
    for (std::size_t c = 0; c < copies; ++c) {
      std::size_t rest = c;
      for (std::size_t i = 0; i < m; ++i) {
        shifted[i] = base[i] + n * static_cast<std::int64_t>(rest % static_cast<std::size_t>(k));
        rest /= static_cast<std::size_t>(k);
      }
      out.push_back(big.index(shifted));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> replicate_witness(const DifferenceMatrix& diffs,
                                           std::span<const std::size_t> witness, std::int64_t n,
                                           std::int64_t k) {
  require_factor(k);
  require_independent(BlockCirculantGraph(n, diffs).to_graph(), witness);
  BlockCirculantGraph big(n * k, diffs);
  std::vector<std::size_t> out;
  for (std::size_t s : witness) {
    std::size_t block = s / static_cast<std::size_t>(n);
    auto pos = static_cast<std::int64_t>(s % static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < k; ++t) out.push_back(big.index(block, pos + t * n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace signbound
