#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "signbound/domain.hpp"
#include "signbound/rational.hpp"

namespace signbound {

/// Fixed-capacity bitset over vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity, bool full = false);

  std::size_t capacity() const { return capacity_; }
  bool test(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  bool empty() const;
  std::size_t count() const;
  /// Smallest member, or capacity() when empty.
  std::size_t first() const;
  /// Smallest member greater than v, or capacity().
  std::size_t next(std::size_t v) const;
  std::size_t intersection_count(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Removes every member of other.
  VertexSet& subtract(const VertexSet& other);

  std::vector<std::size_t> members() const;

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph with optional self-loops.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count);

  std::size_t size() const { return loops_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  bool has_loop(std::size_t v) const { return loops_[v]; }
  /// Neighbours of v, never including v itself.
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }

  /// Every vertex can be mapped to every other by an automorphism, so some
  /// maximum independent set contains vertex 0.
  bool vertex_transitive() const { return vertex_transitive_; }
  void set_vertex_transitive(bool value) { vertex_transitive_ = value; }

  /// No member has a loop and no two members are adjacent.
  bool is_independent(std::span<const std::size_t> vertices) const;

 private:
  std::vector<VertexSet> adj_;
  std::vector<bool> loops_;
  bool vertex_transitive_ = false;
};

/// G_n on {0..n-1}: u ~ v iff u - v or v - u is congruent to some d in D.
class CirculantGraph {
 public:
  CirculantGraph(std::int64_t n, DifferenceSet diffs);

  std::int64_t n() const { return n_; }
  const DifferenceSet& diffs() const { return diffs_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(n_); }
  /// Throws InvalidInput for out-of-range vertices.
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Some d is divisible by n, so every vertex carries a loop.
  bool all_loops() const;
  Graph to_graph() const;

 private:
  std::int64_t n_;
  DifferenceSet diffs_;
};

/// m-circulant on {0..n-1}^m. Vertex index = sum_k u_k n^{m-1-k}.
class MCirculantGraph {
 public:
  MCirculantGraph(std::int64_t n, VectorDifferenceSet diffs);

  std::int64_t n() const { return n_; }
  const VectorDifferenceSet& diffs() const { return diffs_; }
  std::size_t vertex_count() const { return count_; }
  IntVector coords(std::size_t index) const;
  std::size_t index(std::span<const std::int64_t> coords) const;
  bool adjacent(std::size_t u, std::size_t v) const;
  bool all_loops() const;
  Graph to_graph() const;

 private:
  std::int64_t n_;
  VectorDifferenceSet diffs_;
  std::size_t count_;
};

/// m blocks of n positions. Vertex (i, u) has index i*n + u; (i,u) ~ (j,v)
/// iff v - u is congruent to some element of D_ij.
class BlockCirculantGraph {
 public:
  BlockCirculantGraph(std::int64_t n, DifferenceMatrix diffs);

  std::int64_t n() const { return n_; }
  const DifferenceMatrix& diffs() const { return diffs_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(n_) * diffs_.m(); }
  std::size_t index(std::size_t block, std::int64_t position) const;
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Every block has a loop, so the graph has no non-empty independent set.
  bool all_loops() const;
  Graph to_graph() const;

 private:
  bool block_looped(std::size_t block) const;
  std::int64_t n_;
  DifferenceMatrix diffs_;
};

inline bool adjacent(const CirculantGraph& g, std::size_t u, std::size_t v) { return g.adjacent(u, v); }
inline bool adjacent(const MCirculantGraph& g, std::size_t u, std::size_t v) { return g.adjacent(u, v); }
inline bool adjacent(const BlockCirculantGraph& g, std::size_t u, std::size_t v) { return g.adjacent(u, v); }

// ----------------------------------------------------------------------- MIS

struct MisResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // sorted
  bool exact = false;
  std::uint64_t nodes = 0;
};

/// Exact maximum independent set by branch and bound. Branches on the
/// highest-degree remaining vertex (lowest index on ties), prunes with a
/// greedy clique cover, and applies degree-0/1 reductions. If more than
/// node_budget nodes are needed the best witness found is returned with
/// exact == false.
MisResult max_independent_set_exact(const Graph& graph, std::uint64_t node_budget);

/// Maximal independent set, scanning vertices in a seeded random order.
std::vector<std::size_t> greedy_independent_set(const Graph& graph, std::uint64_t seed);

// --------------------------------------------------------- alpha estimation

struct AlphaEntry {
  Rational value;  // size / vertex_count
  std::size_t size = 0;
  std::size_t vertex_count = 0;
  bool exact = false;
  std::vector<std::size_t> witness;
};

/// n -> alpha(G_n)/|V(G_n)|. Values n whose graph is all loops are skipped.
using AlphaSequence = std::map<std::int64_t, AlphaEntry>;

AlphaSequence alpha_sequence(const DifferenceSet& diffs, std::int64_t n_from, std::int64_t n_to,
                             std::uint64_t node_budget);
AlphaSequence alpha_sequence(const VectorDifferenceSet& diffs, std::int64_t n_from,
                             std::int64_t n_to, std::uint64_t node_budget);
AlphaSequence alpha_sequence(const DifferenceMatrix& diffs, std::int64_t n_from, std::int64_t n_to,
                             std::uint64_t node_budget);

struct AlphaEstimate {
  /// Best ratio over the solved n; a certified lower bound on alpha(D).
  Rational value;
  std::int64_t witness_n = 0;
  std::vector<std::size_t> witness;
  /// alpha(G_n) for every n that was solved to optimality.
  std::map<std::int64_t, std::size_t> exact_per_n;
  AlphaSequence per_n;
  /// No exact solve completed; the value rests on greedy witnesses only.
  bool greedy_only = false;
};

AlphaEstimate alpha_lower_bound(const DifferenceSet& diffs, std::int64_t n_max,
                                std::uint64_t node_budget);
AlphaEstimate alpha_lower_bound(const VectorDifferenceSet& diffs, std::int64_t n_max,
                                std::uint64_t node_budget);
AlphaEstimate alpha_lower_bound(const DifferenceMatrix& diffs, std::int64_t n_max,
                                std::uint64_t node_budget);

/// k-fold repetition of an independent set of G_n into G_{kn}. Throws
/// InvalidInput if the witness is not independent in G_n.
std::vector<std::size_t> replicate_witness(const DifferenceSet& diffs,
                                           std::span<const std::size_t> witness, std::int64_t n,
                                           std::int64_t k);
/// S + {0, n, ..., (k-1)n}^m.
std::vector<std::size_t> replicate_witness(const VectorDifferenceSet& diffs,
                                           std::span<const std::size_t> witness, std::int64_t n,
                                           std::int64_t k);
/// (i, u + t n) for t = 0..k-1.
std::vector<std::size_t> replicate_witness(const DifferenceMatrix& diffs,
                                           std::span<const std::size_t> witness, std::int64_t n,
                                           std::int64_t k);

}  // namespace signbound
