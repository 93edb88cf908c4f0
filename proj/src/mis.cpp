#include <algorithm>
#include <numeric>
#include <random>

#include "signbound/graphs.hpp"

namespace signbound {

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  MisResult run(std::vector<std::size_t> incumbent) {
    best_ = std::move(incumbent);
    VertexSet candidates(g_.size(), true);
    for (std::size_t v = 0; v < g_.size(); ++v) {
      if (g_.has_loop(v)) candidates.reset(v);
    }
    if (g_.vertex_transitive() && !candidates.empty()) {
      // Some maximum independent set contains vertex 0.
      std::size_t v = candidates.first();
      current_.push_back(v);
      candidates.reset(v);
      candidates.subtract(g_.neighbors(v));
    }
    search(std::move(candidates));

    MisResult out;
    out.witness = best_;
    std::sort(out.witness.begin(), out.witness.end());
    out.size = out.witness.size();
    out.exact = !aborted_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void record() {
    if (current_.size() > best_.size()) best_ = current_;
  }

  // Takes vertices of degree 0 or 1 inside P; both moves are always safe.
  void reduce(VertexSet& p) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = p.first(); v < p.capacity(); v = p.next(v)) {
        std::size_t deg = g_.neighbors(v).intersection_count(p);
        if (deg <= 1) {
          current_.push_back(v);
          p.reset(v);
          if (deg == 1) p.subtract(g_.neighbors(v));
          changed = true;
        }
      }
    }
  }

  // Number of cliques in a greedy clique cover of P (ascending index).
  std::size_t clique_cover(const VertexSet& p) const {
    VertexSet uncovered = p;
    std::size_t cliques = 0;
    for (std::size_t v = uncovered.first(); v < uncovered.capacity(); v = uncovered.first()) {
      uncovered.reset(v);
      VertexSet cand = g_.neighbors(v);
      cand &= uncovered;
      for (std::size_t w = cand.first(); w < cand.capacity(); w = cand.first()) {
        uncovered.reset(w);
        cand &= g_.neighbors(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void search(VertexSet p) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    const std::size_t mark = current_.size();
    reduce(p);
    if (p.empty()) {
      record();
      current_.resize(mark);
      return;
    }
    if (current_.size() + clique_cover(p) <= best_.size()) {
      current_.resize(mark);
      return;
    }

    std::size_t pivot = p.capacity();
    std::size_t pivot_deg = 0;
    for (std::size_t v = p.first(); v < p.capacity(); v = p.next(v)) {
      std::size_t deg = g_.neighbors(v).intersection_count(p);
      if (pivot == p.capacity() || deg > pivot_deg) {
        pivot = v;
        pivot_deg = deg;
      }
    }

    VertexSet with = p;
    with.reset(pivot);
    with.subtract(g_.neighbors(pivot));
    current_.push_back(pivot);
    search(std::move(with));
    current_.pop_back();

    p.reset(pivot);
    search(std::move(p));
    current_.resize(mark);
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> greedy_independent_set(const Graph& graph, std::uint64_t seed) {
  std::vector<std::size_t> order(graph.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  VertexSet blocked(graph.size());
  std::vector<std::size_t> out;
  for (std::size_t v : order) {
    if (graph.has_loop(v) || blocked.test(v)) continue;
    out.push_back(v);
    blocked.set(v);
    blocked |= graph.neighbors(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MisResult max_independent_set_exact(const Graph& graph, std::uint64_t node_budget) {
  BranchAndBound solver(graph, node_budget);
  return solver.run(greedy_independent_set(graph, 0));
}

}  // namespace signbound
