#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "signbound/closed_forms.hpp"
#include "signbound/error.hpp"
#include "signbound/graphs.hpp"

using namespace signbound;

namespace {

Rational q(std::int64_t p, std::int64_t d) { return Rational(BigInt(p), BigInt(d)); }

std::vector<int> as_int(const DifferenceSet& d) { return {d.jumps().begin(), d.jumps().end()}; }

DifferenceSet random_set(std::mt19937_64& rng, int max_jump, int max_size) {
  std::uniform_int_distribution<int> jump(1, max_jump);
  std::uniform_int_distribution<int> size(1, max_size);
  std::vector<std::int64_t> j;
  for (int k = size(rng); k > 0; --k) j.push_back(jump(rng));
  return DifferenceSet(j);
}

}  // namespace

TEST(Adjacency, CirculantExamples) {
  CirculantGraph g(11, DifferenceSet({1, 3}));
  EXPECT_TRUE(adjacent(g, 0, 3));
  EXPECT_TRUE(adjacent(g, 3, 0));
  EXPECT_TRUE(adjacent(g, 0, 8));
  EXPECT_FALSE(adjacent(g, 0, 5));
  CirculantGraph loops(3, DifferenceSet({3}));
  EXPECT_TRUE(adjacent(loops, 1, 1));
  EXPECT_TRUE(loops.all_loops());
  EXPECT_THROW(g.adjacent(0, 11), InvalidInput);
}

TEST(Adjacency, MultiAndBlockFamilies) {
  MCirculantGraph torus(4, VectorDifferenceSet::symmetric_closure(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(torus.vertex_count(), 16U);
  const std::int64_t a[] = {0, 0};
  const std::int64_t b[] = {3, 0};
  const std::int64_t c[] = {1, 1};
  EXPECT_TRUE(adjacent(torus, torus.index(a), torus.index(b)));
  EXPECT_FALSE(adjacent(torus, torus.index(a), torus.index(c)));

  BlockCirculantGraph match(5, DifferenceMatrix(2, {{}, {1}, {-1}, {}}));
  EXPECT_TRUE(adjacent(match, match.index(0, 2), match.index(1, 3)));
  EXPECT_TRUE(adjacent(match, match.index(1, 3), match.index(0, 2)));
  EXPECT_FALSE(adjacent(match, match.index(0, 2), match.index(1, 2)));
  EXPECT_FALSE(adjacent(match, match.index(0, 2), match.index(0, 3)));
}

TEST(ExactMis, SmallExamples) {
  EXPECT_EQ(max_independent_set_exact(CirculantGraph(5, DifferenceSet({1})).to_graph(), 1000000).size, 2U);
  auto r = max_independent_set_exact(CirculantGraph(8, DifferenceSet({1, 3})).to_graph(), 1000000);
  EXPECT_EQ(r.size, 4U);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(max_independent_set_exact(CirculantGraph(6, DifferenceSet({1, 2})).to_graph(), 1000000).size, 2U);
}

TEST(ExactMis, LoopVerticesAreNeverChosen) {
  Graph g(4);
  g.add_edge(0, 0);
  g.add_edge(1, 2);
  auto r = max_independent_set_exact(g, 1000);
  EXPECT_EQ(r.size, 2U);
  EXPECT_TRUE(g.is_independent(r.witness));
  EXPECT_EQ(std::count(r.witness.begin(), r.witness.end(), 0U), 0);
}

TEST(ExactMis, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  std::bernoulli_distribution loop(0.05);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 24);
    std::bernoulli_distribution edge(0.05 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    Graph g(static_cast<std::size_t>(n));
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u) {
      if (loop(rng)) {
        g.add_edge(u, u);
        adj[u][u] = true;
      }
      for (int v = u + 1; v < n; ++v) {
        if (edge(rng)) {
          g.add_edge(u, v);
          adj[u][v] = adj[v][u] = true;
        }
      }
    }
    auto r = max_independent_set_exact(g, 10000000);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(static_cast<int>(r.size), oracle::brute_force_alpha(n, [&](int u, int v) { return adj[u][v]; }));
    EXPECT_TRUE(g.is_independent(r.witness));
    EXPECT_EQ(r.witness.size(), r.size);
  }
}

TEST(ExactMis, MatchesBruteForceOnAllThreeFamilies) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    DifferenceSet d = random_set(rng, 8, 3);
    for (std::int64_t n = 1; n <= 24; ++n) {
      CirculantGraph g(n, d);
      auto r = max_independent_set_exact(g.to_graph(), 10000000);
      int ref = oracle::brute_force_alpha(static_cast<int>(n), [&](int u, int v) { return g.adjacent(u, v); });
      ASSERT_EQ(static_cast<int>(r.size), ref) << "n=" << n;
    }
  }
  auto torus_d = VectorDifferenceSet::symmetric_closure(2, {{1, 0}, {0, 1}, {1, 1}});
  for (std::int64_t n = 1; n <= 4; ++n) {
    MCirculantGraph g(n, torus_d);
    auto r = max_independent_set_exact(g.to_graph(), 10000000);
    EXPECT_EQ(static_cast<int>(r.size),
              oracle::brute_force_alpha(static_cast<int>(g.vertex_count()),
                                        [&](int u, int v) { return g.adjacent(u, v); }));
  }
  DifferenceMatrix bd(2, {{1, -1}, {0, 2}, {0, -2}, {3, -3}});
  for (std::int64_t n = 1; n <= 12; ++n) {
    BlockCirculantGraph g(n, bd);
    auto r = max_independent_set_exact(g.to_graph(), 10000000);
    EXPECT_EQ(static_cast<int>(r.size),
              oracle::brute_force_alpha(static_cast<int>(g.vertex_count()),
                                        [&](int u, int v) { return g.adjacent(u, v); }))
        << "n=" << n;
  }
}

TEST(ExactMis, MatchesTransferMatrixOnLargerCirculants) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    DifferenceSet d = random_set(rng, 6, 4);
    for (std::int64_t n = 2 * d.max_d() + 1; n <= 40; n += 3) {
      auto r = max_independent_set_exact(CirculantGraph(n, d).to_graph(), 10000000);
      ASSERT_TRUE(r.exact);
      EXPECT_EQ(static_cast<int>(r.size), oracle::transfer_matrix_alpha(static_cast<int>(n), as_int(d)));
    }
  }
}

TEST(ExactMis, BudgetExhaustionIsReported) {
  auto r = max_independent_set_exact(CirculantGraph(31, DifferenceSet({1, 4, 9})).to_graph(), 1);
  EXPECT_FALSE(r.exact);
  auto g = CirculantGraph(31, DifferenceSet({1, 4, 9})).to_graph();
  EXPECT_TRUE(g.is_independent(r.witness));
}

TEST(Greedy, ProducesMaximalIndependentSets) {
  Graph edgeless = BlockCirculantGraph(3, DifferenceMatrix(2, {{}, {}, {}, {}})).to_graph();
  EXPECT_EQ(greedy_independent_set(edgeless, 0).size(), 6U);
  EXPECT_EQ(greedy_independent_set(CirculantGraph(4, DifferenceSet({1, 2})).to_graph(), 0).size(), 1U);
  Graph g = CirculantGraph(8, DifferenceSet({1, 3})).to_graph();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = greedy_independent_set(g, seed);
    EXPECT_GE(s.size(), 2U);
    EXPECT_TRUE(g.is_independent(s));
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (std::find(s.begin(), s.end(), v) != s.end()) continue;
      bool blocked = std::any_of(s.begin(), s.end(), [&](std::size_t u) { return g.adjacent(u, v); });
      EXPECT_TRUE(blocked) << "vertex " << v << " could be added";
    }
  }
}

TEST(AlphaSequence, CyclesAndTriangles) {
  auto cycles = alpha_sequence(DifferenceSet({1}), 3, 6, 1000000);
  EXPECT_EQ(cycles.at(3).value, q(1, 3));
  EXPECT_EQ(cycles.at(4).value, q(1, 2));
  EXPECT_EQ(cycles.at(5).value, q(2, 5));
  EXPECT_EQ(cycles.at(6).value, q(1, 2));
  auto s12 = alpha_sequence(DifferenceSet({1, 2}), 3, 9, 1000000);
  for (std::int64_t n = 3; n <= 9; ++n) EXPECT_EQ(s12.at(n).value, q(n / 3, n));
  EXPECT_EQ(alpha_sequence(DifferenceSet({1, 3}), 8, 8, 1000000).at(8).value, q(1, 2));
}

TEST(AlphaSequence, SkipsAllLoopGraphs) {
  auto s = alpha_sequence(DifferenceSet({2, 3}), 1, 6, 1000000);
  EXPECT_FALSE(s.contains(1));
  EXPECT_FALSE(s.contains(2));
  EXPECT_FALSE(s.contains(3));
  EXPECT_TRUE(s.contains(4));
}

TEST(AlphaLowerBound, Examples) {
  auto a = alpha_lower_bound(DifferenceSet({1, 2}), 12, 1000000);
  EXPECT_EQ(a.value, q(1, 3));
  EXPECT_EQ(a.witness_n, 3);
  for (std::int64_t n : {3, 6, 9, 12}) EXPECT_EQ(a.per_n.at(n).value, q(1, 3));
  auto b = alpha_lower_bound(DifferenceSet({2, 3}), 10, 1000000);
  EXPECT_EQ(b.value, q(2, 5));
  EXPECT_EQ(b.witness_n, 5);
  for (std::int64_t d = 1; d <= 5; ++d) {
    EXPECT_EQ(alpha_lower_bound(DifferenceSet({d}), 2 * d, 1000000).value, q(1, 2));
  }
  EXPECT_EQ(alpha_lower_bound(DifferenceMatrix(2, {{}, {1}, {-1}, {}}), 12, 1000000).value, q(1, 2));
  EXPECT_EQ(alpha_lower_bound(DifferenceMatrix(2, {{}, {}, {}, {}}), 3, 1000000).value, Rational(1));
}

TEST(AlphaLowerBound, WitnessIsIndependentInItsGraph) {
  auto a = alpha_lower_bound(DifferenceSet({2, 5}), 20, 1000000);
  Graph g = CirculantGraph(a.witness_n, DifferenceSet({2, 5})).to_graph();
  EXPECT_TRUE(g.is_independent(a.witness));
  EXPECT_EQ(Rational(static_cast<std::int64_t>(a.witness.size()), a.witness_n), a.value);
}

TEST(AlphaInvariants, ReplicationAndPadding) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 15; ++t) {
    DifferenceSet d = random_set(rng, 5, 3);
    const std::int64_t n_max = 30;
    auto seq = alpha_sequence(d, 1, n_max, 10000000);
    for (const auto& [n, e] : seq) {
      ASSERT_TRUE(e.exact);
      for (std::int64_t k = 2; k * n <= n_max; ++k) {
        if (seq.contains(k * n)) EXPECT_GE(seq.at(k * n).value, e.value);
      }
      for (std::int64_t m = d.max_d(); n + m <= n_max; ++m) {
        if (!seq.contains(n + m)) continue;
        EXPECT_GE(seq.at(n + m).value, Rational(n, n + m) * e.value);
      }
    }
  }
}

TEST(AlphaInvariants, PairUpperBoundBeyondProduct) {
  for (std::int64_t a = 1; a <= 4; ++a) {
    for (std::int64_t b = a + 1; b <= 5; ++b) {
      if (std::gcd(a, b) != 1) continue;
      auto seq = alpha_sequence(DifferenceSet({a, b}), a * b + 1, 40, 10000000);
      for (const auto& [n, e] : seq) {
        ASSERT_TRUE(e.exact);
        EXPECT_LE(e.value, pair_alpha(a, b)) << a << "," << b << " n=" << n;
      }
    }
  }
}

TEST(AlphaInvariants, UnionIsAtLeastTheProduct) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    DifferenceSet d1 = random_set(rng, 6, 2);
    DifferenceSet d2 = random_set(rng, 6, 2);
    DifferenceSet both = d1.union_with(d2);
    for (std::int64_t n = 1; n <= 24; ++n) {
      CirculantGraph g1(n, d1);
      CirculantGraph g2(n, d2);
      CirculantGraph g12(n, both);
      auto a1 = Rational(static_cast<std::int64_t>(max_independent_set_exact(g1.to_graph(), 10000000).size), n);
      auto a2 = Rational(static_cast<std::int64_t>(max_independent_set_exact(g2.to_graph(), 10000000).size), n);
      auto a12 = Rational(static_cast<std::int64_t>(max_independent_set_exact(g12.to_graph(), 10000000).size), n);
      EXPECT_GE(a12, a1 * a2) << "n=" << n;
    }
  }
}

TEST(ReplicateWitness, Examples) {
  DifferenceSet d1({1});
  std::vector<std::size_t> w{0, 2};
  auto r = replicate_witness(d1, w, 5, 2);
  EXPECT_EQ(r, (std::vector<std::size_t>{0, 2, 5, 7}));
  EXPECT_TRUE(CirculantGraph(10, d1).to_graph().is_independent(r));
  EXPECT_EQ(replicate_witness(d1, w, 5, 1), w);

  DifferenceSet d13({1, 3});
  auto r3 = replicate_witness(d13, std::vector<std::size_t>{0, 2, 4, 6}, 8, 3);
  EXPECT_EQ(r3.size(), 12U);
  EXPECT_TRUE(CirculantGraph(24, d13).to_graph().is_independent(r3));

  EXPECT_THROW(replicate_witness(d1, std::vector<std::size_t>{0, 1}, 5, 2), InvalidInput);
  EXPECT_THROW(replicate_witness(d1, w, 5, 0), InvalidInput);
}

TEST(ReplicateWitness, MultiAndBlockFamilies) {
  auto vd = VectorDifferenceSet::symmetric_closure(2, {{1, 0}, {0, 1}});
  auto torus = MCirculantGraph(4, vd);
  auto mis = max_independent_set_exact(torus.to_graph(), 1000000);
  auto big = replicate_witness(vd, mis.witness, 4, 2);
  EXPECT_EQ(big.size(), 4 * mis.size);
  EXPECT_TRUE(MCirculantGraph(8, vd).to_graph().is_independent(big));

  DifferenceMatrix bd(2, {{1, -1}, {2}, {-2}, {}});
  auto g = BlockCirculantGraph(6, bd);
  auto bm = max_independent_set_exact(g.to_graph(), 1000000);
  auto rep = replicate_witness(bd, bm.witness, 6, 3);
  EXPECT_EQ(rep.size(), 3 * bm.size);
  EXPECT_TRUE(BlockCirculantGraph(18, bd).to_graph().is_independent(rep));
}
