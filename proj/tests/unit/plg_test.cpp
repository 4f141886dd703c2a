#include <gtest/gtest.h>

#include "arena/plg.hpp"
#include "arena/rng.hpp"
#include "oracle/cycles.hpp"

using namespace arena;
using namespace arena::plg;

namespace {

std::vector<std::string> names(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("p" + std::to_string(i));
  return v;
}

// Random oriented graph: each pair gets an edge with probability `density`.
PlgGraph random_graph(Rng& rng, int n, double density) {
  PlgGraph g(names(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (static_cast<double>(rng.below(1000)) >= density * 1000) continue;
      if (rng.below(2)) g.add_edge(i, j);
      else g.add_edge(j, i);
    }
  return g;
}

std::vector<std::vector<bool>> matrix(const PlgGraph& g) {
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(g.size()), std::vector<bool>(static_cast<std::size_t>(g.size())));
  for (auto [a, b] : g.edges()) m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  return m;
}

}  // namespace

TEST(Plg, MajorityDecidesEdgeDirection) {
  const auto g = build_plg({{"a", "b", 2, 1, 0}, {"b", "c", 0, 1, 2}, {"a", "c", 1, 1, 1}, {"a", "d", 0, 0, 3}});
  EXPECT_TRUE(g.has_edge(g.index_of("a"), g.index_of("b")));
  EXPECT_TRUE(g.has_edge(g.index_of("c"), g.index_of("b")));
  EXPECT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.draws().size(), 2u);
}

TEST(Plg, MalformedAndDuplicateSeriesRejected) {
  EXPECT_THROW(build_plg({{"a", "b", 2, 2, 0}}), MalformedSeries);
  EXPECT_THROW(build_plg({{"a", "b", -1, 4, 0}}), MalformedSeries);
  EXPECT_THROW(build_plg({{"a", "a", 3, 0, 0}}), MalformedSeries);
  EXPECT_THROW(build_plg({{"a", "b", 3, 0, 0}, {"b", "a", 0, 3, 0}}), DuplicatePair);
  EXPECT_THROW(build_plg({{"a", "z", 3, 0, 0}}, 3, {"a", "b"}), UnknownVertex);
  EXPECT_NO_THROW(build_plg({{"a", "b", 4, 1, 0}}, 5));
}

TEST(Plg, AntiparallelEdgesImpossible) {
  PlgGraph g(names(2));
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), Error);
  EXPECT_THROW(g.add_edge(0, 0), Error);
}

TEST(Plg, TwentyPlayersGive190Series) {
  Rng rng(1);
  std::vector<SeriesResult> series;
  const auto ids = names(20);
  for (int i = 0; i < 20; ++i)
    for (int j = i + 1; j < 20; ++j) {
      const int wx = static_cast<int>(rng.below(4));
      const int wy = static_cast<int>(rng.below(static_cast<std::uint64_t>(4 - wx)));
      series.push_back({ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)], wx, wy, 3 - wx - wy});
    }
  ASSERT_EQ(series.size(), 190u);
  const auto g = build_plg(series);
  EXPECT_EQ(g.edges().size() + g.draws().size(), 190u);
  // Degree sums agree with a direct scan of the adjacency matrix.
  const auto m = matrix(g);
  int out_total = 0;
  for (int v = 0; v < 20; ++v) {
    auto [out, in] = degrees(g, g.name(v));
    int row = 0, col = 0;
    for (int j = 0; j < 20; ++j) {
      row += m[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)];
      col += m[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
    }
    EXPECT_EQ(out, row);
    EXPECT_EQ(in, col);
    out_total += out;
  }
  EXPECT_EQ(out_total, static_cast<int>(g.edges().size()));
}

TEST(Loops, SingleTriangle) {
  const auto g = build_plg({{"a", "b", 3, 0, 0}, {"b", "c", 3, 0, 0}, {"c", "a", 3, 0, 0}});
  const auto s = enumerate_loops(g);
  EXPECT_EQ(s.loop_count, 1u);
  EXPECT_EQ(s.max_loop_length, 3);
  EXPECT_EQ(s.max_loop_witness.size(), 3u);
  EXPECT_TRUE(s.max_loop_exact);
  EXPECT_FALSE(s.count_is_lower_bound);
}

TEST(Loops, TransitiveTournamentHasNone) {
  PlgGraph g(names(6));
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) g.add_edge(i, j);
  const auto s = enumerate_loops(g);
  EXPECT_EQ(s.loop_count, 0u);
  EXPECT_EQ(s.max_loop_length, 0);
}

TEST(Loops, SquareWithChord) {
  // A>B>C>D>A plus A>C: one 4-loop and one 3-loop.
  PlgGraph g({"A", "B", "C", "D"});
  g.add_edge("A", "B");
  g.add_edge("B", "C");
  g.add_edge("C", "D");
  g.add_edge("D", "A");
  g.add_edge("A", "C");
  const auto s = enumerate_loops(g);
  EXPECT_EQ(s.loop_count, 2u);
  EXPECT_EQ(s.max_loop_length, 4);
  EXPECT_EQ(s.length_histogram.at(3), 1u);
  EXPECT_EQ(s.length_histogram.at(4), 1u);
}

TEST(Loops, WitnessIsARealCycle) {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(rng, 3 + static_cast<int>(rng.below(6)), 0.8);
    const auto s = enumerate_loops(g);
    ASSERT_EQ(static_cast<int>(s.max_loop_witness.size()), s.max_loop_length);
    for (std::size_t i = 0; i < s.max_loop_witness.size(); ++i) {
      const auto& a = s.max_loop_witness[i];
      const auto& b = s.max_loop_witness[(i + 1) % s.max_loop_witness.size()];
      ASSERT_TRUE(g.has_edge(g.index_of(a), g.index_of(b)));
    }
  }
}

TEST(Loops, MatchBruteForceOnThousandRandomDigraphs) {
  Rng rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const auto g = random_graph(rng, n, 0.3 + 0.7 * static_cast<double>(rng.below(1000)) / 1000);
    const auto want = oracle::cycles::brute_force(n, matrix(g));
    const auto got = enumerate_loops(g);
    ASSERT_EQ(static_cast<long long>(got.loop_count), want.count) << "graph " << t;
    ASSERT_EQ(got.max_loop_length, want.longest) << "graph " << t;
    std::uint64_t hist = 0;
    for (auto [len, k] : got.length_histogram) hist += k;
    ASSERT_EQ(hist, got.loop_count);
  }
}

TEST(Loops, ReversalPreservesCountAndLength) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(rng, 3 + static_cast<int>(rng.below(7)), 0.9);
    const auto a = enumerate_loops(g), b = enumerate_loops(g.reversed());
    EXPECT_EQ(a.loop_count, b.loop_count);
    EXPECT_EQ(a.max_loop_length, b.max_loop_length);
  }
}

TEST(Loops, RemovingAVertexNeverAddsLoops) {
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + static_cast<int>(rng.below(7));
    const auto g = random_graph(rng, n, 0.9);
    const auto full = enumerate_loops(g);
    const auto cut = enumerate_loops(g.without(static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))));
    EXPECT_LE(cut.loop_count, full.loop_count);
    EXPECT_LE(cut.max_loop_length, full.max_loop_length);
  }
}

TEST(Loops, CapMakesCountALowerBound) {
  Rng rng(7);
  const auto g = random_graph(rng, 14, 1.0);
  const auto s = enumerate_loops(g, 50);
  EXPECT_TRUE(s.count_is_lower_bound);
  EXPECT_GE(s.loop_count, 50u);
  // A strongly connected tournament has a Hamiltonian cycle.
  const auto exact = enumerate_loops(g);
  if (!exact.count_is_lower_bound && exact.max_loop_length == 14) {
    EXPECT_EQ(s.max_loop_length, 14);
  }
  EXPECT_GE(s.max_loop_length, 3);
}

TEST(Labels, LettersThenNumbers) {
  EXPECT_EQ(label_for(0), "A");
  EXPECT_EQ(label_for(25), "Z");
  EXPECT_EQ(label_for(26), "P27");
  PlgGraph g({"alpha", "beta"});
  g.add_edge("alpha", "beta");
  const auto dot = to_dot(g, "ttt");
  EXPECT_NE(dot.find("\"A\" -> \"B\""), std::string::npos);
  EXPECT_NE(dot.find("tooltip=\"alpha\""), std::string::npos);
}

TEST(Plg, UnknownVertex) {
  PlgGraph g({"a"});
  EXPECT_THROW(g.index_of("b"), UnknownVertex);
  EXPECT_THROW(degrees(g, "b"), UnknownVertex);
}
