#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "ipg/budgets.hpp"
#include "ipg/corpus.hpp"
#include "ipg/oracle.hpp"
#include "ipg/rotate_graph.hpp"
#include "ipg/rotate_search.hpp"
#include "test_util.hpp"

using namespace ipg;
using ipg::testing::corpus;
using ipg::testing::CorpusSpec;
using ipg::testing::from_edges;
using ipg::testing::g1;

namespace {

using Order = std::vector<Vertex>;

std::size_t degree_sum(const GraphData& g) {
  std::size_t s = 0;
  for (Vertex v = 1; v <= g.n; ++v) s += g.degree(v, Dir::out) + (g.directed ? g.degree(v, Dir::in) : 0);
  return s;
}

bool same_levels(const GraphData& gd, Vertex s, const TraversalResult& r) {
  return r.levels(gd.n) == oracle_bfs_levels(gd, s, gd.mode()) && check_bfs_order(gd, s, r.order);
}

}  // namespace

// --- fixed examples ---

TEST(LexDfsTrits, Examples) {
  {
    RotateGraph g(g1());
    EXPECT_EQ(lex_dfs_trits(g, 1, Mode::undirected).order, (Order{1, 2, 3, 4}));
  }
  {
    const auto gd = load_graph("H 1 0 0 0\n");
    RotateGraph g(gd);
    EXPECT_EQ(lex_dfs_trits(g, 1, Mode::undirected).order, (Order{1}));
  }
  {
    const auto gd = from_edges(4, false, {{1, 3}, {1, 2}, {1, 4}});
    RotateGraph g(gd);
    EXPECT_EQ(lex_dfs_trits(g, 1, Mode::undirected).order, (Order{1, 3, 2, 4}));
  }
}

TEST(LexDfsTrits, ModeMustMatchGraph) {
  RotateGraph g(g1());
  EXPECT_THROW(lex_dfs_trits(g, 1, Mode::directed), GraphError);
  EXPECT_THROW(lex_dfs_trits(g, 5, Mode::undirected), GraphError);
}

TEST(DfsLinearBits, Examples) {
  {
    RotateGraph g(symmetrize(g1()));
    EXPECT_EQ(dfs_linear_bits(g, 1, Mode::directed).order, (Order{1, 2, 3, 4}));
  }
  {
    RotateGraph g(path_graph(3));
    EXPECT_EQ(dfs_linear_bits(g, 1, Mode::undirected).order, (Order{1, 2, 3}));
  }
  {
    const auto gd = g1();
    RotateGraph g(gd);
    const auto r = dfs_linear_bits(g, 1, Mode::undirected);
    EXPECT_TRUE(check_general_dfs(gd, 1, r.order, Mode::undirected));
  }
}

TEST(DfsLogspace, Examples) {
  {
    const auto gd = cycle_graph(4);
    RotateGraph g(gd);
    const auto r = dfs_logspace(g, 1, Mode::undirected);
    EXPECT_EQ(r.order.size(), 4U);
    EXPECT_FALSE(r.failed);
    EXPECT_TRUE(check_general_dfs(gd, 1, r.order, Mode::undirected));
  }
  {
    RotateGraph g(path_graph(3));
    EXPECT_EQ(dfs_logspace(g, 1, Mode::undirected).order, (Order{1, 2, 3}));
  }
  {
    // On G1 the search reaches x=3 at depth 2 along 1,2,3; vertex 1 is then
    // gray and must be skipped, leaving 4.
    const auto gd = g1();
    RotateGraph g(gd);
    EXPECT_EQ(dfs_logspace(g, 1, Mode::undirected).order, (Order{1, 2, 3, 4}));
  }
}

TEST(DfsLogspace, FlagsUnreachableVertices) {
  const auto gd = from_edges(4, false, {{1, 2}, {3, 4}});
  RotateGraph g(gd);
  const auto r = dfs_logspace(g, 1, Mode::undirected);
  EXPECT_EQ(r.order, (Order{1, 2}));
  EXPECT_TRUE(r.failed);
  const auto lone = load_graph("H 2 0 0 0\n");
  RotateGraph h(lone);
  EXPECT_TRUE(dfs_logspace(h, 1, Mode::undirected).failed);
}

TEST(BfsLinearBits, Examples) {
  {
    const auto gd = g1();
    RotateGraph g(gd);
    const auto r = bfs_linear_bits(g, 1, Mode::undirected);
    const auto lv = r.levels(4);
    EXPECT_EQ(lv[1], 0U);
    EXPECT_EQ(lv[2], 1U);
    EXPECT_EQ(lv[3], 1U);
    EXPECT_EQ(lv[4], 2U);
  }
  {
    const auto gd = star_graph(6);
    RotateGraph g(gd);
    const auto lv = bfs_linear_bits(g, 1, Mode::undirected).levels(6);
    for (Vertex v = 2; v <= 6; ++v) EXPECT_EQ(lv[v], 1U);
  }
  {
    const auto gd = from_edges(3, false, {{1, 2}});
    RotateGraph g(gd);
    EXPECT_EQ(bfs_linear_bits(g, 1, Mode::undirected).order, (Order{1, 2}));
  }
}

TEST(BfsLogspace, Examples) {
  {
    const auto gd = cycle_graph(4);
    RotateGraph g(gd);
    const auto lv = bfs_logspace(g, 1, Mode::undirected).levels(4);
    EXPECT_EQ(lv[1], 0U);
    EXPECT_EQ(lv[2], 1U);
    EXPECT_EQ(lv[3], 2U);
    EXPECT_EQ(lv[4], 1U);
  }
  {
    const auto gd = complete_graph(4);
    RotateGraph g(gd);
    const auto lv = bfs_logspace(g, 1, Mode::undirected).levels(4);
    for (Vertex v = 2; v <= 4; ++v) EXPECT_EQ(lv[v], 1U);
  }
  {
    RotateGraph g(path_graph(3));
    EXPECT_EQ(bfs_logspace(g, 1, Mode::undirected).order, (Order{1, 2, 3}));
  }
}

// --- corpus properties ---

class RotateCorpus : public ::testing::TestWithParam<bool> {};

TEST_P(RotateCorpus, LexAndLinearMatchOracles) {
  const bool directed = GetParam();
  for (const auto& gd : corpus({.count = 120, .directed = directed, .connected = false, .seed = 21})) {
    const Mode mode = gd.mode();
    const Vertex s = 1 + static_cast<Vertex>(gd.m % gd.n);
    const auto lex = oracle_lex_dfs(gd, s, mode);
    {
      RotateGraph g(gd);
      g.meter().set_budget(budget::trits(gd.n));
      EXPECT_EQ(lex_dfs_trits(g, s, mode).order, lex);
      EXPECT_LE(g.counter().rotations, 2 * degree_sum(gd) + 2 * gd.n);
      EXPECT_TRUE(verify_structure(g, gd));
    }
    {
      RotateGraph g(gd);
      g.meter().set_budget(budget::linear(gd.n));
      const auto r = dfs_linear_bits(g, s, mode);
      if (directed) {
        EXPECT_EQ(r.order, lex);
      } else {
        EXPECT_TRUE(check_general_dfs(gd, s, r.order, mode));
      }
      EXPECT_TRUE(verify_structure(g, gd));
    }
    {
      RotateGraph g(gd);
      g.meter().set_budget(budget::linear(gd.n));
      EXPECT_TRUE(same_levels(gd, s, bfs_linear_bits(g, s, mode)));
      EXPECT_TRUE(verify_structure(g, gd));
    }
  }
}

TEST_P(RotateCorpus, LogspaceValidOnReachAll) {
  const bool directed = GetParam();
  for (const auto& gd : corpus({.count = 120, .directed = directed, .connected = true, .seed = 33})) {
    const Mode mode = gd.mode();
    {
      RotateGraph g(gd);
      g.meter().set_budget(budget::logspace(gd.n));
      const auto r = dfs_logspace(g, 1, mode);
      EXPECT_FALSE(r.failed);
      EXPECT_TRUE(check_general_dfs(gd, 1, r.order, mode));
      EXPECT_TRUE(verify_structure(g, gd));
    }
    if (directed) {
      RotateGraph g(gd);
      const auto r = dfs_logspace(g, 1, mode, {.scheme = DirectedScheme::fixed_out_lists});
      EXPECT_EQ(r.order, oracle_lex_dfs(gd, 1, mode));
    }
    {
      RotateGraph g(gd);
      g.meter().set_budget(budget::logspace(gd.n));
      const auto r = bfs_logspace(g, 1, mode);
      EXPECT_FALSE(r.failed);
      EXPECT_TRUE(same_levels(gd, 1, r));
      EXPECT_TRUE(verify_structure(g, gd));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, RotateCorpus, ::testing::Values(false, true),
                         [](const auto& info) { return info.param ? "directed" : "undirected"; });

TEST(DfsLogspace, PathReadsGrowQuadratically) {
  std::vector<double> reads;
  for (std::size_t n : {64, 128, 256}) {
    RotateGraph g(path_graph(n));
    dfs_logspace(g, 1, Mode::undirected);
    reads.push_back(static_cast<double>(g.counter().element_reads));
  }
  EXPECT_LE(reads[1] / reads[0], 5.0);
  EXPECT_LE(reads[2] / reads[1], 5.0);
}
