#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "ipg/budgets.hpp"
#include "ipg/corpus.hpp"
#include "ipg/implicit_search.hpp"
#include "ipg/oracle.hpp"
#include "ipg/rotate_adapter.hpp"
#include "ipg/rotate_graph.hpp"
#include "test_util.hpp"

using namespace ipg;
using ipg::testing::corpus;
using ipg::testing::from_edges;
using ipg::testing::g1;

namespace {

using Order = std::vector<Vertex>;

bool same_levels(const GraphData& gd, Vertex s, const TraversalResult& r) {
  return r.levels(gd.n) == oracle_bfs_levels(gd, s, gd.mode()) && check_bfs_order(gd, s, r.order);
}

}  // namespace

// --- adapter ---

TEST(RotateAdapter, SortedArrayExample) {
  const auto gd = from_edges(7, false, {{1, 7}, {1, 3}, {1, 5}});
  ImplicitGraph g(gd, ImplicitVariant::array);
  auto a = make_rotate_adapter(g);
  EXPECT_EQ(a.kind(), AdapterKind::sorted);
  EXPECT_EQ(g.snapshot(1), (Order{3, 5, 7}));
  EXPECT_EQ(a.front(1), 3U);
  a.rotate(1);
  EXPECT_EQ(a.front(1), 5U);
  EXPECT_EQ(g.snapshot(1), (Order{5, 3, 7}));
  a.rotate(1);
  EXPECT_EQ(g.snapshot(1), (Order{7, 5, 3}));
  a.rotate(1);
  EXPECT_EQ(g.snapshot(1), (Order{3, 5, 7}));
}

TEST(RotateAdapter, ListShift) {
  const auto gd = from_edges(4, false, {{1, 2}, {1, 3}, {1, 4}});
  ImplicitGraph g(gd, ImplicitVariant::list);
  auto a = make_rotate_adapter(g);
  a.rotate(1);
  EXPECT_EQ(g.snapshot(1), (Order{3, 4, 2}));
  a.rotate(1);
  a.rotate(1);
  EXPECT_EQ(a.front(1), 2U);
  a.move_to_front(1, Dir::out, 4);
  EXPECT_EQ(g.snapshot(1), (Order{4, 2, 3}));
}

TEST(RotateAdapter, ScanFromFront) {
  const auto gd = from_edges(9, false, {{1, 9}, {1, 2}, {1, 6}, {1, 4}});
  for (auto variant : {ImplicitVariant::list, ImplicitVariant::array}) {
    ImplicitGraph g(gd, variant);
    auto a = make_rotate_adapter(g);
    RotateGraph ref(variant == ImplicitVariant::array ? sorted_adjacency(gd) : gd);
    a.rotate_to(1, Dir::out, 6);
    ref.rotate_to(1, Dir::out, 6);
    Order got;
    auto cur = a.scan(1);
    while (auto e = cur.next()) got.push_back(e->v);
    EXPECT_EQ(got, ref.snapshot(1));
  }
}

TEST(RotateAdapter, RandomScriptsMatchRotateGraph) {
  for (auto variant : {ImplicitVariant::list, ImplicitVariant::array}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto gd = generate_graph({.n = 20, .p = 0.4, .directed = seed % 2 == 0, .seed = seed});
      ImplicitGraph g(gd, variant);
      auto a = make_rotate_adapter(g);
      RotateGraph ref(variant == ImplicitVariant::array ? sorted_adjacency(gd) : gd);
      CorpusRng rng(seed);
      for (int step = 0; step < 1000; ++step) {
        const auto v = static_cast<Vertex>(1 + rng.below(gd.n));
        const Dir d = gd.directed && rng.below(2) == 1 ? Dir::in : Dir::out;
        if (gd.degree(v, d) == 0) continue;
        switch (rng.below(3)) {
          case 0:
            a.rotate(v, d);
            ref.rotate(v, d);
            break;
          case 1: {
            const auto t = gd.adj(v, d)[rng.below(gd.degree(v, d))].v;
            ASSERT_EQ(a.rotate_to(v, d, t), ref.rotate_to(v, d, t));
            break;
          }
          default: {
            Order got;
            auto cur = a.scan(v, d);
            while (auto e = cur.next()) got.push_back(e->v);
            ASSERT_EQ(got, ref.snapshot(v, d));
          }
        }
        ASSERT_EQ(a.front(v, d), ref.front(v, d));
      }
      EXPECT_TRUE(verify_structure(g, gd));
    }
  }
}

// --- lex_dfs_implicit ---

TEST(LexDfsImplicit, Examples) {
  {
    ImplicitGraph g(g1(), ImplicitVariant::list);
    EXPECT_EQ(lex_dfs_implicit(g, 1, Mode::undirected).order, (Order{1, 2, 3, 4}));
  }
  {
    ImplicitGraph g(from_edges(4, false, {{1, 3}, {1, 2}, {1, 4}}), ImplicitVariant::list);
    EXPECT_EQ(lex_dfs_implicit(g, 1, Mode::undirected).order, (Order{1, 3, 2, 4}));
  }
  {
    ImplicitGraph g(path_graph(2), ImplicitVariant::list);
    EXPECT_EQ(lex_dfs_implicit(g, 1, Mode::undirected).order, (Order{1, 2}));
  }
}

TEST(LexDfsImplicit, CorpusBothModes) {
  for (bool directed : {false, true}) {
    for (const auto& gd : corpus({.count = 80, .max_n = 40, .directed = directed, .seed = 5})) {
      {
        ImplicitGraph g(gd, ImplicitVariant::list);
        g.meter().set_budget(budget::logspace(gd.n));
        const auto r = lex_dfs_implicit(g, 1, gd.mode());
        EXPECT_EQ(r.order, oracle_lex_dfs(gd, 1, gd.mode()));
        EXPECT_TRUE(verify_structure(g, gd));
      }
      {
        ImplicitGraph g(gd, ImplicitVariant::array);
        const auto r = lex_dfs_implicit(g, 1, gd.mode());
        EXPECT_EQ(r.order, oracle_lex_dfs(sorted_adjacency(gd), 1, gd.mode()));
        EXPECT_TRUE(verify_structure(g, gd));
      }
    }
  }
}

// --- dfs_implicit_logspace ---

TEST(DfsImplicitLogspace, Examples) {
  {
    ImplicitGraph g(path_graph(5), ImplicitVariant::list);
    EXPECT_EQ(dfs_implicit_logspace(g, 1, Mode::undirected).order, (Order{1, 2, 3, 4, 5}));
  }
  for (const auto& gd : {g1(), complete_graph(4)}) {
    ImplicitGraph g(gd, ImplicitVariant::list);
    const auto r = dfs_implicit_logspace(g, 1, Mode::undirected);
    EXPECT_TRUE(check_general_dfs(gd, 1, r.order, Mode::undirected));
  }
}

TEST(DfsImplicitLogspace, CorpusValid) {
  for (bool directed : {false, true}) {
    for (bool connected : {true, false}) {
      for (const auto& gd : corpus({.count = 100, .directed = directed, .connected = connected, .seed = 8})) {
        for (auto variant : {ImplicitVariant::list, ImplicitVariant::array}) {
          ImplicitGraph g(gd, variant);
          g.meter().set_budget(budget::logspace(gd.n));
          const Vertex s = 1 + static_cast<Vertex>(gd.m % gd.n);
          const auto r = dfs_implicit_logspace(g, s, gd.mode());
          EXPECT_TRUE(check_general_dfs(gd, s, r.order, gd.mode()));
          EXPECT_TRUE(verify_structure(g, gd));
        }
      }
    }
  }
}

TEST(DfsImplicitLogspace, ChainsAndPendants) {
  // Triangle 1-2-3 with a chain 3-4-5-6 ending in a leaf, a chain back into
  // the triangle, and a pendant on 1.
  const auto gd = from_edges(9, false, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 6}, {1, 7}, {2, 8}, {8, 9}, {9, 3}});
  for (Vertex s = 1; s <= gd.n; ++s) {
    ImplicitGraph g(gd, ImplicitVariant::list);
    const auto r = dfs_implicit_logspace(g, s, Mode::undirected);
    EXPECT_TRUE(check_general_dfs(gd, s, r.order, Mode::undirected)) << "s=" << s;
  }
}

// --- BFS variants ---

TEST(BfsImplicitLogspace, Examples) {
  {
    ImplicitGraph g(g1(), ImplicitVariant::list);
    const auto lv = bfs_implicit_logspace(g, 1, Mode::undirected).levels(4);
    EXPECT_EQ(lv[2], 1U);
    EXPECT_EQ(lv[3], 1U);
    EXPECT_EQ(lv[4], 2U);
  }
  {
    ImplicitGraph g(star_graph(5), ImplicitVariant::list);
    const auto lv = bfs_implicit_logspace(g, 1, Mode::undirected).levels(5);
    for (Vertex v = 2; v <= 5; ++v) EXPECT_EQ(lv[v], 1U);
  }
  {
    ImplicitGraph g(cycle_graph(5), ImplicitVariant::list);
    const auto lv = bfs_implicit_logspace(g, 1, Mode::undirected).levels(5);
    EXPECT_EQ(lv, (LevelMap{std::nullopt, 0, 1, 2, 2, 1}));
  }
}

TEST(BfsImplicitLogspace, CorpusLevels) {
  for (bool directed : {false, true}) {
    for (bool connected : {true, false}) {
      for (const auto& gd : corpus({.count = 100, .directed = directed, .connected = connected, .seed = 12})) {
        for (auto variant : {ImplicitVariant::list, ImplicitVariant::array}) {
          ImplicitGraph g(gd, variant);
          g.meter().set_budget(budget::logspace(gd.n));
          const Vertex s = connected ? 1 : 1 + static_cast<Vertex>(gd.m % gd.n);
          const auto r = bfs_implicit_logspace(g, s, gd.mode());
          EXPECT_TRUE(same_levels(gd, s, r));
          EXPECT_TRUE(verify_structure(g, gd));
        }
      }
    }
  }
}

TEST(BfsImplicit4Color, Examples) {
  {
    ImplicitGraph g(complete_graph(4), ImplicitVariant::array);
    EXPECT_EQ(bfs_implicit_4color(g, 1, Mode::undirected).levels(4), (LevelMap{std::nullopt, 0, 1, 1, 1}));
  }
  {
    ImplicitGraph g(g1(), ImplicitVariant::array);
    EXPECT_THROW(bfs_implicit_4color(g, 1, Mode::undirected), GraphError);
  }
  {
    // Leaves hanging off a K4 are emitted on contact.
    auto gd = from_edges(6, false, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {6, 1}});
    ImplicitGraph g(gd, ImplicitVariant::list);
    EXPECT_TRUE(same_levels(gd, 5, bfs_implicit_4color(g, 5, Mode::undirected)));
  }
}

TEST(BfsImplicit4Color, MinDegreeThreeCorpus) {
  for (bool directed : {false, true}) {
    for (const auto& gd : corpus({.count = 80, .directed = directed, .min_degree = 3, .seed = 14})) {
      ImplicitGraph g(gd, ImplicitVariant::list);
      g.meter().set_budget(budget::logspace(gd.n));
      const auto r = bfs_implicit_4color(g, 1, gd.mode());
      EXPECT_TRUE(same_levels(gd, 1, r));
      EXPECT_TRUE(verify_structure(g, gd));
      ImplicitGraph h(gd, ImplicitVariant::list);
      EXPECT_EQ(r.levels(gd.n), bfs_implicit_logspace(h, 1, gd.mode()).levels(gd.n));
    }
  }
}

TEST(BfsImplicitPtrList, Examples) {
  {
    const auto gd = generate_graph({.n = 16, .min_degree = 11, .seed = 4});
    ImplicitGraph g(gd, ImplicitVariant::array);
    EXPECT_TRUE(same_levels(gd, 1, bfs_implicit_ptrlist(g, 1, Mode::undirected)));
  }
  {
    ImplicitGraph g(complete_graph(16), ImplicitVariant::array);
    const auto lv = bfs_implicit_ptrlist(g, 1, Mode::undirected).levels(16);
    for (Vertex v = 2; v <= 16; ++v) EXPECT_EQ(lv[v], 1U);
  }
  {
    ImplicitGraph g(complete_graph(10), ImplicitVariant::array);
    EXPECT_THROW(bfs_implicit_ptrlist(g, 1, Mode::undirected), GraphError);
  }
}

TEST(BfsImplicitPtrList, FrontierCost) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto gd = generate_graph({.n = 64, .p = 0.35, .connected = true, .min_degree = 15, .seed = seed});
    ImplicitGraph g(gd, ImplicitVariant::list);
    g.meter().set_budget(budget::logspace(gd.n));
    const auto r = bfs_implicit_ptrlist(g, 1, Mode::undirected);
    EXPECT_TRUE(same_levels(gd, 1, r));
    EXPECT_TRUE(verify_structure(g, gd));
    for (const auto& ph : r.phases) EXPECT_LE(ph.frontier_reads, 4 * ph.frontier * lg_budget(gd.n));
  }
}
