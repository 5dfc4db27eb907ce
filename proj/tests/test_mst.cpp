#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "ipg/budgets.hpp"
#include "ipg/corpus.hpp"
#include "ipg/mst.hpp"
#include "ipg/oracle.hpp"
#include "ipg/rotate_graph.hpp"
#include "test_util.hpp"

using namespace ipg;
using ipg::testing::corpus;

namespace {

const char* kWeightedG1 = "H 4 4 0 1\nE 1 2 1\nE 1 3 4\nE 2 3 2\nE 3 4 3\n";

std::vector<Edge> sorted_edges(std::vector<Edge> es) {
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return es;
}

// Checks the emitted edges form a spanning tree of the component of s.
bool spans_component(const GraphData& gd, Vertex s, const std::vector<Edge>& es) {
  const auto reach = oracle_reachable(gd, s);
  const auto size = static_cast<std::size_t>(std::count(reach.begin(), reach.end(), true));
  if (es.size() + 1 != size) return false;
  std::vector<Vertex> parent(gd.n + 1);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : es) {
    if (!reach[e.u] || !reach[e.v]) return false;
    const bool exists = std::any_of(gd.out[e.u].begin(), gd.out[e.u].end(),
                                    [&](const AdjEntry& a) { return a.v == e.v && a.w == e.w; });
    if (!exists) return false;
    const auto a = find(e.u);
    const auto b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

template <typename Run>
void check_examples(Run run) {
  {
    const auto gd = load_graph(kWeightedG1);
    const auto r = run(gd, 1);
    EXPECT_EQ(r.total, 6);
    EXPECT_EQ(sorted_edges(r.edges), (std::vector<Edge>{{1, 2, 1}, {2, 3, 2}, {3, 4, 3}}));
  }
  {
    const auto gd = load_graph("H 3 3 0 1\nE 1 2 1\nE 2 3 2\nE 1 3 3\n");
    EXPECT_EQ(run(gd, 1).total, 3);
  }
  {
    const auto gd = load_graph("H 5 4 0 1\nE 1 2 5\nE 1 3 7\nE 1 4 1\nE 1 5 2\n");
    const auto r = run(gd, 1);
    EXPECT_EQ(r.total, 15);
    EXPECT_EQ(r.edges.size(), 4U);
  }
  {
    const auto gd = load_graph("H 2 1 0 1\nE 1 2 9\n");
    const auto r = run(gd, 2);
    EXPECT_EQ(r.edges, (std::vector<Edge>{{1, 2, 9}}));
  }
  {
    const auto gd = load_graph("H 4 4 0 1\nE 1 2 1\nE 2 3 1\nE 3 4 1\nE 4 1 1\n");
    const auto r = run(gd, 1);
    EXPECT_EQ(r.total, oracle_mst_weight(gd));
    EXPECT_TRUE(spans_component(gd, 1, r.edges));
  }
}

template <typename Run>
void check_corpus(Run run, std::uint64_t seed) {
  for (bool distinct : {false, true}) {
    for (const auto& gd :
         corpus({.count = 60, .max_n = 40, .weighted = true, .distinct_weights = distinct, .seed = seed})) {
      const auto r = run(gd, 1);
      EXPECT_EQ(r.total, oracle_mst_weight(gd));
      EXPECT_TRUE(spans_component(gd, 1, r.edges));
      if (distinct) {
        EXPECT_EQ(sorted_edges(r.edges), sorted_edges(oracle_mst_edges(gd)));
      }
    }
  }
}

}  // namespace

TEST(MstRotate, Examples) {
  check_examples([](const GraphData& gd, Vertex s) {
    RotateGraph g(gd);
    auto r = mst_rotate(g, s);
    EXPECT_TRUE(verify_structure(g, gd));
    return r;
  });
}

TEST(MstRotate, CorpusMatchesKruskal) {
  check_corpus(
      [](const GraphData& gd, Vertex s) {
        RotateGraph g(gd);
        g.meter().set_budget(budget::logspace(gd.n));
        auto r = mst_rotate(g, s);
        EXPECT_TRUE(verify_structure(g, gd));
        return r;
      },
      41);
}

TEST(MstRotate, MarksEveryInnerVertexOnce) {
  for (const auto& gd : corpus({.count = 40, .weighted = true, .seed = 43})) {
    RotateGraph g(gd);
    const auto r = mst_rotate(g, 1);
    std::size_t inner = 0;
    std::size_t marked = 0;
    std::size_t pendant = 0;
    for (Vertex v = 1; v <= gd.n; ++v) {
      if (gd.degree(v, Dir::out) >= 2) {
        ++inner;
        if (is_marked(g, v)) ++marked;
      } else if (gd.degree(v, Dir::out) == 1) {
        ++pendant;
      }
    }
    EXPECT_EQ(marked, inner);
    EXPECT_EQ(r.edges.size(), (inner - 1) + pendant);
  }
}

TEST(MstRotate, ComponentOfSourceOnly) {
  const auto gd = load_graph("H 6 5 0 1\nE 1 2 3\nE 2 3 1\nE 1 3 2\nE 4 5 1\nE 5 6 1\n");
  RotateGraph g(gd);
  const auto r = mst_rotate(g, 5);
  EXPECT_EQ(sorted_edges(r.edges), (std::vector<Edge>{{4, 5, 1}, {5, 6, 1}}));
  RotateGraph lone(load_graph("H 3 1 0 1\nE 1 2 4\n"));
  EXPECT_TRUE(mst_rotate(lone, 3).edges.empty());
}

TEST(IsMarked, Contract) {
  const auto gd = load_graph(kWeightedG1);
  RotateGraph g(gd);
  g.rotate_to(1, Dir::out, 2);
  EXPECT_FALSE(is_marked(g, 1));
  g.rotate(1);
  EXPECT_TRUE(is_marked(g, 1));
  EXPECT_THROW(is_marked(g, 4), GraphError);
}

TEST(MstRotate, RejectsDirected) {
  RotateGraph g(load_graph("H 2 1 1 1\nE 1 2 1\n"));
  EXPECT_THROW(mst_rotate(g, 1), GraphError);
}

TEST(MstImplicit, ExamplesBothVariants) {
  for (auto variant : {ImplicitVariant::list, ImplicitVariant::array}) {
    check_examples([variant](const GraphData& gd, Vertex s) {
      ImplicitGraph g(gd, variant);
      auto r = mst_implicit(g, s);
      EXPECT_TRUE(verify_structure(g, gd));
      return r;
    });
  }
}

TEST(MstImplicit, CorpusMatchesKruskal) {
  for (auto variant : {ImplicitVariant::list, ImplicitVariant::array}) {
    check_corpus(
        [variant](const GraphData& gd, Vertex s) {
          ImplicitGraph g(gd, variant);
          g.meter().set_budget(budget::logspace(gd.n));
          auto r = mst_implicit(g, s);
          EXPECT_TRUE(verify_structure(g, gd));
          return r;
        },
        47);
  }
}
