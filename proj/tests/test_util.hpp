#ifndef IPG_TESTS_TEST_UTIL_HPP
#define IPG_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ipg/corpus.hpp"
#include "ipg/graph_data.hpp"
#include "ipg/oracle.hpp"

namespace ipg::testing {

// adj(1)=[2,3], adj(2)=[1,3], adj(3)=[1,2,4], adj(4)=[3]
inline const char* const kG1 = "H 4 4 0 0\nE 1 2\nE 1 3\nE 2 3\nE 3 4\n";

inline GraphData g1() { return load_graph(kG1); }

inline GraphData from_edges(std::size_t n, bool directed,
                            std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n, directed, false);
  for (auto [u, v] : edges) b.add(u, v);
  return std::move(b).build();
}

struct CorpusSpec {
  std::size_t count = 100;
  std::size_t max_n = 64;
  bool directed = false;
  bool weighted = false;
  bool distinct_weights = false;
  bool connected = true;
  std::size_t min_degree = 0;
  std::uint64_t seed = 1;
};

/// Seeded graphs with sizes in [1, max_n] (or [min_degree + 1, max_n]) and
/// densities spread from sparse to dense.
inline std::vector<GraphData> corpus(const CorpusSpec& spec) {
  CorpusRng pick(spec.seed * 0x9E3779B97F4A7C15ULL + 17);
  std::vector<GraphData> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    GenOptions opt;
    const std::size_t lo = spec.min_degree + 1;
    opt.n = lo + pick.below(spec.max_n - lo + 1);
    opt.directed = spec.directed;
    opt.weighted = spec.weighted;
    opt.distinct_weights = spec.distinct_weights;
    opt.connected = spec.connected;
    opt.min_degree = spec.min_degree;
    opt.seed = spec.seed * 1000003ULL + i;
    if (spec.min_degree == 0 && opt.n > 1) {
      const double base = default_edge_probability(opt.n, 0);
      opt.p = std::min(1.0, base * (1.0 + 4.0 * pick.unit()));
    }
    out.push_back(generate_graph(opt));
  }
  return out;
}

/// Every DFS order obtainable by reordering adjacency lists, by running
/// lex-DFS on each combination of list permutations.
inline std::set<std::vector<Vertex>> all_dfs_orders(const GraphData& gd, Vertex s) {
  std::set<std::vector<Vertex>> orders;
  GraphData g = gd;
  for (Vertex v = 1; v <= g.n; ++v) {
    std::sort(g.out[v].begin(), g.out[v].end(), [](auto& a, auto& b) { return a.v < b.v; });
  }
  // Odometer over per-vertex permutations.
  for (;;) {
    orders.insert(oracle_lex_dfs(g, s, g.mode()));
    Vertex v = 1;
    for (; v <= g.n; ++v) {
      auto& adj = g.out[v];
      if (std::next_permutation(adj.begin(), adj.end(), [](auto& a, auto& b) { return a.v < b.v; })) break;
    }
    if (v > g.n) break;
  }
  return orders;
}

inline std::size_t permutation_count(const GraphData& g) {
  std::size_t total = 1;
  for (Vertex v = 1; v <= g.n; ++v) {
    for (std::size_t k = 2; k <= g.out[v].size(); ++k) total *= k;
    if (total > 200000) return total;
  }
  return total;
}

}  // namespace ipg::testing

#endif  // IPG_TESTS_TEST_UTIL_HPP
