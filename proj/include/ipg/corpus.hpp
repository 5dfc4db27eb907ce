#ifndef IPG_CORPUS_HPP
#define IPG_CORPUS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "ipg/graph_data.hpp"
#include "ipg/oracle.hpp"
#include "ipg/types.hpp"

// Seeded random graphs. The stream is std::mt19937_64 and every derived
// value uses the mappings below (not <random> distributions, whose output
// is implementation defined), so corpora are identical across toolchains.

namespace ipg {

class CorpusRng {
public:
  explicit CorpusRng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [0, bound) by rejection of the biased tail.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw GraphError("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
      const auto x = eng_();
      if (x < limit) return x % bound;
    }
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::mt19937_64 eng_;
};

struct GenOptions {
  std::size_t n = 8;
  /// Edge probability; negative picks one from n and min_degree.
  double p = -1.0;
  bool directed = false;
  bool weighted = false;
  bool distinct_weights = false;
  /// Undirected: connected. Directed: vertex 1 reaches every vertex.
  bool connected = false;
  /// Applies to both in- and out-degree of digraphs.
  std::size_t min_degree = 0;
  Weight max_weight = 100;
  std::uint64_t seed = 1;
  std::size_t max_attempts = 100000;
};

inline double default_edge_probability(std::size_t n, std::size_t min_degree) {
  if (n <= 1) return 0.0;
  const double k = static_cast<double>(min_degree);
  const double want = std::max(2.0 * std::log(static_cast<double>(n)), k + 2.5 * std::sqrt(k + 1.0) + 1.0);
  return std::min(1.0, want / static_cast<double>(n - 1));
}

namespace detail {

inline bool meets_constraints(const GraphData& g, const GenOptions& opt) {
  for (Vertex v = 1; v <= g.n; ++v) {
    if (g.degree(v, Dir::out) < opt.min_degree) return false;
    if (g.directed && g.degree(v, Dir::in) < opt.min_degree) return false;
  }
  if (opt.connected && g.n > 0) {
    const auto seen = oracle_reachable(g, 1);
    if (std::count(seen.begin() + 1, seen.end(), true) != static_cast<std::ptrdiff_t>(g.n)) return false;
  }
  return true;
}

}  // namespace detail

/// Erdos-Renyi G(n, p) with rejection until the constraints hold. Edge
/// appearance order (and therefore adjacency order) is a random shuffle.
inline GraphData generate_graph(const GenOptions& opt) {
  CorpusRng rng(opt.seed);
  const double p = opt.p < 0 ? default_edge_probability(opt.n, opt.min_degree) : opt.p;
  for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 1; u <= opt.n; ++u) {
      for (Vertex v = opt.directed ? 1 : u + 1; v <= opt.n; ++v) {
        if (u != v && rng.unit() < p) pairs.emplace_back(u, v);
      }
    }
    rng.shuffle(pairs);
    for (auto& [u, v] : pairs) {
      if (!opt.directed && rng.below(2) == 1) std::swap(u, v);
    }
    std::vector<Weight> weights(pairs.size(), 0);
    if (opt.weighted) {
      if (opt.distinct_weights) {
        for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = static_cast<Weight>(i + 1);
        rng.shuffle(weights);
      } else {
        for (auto& w : weights) w = 1 + static_cast<Weight>(rng.below(static_cast<std::uint64_t>(opt.max_weight)));
      }
    }
    GraphBuilder b(opt.n, opt.directed, opt.weighted);
    for (std::size_t i = 0; i < pairs.size(); ++i) b.add(pairs[i].first, pairs[i].second, weights[i]);
    auto g = std::move(b).build();
    if (detail::meets_constraints(g, opt)) return g;
  }
  throw GraphError("no graph met the constraints after " + std::to_string(opt.max_attempts) + " attempts");
}

// Fixed families used by scaling checks and examples.

inline GraphData path_graph(std::size_t n, bool directed = false) {
  GraphBuilder b(n, directed, false);
  for (Vertex v = 1; v < n; ++v) b.add(v, v + 1);
  return std::move(b).build();
}

inline GraphData cycle_graph(std::size_t n, bool directed = false) {
  GraphBuilder b(n, directed, false);
  for (Vertex v = 1; v < n; ++v) b.add(v, v + 1);
  if (n >= 3) b.add(static_cast<Vertex>(n), 1);
  return std::move(b).build();
}

inline GraphData complete_graph(std::size_t n) {
  GraphBuilder b(n, false, false);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) b.add(u, v);
  }
  return std::move(b).build();
}

inline GraphData star_graph(std::size_t n) {
  GraphBuilder b(n, false, false);
  for (Vertex v = 2; v <= n; ++v) b.add(1, v);
  return std::move(b).build();
}

/// Each undirected edge becomes two arcs in appearance order.
inline GraphData symmetrize(const GraphData& g) {
  GraphBuilder b(g.n, true, g.weighted);
  for (Vertex v = 1; v <= g.n; ++v) {
    for (const auto& e : g.out[v]) b.add(v, e.v, e.w);
  }
  return std::move(b).build();
}

}  // namespace ipg

#endif  // IPG_CORPUS_HPP
