#ifndef IPG_GRAPH_DATA_HPP
#define IPG_GRAPH_DATA_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ipg/types.hpp"

namespace ipg {

struct AdjEntry {
  Vertex v = kNoVertex;
  Weight w = 0;
  friend bool operator==(const AdjEntry&, const AdjEntry&) = default;
};

struct Edge {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  Weight w = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable-by-convention graph as read from a file. Adjacency sequences
/// keep edge appearance order. Index 0 of every per-vertex table is unused.
struct GraphData {
  std::size_t n = 0;
  std::size_t m = 0;
  bool directed = false;
  bool weighted = false;
  std::vector<std::vector<AdjEntry>> out;  // undirected: the only sequence
  std::vector<std::vector<AdjEntry>> in;   // directed only
  std::vector<Edge> edges;                 // appearance order

  Mode mode() const noexcept { return directed ? Mode::directed : Mode::undirected; }

  const std::vector<AdjEntry>& adj(Vertex v, Dir d = Dir::out) const {
    return (directed && d == Dir::in) ? in[v] : out[v];
  }
  std::size_t degree(Vertex v, Dir d = Dir::out) const { return adj(v, d).size(); }

  std::vector<Vertex> labels(Vertex v, Dir d = Dir::out) const {
    std::vector<Vertex> r;
    r.reserve(adj(v, d).size());
    for (const auto& e : adj(v, d)) r.push_back(e.v);
    return r;
  }

  std::size_t min_degree() const {
    std::size_t best = SIZE_MAX;
    for (Vertex v = 1; v <= n; ++v) best = std::min(best, degree(v));
    return n == 0 ? 0 : best;
  }
};

class GraphBuilder {
public:
  GraphBuilder(std::size_t n, bool directed, bool weighted) {
    g_.n = n;
    g_.directed = directed;
    g_.weighted = weighted;
    g_.out.assign(n + 1, {});
    if (directed) g_.in.assign(n + 1, {});
  }

  /// Appends an edge; throws GraphError on contract violations.
  GraphBuilder& add(Vertex u, Vertex v, Weight w = 0) {
    if (u < 1 || v < 1 || u > g_.n || v > g_.n) {
      throw GraphError("label outside 1.." + std::to_string(g_.n) + ": " +
                       std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    const auto key = g_.directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    if (!seen_.insert(key).second) {
      throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (!g_.weighted) w = 0;
    g_.edges.push_back({u, v, w});
    g_.out[u].push_back({v, w});
    if (g_.directed) {
      g_.in[v].push_back({u, w});
    } else {
      g_.out[v].push_back({u, w});
    }
    g_.m = g_.edges.size();
    return *this;
  }

  GraphData build() && { return std::move(g_); }
  const GraphData& peek() const { return g_; }

private:
  GraphData g_;
  std::set<std::pair<Vertex, Vertex>> seen_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_int(std::string_view tok, std::size_t lineno) {
  T value{};
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw GraphError("line " + std::to_string(lineno) + ": malformed number '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses the text graph format: `#` comments, `H n m directed weighted`,
/// then exactly m lines `E u v [w]`.
inline GraphData load_graph(std::string_view text) {
  std::optional<GraphBuilder> builder;
  std::size_t expected = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0].front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    const auto where = "line " + std::to_string(lineno) + ": ";
    if (!builder) {
      if (tok[0] != "H" || tok.size() != 5) throw GraphError(where + "expected header 'H n m d w'");
      const auto n = detail::parse_int<std::size_t>(tok[1], lineno);
      expected = detail::parse_int<std::size_t>(tok[2], lineno);
      const auto d = detail::parse_int<int>(tok[3], lineno);
      const auto w = detail::parse_int<int>(tok[4], lineno);
      if ((d != 0 && d != 1) || (w != 0 && w != 1)) {
        throw GraphError(where + "directed/weighted flags must be 0 or 1");
      }
      if (n > UINT32_MAX - 1) throw GraphError(where + "vertex count too large");
      builder.emplace(n, d == 1, w == 1);
    } else {
      if (tok[0] != "E") throw GraphError(where + "expected edge line 'E u v [w]'");
      const bool weighted = builder->peek().weighted;
      if (!weighted && tok.size() == 4) throw GraphError(where + "weight on unweighted graph");
      if (tok.size() != (weighted ? 4u : 3u)) throw GraphError(where + "wrong field count");
      if (builder->peek().m >= expected) throw GraphError(where + "more edge lines than header m");
      const auto u = detail::parse_int<std::int64_t>(tok[1], lineno);
      const auto v = detail::parse_int<std::int64_t>(tok[2], lineno);
      const auto n = static_cast<std::int64_t>(builder->peek().n);
      if (u < 1 || v < 1 || u > n || v > n) {
        throw GraphError(where + "label outside 1.." + std::to_string(n));
      }
      const Weight w = weighted ? detail::parse_int<Weight>(tok[3], lineno) : 0;
      try {
        builder->add(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
      } catch (const GraphError& e) {
        throw GraphError(where + e.what());
      }
    }
    if (nl == text.size()) break;
  }
  if (!builder) throw GraphError("missing header line");
  if (builder->peek().m != expected) {
    throw GraphError("header declares " + std::to_string(expected) + " edges, found " +
                     std::to_string(builder->peek().m));
  }
  return std::move(*builder).build();
}

inline GraphData load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_graph(ss.str());
}

inline std::string write_graph(const GraphData& g) {
  std::ostringstream os;
  os << "H " << g.n << ' ' << g.m << ' ' << (g.directed ? 1 : 0) << ' ' << (g.weighted ? 1 : 0)
     << '\n';
  for (const auto& e : g.edges) {
    os << "E " << e.u << ' ' << e.v;
    if (g.weighted) os << ' ' << e.w;
    os << '\n';
  }
  return os.str();
}

}  // namespace ipg

#endif  // IPG_GRAPH_DATA_HPP
