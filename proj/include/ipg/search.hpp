#ifndef IPG_SEARCH_HPP
#define IPG_SEARCH_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ipg/budgets.hpp"
#include "ipg/graph_data.hpp"
#include "ipg/implicit_graph.hpp"
#include "ipg/implicit_search.hpp"
#include "ipg/rom_graph.hpp"
#include "ipg/rotate_graph.hpp"
#include "ipg/rotate_search.hpp"

// One entry point for every (algorithm, model, space) combination.

namespace ipg {

enum class Algo : std::uint8_t { lex_dfs, dfs, bfs };
enum class Model : std::uint8_t { rotate, implicit_list, implicit_array, rom };
enum class Space : std::uint8_t { trits, linear, log, fourcolor, ptrlist };

/// Unsupported combination or unknown name.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(Algo a) {
  switch (a) {
    case Algo::lex_dfs: return "lex-dfs";
    case Algo::dfs: return "dfs";
    case Algo::bfs: return "bfs";
  }
  return "?";
}
inline std::string to_string(Model m) {
  switch (m) {
    case Model::rotate: return "rotate";
    case Model::implicit_list: return "implicit-list";
    case Model::implicit_array: return "implicit-array";
    case Model::rom: return "rom";
  }
  return "?";
}
inline std::string to_string(Space s) {
  switch (s) {
    case Space::trits: return "trits";
    case Space::linear: return "linear";
    case Space::log: return "log";
    case Space::fourcolor: return "4color";
    case Space::ptrlist: return "ptrlist";
  }
  return "?";
}

template <typename E>
E parse_enum(std::string_view name, std::initializer_list<E> all) {
  for (auto e : all) {
    if (to_string(e) == name) return e;
  }
  throw UsageError("unknown value '" + std::string(name) + "'");
}
inline Algo parse_algo(std::string_view s) { return parse_enum(s, {Algo::lex_dfs, Algo::dfs, Algo::bfs}); }
inline Model parse_model(std::string_view s) {
  return parse_enum(s, {Model::rotate, Model::implicit_list, Model::implicit_array, Model::rom});
}
inline Space parse_space(std::string_view s) {
  return parse_enum(s, {Space::trits, Space::linear, Space::log, Space::fourcolor, Space::ptrlist});
}

struct Combo {
  Algo algo;
  Model model;
  Space space;
};

inline const std::vector<Combo>& supported_combos() {
  static const std::vector<Combo> all = [] {
    std::vector<Combo> c = {
        {Algo::lex_dfs, Model::rotate, Space::trits}, {Algo::dfs, Model::rotate, Space::linear},
        {Algo::dfs, Model::rotate, Space::log},       {Algo::bfs, Model::rotate, Space::linear},
        {Algo::bfs, Model::rotate, Space::log},       {Algo::lex_dfs, Model::rom, Space::trits},
    };
    for (auto m : {Model::implicit_list, Model::implicit_array}) {
      for (auto [a, s] : {std::pair{Algo::lex_dfs, Space::log}, {Algo::dfs, Space::log}, {Algo::bfs, Space::log},
                          {Algo::bfs, Space::fourcolor}, {Algo::bfs, Space::ptrlist}}) {
        c.push_back({a, m, s});
      }
    }
    return c;
  }();
  return all;
}

inline bool is_supported(Algo a, Model m, Space s) {
  for (const auto& c : supported_combos()) {
    if (c.algo == a && c.model == m && c.space == s) return true;
  }
  return false;
}

inline std::string combo_list() {
  std::string out;
  for (const auto& c : supported_combos()) {
    out += "  --algo " + to_string(c.algo) + " --model " + to_string(c.model) + " --space " + to_string(c.space) + "\n";
  }
  return out;
}

/// Workspace budget in bits that a run in `space` must respect.
inline std::size_t space_budget(const GraphData& gd, Model model, Space space) {
  if (model == Model::rom) {
    std::vector<std::size_t> deg;
    for (Vertex v = 1; v <= gd.n; ++v) deg.push_back(gd.degree(v, Dir::out));
    return budget::rom(deg);
  }
  switch (space) {
    case Space::trits: return budget::trits(gd.n);
    case Space::linear: return budget::linear(gd.n);
    default: return budget::logspace(gd.n);
  }
}

struct RunOutcome {
  TraversalResult result;
  OpCounter ops;
  std::size_t peak_bits = 0;
  std::size_t budget_bits = 0;
  /// The graph after the run still has the input's adjacency multisets
  /// (ROM: the input was never writable).
  bool structure_ok = true;
};

/// Runs one search on a fresh instance built from `gd`, with the space
/// budget enforced by the meter.
inline RunOutcome run_search(const GraphData& gd, Vertex s, Algo algo, Model model, Space space) {
  if (!is_supported(algo, model, space)) {
    throw UsageError("unsupported combination --algo " + to_string(algo) + " --model " + to_string(model) +
                     " --space " + to_string(space) + "; valid combinations:\n" + combo_list());
  }
  RunOutcome out;
  out.budget_bits = space_budget(gd, model, space);
  const Mode mode = gd.mode();
  auto finish = [&](auto& g) {
    out.ops = g.counter();
    out.peak_bits = g.meter().peak();
  };

  if (model == Model::rom) {
    RomGraph g(gd);
    g.meter().set_budget(out.budget_bits);
    out.result = rom_dfs(g, s, mode);
    finish(g);
    return out;
  }
  if (model == Model::rotate) {
    RotateGraph g(gd);
    g.meter().set_budget(out.budget_bits);
    if (algo == Algo::lex_dfs) {
      out.result = lex_dfs_trits(g, s, mode);
    } else if (algo == Algo::dfs) {
      out.result = space == Space::linear ? dfs_linear_bits(g, s, mode) : dfs_logspace(g, s, mode);
    } else {
      out.result = space == Space::linear ? bfs_linear_bits(g, s, mode) : bfs_logspace(g, s, mode);
    }
    finish(g);
    out.structure_ok = verify_structure(g, gd);
    return out;
  }
  ImplicitGraph g(gd, model == Model::implicit_list ? ImplicitVariant::list : ImplicitVariant::array);
  g.meter().set_budget(out.budget_bits);
  if (algo == Algo::lex_dfs) {
    out.result = lex_dfs_implicit(g, s, mode);
  } else if (algo == Algo::dfs) {
    out.result = dfs_implicit_logspace(g, s, mode);
  } else if (space == Space::fourcolor) {
    out.result = bfs_implicit_4color(g, s, mode);
  } else if (space == Space::ptrlist) {
    out.result = bfs_implicit_ptrlist(g, s, mode);
  } else {
    out.result = bfs_implicit_logspace(g, s, mode);
  }
  finish(g);
  out.structure_ok = verify_structure(g, gd);
  return out;
}

}  // namespace ipg

#endif  // IPG_SEARCH_HPP
