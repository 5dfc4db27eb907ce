// Command-line front end: traverse, mst, subset, gen, bench.
//
// Exit status: 0 on success, 2 when --check fails or a run exceeds its
// workspace budget, 1 on usage or input errors.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ipg/ipg.hpp"

using namespace ipg;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

struct CommonArgs {
  std::string input;
  bool check = false;
  bool stats = false;
  bool directed = false;
};

GraphData load_input(const CommonArgs& c) {
  auto gd = load_graph_file(c.input);
  if (c.directed && !gd.directed) gd = symmetrize(gd);
  return gd;
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

json ops_json(const OpCounter& ops) {
  return {{"rotations", ops.rotations},
          {"swaps", ops.swaps},
          {"element_reads", ops.element_reads},
          {"comparisons", ops.comparisons}};
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void emit_check(bool ok) { std::cout << "CHECK " << (ok ? "ok" : "fail") << "\n"; }

// --- traverse ---

struct TraverseArgs {
  CommonArgs common;
  std::string algo = "lex-dfs";
  std::string model = "rotate";
  std::string space;
  Vertex source = 0;
  std::optional<Vertex> target;
};

Space default_space(Algo a, Model m) {
  for (const auto& c : supported_combos()) {
    if (c.algo == a && c.model == m) return c.space;
  }
  throw UsageError("no --space supports --algo " + to_string(a) + " --model " + to_string(m) +
                   "; valid combinations:\n" + combo_list());
}

bool check_traversal(const GraphData& gd, Vertex s, Algo algo, Model model, const TraversalResult& r) {
  const Mode mode = gd.mode();
  switch (algo) {
    case Algo::lex_dfs:
      return r.order == oracle_lex_dfs(model == Model::implicit_array ? sorted_adjacency(gd) : gd, s, mode);
    case Algo::dfs:
      return check_general_dfs(gd, s, r.order, mode);
    case Algo::bfs:
      return r.levels(gd.n) == oracle_bfs_levels(gd, s, mode) && check_bfs_order(gd, s, r.order);
  }
  return false;
}

int cmd_traverse(const TraverseArgs& a) {
  const auto gd = load_input(a.common);
  const auto algo = parse_algo(a.algo);
  const auto model = parse_model(a.model);
  const auto space = a.space.empty() ? default_space(algo, model) : parse_space(a.space);
  if (a.target && (*a.target < 1 || *a.target > gd.n)) throw GraphError("target out of range");

  const auto t0 = std::chrono::steady_clock::now();
  const auto run = run_search(gd, a.source, algo, model, space);
  const double elapsed = millis_since(t0);

  std::cout << join(run.result.order) << "\n";
  bool ok = run.structure_ok;
  if (a.common.check) {
    ok = ok && check_traversal(gd, a.source, algo, model, run.result);
    emit_check(ok);
  }
  if (a.target) {
    const auto lv = run.result.levels(gd.n)[*a.target];
    std::cout << "TARGET " << *a.target << " reachable=" << (lv ? "true" : "false");
    if (algo == Algo::bfs) std::cout << " distance=" << (lv ? std::to_string(*lv) : "unreachable");
    std::cout << "\n";
  }
  if (a.common.stats) {
    json st = {{"algo", to_string(algo)}, {"model", to_string(model)}, {"space", to_string(space)}};
    st.update(ops_json(run.ops));
    st["peak_workspace_bits"] = run.peak_bits;
    st["budget_bits"] = run.budget_bits;
    st["elapsed_ms"] = elapsed;
    st["failed"] = run.result.failed;
    st["structure_ok"] = run.structure_ok;
    if (a.common.check) st["check"] = ok ? "ok" : "fail";
    std::cout << "STATS " << st.dump() << "\n";
  }
  return a.common.check && !ok ? kCheckFailed : kOk;
}

// --- mst ---

struct MstArgs {
  CommonArgs common;
  std::string model = "rotate";
  std::optional<Vertex> source;
};

int cmd_mst(const MstArgs& a) {
  const auto gd = load_input(a.common);
  if (gd.directed) throw UsageError("mst needs an undirected graph");
  const auto model = parse_model(a.model);
  if (model == Model::rom) throw UsageError("mst supports --model rotate, implicit-list, implicit-array");

  // Spanning forest: one tree per component unless a source is given.
  MstResult all;
  std::vector<bool> covered(gd.n + 1, false);
  OpCounter ops;
  std::size_t peak = 0;
  const auto t0 = std::chrono::steady_clock::now();
  auto drive = [&](auto& g, auto&& one) {
    for (Vertex s = a.source.value_or(1); s <= gd.n; ++s) {
      if (covered[s]) continue;
      const auto r = one(g, s);
      covered[s] = true;
      for (const auto& e : r.edges) {
        covered[e.u] = covered[e.v] = true;
        all.edges.push_back(e);
      }
      all.total += r.total;
      if (a.source) break;
    }
    ops = g.counter();
    peak = g.meter().peak();
  };
  bool structure_ok = true;
  if (model == Model::rotate) {
    RotateGraph g(gd);
    g.meter().set_budget(budget::logspace(gd.n));
    drive(g, [](RotateGraph& h, Vertex s) { return mst_rotate(h, s); });
    structure_ok = verify_structure(g, gd);
  } else {
    ImplicitGraph g(gd, model == Model::implicit_list ? ImplicitVariant::list : ImplicitVariant::array);
    g.meter().set_budget(budget::logspace(gd.n));
    drive(g, [](ImplicitGraph& h, Vertex s) { return mst_implicit(h, s); });
    structure_ok = verify_structure(g, gd);
  }
  const double elapsed = millis_since(t0);

  std::vector<std::string> tokens;
  for (const auto& e : all.edges) tokens.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
  std::cout << join(tokens) << "\n";
  std::cout << "WEIGHT " << all.total << "\n";
  bool ok = structure_ok;
  if (a.common.check) {
    Weight expect = 0;
    if (a.source) {
      const auto reach = oracle_reachable(gd, *a.source);
      for (const auto& e : oracle_mst_edges(gd)) expect += reach[e.u] ? e.w : 0;
    } else {
      expect = oracle_mst_weight(gd);
    }
    ok = ok && expect == all.total;
    emit_check(ok);
  }
  if (a.common.stats) {
    json st = {{"algo", "mst"}, {"model", to_string(model)}};
    st.update(ops_json(ops));
    st["peak_workspace_bits"] = peak;
    st["budget_bits"] = budget::logspace(gd.n);
    st["elapsed_ms"] = elapsed;
    st["edges"] = all.edges.size();
    st["weight"] = all.total;
    st["structure_ok"] = structure_ok;
    if (a.common.check) st["check"] = ok ? "ok" : "fail";
    std::cout << "STATS " << st.dump() << "\n";
  }
  return a.common.check && !ok ? kCheckFailed : kOk;
}

// --- subset ---

struct SubsetArgs {
  CommonArgs common;
  std::string problem = "vertex-cover";
};

int cmd_subset(const SubsetArgs& a) {
  const auto gd = load_input(a.common);
  if (gd.directed) throw UsageError("subset problems need an undirected graph");
  RotateGraph g(gd);
  g.meter().set_budget(budget::logspace(gd.n));
  const auto t0 = std::chrono::steady_clock::now();
  SubsetResult r;
  if (a.problem == "vertex-cover") {
    r = vertex_cover_min(g);
  } else if (a.problem == "dominating-set") {
    r = dominating_set_min(g);
  } else {
    throw UsageError("--problem must be vertex-cover or dominating-set");
  }
  const double elapsed = millis_since(t0);

  std::cout << (r.subset ? join(*r.subset) : "") << "\n";
  std::cout << "SIZE " << r.size << "\n";
  bool ok = verify_structure(g, gd);
  if (a.common.check) {
    const auto expect = a.problem == "vertex-cover" ? oracle_min_vertex_cover(gd) : oracle_min_dominating_set(gd);
    ok = ok && r.size == expect;
    emit_check(ok);
  }
  if (a.common.stats) {
    json st = {{"algo", "subset"}, {"problem", a.problem}, {"model", "rotate"}};
    st.update(ops_json(g.counter()));
    st["peak_workspace_bits"] = g.meter().peak();
    st["budget_bits"] = budget::logspace(gd.n);
    st["elapsed_ms"] = elapsed;
    st["encodings"] = r.visited;
    if (a.common.check) st["check"] = ok ? "ok" : "fail";
    std::cout << "STATS " << st.dump() << "\n";
  }
  return a.common.check && !ok ? kCheckFailed : kOk;
}

// --- gen ---

struct GenArgs {
  GenOptions opt;
  std::string output;
};

int cmd_gen(const GenArgs& a) {
  const auto text = write_graph(generate_graph(a.opt));
  if (a.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw GraphError("cannot write " + a.output);
    f << text;
  }
  return kOk;
}

// --- bench ---

struct BenchArgs {
  std::string algo = "dfs";
  std::string model = "rotate";
  std::string space = "log";
  std::string family = "path";
  std::vector<std::size_t> sizes = {64, 128, 256};
  std::size_t min_degree = 0;
  std::uint64_t seed = 1;
  bool directed = false;
};

GraphData bench_graph(const BenchArgs& a, std::size_t n) {
  if (a.family == "path") return path_graph(n, a.directed);
  if (a.family == "cycle") return cycle_graph(n, a.directed);
  if (a.family == "complete") return a.directed ? symmetrize(complete_graph(n)) : complete_graph(n);
  if (a.family == "star") return a.directed ? symmetrize(star_graph(n)) : star_graph(n);
  if (a.family == "random") {
    return generate_graph(
        {.n = n, .directed = a.directed, .connected = true, .min_degree = a.min_degree, .seed = a.seed});
  }
  throw UsageError("--family must be path, cycle, complete, star or random");
}

int cmd_bench(const BenchArgs& a) {
  const auto algo = parse_algo(a.algo);
  const auto model = parse_model(a.model);
  const auto space = parse_space(a.space);
  std::cout << "n\telement_reads\trotations\tswaps\tcomparisons\tpeak_bits\tratio\n";
  std::optional<double> prev;
  for (auto n : a.sizes) {
    const auto gd = bench_graph(a, n);
    const auto run = run_search(gd, 1, algo, model, space);
    const auto reads = static_cast<double>(run.ops.element_reads);
    std::ostringstream ratio;
    if (prev && *prev > 0) {
      ratio.precision(3);
      ratio << std::fixed << reads / *prev;
    } else {
      ratio << "-";
    }
    std::cout << n << "\t" << run.ops.element_reads << "\t" << run.ops.rotations << "\t" << run.ops.swaps << "\t"
              << run.ops.comparisons << "\t" << run.peak_bits << "\t" << ratio.str() << "\n";
    prev = reads;
  }
  return kOk;
}

void add_common(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("--input", c.input, "Graph file")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--check", c.check, "Compare against the reference oracle");
  cmd->add_flag("--stats", c.stats, "Print a STATS line with counters");
  cmd->add_flag("--directed", c.directed, "Treat an undirected input as a symmetric digraph");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-efficient graph search in the rotate, implicit and read-only models"};
  app.require_subcommand(1);

  TraverseArgs tr;
  auto* traverse = app.add_subcommand("traverse", "Run a DFS or BFS and print the visit order");
  add_common(traverse, tr.common);
  traverse->add_option("--algo", tr.algo, "lex-dfs, dfs or bfs")->capture_default_str();
  traverse->add_option("--model", tr.model, "rotate, implicit-list, implicit-array or rom")->capture_default_str();
  traverse->add_option("--space", tr.space, "trits, linear, log, 4color or ptrlist");
  traverse->add_option("--source", tr.source, "Start vertex")->required();
  traverse->add_option("--target", tr.target, "Report reachability (and BFS distance) of this vertex");

  MstArgs mt;
  auto* mst = app.add_subcommand("mst", "Minimum spanning tree or forest");
  add_common(mst, mt.common);
  mst->add_option("--model", mt.model, "rotate, implicit-list or implicit-array")->capture_default_str();
  mst->add_option("--source", mt.source, "Only the tree of this vertex's component");

  SubsetArgs sb;
  auto* subset = app.add_subcommand("subset", "Exact vertex cover or dominating set by in-place enumeration");
  add_common(subset, sb.common);
  subset->add_option("--problem", sb.problem, "vertex-cover or dominating-set")->capture_default_str();

  GenArgs gn;
  auto* gen = app.add_subcommand("gen", "Write a seeded random graph");
  gen->add_option("--n", gn.opt.n, "Vertices")->required();
  gen->add_option("--p", gn.opt.p, "Edge probability (default: chosen from n and --min-degree)");
  gen->add_option("--min-degree", gn.opt.min_degree, "Minimum degree (in and out for digraphs)");
  gen->add_flag("--connected", gn.opt.connected, "Connected (digraph: vertex 1 reaches all)");
  gen->add_flag("--weighted", gn.opt.weighted, "Attach weights in 1..--max-weight");
  gen->add_flag("--distinct-weights", gn.opt.distinct_weights, "All weights distinct");
  gen->add_option("--max-weight", gn.opt.max_weight, "Largest weight")->capture_default_str();
  gen->add_flag("--directed", gn.opt.directed, "Directed graph");
  gen->add_option("--seed", gn.opt.seed, "Generator seed")->capture_default_str();
  gen->add_option("--output", gn.output, "Write to this file instead of stdout");

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "Operation counts on doubling sizes");
  bench->add_option("--algo", bn.algo)->capture_default_str();
  bench->add_option("--model", bn.model)->capture_default_str();
  bench->add_option("--space", bn.space)->capture_default_str();
  bench->add_option("--family", bn.family, "path, cycle, complete, star or random")->capture_default_str();
  bench->add_option("--sizes", bn.sizes, "Comma-separated vertex counts")->delimiter(',');
  bench->add_option("--min-degree", bn.min_degree, "Minimum degree for --family random");
  bench->add_option("--seed", bn.seed)->capture_default_str();
  bench->add_flag("--directed", bn.directed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*traverse) return cmd_traverse(tr);
    if (*mst) return cmd_mst(mt);
    if (*subset) return cmd_subset(sb);
    if (*gen) return cmd_gen(gn);
    if (*bench) return cmd_bench(bn);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
