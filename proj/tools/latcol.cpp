// latcol command line: generate, solve, verify and cross-check list
// multicoloring instances on triangle-free induced subgraphs of the
// triangular lattice.
//
// Exit codes: 0 success, 1 infeasible or rejected instance, 2 malformed
// input.

#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "latcol/latcol.hpp"
#include "latcol/selftest.hpp"

namespace {

using namespace latcol;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitBadInput = 2;

ProblemParams resolve_params(int m, int a, int b) {
  if (m > 0) {
    if (a > 0 || b > 0) throw InputError("give either --m or --a/--b, not both");
    return ProblemParams::for_multiplier(m);
  }
  if (a > 0 && b > 0) return ProblemParams::from_ab(a, b);
  throw InputError("parameters required: --m M or --a A --b B");
}

int cmd_solve(const std::string& graph_path, const std::string& lists_path, int m, int a, int b,
              const std::string& out_path) {
  Instance inst = load_instance(graph_path, lists_path);
  ProblemParams params = resolve_params(m, a, b);
  LatticeGraph G(inst.vertices);
  if (G.size() != static_cast<int>(inst.vertices.size()))
    throw InputError("graph document: duplicate vertices");
  if (!list_sizes_ok(inst.lists, params.a))
    throw InputError("lists document: every list must have exactly a = " +
                     std::to_string(params.a) + " colors");
  if (auto tri = find_triangle(G)) {
    auto [p, q, r] = *tri;
    throw InputError("graph has a triangle at (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                     "),(" + std::to_string(q.x) + "," + std::to_string(q.y) + "),(" +
                     std::to_string(r.x) + "," + std::to_string(r.y) + ")");
  }

  SolveResult result = solve({G, align_to_graph(G, inst.vertices, inst.lists), params});
  MultiColoring doc_order = align_to_document(G, inst.vertices, result.coloring);
  nlohmann::json doc = coloring_to_json(doc_order, &result.steps);
  if (out_path.empty())
    std::printf("%s\n", doc.dump(2).c_str());
  else
    write_json_file(out_path, doc);
  std::fprintf(stderr, "solved %d vertices with a=%d b=%d in %zu steps\n", G.size(), params.a,
               params.b, result.steps.size());
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& lists_path,
               const std::string& coloring_path, int m, int a, int b) {
  Instance inst = load_instance(graph_path, lists_path);
  ProblemParams params = resolve_params(m, a, b);
  MultiColoring coloring = coloring_from_json(read_json_file(coloring_path));
  if (coloring.size() != inst.vertices.size())
    throw InputError("coloring document: entry count differs from the vertex count");
  LatticeGraph G(inst.vertices);
  if (G.size() != static_cast<int>(inst.vertices.size()))
    throw InputError("graph document: duplicate vertices");
  ListAssignment L = align_to_graph(G, inst.vertices, inst.lists);
  ListAssignment C = align_to_graph(G, inst.vertices, coloring);
  WeightFn w(L.size(), params.b);
  VerifyReport rep = verify_coloring(G.edges(), L, w, C);
  if (rep.ok()) {
    std::printf("pass\n");
    return kExitOk;
  }
  if (rep.vertex >= 0) {
    Coord v = G.vertices()[static_cast<std::size_t>(rep.vertex)];
    std::printf("fail: %s [vertex (%d,%d)]\n", rep.message().c_str(), v.x, v.y);
  } else {
    Coord u = G.vertices()[static_cast<std::size_t>(rep.edge.first)];
    Coord v = G.vertices()[static_cast<std::size_t>(rep.edge.second)];
    std::printf("fail: %s [edge (%d,%d)-(%d,%d)]\n", rep.message().c_str(), u.x, u.y, v.x, v.y);
  }
  return kExitRejected;
}

int cmd_gen(const GeneratorConfig& cfg, const std::string& out_prefix) {
  LatticeGraph G = gen_lattice_graph(cfg);
  ListAssignment L = gen_lists(G, cfg.list_size, cfg.palette, cfg.seed);
  write_json_file(out_prefix + ".graph.json", graph_to_json(G.vertices()));
  write_json_file(out_prefix + ".lists.json", lists_to_json(L));
  std::fprintf(stderr, "generated %d vertices, %zu edges -> %s.{graph,lists}.json\n", G.size(),
               G.edges().size(), out_prefix.c_str());
  return kExitOk;
}

// Orders the vertices of a single path or cycle along the structure.
std::vector<int> thread_order(const LatticeGraph& G, bool& is_cycle) {
  const int n = G.size();
  if (n == 0) throw InputError("oracle: empty graph");
  std::vector<int> ends;
  for (int i = 0; i < n; ++i) {
    if (G.degree(i) > 2) throw InputError("oracle: graph is not a path or cycle");
    if (G.degree(i) <= 1) ends.push_back(i);
  }
  is_cycle = ends.empty();
  if (n == 1) {
    is_cycle = false;
    return {0};
  }
  if (is_cycle && n < 3) throw InputError("oracle: malformed cycle");

  int cur, prev;
  if (is_cycle) {
    cur = 0;
    prev = std::max(G.neighbors_of(0)[0], G.neighbors_of(0)[1]);  // start toward the smaller
  } else {
    cur = ends.front();
    prev = -1;
  }
  std::vector<int> order;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    if (seen[static_cast<std::size_t>(cur)]) throw InputError("oracle: graph is disconnected");
    seen[static_cast<std::size_t>(cur)] = 1;
    order.push_back(cur);
    if (step == n - 1) break;
    int next = -1;
    for (int nb : G.neighbors_of(cur)) {
      if (nb != prev) {
        next = nb;
        break;
      }
    }
    if (next < 0) throw InputError("oracle: graph is disconnected");
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) throw InputError("oracle: graph is disconnected");
  return order;
}

int cmd_oracle(const std::string& graph_path, const std::string& lists_path, int m, int a, int b,
               const std::string& out_path) {
  Instance inst = load_instance(graph_path, lists_path);
  int demand = m > 0 ? 2 * m : b;
  if (demand <= 0) throw InputError("oracle: give --b or --m for the uniform demand");
  LatticeGraph G(inst.vertices);
  if (G.size() != static_cast<int>(inst.vertices.size()))
    throw InputError("graph document: duplicate vertices");
  bool is_cycle = false;
  std::vector<int> order = thread_order(G, is_cycle);
  ListAssignment aligned = align_to_graph(G, inst.vertices, inst.lists);
  ListAssignment ordered;
  for (int idx : order) ordered.push_back(aligned[static_cast<std::size_t>(idx)]);
  WeightFn w(ordered.size(), demand);

  std::optional<MultiColoring> c =
      is_cycle ? solve_cycle_exact(ordered, w) : solve_path_exact(ordered, w);
  if (!c) {
    std::printf("infeasible\n");
    return kExitRejected;
  }
  MultiColoring by_graph(static_cast<std::size_t>(G.size()));
  for (std::size_t k = 0; k < order.size(); ++k)
    by_graph[static_cast<std::size_t>(order[k])] = (*c)[k];
  nlohmann::json doc = coloring_to_json(align_to_document(G, inst.vertices, by_graph));
  if (out_path.empty())
    std::printf("%s\n", doc.dump(2).c_str());
  else
    write_json_file(out_path, doc);
  std::fprintf(stderr, "feasible %s of %d vertices\n", is_cycle ? "cycle" : "path", G.size());
  return kExitOk;
}

int cmd_selftest(double scale, int threads) {
  std::printf("selftest  scale=%.3g threads=%d\n", scale, threads);
  int failures = 0;
  latcol::selftest::run_all(scale, threads, [&](const latcol::selftest::CriterionResult& r) {
    std::printf("[%s] %2d. %-32s cases=%-9lld failures=%lld (%.1fs)%s%s\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.cases, r.failures, r.seconds,
                r.note.empty() ? "" : " ", r.note.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
  });
  return failures == 0 ? kExitOk : kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"list multicoloring on triangle-free induced subgraphs of the triangular lattice"};
  app.require_subcommand(1);

  std::string graph_path, lists_path, coloring_path, out_path;
  int m = 0, a = 0, b = 0;
  GeneratorConfig gen_cfg;
  double scale = 0.02;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  CLI::App* solve = app.add_subcommand("solve", "color an instance");
  solve->add_option("--graph", graph_path)->required();
  solve->add_option("--lists", lists_path)->required();
  solve->add_option("--m", m);
  solve->add_option("--a", a);
  solve->add_option("--b", b);
  solve->add_option("--out", out_path);

  CLI::App* verify = app.add_subcommand("verify", "check a coloring");
  verify->add_option("--graph", graph_path)->required();
  verify->add_option("--lists", lists_path)->required();
  verify->add_option("--coloring", coloring_path)->required();
  verify->add_option("--m", m);
  verify->add_option("--a", a);
  verify->add_option("--b", b);

  CLI::App* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--seed", gen_cfg.seed);
  gen->add_option("--width", gen_cfg.width);
  gen->add_option("--height", gen_cfg.height);
  gen->add_option("--density", gen_cfg.density);
  gen->add_option("--palette", gen_cfg.palette);
  gen->add_option("--a", gen_cfg.list_size);
  gen->add_option("--out", out_path)->required();

  CLI::App* oracle = app.add_subcommand("oracle", "exact verdict for a path or cycle instance");
  oracle->add_option("--graph", graph_path)->required();
  oracle->add_option("--lists", lists_path)->required();
  oracle->add_option("--m", m);
  oracle->add_option("--b", b);
  oracle->add_option("--out", out_path);

  CLI::App* selftest = app.add_subcommand("selftest", "run the property suite");
  selftest->add_option("--scale", scale);
  selftest->add_option("--threads", threads);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(graph_path, lists_path, m, a, b, out_path);
    if (verify->parsed()) return cmd_verify(graph_path, lists_path, coloring_path, m, a, b);
    if (gen->parsed()) return cmd_gen(gen_cfg, out_path);
    if (oracle->parsed()) return cmd_oracle(graph_path, lists_path, m, a, b, out_path);
    if (selftest->parsed()) return cmd_selftest(scale, threads);
  } catch (const latcol::GateError& e) {
    std::fprintf(stderr, "rejected: %s\n", e.what());
    return kExitRejected;
  } catch (const latcol::InputError& e) {
    std::fprintf(stderr, "bad input: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRejected;
  }
  return kExitBadInput;
}
