#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latcol/color.hpp"
#include "latcol/errors.hpp"
#include "latcol/lattice.hpp"
#include "latcol/oracle.hpp"
#include "latcol/path.hpp"

namespace latcol {

enum class StepKind {
  LongHandle,
  ShortHandle,
  Mirror,
  PendantForest,
  BaseIsolated,
  BasePath,
  BaseEvenCycle,
  BaseOddCycle,
};

inline const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::LongHandle: return "long-handle";
    case StepKind::ShortHandle: return "short-handle";
    case StepKind::Mirror: return "mirror";
    case StepKind::PendantForest: return "pendant-forest";
    case StepKind::BaseIsolated: return "base-isolated";
    case StepKind::BasePath: return "base-path";
    case StepKind::BaseEvenCycle: return "base-even-cycle";
    case StepKind::BaseOddCycle: return "base-odd-cycle";
  }
  return "?";
}

/// One move of the decomposition. For handle steps the vertices are the
/// handle sequence; for base and peel steps, the vertices handled. Replaying
/// the steps reconstructs how the recursion took the graph apart.
struct DecompositionStep {
  StepKind kind;
  std::vector<Coord> vertices;
};

struct SolveInstance {
  LatticeGraph graph;
  ListAssignment lists;  // aligned with graph.vertices()
  ProblemParams params;
};

struct SolveResult {
  MultiColoring coloring;  // aligned with graph.vertices()
  std::vector<DecompositionStep> steps;
};

namespace detail {

using ColorMap = std::map<Coord, ColorSet>;

// Base cases on a connected component of maximum degree <= 2: an isolated
// vertex, a path (greedy; a >= 2b leaves b free colors after one colored
// neighbor) or a cycle (exact solver; feasibility is guaranteed for even
// cycles by a >= 2b and for odd cycles, which girth forces to length >= 7,
// by a/b >= 5/2).
inline void solve_base_component(const LatticeGraph& comp, const ColorMap& lists,
                                 const ProblemParams& params, ColorMap& coloring,
                                 std::vector<DecompositionStep>& steps) {
  const int b = params.b;
  const int n = comp.size();
  for (int i = 0; i < n; ++i)
    if (comp.degree(i) > 2)
      throw InputError("solve_base: component has a vertex of degree > 2");

  if (n == 1) {
    Coord v = comp.vertices()[0];
    coloring[v] = lists.at(v).lowest(b);
    steps.push_back({StepKind::BaseIsolated, {v}});
    return;
  }

  std::vector<int> ends;
  for (int i = 0; i < n; ++i)
    if (comp.degree(i) <= 1) ends.push_back(i);

  if (!ends.empty()) {
    // Path: walk from the lexicographically smaller endpoint, avoiding only
    // the previous vertex's colors.
    int cur = ends.front();
    int prev = -1;
    std::vector<Coord> order;
    while (true) {
      Coord v = comp.vertices()[static_cast<std::size_t>(cur)];
      order.push_back(v);
      ColorSet avail = lists.at(v);
      if (prev >= 0) avail -= coloring.at(comp.vertices()[static_cast<std::size_t>(prev)]);
      if (avail.size() < b)
        throw StructuralViolation("solve_base: path greedy ran out of colors");
      coloring[v] = avail.lowest(b);
      int next = -1;
      for (int nb : comp.neighbors_of(cur))
        if (nb != prev) next = nb;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    steps.push_back({StepKind::BasePath, std::move(order)});
    return;
  }

  // Cycle: canonical traversal from the smallest vertex toward its smaller
  // neighbor, then the exact solver.
  int start = 0;
  std::vector<Coord> order;
  {
    int cur = start;
    const auto& nbrs = comp.neighbors_of(start);
    int prev = -1;
    int first = std::min(nbrs[0], nbrs[1]);
    order.push_back(comp.vertices()[static_cast<std::size_t>(start)]);
    prev = start;
    cur = first;
    while (cur != start) {
      order.push_back(comp.vertices()[static_cast<std::size_t>(cur)]);
      const auto& nb = comp.neighbors_of(cur);
      int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
  }
  ListAssignment cyc_lists;
  cyc_lists.reserve(order.size());
  for (Coord v : order) cyc_lists.push_back(lists.at(v));
  WeightFn cyc_w(order.size(), b);
  // The default budget is sized for refereeing tiny instances; cycle solving
  // inside the main algorithm is guaranteed feasible and gets a budget wide
  // enough for 13-choose-5 candidate spaces on the cycle lengths the corpus
  // produces.
  std::optional<MultiColoring> cyc =
      solve_cycle_exact(cyc_lists, cyc_w, OracleLimits{50'000'000'000LL});
  if (!cyc) throw StructuralViolation("solve_base: cycle reported infeasible");
  for (std::size_t i = 0; i < order.size(); ++i) coloring[order[i]] = (*cyc)[i];
  steps.push_back(
      {order.size() % 2 == 0 ? StepKind::BaseEvenCycle : StepKind::BaseOddCycle, std::move(order)});
}

inline std::vector<std::vector<int>> connected_components(const LatticeGraph& G) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<std::size_t>(G.size()), 0);
  for (int s = 0; s < G.size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int nb : G.neighbors_of(comp[head])) {
        if (!seen[static_cast<std::size_t>(nb)]) {
          seen[static_cast<std::size_t>(nb)] = 1;
          comp.push_back(nb);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline LatticeGraph subgraph(const LatticeGraph& G, const std::vector<int>& idxs) {
  std::vector<Coord> vs;
  vs.reserve(idxs.size());
  for (int i : idxs) vs.push_back(G.vertices()[static_cast<std::size_t>(i)]);
  return LatticeGraph(std::move(vs));
}

inline LatticeGraph remove_vertices(const LatticeGraph& G, const std::vector<Coord>& gone) {
  std::set<Coord> drop(gone.begin(), gone.end());
  std::vector<Coord> vs;
  for (Coord v : G.vertices())
    if (!drop.count(v)) vs.push_back(v);
  return LatticeGraph(std::move(vs));
}

inline void solve_rec(const LatticeGraph& G, const ColorMap& lists, const ProblemParams& params,
                      ColorMap& coloring, std::vector<DecompositionStep>& steps);

// Strips every vertex of degree <= 1 (always taking the smallest), solves
// the remaining core, then reinserts the stripped vertices in reverse order.
// Each reinserted vertex sees at most one colored neighbor, and a - b >= b
// colors remain available.
inline void peel_pendants(const LatticeGraph& G, const ColorMap& lists,
                          const ProblemParams& params, ColorMap& coloring,
                          std::vector<DecompositionStep>& steps) {
  LatticeGraph cur = G;
  std::vector<std::pair<Coord, std::optional<Coord>>> peeled;
  while (true) {
    std::optional<Coord> pick;
    std::optional<Coord> neighbor;
    for (int i = 0; i < cur.size(); ++i) {
      if (cur.degree(i) <= 1) {
        pick = cur.vertices()[static_cast<std::size_t>(i)];
        if (cur.degree(i) == 1)
          neighbor = cur.vertices()[static_cast<std::size_t>(cur.neighbors_of(i)[0])];
        break;  // vertices are sorted, so the first hit is the smallest
      }
    }
    if (!pick) break;
    peeled.emplace_back(*pick, neighbor);
    cur = remove_vertices(cur, {*pick});
  }
  if (peeled.empty())
    throw StructuralViolation("solver: stuck without a cutting handle or a pendant vertex");

  std::vector<Coord> order;
  order.reserve(peeled.size());
  for (const auto& [v, nb] : peeled) order.push_back(v);
  steps.push_back({StepKind::PendantForest, order});

  solve_rec(cur, lists, params, coloring, steps);

  for (std::size_t k = peeled.size(); k-- > 0;) {
    const auto& [v, nb] = peeled[k];
    ColorSet avail = lists.at(v);
    if (nb) avail -= coloring.at(*nb);
    if (avail.size() < params.b)
      throw StructuralViolation("solver: pendant reinsertion ran out of colors");
    coloring[v] = avail.lowest(params.b);
  }
}

inline void extend_long_handle(const LatticeGraph& G, const Handle& h, const ColorMap& lists,
                               const ProblemParams& params, ColorMap& coloring,
                               std::vector<DecompositionStep>& steps) {
  steps.push_back({StepKind::LongHandle, h.seq});
  LatticeGraph rest = remove_vertices(G, h.interior());
  solve_rec(rest, lists, params, coloring, steps);

  const int n = h.length();
  WeightedPath path;
  path.lists.reserve(static_cast<std::size_t>(n) + 1);
  path.lists.push_back(coloring.at(h.front()));
  for (int i = 1; i <= n - 1; ++i) path.lists.push_back(lists.at(h.seq[static_cast<std::size_t>(i)]));
  path.lists.push_back(coloring.at(h.back()));
  path.weights.assign(static_cast<std::size_t>(n) + 1, params.b);

  MultiColoring pc = color_handle_long(path, params);
  for (int i = 1; i <= n - 1; ++i)
    coloring[h.seq[static_cast<std::size_t>(i)]] = pc[static_cast<std::size_t>(i)];
}

inline void extend_short_handle(const LatticeGraph& G, const Handle& h, const ColorMap& lists,
                                const ProblemParams& params, ColorMap& coloring,
                                std::vector<DecompositionStep>& steps) {
  HandleContext ctx = short_handle_context(G, h);
  std::vector<Coord> step_vertices = h.seq;
  step_vertices.push_back(ctx.v4);
  steps.push_back({StepKind::ShortHandle, std::move(step_vertices)});

  LatticeGraph rest = remove_vertices(G, h.interior());
  solve_rec(rest, lists, params, coloring, steps);

  // The recursion colored v3 and v4; their colors are discarded but steer
  // the trimming so that the two trimmed end lists keep amplitude >= 2b.
  const ColorSet old3 = coloring.at(ctx.v3);
  const ColorSet old4 = coloring.at(ctx.v4);
  const ColorSet cu = coloring.at(ctx.u);
  const ColorSet cv5 = ctx.v5 ? coloring.at(*ctx.v5) : ColorSet{};

  ColorSet base3 = lists.at(ctx.v3) - cu;
  ColorSet base4 = lists.at(ctx.v4) - cv5;
  if (!old3.subset_of(base3) || !old4.subset_of(base4))
    throw StructuralViolation("solver: recursive colors escape the reduced lists");
  auto [trimmed3, trimmed4] = trim_end_lists(base3, base4, params.b, params.e, old3, old4);
  if ((trimmed3 | trimmed4).size() < 2 * params.b)
    throw StructuralViolation("solver: trimmed end lists lost the amplitude bound");

  WeightedPath path;
  path.lists = {coloring.at(h.front()), lists.at(h.seq[1]), lists.at(h.seq[2]), trimmed3, trimmed4};
  path.weights.assign(5, params.b);

  MultiColoring pc = color_handle_short(path, params);
  coloring[h.seq[1]] = pc[1];
  coloring[h.seq[2]] = pc[2];
  coloring[ctx.v3] = pc[3];
  coloring[ctx.v4] = pc[4];
}

inline void solve_rec(const LatticeGraph& G, const ColorMap& lists, const ProblemParams& params,
                      ColorMap& coloring, std::vector<DecompositionStep>& steps) {
  if (G.empty()) return;

  bool has_node = false;
  for (int i = 0; i < G.size() && !has_node; ++i)
    if (G.degree(i) == 3) has_node = true;

  if (!has_node) {
    for (const auto& comp : connected_components(G))
      solve_base_component(subgraph(G, comp), lists, params, coloring, steps);
    return;
  }

  std::optional<Handle> h = cutting_handle(G);
  if (h) {
    if (h->length() < 3)
      throw StructuralViolation("solver: cutting handle of length " +
                                std::to_string(h->length()));
    if (h->length() >= even_ceil(2LL * params.b, params.e))
      extend_long_handle(G, *h, lists, params, coloring, steps);
    else if (h->length() == 3)
      extend_short_handle(G, *h, lists, params, coloring, steps);
    else
      throw StructuralViolation("solver: handle length outside both extension regimes");
    return;
  }

  LatticeGraph mirrored = mirror_graph(G);
  if (cutting_handle(mirrored)) {
    steps.push_back({StepKind::Mirror, {}});
    ColorMap mirrored_lists;
    for (const auto& [v, L] : lists) mirrored_lists[mirror_coord(v)] = L;
    ColorMap mirrored_coloring;
    const std::size_t first_sub_step = steps.size();
    solve_rec(mirrored, mirrored_lists, params, mirrored_coloring, steps);
    for (const auto& [v, c] : mirrored_coloring) coloring[mirror_coord(v)] = c;
    // Report the trace in the caller's coordinates.
    for (std::size_t s = first_sub_step; s < steps.size(); ++s)
      for (Coord& v : steps[s].vertices) v = mirror_coord(v);
    return;
  }

  // Nodes exist but neither chirality yields a cutting handle: the walk above
  // the cutting node dies in a pendant, so pendant stripping must make
  // progress.
  peel_pendants(G, lists, params, coloring, steps);
}

}  // namespace detail

/// Colors a component of maximum degree <= 2 (isolated vertex, path or
/// cycle). Exposed for direct use; the full solver dispatches here once no
/// degree-3 vertex remains.
inline MultiColoring solve_base(const LatticeGraph& component, const ListAssignment& lists,
                                const ProblemParams& params) {
  if (component.size() != static_cast<int>(lists.size()))
    throw InputError("solve_base: lists must align with the component's vertices");
  detail::ColorMap list_map, color_map;
  for (int i = 0; i < component.size(); ++i)
    list_map[component.vertices()[static_cast<std::size_t>(i)]] = lists[static_cast<std::size_t>(i)];
  std::vector<DecompositionStep> steps;
  for (const auto& comp : detail::connected_components(component))
    detail::solve_base_component(detail::subgraph(component, comp), list_map, params, color_map,
                                 steps);
  MultiColoring out;
  out.reserve(lists.size());
  for (Coord v : component.vertices()) out.push_back(color_map.at(v));
  return out;
}

/// Colors a triangle-free induced lattice subgraph with uniform demand b
/// from per-vertex lists of size a, where a/b >= 5/2. Works by recursive
/// handle removal: remove the interior of the cutting handle, color the
/// rest, then extend across the handle, which is always possible at these
/// list sizes. The coloring is verified before it is returned.
inline SolveResult solve(const SolveInstance& instance) {
  const LatticeGraph& G = instance.graph;
  const ProblemParams& params = instance.params;

  if (!params.meets_ratio_gate())
    throw GateError("solve: requires a/b >= 5/2 (got a=" + std::to_string(params.a) +
                    ", b=" + std::to_string(params.b) + ")");
  if (params.e < 1 || params.a != 2 * params.b + params.e)
    throw GateError("solve: params must satisfy a = 2b + e with e >= 1");
  if (static_cast<int>(instance.lists.size()) != G.size())
    throw InputError("solve: lists must align with the graph's vertices");
  if (!list_sizes_ok(instance.lists, params.a))
    throw InputError("solve: every list must have exactly a colors");
  if (auto tri = find_triangle(G)) {
    auto [p, q, r] = *tri;
    throw InputError("solve: graph has a triangle at (" + std::to_string(p.x) + "," +
                     std::to_string(p.y) + "),(" + std::to_string(q.x) + "," + std::to_string(q.y) +
                     "),(" + std::to_string(r.x) + "," + std::to_string(r.y) + ")");
  }
  for (int i = 0; i < G.size(); ++i) {
    if (G.degree(i) > 3)
      throw StructuralViolation("solve: vertex of degree > 3 in a triangle-free induced subgraph");
    if (G.degree(i) == 3 &&
        classify_node(G, G.vertices()[static_cast<std::size_t>(i)]) == NodeKind::NotANode)
      throw StructuralViolation("solve: degree-3 vertex matching neither node pattern");
  }

  detail::ColorMap list_map, color_map;
  for (int i = 0; i < G.size(); ++i)
    list_map[G.vertices()[static_cast<std::size_t>(i)]] = instance.lists[static_cast<std::size_t>(i)];

  SolveResult result;
  detail::solve_rec(G, list_map, params, color_map, result.steps);

  result.coloring.reserve(instance.lists.size());
  for (Coord v : G.vertices()) result.coloring.push_back(color_map.at(v));

  WeightFn w(instance.lists.size(), params.b);
  VerifyReport rep = verify_coloring(G.edges(), instance.lists, w, result.coloring);
  if (!rep.ok())
    throw StructuralViolation("solve produced an invalid coloring: " + rep.message());
  return result;
}

/// Convenience entry point for a = 5m, b = 2m.
inline SolveResult solve_5m_2m(const LatticeGraph& G, const ListAssignment& lists, int m) {
  if (m < 1) throw InputError("solve_5m_2m: m must be at least 1");
  return solve({G, lists, ProblemParams::for_multiplier(m)});
}

}  // namespace latcol
