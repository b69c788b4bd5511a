#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "latcol/color.hpp"
#include "latcol/generator.hpp"
#include "latcol/lattice.hpp"
#include "latcol/oracle.hpp"
#include "latcol/path.hpp"
#include "latcol/solver.hpp"

// Property suite shared by the selftest command and the acceptance runner.
// Every criterion is a closed-form claim checked against either the exact
// solver or an explicitly constructed instance family. scale < 1 shrinks the
// case counts (and strides exhaustive families) for quick runs; scale = 1 is
// the full suite.

namespace latcol::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  long long cases = 0;
  long long failures = 0;
  double seconds = 0.0;
  std::string note;
};

namespace stdetail {

struct Collector {
  std::atomic<long long> cases{0};
  std::atomic<long long> failures{0};
  std::mutex mu;
  std::string first_failure;

  void fail(const std::string& what) {
    failures.fetch_add(1, std::memory_order_relaxed);
    std::lock_guard<std::mutex> lock(mu);
    if (first_failure.empty()) first_failure = what;
  }
  void count(long long n = 1) { cases.fetch_add(n, std::memory_order_relaxed); }
};

template <class Body>
void sharded_for(long long total, int threads, Body&& body) {
  threads = std::max(1, threads);
  if (threads == 1 || total < 2 * threads) {
    for (long long i = 0; i < total; ++i) body(i);
    return;
  }
  std::atomic<long long> next{0};
  auto worker = [&] {
    while (true) {
      long long chunk = next.fetch_add(256);
      if (chunk >= total) return;
      long long end = std::min(total, chunk + 256);
      for (long long i = chunk; i < end; ++i) body(i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

inline long long scaled(long long full, double scale) {
  return std::max<long long>(1, std::llround(static_cast<double>(full) * scale));
}

inline int stride_for(double scale) {
  if (scale >= 1.0) return 1;
  return std::max(1, static_cast<int>(std::lround(1.0 / scale)));
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

// Waterfall list structures over n+1 vertices: per-vertex private color
// counts and consecutive-pair overlap counts, total at most `palette`. Up to
// renaming colors this enumerates every waterfall list exactly once, and the
// path-reversal symmetry is quotiented out as well.
struct WaterfallStructure {
  int n = 0;
  std::vector<int> parts;  // p_0..p_n, then o_0..o_{n-1}
};

inline void enumerate_waterfall_structures(int max_n, int palette,
                                           std::vector<WaterfallStructure>& out) {
  for (int n = 0; n <= max_n; ++n) {
    const int slots = 2 * n + 1;
    std::vector<int> parts(static_cast<std::size_t>(slots), 0);
    std::function<void(int, int)> rec = [&](int slot, int used) {
      if (slot == slots) {
        std::vector<int> reversed(static_cast<std::size_t>(slots));
        for (int i = 0; i <= n; ++i) reversed[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(n - i)];
        for (int i = 0; i < n; ++i)
          reversed[static_cast<std::size_t>(n + 1 + i)] = parts[static_cast<std::size_t>(n + 1 + (n - 1 - i))];
        if (parts <= reversed) out.push_back({n, parts});
        return;
      }
      for (int v = 0; used + v <= palette; ++v) {
        parts[static_cast<std::size_t>(slot)] = v;
        rec(slot + 1, used + v);
      }
      parts[static_cast<std::size_t>(slot)] = 0;
    };
    rec(0, 0);
  }
}

inline ListAssignment lists_from_structure(const WaterfallStructure& s) {
  ListAssignment L(static_cast<std::size_t>(s.n) + 1);
  Color next = 1;
  for (int i = 0; i <= s.n; ++i) {
    for (int k = 0; k < s.parts[static_cast<std::size_t>(i)]; ++k)
      L[static_cast<std::size_t>(i)].insert(next++);
    if (i < s.n) {
      for (int k = 0; k < s.parts[static_cast<std::size_t>(s.n + 1 + i)]; ++k) {
        L[static_cast<std::size_t>(i)].insert(next);
        L[static_cast<std::size_t>(i) + 1].insert(next);
        ++next;
      }
    }
  }
  return L;
}

// Support multisets over n+1 vertices: every list assignment using at most
// `palette` colors, up to renaming colors. A support is a nonempty vertex
// subset encoded as a bitmask.
inline void enumerate_support_multisets(int n, int palette,
                                        const std::function<void(const std::vector<int>&)>& emit) {
  const int max_mask = (1 << (n + 1)) - 1;
  std::vector<int> supports;
  std::function<void(int, int)> rec = [&](int min_mask, int remaining) {
    emit(supports);
    if (remaining == 0) return;
    for (int mask = min_mask; mask <= max_mask; ++mask) {
      supports.push_back(mask);
      rec(mask, remaining - 1);
      supports.pop_back();
    }
  };
  rec(1, palette);
}

inline ListAssignment lists_from_supports(int n, const std::vector<int>& supports) {
  ListAssignment L(static_cast<std::size_t>(n) + 1);
  for (std::size_t c = 0; c < supports.size(); ++c)
    for (int v = 0; v <= n; ++v)
      if (supports[c] & (1 << v)) L[static_cast<std::size_t>(v)].insert(static_cast<Color>(c) + 1);
  return L;
}

struct WeightOdometer {
  std::vector<int> w;
  int max_w;
  explicit WeightOdometer(int count, int max_weight) : w(static_cast<std::size_t>(count), 0), max_w(max_weight) {}
  bool advance() {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < max_w) {
        ++w[i];
        std::fill(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i), 0);
        return true;
      }
    }
    return false;
  }
};

inline std::string describe_path(const WeightedPath& P) {
  std::string s = "lists=";
  for (const ColorSet& l : P.lists) s += l.to_string();
  s += " w=";
  for (int wv : P.weights) s += std::to_string(wv) + ",";
  return s;
}

}  // namespace stdetail

// ---------------------------------------------------------------------------
// Criterion 1: on waterfall lists the amplitude criterion equals the exact
// verdict. Exhaustive over paths of length <= 5, at most 7 colors, weights
// <= 2, up to color renaming and path reversal; must finish within 60 s.
inline CriterionResult criterion_waterfall_exactness(double scale, int threads) {
  stdetail::Timer timer;
  stdetail::Collector col;
  std::vector<stdetail::WaterfallStructure> structures;
  stdetail::enumerate_waterfall_structures(5, 7, structures);
  const int stride = stdetail::stride_for(scale);

  stdetail::sharded_for(static_cast<long long>(structures.size()), threads, [&](long long si) {
    if (si % stride != 0) return;
    const auto& s = structures[static_cast<std::size_t>(si)];
    ListAssignment L = stdetail::lists_from_structure(s);
    stdetail::WeightOdometer odo(s.n + 1, 2);
    do {
      WeightedPath P{L, odo.w};
      bool closed_form = waterfall_colorable(P);
      bool exact = path_colorable_exact(L, odo.w);
      col.count();
      if (closed_form != exact) {
        col.fail("criterion 1: " + stdetail::describe_path(P));
      } else if (closed_form) {
        // On every feasible instance the greedy itself must succeed without
        // falling back to the exact solver, and its output must verify.
        GreedyStats stats;
        MultiColoring c = waterfall_color(P, &stats);
        if (stats.oracle_fallback)
          col.fail("criterion 1: greedy fell back on " + stdetail::describe_path(P));
        else if (!verify_coloring(path_edges(P.vertex_count()), L, odo.w, c).ok())
          col.fail("criterion 1: greedy output invalid on " + stdetail::describe_path(P));
      }
    } while (odo.advance());
  });

  CriterionResult r{1, "waterfall-criterion-exactness"};
  r.cases = col.cases;
  r.failures = col.failures;
  r.seconds = timer.seconds();
  bool in_time = r.seconds < 60.0;
  r.pass = r.failures == 0 && in_time;
  r.note = col.first_failure;
  if (!in_time) r.note += " exceeded 60s";
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 2: the Hall check is exact on paths for arbitrary lists.
// Exhaustive (up to color renaming) for lengths <= 3 with at most 7 colors
// and weights <= 2; seeded random coverage for lengths 4..5; and on longer
// random paths every exactly-colorable instance satisfies the Hall check.
inline CriterionResult criterion_hall_exactness(double scale, int threads) {
  stdetail::Timer timer;
  stdetail::Collector col;
  const int stride = stdetail::stride_for(scale);

  for (int n = 0; n <= 3; ++n) {
    std::vector<std::vector<int>> all;
    stdetail::enumerate_support_multisets(n, 7, [&](const std::vector<int>& s) { all.push_back(s); });
    stdetail::sharded_for(static_cast<long long>(all.size()), threads, [&](long long si) {
      if (si % stride != 0) return;
      ListAssignment L = stdetail::lists_from_supports(n, all[static_cast<std::size_t>(si)]);
      stdetail::WeightOdometer odo(n + 1, 2);
      do {
        WeightedPath P{L, odo.w};
        bool hall = hall_check_path(P);
        bool exact = path_colorable_exact(L, odo.w);
        col.count();
        if (hall != exact) col.fail("criterion 2 exhaustive: " + stdetail::describe_path(P));
      } while (odo.advance());
    });
  }

  for (int n = 4; n <= 5; ++n) {
    const long long count = stdetail::scaled(250'000, scale);
    stdetail::sharded_for(count, threads, [&](long long i) {
      detail::Rng rng(0xC2000 + static_cast<std::uint64_t>(n) * 1'000'003 + static_cast<std::uint64_t>(i));
      int colors = static_cast<int>(rng.below(8));
      std::vector<int> supports;
      for (int c = 0; c < colors; ++c)
        supports.push_back(1 + static_cast<int>(rng.below((1u << (n + 1)) - 1)));
      ListAssignment L = stdetail::lists_from_supports(n, supports);
      WeightFn w;
      for (int v = 0; v <= n; ++v) w.push_back(static_cast<int>(rng.below(3)));
      WeightedPath P{L, w};
      bool hall = hall_check_path(P);
      bool exact = path_colorable_exact(L, w);
      col.count();
      if (hall != exact) col.fail("criterion 2 random: " + stdetail::describe_path(P));
    });
  }

  // Necessity (and exactness) on larger random paths.
  const long long larger = stdetail::scaled(10'000, scale);
  stdetail::sharded_for(larger, threads, [&](long long i) {
    detail::Rng rng(0x11a11 + static_cast<std::uint64_t>(i));
    int n = 6 + static_cast<int>(rng.below(15));
    ListAssignment L;
    WeightFn w;
    for (int v = 0; v <= n; ++v) {
      int size = 1 + static_cast<int>(rng.below(6));
      ColorSet s;
      while (s.size() < size) s.insert(1 + static_cast<Color>(rng.below(30)));
      L.push_back(s);
      w.push_back(static_cast<int>(rng.below(3)));
    }
    bool exact = path_colorable_exact(L, w);
    bool hall = hall_check_path({L, w});
    col.count();
    if (exact && !hall) col.fail("criterion 2 necessity violated on a larger path");
    if (!exact && hall) col.fail("criterion 2 sufficiency violated on a larger path");
  });

  CriterionResult r{2, "hall-exactness-on-paths"};
  r.cases = col.cases;
  r.failures = col.failures;
  r.seconds = timer.seconds();
  r.pass = r.failures == 0;
  r.note = col.first_failure;
  return r;
}

// ---------------------------------------------------------------------------
// Criterion 3: the waterfall transformation preserves sizes and exact
// colorability, and every exact coloring of the output pulls back to a valid
// coloring of the input.
inline CriterionResult criterion_transform_similarity(double scale, int threads) {
  stdetail::Timer timer;
  stdetail::Collector col;
  const long long count = stdetail::scaled(10'000, scale);
  stdetail::sharded_for(count, threads, [&](long long i) {
    detail::Rng rng(0x51713 + static_cast<std::uint64_t>(i));
    WeightedPath P;
    const int n = static_cast<int>(rng.below(9));
    for (int v = 0; v <= n; ++v) P.weights.push_back(static_cast<int>(rng.below(3)));
    for (int v = 0; v <= n; ++v) {
      int need = (v >= 1 && v <= n - 1)
                     ? P.weights[static_cast<std::size_t>(v)] + P.weights[static_cast<std::size_t>(v) + 1]
                     : 0;
      int size = std::min(12, need + static_cast<int>(rng.below(3)));
      ColorSet s;
      while (s.size() < size) s.insert(1 + static_cast<Color>(rng.below(12)));
      P.lists.push_back(s);
    }
    col.count();
    try {
      TransformResult tr = waterfall_transform(P);
      for (std::size_t v = 0; v < P.lists.size(); ++v)
        if (tr.lists[v].size() != P.lists[v].size()) {
          col.fail("criterion 3: size not preserved");
          return;
        }
      if (!is_waterfall({tr.lists, P.weights})) {
        col.fail("criterion 3: output not waterfall");
        return;
      }
      if (replay_trace(P.lists, tr.trace) != tr.lists) {
        col.fail("criterion 3: trace replay mismatch");
        return;
      }
      bool before = path_colorable_exact(P);
      bool after = path_colorable_exact(tr.lists, P.weights);
      if (before != after) {
        col.fail("criterion 3: colorability changed: " + stdetail::describe_path(P));
        return;
      }
      if (after) {
        auto c = solve_path_exact(tr.lists, P.weights);
        MultiColoring back = pullback_coloring(tr.trace, P, *c);  // verifies internally
        (void)back;
      }
    } catch (const std::exception& e) {
      col.fail(std::string("criterion 3: ") + e.what());
    }
  });

  CriterionResult r{3, "transform-similarity"};
  r.cases = col.cases;
  r.failures = col.failures;
  r.seconds = timer.seconds();
  r.pass = r.failures == 0;
  r.note = col.first_failure;
  return r;
}

// ---------------------------------------------------------------------------
// Criteria 4 and 5: the two handle-extension guarantees over the parameter
// grid b in 1..4, e in 1..2, n from even_ceil(2b/e) to even_ceil(2b/e)+3.
inline CriterionResult criterion_long_handles(double scale, int threads) {
  stdetail::Timer timer;
  stdetail::Collector col;
  const long long per_cell = stdetail::scaled(1'000, scale);
  for (int b = 1; b <= 4; ++b) {
    for (int e = 1; e <= 2; ++e) {
      const ProblemParams params{2 * b + e, b, e, 0};
      const int n_min = even_ceil(2LL * b, e);
      for (int n = n_min; n <= n_min + 3; ++n) {
        stdetail::sharded_for(per_cell, threads, [&, n](long long i) {
          detail::Rng rng(0xC4000 + static_cast<std::uint64_t>(((b * 3 + e) * 16 + n)) * 1'000'003 +
                          static_cast<std::uint64_t>(i));
          const int palette = 3 * params.a;
          WeightedPath P;
          for (int v = 0; v <= n; ++v) {
            int size = (v == 0 || v == n) ? b : params.a;
            ColorSet s;
            while (s.size() < size) s.insert(1 + static_cast<Color>(rng.below(palette)));
            P.lists.push_back(s);
            P.weights.push_back(b);
          }
          col.count();
          try {
            MultiColoring c = color_handle_long(P, params);
            VerifyReport rep = verify_coloring(path_edges(n + 1), P.lists, P.weights, c);
            if (!rep.ok() || !(c.front() == P.lists.front()) || !(c.back() == P.lists.back()))
              col.fail("criterion 4: bad extension: " + stdetail::describe_path(P));
          } catch (const std::exception& ex) {
            col.fail(std::string("criterion 4: ") + ex.what());
          }
        });
      }
    }
  }
  CriterionResult r{4, "long-handle-extension"};
  r.cases = col.cases;
  r.failures = col.failures;
  r.seconds = timer.seconds();
  r.pass = r.failures == 0;
  r.note = col.first_failure;
  return r;
}

inline CriterionResult criterion_short_handles(double scale, int threads) {
  stdetail::Timer timer;
  stdetail::Collector col;
  const long long per_cell = stdetail::scaled(1'000, scale);
  for (int b = 1; b <= 4; ++b) {
    for (int e = 1; e <= 2; ++e) {
      const ProblemParams params{2 * b + e, b, e, 0};
      const int n_min = even_ceil(2LL * b, e);
      for (int n = n_min; n <= n_min + 3; ++n) {
        stdetail::sharded_for(per_cell, threads, [&, n](long long i) {
          detail::Rng rng(0xC5000 + static_cast<std::uint64_t>(((b * 3 + e) * 16 + n)) * 1'000'003 +
                          static_cast<std::uint64_t>(i));
          const int palette = 3 * params.a;
          WeightedPath P;
          while (true) {
            P.lists.clear();
            P.weights.clear();
            for (int v = 0; v <= n; ++v) {
              int size = v == 0 ? b : (v >= n - 1 ? b + e : params.a);
              ColorSet s;
              while (s.size() < size) s.insert(1 + static_cast<Color>(rng.below(palette)));
              P.lists.push_back(s);
              P.weights.push_back(b);
            }
            if ((P.lists[static_cast<std::size_t>(n) - 1] | P.lists[static_cast<std::size_t>(n)])
                    .size() >= 2 * b)
              break;
          }
          col.count();
          try {
            MultiColoring c = color_handle_short(P, params);
            VerifyReport rep = verify_coloring(path_edges(n + 1), P.lists, P.weights, c);
            if (!rep.ok()) col.fail("criterion 5: bad extension: " + stdetail::describe_path(P));
          } catch (const std::exception& ex) {
            col.fail(std::string("criterion 5: ") + ex.what());
          }
        });
      }
    }
  }
  CriterionResult r{5, "short-handle-extension"};
  r.cases = col.cases;
  r.failures = col.failures;
  r.seconds = timer.seconds();
  r.pass = r.failures == 0;
  r.note = col.first_failure;
  return r;
}

// ---------------------------------------------------------------------------
// Shared corpus of generated triangle-free induced subgraphs that contain at
// least one node, used by criteria 6, 7 and 11.
inline std::vector<LatticeGraph> node_corpus(long long target, std::uint64_t seed_base) {
  std::vector<LatticeGraph> out;
  const int widths[] = {5, 7, 8, 10};
  const int heights[] = {4, 5, 6, 8};
  const double densities[] = {0.45, 0.6, 0.75, 0.9};
  std::uint64_t seed = seed_base;
  while (static_cast<long long>(out.size()) < target) {
    GeneratorConfig cfg;
    cfg.width = widths[seed % 4];
    cfg.height = heights[(seed / 4) % 4];
    cfg.density = densities[(seed / 16) % 4];
    cfg.seed = seed++;
    LatticeGraph G = gen_lattice_graph(cfg);
    if (!find_nodes(G).empty()) out.push_back(std::move(G));
  }
  return out;
}

// Criterion 6: every cutting handle of length <= 3 (in either chirality)
// has length exactly 3 and a qualifying v4; no structural violation fires.
inline CriterionResult criterion_cutting_handle_shape(double scale, int threads) {
  stdetail::Timer timer;
  stdetail::Collector col;
  std::vector<LatticeGraph> corpus = node_corpus(stdetail::scaled(5'000, scale), 0xC6000);
  stdetail::sharded_for(static_cast<long long>(corpus.size()), threads, [&](long long i) {
    const LatticeGraph& G = corpus[static_cast<std::size_t>(i)];
    col.count();
    try {
      const LatticeGraph mirrored = mirror_graph(G);
      for (const LatticeGraph* side : {&G, &mirrored}) {
        std::optional<Handle> h = cutting_handle(*side);
        if (h && h->length() <= 3) {
          HandleContext ctx = short_handle_context(*side, *h);
          if (ctx.handle.length() != 3) col.fail("criterion 6: short cutting handle not length 3");
        }
      }
    } catch (const StructuralViolation& ex) {
      col.fail(std::string("criterion 6: ") + ex.what());
    }
  });
  CriterionResult r{6, "cutting-handle-shape"};
  r.cases = col.cases;
  r.failures = col.failures;
  r.seconds = timer.seconds();
  r.pass = r.failures == 0;
  r.note = col.first_failure;
  return r;
}

// Criterion 7: the mirror map preserves adjacency, is an involution and
// swaps the two node chiralities, on the same corpus.
inline CriterionResult criterion_mirror_map(double scale, int threads) {
  stdetail::Timer timer;
  stdetail::Collector col;
  std::vector<LatticeGraph> corpus = node_corpus(stdetail::scaled(5'000, scale), 0xC6000);
  stdetail::sharded_for(static_cast<long long>(corpus.size()), threads, [&](long long i) {
    const LatticeGraph& G = corpus[static_cast<std::size_t>(i)];
    col.count();
    LatticeGraph M = mirror_graph(G);
    if (M.size() != G.size() || M.edges().size() != G.edges().size()) {
      col.fail("criterion 7: mirror changed the edge count");
      return;
    }
    for (auto [u, v] : G.edges()) {
      Coord mu = mirror_coord(G.vertices()[static_cast<std::size_t>(u)]);
      Coord mv = mirror_coord(G.vertices()[static_cast<std::size_t>(v)]);
      std::array<Coord, 6> nbrs = neighbors(mu);
      if (std::find(nbrs.begin(), nbrs.end(), mv) == nbrs.end()) {
        col.fail("criterion 7: adjacency not preserved");
        return;
      }
    }
    if (!(mirror_graph(M).vertices() == G.vertices())) {
      col.fail("criterion 7: mirror is not an involution");
      return;
    }
    int gl = 0, gr = 0, ml = 0, mr = 0;
    for (Coord v : find_nodes(G)) {
      NodeKind k = classify_node(G, v);
      gl += k == NodeKind::LeftNode;
      gr += k == NodeKind::RightNode;
    }
    for (Coord v : find_nodes(M)) {
      NodeKind k = classify_node(M, v);
      ml += k == NodeKind::LeftNode;
      mr += k == NodeKind::RightNode;
    }
    if (gl != mr || gr != ml) col.fail("criterion 7: node chirality counts do not swap");
  });
  CriterionResult r{7, "mirror-map"};
  r.cases = col.cases;
  r.failures = col.failures;
  r.seconds = timer.seconds();
  r.pass = r.failures == 0;
  r.note = col.first_failure;
  return r;
}

// ---------------------------------------------------------------------------
// Criteria 8..10: the full solver. Instances mix uniform, shifted-interval
// and near-identical adversarial lists.
namespace stdetail {

inline ListStyle style_for(std::uint64_t i) {
  switch (i % 3) {
    case 0: return ListStyle::Uniform;
    case 1: return ListStyle::ShiftedInterval;
    default: return ListStyle::NearIdentical;
  }
}

inline LatticeGraph graph_with_at_most(int max_vertices, GeneratorConfig cfg) {
  while (true) {
    LatticeGraph G = gen_lattice_graph(cfg);
    if (G.size() <= max_vertices) return G;
    cfg.seed += 7919;
  }
}

}  // namespace stdetail

inline CriterionResult criterion_full_solver_m1(double scale, int threads) {
  stdetail::Timer timer;
  stdetail::Collector col;
  const long long count = stdetail::scaled(2'000, scale);
  std::vector<double> times(static_cast<std::size_t>(count), 0.0);
  stdetail::sharded_for(count, threads, [&](long long i) {
    GeneratorConfig cfg;
    cfg.width = 6 + static_cast<int>(i % 5);
    cfg.height = 5 + static_cast<int>((i / 5) % 4);
    cfg.density = 0.55 + 0.1 * static_cast<double>(i % 4);
    cfg.seed = 0xC8000 + static_cast<std::uint64_t>(i);
    LatticeGraph G = stdetail::graph_with_at_most(60, cfg);
    ListAssignment L = gen_lists(G, 5, 15, cfg.seed ^ 0xAB, stdetail::style_for(static_cast<std::uint64_t>(i)));
    col.count();
    stdetail::Timer one;
    try {
      SolveResult r = solve_5m_2m(G, L, 1);
      WeightFn w(L.size(), 2);
      if (!verify_coloring(G.edges(), L, w, r.coloring).ok())
        col.fail("criterion 8: coloring failed verification");
    } catch (const std::exception& ex) {
      col.fail(std::string("criterion 8: ") + ex.what());
    }
    times[static_cast<std::size_t>(i)] = one.seconds();
  });
  std::sort(times.begin(), times.end());
  double median = times[times.size() / 2];
  CriterionResult r{8, "full-solver-m1"};
  r.cases = col.cases;
  r.failures = col.failures;
  r.seconds = timer.seconds();
  r.pass = r.failures == 0 && median < 0.1;
  r.note = col.first_failure;
  if (median >= 0.1) r.note += " median " + std::to_string(median) + "s over budget";
  return r;
}

inline CriterionResult criterion_full_solver_m2(double scale, int threads) {
  stdetail::Timer timer;
  stdetail::Collector col;
  const long long count = stdetail::scaled(200, scale);
  std::atomic<bool> over_time{false};
  stdetail::sharded_for(count, threads, [&](long long i) {
    GeneratorConfig cfg;
    cfg.width = 5 + static_cast<int>(i % 2);
    cfg.height = 4;
    cfg.density = 0.55 + 0.15 * static_cast<double>(i % 3);
    cfg.seed = 0xC9000 + static_cast<std::uint64_t>(i);
    LatticeGraph G = stdetail::graph_with_at_most(20, cfg);
    ListAssignment L = gen_lists(G, 10, 30, cfg.seed ^ 0xCD, stdetail::style_for(static_cast<std::uint64_t>(i)));
    col.count();
    stdetail::Timer one;
    try {
      SolveResult r = solve_5m_2m(G, L, 2);
      WeightFn w(L.size(), 4);
      if (!verify_coloring(G.edges(), L, w, r.coloring).ok())
        col.fail("criterion 9: coloring failed verification");
    } catch (const std::exception& ex) {
      col.fail(std::string("criterion 9: ") + ex.what());
    }
    if (one.seconds() >= 10.0) over_time = true;
  });
  CriterionResult r{9, "full-solver-m2"};
  r.cases = col.cases;
  r.failures = col.failures;
  r.seconds = timer.seconds();
  r.pass = r.failures == 0 && !over_time;
  r.note = col.first_failure;
  if (over_time) r.note += " an instance exceeded 10s";
  return r;
}

inline CriterionResult criterion_ratio_generalization(double scale, int threads) {
  stdetail::Timer timer;
  stdetail::Collector col;
  const long long per_pair = stdetail::scaled(200, scale);
  const std::pair<int, int> pairs[] = {{5, 2}, {8, 3}, {11, 4}, {13, 5}};
  for (auto [a, b] : pairs) {
    stdetail::sharded_for(per_pair, threads, [&, a, b](long long i) {
      GeneratorConfig cfg;
      cfg.width = 6 + static_cast<int>(i % 3);
      cfg.height = 5;
      cfg.density = 0.5 + 0.15 * static_cast<double>(i % 3);
      cfg.seed = 0xCA000 + static_cast<std::uint64_t>(a * 1000 + i);
      LatticeGraph G = stdetail::graph_with_at_most(40, cfg);
      ListAssignment L = gen_lists(G, a, 3 * a, cfg.seed ^ 0xEF, stdetail::style_for(static_cast<std::uint64_t>(i)));
      col.count();
      try {
        SolveResult r = solve({G, L, ProblemParams::from_ab(a, b)});
        WeightFn w(L.size(), b);
        if (!verify_coloring(G.edges(), L, w, r.coloring).ok())
          col.fail("criterion 10: coloring failed verification");
      } catch (const std::exception& ex) {
        col.fail(std::string("criterion 10: ") + ex.what());
      }
    });
  }
  // Below the gate: (9,4) must be rejected up front with the gate error.
  {
    LatticeGraph G = induced_graph({{0, 0}, {1, 0}});
    ListAssignment L(2, ColorSet{1, 2, 3, 4, 5, 6, 7, 8, 9});
    col.count();
    bool rejected = false;
    try {
      solve({G, L, ProblemParams::from_ab(9, 4)});
    } catch (const GateError&) {
      rejected = true;
    } catch (const std::exception&) {
    }
    if (!rejected) col.fail("criterion 10: (9,4) was not rejected by the gate");
  }
  CriterionResult r{10, "ratio-generalization"};
  r.cases = col.cases;
  r.failures = col.failures;
  r.seconds = timer.seconds();
  r.pass = r.failures == 0;
  r.note = col.first_failure;
  return r;
}

// Criterion 11: every generated graph has girth at least 6.
inline CriterionResult criterion_girth(double scale, int threads) {
  stdetail::Timer timer;
  stdetail::Collector col;
  std::vector<LatticeGraph> corpus = node_corpus(stdetail::scaled(5'000, scale), 0xC6000);
  stdetail::sharded_for(static_cast<long long>(corpus.size()), threads, [&](long long i) {
    col.count();
    if (!girth_at_least_6(corpus[static_cast<std::size_t>(i)]))
      col.fail("criterion 11: generated graph with girth below 6");
  });
  CriterionResult r{11, "girth-at-least-6"};
  r.cases = col.cases;
  r.failures = col.failures;
  r.seconds = timer.seconds();
  r.pass = r.failures == 0;
  r.note = col.first_failure;
  return r;
}

inline std::vector<CriterionResult> run_all(
    double scale, int threads,
    const std::function<void(const CriterionResult&)>& on_done = nullptr, int only = 0) {
  using Fn = CriterionResult (*)(double, int);
  const Fn criteria[] = {
      criterion_waterfall_exactness, criterion_hall_exactness, criterion_transform_similarity,
      criterion_long_handles,        criterion_short_handles,  criterion_cutting_handle_shape,
      criterion_mirror_map,          criterion_full_solver_m1, criterion_full_solver_m2,
      criterion_ratio_generalization, criterion_girth,
  };
  std::vector<CriterionResult> results;
  for (int i = 0; i < 11; ++i) {
    if (only != 0 && only != i + 1) continue;
    CriterionResult r = criteria[i](scale, threads);
    if (on_done) on_done(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace latcol::selftest
