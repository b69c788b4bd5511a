#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "latcol/color.hpp"
#include "latcol/errors.hpp"
#include "latcol/oracle.hpp"

namespace latcol {

/// A path v_0..v_n with per-vertex lists and demands. n is the length
/// (number of edges); the path has n+1 vertices.
struct WeightedPath {
  ListAssignment lists;
  WeightFn weights;

  int n() const { return static_cast<int>(lists.size()) - 1; }
  int vertex_count() const { return static_cast<int>(lists.size()); }

  void validate() const {
    if (lists.empty()) throw InputError("WeightedPath: needs at least one vertex");
    if (lists.size() != weights.size())
      throw InputError("WeightedPath: lists and weights must cover the same vertices");
    for (int wv : weights)
      if (wv < 0) throw InputError("WeightedPath: negative demand");
  }
};

inline std::vector<std::pair<int, int>> path_edges(int vertex_count) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < vertex_count; ++i) es.emplace_back(i, i + 1);
  return es;
}

inline std::optional<MultiColoring> solve_path_exact(
    const WeightedPath& P, const std::optional<ColorSet>& fixed_start = std::nullopt,
    const std::optional<ColorSet>& fixed_end = std::nullopt, OracleLimits limits = {}) {
  return solve_path_exact(P.lists, P.weights, fixed_start, fixed_end, limits);
}

inline bool path_colorable_exact(const WeightedPath& P,
                                 const std::optional<ColorSet>& fixed_start = std::nullopt,
                                 const std::optional<ColorSet>& fixed_end = std::nullopt,
                                 OracleLimits limits = {}) {
  return path_colorable_exact(P.lists, P.weights, fixed_start, fixed_end, limits);
}

/// Occurrence span of one color across the path lists.
struct ColorSpan {
  Color color = 0;
  int first = 0;
  int last = 0;
};

/// Spans of all colors present in L, sorted by (first, last, color).
inline std::vector<ColorSpan> color_spans(const ListAssignment& L) {
  std::map<Color, std::pair<int, int>> spans;
  for (int i = 0; i < static_cast<int>(L.size()); ++i) {
    L[i].for_each([&](Color c) {
      auto it = spans.find(c);
      if (it == spans.end())
        spans.emplace(c, std::pair<int, int>{i, i});
      else
        it->second.second = i;
    });
  }
  std::vector<ColorSpan> out;
  out.reserve(spans.size());
  for (auto& [c, fl] : spans) out.push_back({c, fl.first, fl.second});
  std::sort(out.begin(), out.end(), [](const ColorSpan& a, const ColorSpan& b) {
    return std::tie(a.first, a.last, a.color) < std::tie(b.first, b.last, b.color);
  });
  return out;
}

/// True iff lists at distance >= 2 never share a color, i.e. every color is
/// confined to one vertex or two consecutive vertices.
inline bool is_waterfall(const WeightedPath& P) {
  P.validate();
  for (const ColorSpan& s : color_spans(P.lists))
    if (s.last - s.first >= 2) return false;
  return true;
}

/// Union of the lists on indices i..j.
inline ColorSet amplitude(const WeightedPath& P, int i, int j) {
  P.validate();
  if (i < 0 || j > P.n() || i > j) throw InputError("amplitude: index range out of bounds");
  ColorSet acc;
  for (int k = i; k <= j; ++k) acc |= P.lists[k];
  return acc;
}

/// True iff |L(i)| >= w(i) + w(i+1) at every interior vertex. Paths of
/// length < 2 have no interior vertex and are vacuously good.
inline bool is_good(const WeightedPath& P) {
  P.validate();
  for (int i = 1; i <= P.n() - 1; ++i)
    if (P.lists[i].size() < P.weights[i] + P.weights[i + 1]) return false;
  return true;
}

/// Record of everything a waterfall transformation did, sufficient both to
/// replay the transformation and to pull a coloring of the output list back
/// onto the input list.
struct TransformTrace {
  // Step 1: a color whose occurrences were not consecutive had each run after
  // the first renamed to a fresh color, confined to [first, last].
  struct RunRename {
    Color original = 0;
    Color fresh = 0;
    int first = 0;
    int last = 0;
  };
  // Step 3: color old_color spanned [span_first, span_last] with width >= 2
  // and was replaced by fresh_color on indices span_first+2 .. span_last.
  struct Split {
    Color old_color = 0;
    Color fresh_color = 0;
    int span_first = 0;
    int span_last = 0;
  };

  std::vector<RunRename> run_renames;
  std::vector<std::pair<Color, Color>> relabel;  // old -> canonical id
  std::vector<Split> splits;

  bool empty() const { return run_renames.empty() && relabel.empty() && splits.empty(); }
};

struct TransformResult {
  ListAssignment lists;
  TransformTrace trace;
};

namespace detail {

inline void rename_in_range(ListAssignment& L, Color from, Color to, int first, int last) {
  for (int k = first; k <= last; ++k) {
    if (L[k].contains(from)) {
      L[k].erase(from);
      L[k].insert(to);
    }
  }
}

inline void apply_color_map(ListAssignment& L, const std::map<Color, Color>& map) {
  for (ColorSet& s : L) {
    ColorSet renamed;
    s.for_each([&](Color c) {
      auto it = map.find(c);
      renamed.insert(it == map.end() ? c : it->second);
    });
    s = renamed;
  }
}

inline Color max_color_or_zero(const ListAssignment& L) {
  Color m = 0;
  for (const ColorSet& s : L)
    if (!s.empty()) m = std::max(m, s.max());
  return m;
}

}  // namespace detail

/// Applies a trace to the list it was recorded against. Used to check that a
/// trace reproduces the transformation output exactly.
inline ListAssignment replay_trace(const ListAssignment& original, const TransformTrace& trace) {
  ListAssignment L = original;
  for (const auto& rr : trace.run_renames)
    detail::rename_in_range(L, rr.original, rr.fresh, rr.first, rr.last);
  if (!trace.relabel.empty())
    detail::apply_color_map(L, {trace.relabel.begin(), trace.relabel.end()});
  for (const auto& sp : trace.splits)
    detail::rename_in_range(L, sp.old_color, sp.fresh_color, sp.span_first + 2, sp.span_last);
  return L;
}

/// Turns a good list into a waterfall list of identical per-vertex sizes.
/// The output is similar to the input: one is colorable exactly when the
/// other is, and pullback_coloring converts colorings of the output back.
///
/// An input that is already waterfall is returned unchanged with an empty
/// trace. Otherwise: (1) make every color's occurrence set a consecutive
/// interval, giving each run after a gap a fresh color; (2) relabel colors
/// canonically, sorted by (first, last), to 1,2,3,...; (3) repeatedly take
/// the smallest color spanning three or more vertices and rename it to a
/// fresh color from its third vertex onward. Fresh colors are always
/// allocated past the largest id in use.
inline TransformResult waterfall_transform(const WeightedPath& P) {
  if (!is_good(P)) throw InputError("waterfall_transform: input list is not good");
  if (is_waterfall(P)) return {P.lists, {}};

  ListAssignment L = P.lists;
  TransformTrace trace;
  Color next_fresh = detail::max_color_or_zero(L) + 1;

  // 1) normalize occurrence sets to intervals
  for (const ColorSpan& span : color_spans(P.lists)) {
    std::vector<std::pair<int, int>> runs;
    int run_start = -1;
    for (int i = span.first; i <= span.last + 1; ++i) {
      bool present = i <= span.last && L[i].contains(span.color);
      if (present && run_start < 0) run_start = i;
      if (!present && run_start >= 0) {
        runs.emplace_back(run_start, i - 1);
        run_start = -1;
      }
    }
    for (std::size_t r = 1; r < runs.size(); ++r) {
      Color fresh = next_fresh++;
      detail::rename_in_range(L, span.color, fresh, runs[r].first, runs[r].second);
      trace.run_renames.push_back({span.color, fresh, runs[r].first, runs[r].second});
    }
  }

  // 2) canonical relabel: ids 1..K in span order
  {
    std::map<Color, Color> map;
    Color next_id = 1;
    for (const ColorSpan& s : color_spans(L)) map[s.color] = next_id++;
    detail::apply_color_map(L, map);
    trace.relabel.assign(map.begin(), map.end());
    next_fresh = next_id;
  }

  // 3) split wide spans until the list is waterfall
  while (true) {
    const ColorSpan* pick = nullptr;
    std::vector<ColorSpan> spans = color_spans(L);
    for (const ColorSpan& s : spans)
      if (s.last - s.first >= 2 && (pick == nullptr || s.color < pick->color)) pick = &s;
    if (pick == nullptr) break;
    Color fresh = next_fresh++;
    detail::rename_in_range(L, pick->color, fresh, pick->first + 2, pick->last);
    trace.splits.push_back({pick->color, fresh, pick->first, pick->last});
  }

  return {std::move(L), std::move(trace)};
}

/// Converts a valid coloring of the transformed list into a valid coloring
/// of the original list by undoing the trace back to front. Split records
/// are undone with a three-way case analysis: plain rename when the split
/// boundary is not in conflict; otherwise substitute a free color at the
/// second span vertex; otherwise swap a color between the first two span
/// vertices. The last resort exists because the original list is good.
inline MultiColoring pullback_coloring(const TransformTrace& trace, const WeightedPath& original,
                                       const MultiColoring& transformed_coloring) {
  original.validate();
  if (!is_good(original)) throw InputError("pullback_coloring: original list is not good");

  // Reconstruct the intermediate list states so each undo step sees the list
  // it was recorded against.
  ListAssignment base = original.lists;
  for (const auto& rr : trace.run_renames)
    detail::rename_in_range(base, rr.original, rr.fresh, rr.first, rr.last);
  if (!trace.relabel.empty())
    detail::apply_color_map(base, {trace.relabel.begin(), trace.relabel.end()});
  std::vector<ListAssignment> states;
  states.reserve(trace.splits.size() + 1);
  states.push_back(std::move(base));
  for (const auto& sp : trace.splits) {
    ListAssignment next = states.back();
    detail::rename_in_range(next, sp.old_color, sp.fresh_color, sp.span_first + 2, sp.span_last);
    states.push_back(std::move(next));
  }

  {
    VerifyReport rep = verify_coloring(path_edges(original.vertex_count()), states.back(),
                                       original.weights, transformed_coloring);
    if (!rep.ok())
      throw InputError("pullback_coloring: coloring is not valid for the transformed list: " +
                       rep.message());
  }

  MultiColoring c = transformed_coloring;
  const int n = original.n();

  for (std::size_t k = trace.splits.size(); k-- > 0;) {
    const auto& sp = trace.splits[k];
    const Color x = sp.old_color;
    const Color y = sp.fresh_color;
    const int i = sp.span_first;
    auto rename_tail = [&] {
      for (int j = i + 2; j <= n; ++j) {
        if (c[j].contains(y)) {
          c[j].erase(y);
          c[j].insert(x);
        }
      }
    };
    if (!c[i + 1].contains(x) || !c[i + 2].contains(y)) {
      rename_tail();
      continue;
    }
    const ColorSet& list_mid = states[k + 1][i + 1];
    ColorSet free = list_mid;
    free -= c[i];
    free -= c[i + 1];
    free -= c[i + 2];
    if (!free.empty()) {
      Color z = free.min();
      c[i + 1].erase(x);
      c[i + 1].insert(z);
      rename_tail();
    } else {
      ColorSet swap_candidates = (c[i] - c[i + 2]) & list_mid;
      if (swap_candidates.empty())
        throw StructuralViolation("pullback_coloring: no swap color available; goodness violated");
      Color z = swap_candidates.min();
      c[i + 1].erase(x);
      c[i + 1].insert(z);
      c[i].erase(z);
      c[i].insert(x);
      rename_tail();
    }
  }

  if (!trace.relabel.empty()) {
    std::map<Color, Color> inverse;
    for (auto [from, to] : trace.relabel) inverse[to] = from;
    for (ColorSet& s : c) {
      ColorSet renamed;
      s.for_each([&](Color col) {
        auto it = inverse.find(col);
        renamed.insert(it == inverse.end() ? col : it->second);
      });
      s = renamed;
    }
  }
  for (std::size_t k = trace.run_renames.size(); k-- > 0;) {
    const auto& rr = trace.run_renames[k];
    for (int j = rr.first; j <= rr.last; ++j) {
      if (c[j].contains(rr.fresh)) {
        c[j].erase(rr.fresh);
        c[j].insert(rr.original);
      }
    }
  }

  VerifyReport rep =
      verify_coloring(path_edges(original.vertex_count()), original.lists, original.weights, c);
  if (!rep.ok())
    throw StructuralViolation("pullback_coloring produced an invalid coloring: " + rep.message());
  return c;
}

/// Exact colorability test for waterfall lists: colorable iff every window
/// i..j has amplitude at least its total demand. O(n^2) incremental unions.
inline bool waterfall_colorable(const WeightedPath& P) {
  if (!is_waterfall(P)) throw InputError("waterfall_colorable: list is not waterfall");
  const int n = P.n();
  for (int i = 0; i <= n; ++i) {
    ColorSet acc;
    long long demand = 0;
    for (int j = i; j <= n; ++j) {
      acc |= P.lists[j];
      demand += P.weights[j];
      if (acc.size() < demand) return false;
    }
  }
  return true;
}

struct GreedyStats {
  bool oracle_fallback = false;
};

/// Builds a coloring of a feasible waterfall list greedily, left to right:
/// at each vertex take the demanded number of colors not used by the
/// previous vertex, preferring colors that do not reappear on the next list
/// (they expire here), lowest id first within each tier. The exact solver
/// backs the greedy up; when the fallback fires it is recorded in stats.
inline MultiColoring waterfall_color(const WeightedPath& P, GreedyStats* stats = nullptr) {
  if (!is_waterfall(P)) throw InputError("waterfall_color: list is not waterfall");
  if (!waterfall_colorable(P)) throw InputError("waterfall_color: instance is infeasible");
  const int n = P.n();
  MultiColoring c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    ColorSet avail = P.lists[i] - (i > 0 ? c[i - 1] : ColorSet{});
    if (avail.size() < P.weights[i]) {
      if (stats) stats->oracle_fallback = true;
      std::optional<MultiColoring> exact = solve_path_exact(P.lists, P.weights);
      if (!exact)
        throw StructuralViolation("waterfall_color: amplitude criterion met but oracle failed");
      return *exact;
    }
    ColorSet expiring = i < n ? avail - P.lists[i + 1] : avail;
    ColorSet pick;
    expiring.for_each([&](Color col) {
      if (pick.size() < P.weights[i]) pick.insert(col);
    });
    avail.for_each([&](Color col) {
      if (pick.size() < P.weights[i]) pick.insert(col);
    });
    c[i] = std::move(pick);
  }
  return c;
}

/// Prefix form of the waterfall criterion, valid when the waterfall list is
/// good and the last list covers its own demand: only windows starting at 0
/// need checking.
inline bool prefix_colorable(const WeightedPath& P) {
  if (!is_waterfall(P)) throw InputError("prefix_colorable: list is not waterfall");
  if (!is_good(P)) throw InputError("prefix_colorable: list is not good");
  const int n = P.n();
  if (P.lists[n].size() < P.weights[n])
    throw InputError("prefix_colorable: last list smaller than its demand");
  ColorSet acc;
  long long demand = 0;
  for (int j = 0; j <= n; ++j) {
    acc |= P.lists[j];
    demand += P.weights[j];
    if (acc.size() < demand) return false;
  }
  return true;
}

/// Smallest even integer p with p >= num/den. Requires num >= 0, den > 0.
inline int even_ceil(long long num, long long den) {
  if (den <= 0 || num < 0) throw InputError("even_ceil: requires num >= 0 and den > 0");
  long long q = (num + den - 1) / den;
  return static_cast<int>(q + (q & 1));
}

inline int even_ceil(int x) { return even_ceil(static_cast<long long>(x), 1); }

/// Hall feasibility test for arbitrary lists on a path. For every window
/// i..j, the sum over colors of the independence number of the color's
/// support inside the window must reach the window's demand. On a path that
/// independence number is the sum of ceil(run/2) over maximal runs of
/// consecutive supported vertices. The condition is exact on paths: it holds
/// iff the instance is colorable.
inline bool hall_check_path(const WeightedPath& P) {
  P.validate();
  const int n = P.n();
  const Color max_color = detail::max_color_or_zero(P.lists);
  std::vector<int> run_len(static_cast<std::size_t>(max_color) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    std::fill(run_len.begin(), run_len.end(), 0);
    long long alpha_total = 0;
    long long demand = 0;
    for (int j = i; j <= n; ++j) {
      P.lists[j].for_each([&](Color c) {
        if (j > i && P.lists[j - 1].contains(c)) {
          ++run_len[c];
          if (run_len[c] % 2 == 1) ++alpha_total;
        } else {
          run_len[c] = 1;
          ++alpha_total;
        }
      });
      demand += P.weights[j];
      if (alpha_total < demand) return false;
    }
  }
  return true;
}

/// Trims two oversized end lists down to exactly b+e elements while
/// preserving a joint amplitude of at least 2b (assuming the inputs had it).
/// The second-to-last list keeps its keep-set first, then colors absent from
/// the last list, then lowest ids; the last list keeps its keep-set first,
/// then colors absent from the trimmed neighbor, then lowest ids.
inline std::pair<ColorSet, ColorSet> trim_end_lists(const ColorSet& second_last,
                                                    const ColorSet& last, int b, int e,
                                                    const ColorSet& keep_second_last = {},
                                                    const ColorSet& keep_last = {}) {
  const int target = b + e;
  if (second_last.size() < target || last.size() < target)
    throw InputError("trim_end_lists: lists smaller than b+e");
  if (!keep_second_last.subset_of(second_last) || !keep_last.subset_of(last))
    throw InputError("trim_end_lists: keep sets must be subsets of their lists");
  if (keep_second_last.size() > target || keep_last.size() > target)
    throw InputError("trim_end_lists: keep sets larger than b+e");

  auto fill = [target](ColorSet out, const ColorSet& tier1, const ColorSet& tier2) {
    tier1.for_each([&](Color c) {
      if (out.size() < target) out.insert(c);
    });
    tier2.for_each([&](Color c) {
      if (out.size() < target) out.insert(c);
    });
    return out;
  };

  ColorSet trimmed_second = fill(keep_second_last, second_last - last, second_last);
  ColorSet trimmed_last = fill(keep_last, last - trimmed_second, last);
  return {trimmed_second, trimmed_last};
}

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

inline void require_uniform_demand(const WeightedPath& P, int b, const char* who) {
  for (int wv : P.weights)
    if (wv != b) throw InputError(std::string(who) + ": demand must be uniformly b");
}

// Shared tail of both handle extensions: transform, color, pull back.
// Colorability of the transformed list is guaranteed by construction, so a
// negative check here indicates a bug rather than an infeasible instance.
inline MultiColoring run_waterfall_pipeline(const WeightedPath& P, const char* who) {
  TransformResult tr = waterfall_transform(P);
  WeightedPath cascade{tr.lists, P.weights};
  if (!waterfall_colorable(cascade))
    throw StructuralViolation(std::string(who) +
                              ": transformed list fails the amplitude criterion");
  MultiColoring colored = waterfall_color(cascade);
  return pullback_coloring(tr.trace, P, colored);
}

}  // namespace detail

/// Extends across a handle whose end lists are pinned: |L(0)| = |L(n)| = b,
/// interior lists of size a = 2b+e, uniform demand b. Feasible whenever
/// n >= even_ceil(2b/e). The end vertices are forced to take their whole
/// lists, which is what lets a caller splice the result onto endpoints that
/// are already colored.
inline MultiColoring color_handle_long(const WeightedPath& P, const ProblemParams& params) {
  P.validate();
  const int n = P.n();
  const int a = params.a, b = params.b, e = params.e;
  detail::require(e != 0, "color_handle_long: e = 0 (a = 2b) is not supported");
  detail::require(a == 2 * b + e, "color_handle_long: params must satisfy a = 2b + e");
  detail::require_uniform_demand(P, b, "color_handle_long");
  if (b == 0) return MultiColoring(static_cast<std::size_t>(n) + 1);
  detail::require(P.lists[0].size() == b && P.lists[n].size() == b,
                  "color_handle_long: end lists must have exactly b colors");
  for (int i = 1; i <= n - 1; ++i)
    detail::require(P.lists[i].size() == a,
                    "color_handle_long: interior lists must have exactly a colors");
  detail::require(n >= even_ceil(2LL * b, e),
                  "color_handle_long: path shorter than even_ceil(2b/e)");
  return detail::run_waterfall_pipeline(P, "color_handle_long");
}

/// Extends across a short handle whose two far lists have only b+e colors
/// but a joint amplitude of at least 2b. A set D of b-e colors private to
/// the last list is split off, the remaining instance (with the last demand
/// lowered accordingly) goes through the waterfall pipeline, and D is added
/// back at the last vertex. When e >= b the set D is empty and the pipeline
/// runs with the original demand.
inline MultiColoring color_handle_short(const WeightedPath& P, const ProblemParams& params) {
  P.validate();
  const int n = P.n();
  const int a = params.a, b = params.b, e = params.e;
  detail::require(e != 0, "color_handle_short: e = 0 (a = 2b) is not supported");
  detail::require(a == 2 * b + e, "color_handle_short: params must satisfy a = 2b + e");
  detail::require_uniform_demand(P, b, "color_handle_short");
  if (b == 0) return MultiColoring(static_cast<std::size_t>(n) + 1);
  detail::require(n >= 1, "color_handle_short: path too short");
  detail::require(P.lists[0].size() == b,
                  "color_handle_short: first list must have exactly b colors");
  for (int i = 1; i <= n - 2; ++i)
    detail::require(P.lists[i].size() == a,
                    "color_handle_short: interior lists must have exactly a colors");
  detail::require(P.lists[n - 1].size() == b + e && P.lists[n].size() == b + e,
                  "color_handle_short: last two lists must have exactly b+e colors");
  detail::require((P.lists[n - 1] | P.lists[n]).size() >= 2 * b,
                  "color_handle_short: amplitude of the last two lists is below 2b");
  detail::require(n >= even_ceil(2LL * b, e),
                  "color_handle_short: path shorter than even_ceil(2b/e)");

  const int d_size = std::max(b - e, 0);
  ColorSet private_last = P.lists[n] - P.lists[n - 1];
  if (private_last.size() < d_size)
    throw StructuralViolation(
        "color_handle_short: fewer than b-e private colors despite the amplitude bound");
  ColorSet D = private_last.lowest(d_size);

  WeightedPath reduced = P;
  reduced.lists[n] -= D;
  reduced.weights[n] = b - d_size;
  MultiColoring c = detail::run_waterfall_pipeline(reduced, "color_handle_short");
  c[n] |= D;

  VerifyReport rep = verify_coloring(path_edges(P.vertex_count()), P.lists, P.weights, c);
  if (!rep.ok())
    throw StructuralViolation("color_handle_short produced an invalid coloring: " + rep.message());
  return c;
}

}  // namespace latcol
