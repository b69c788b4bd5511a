#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latcol/color.hpp"
#include "latcol/errors.hpp"

namespace latcol {

/// Work budget for the exact solvers. Work is counted as candidate sets
/// generated plus disjointness probes performed; when the running total
/// passes the cap the solver throws instead of guessing.
struct OracleLimits {
  long long max_work = 10'000'000;
};

namespace detail {

struct OracleWork {
  long long used = 0;
  long long cap = 0;
  void charge(long long amount, const char* who) {
    used += amount;
    if (used > cap) throw ResourceLimitError(std::string(who) + ": work budget exhausted");
  }
};

// All w-subsets of the list, in lexicographic order of their ascending
// element sequences.
inline std::vector<ColorSet> subset_candidates(const ColorSet& list, int w, OracleWork& work,
                                               const char* who) {
  std::vector<ColorSet> out;
  if (w < 0 || w > list.size()) return out;
  std::vector<Color> elems = list.to_vector();
  int n = static_cast<int>(elems.size());
  std::vector<int> idx(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) idx[i] = i;
  while (true) {
    ColorSet s;
    for (int i : idx) s.insert(elems[i]);
    out.push_back(std::move(s));
    work.charge(1, who);
    int k = w - 1;
    while (k >= 0 && idx[k] == n - w + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct PathDp {
  std::vector<std::vector<ColorSet>> candidates;
  std::vector<std::vector<char>> feasible;  // candidate extends to the end of the path
  bool any_feasible = false;
};

inline PathDp path_dp(const ListAssignment& lists, const WeightFn& weights,
                      const std::optional<ColorSet>& fixed_start,
                      const std::optional<ColorSet>& fixed_end, OracleWork& work,
                      const char* who) {
  if (lists.size() != weights.size())
    throw InputError(std::string(who) + ": lists and weights must cover the same vertices");
  const int n = static_cast<int>(lists.size());
  PathDp dp;
  dp.candidates.resize(static_cast<std::size_t>(n));
  dp.feasible.resize(static_cast<std::size_t>(n));

  auto validated = [&](const ColorSet& fixed, int v) {
    if (!fixed.subset_of(lists[v]) || fixed.size() != weights[v])
      throw InputError(std::string(who) + ": fixed endpoint set must be a demand-sized subset");
    return fixed;
  };

  for (int v = 0; v < n; ++v) {
    const bool pin_start = v == 0 && fixed_start.has_value();
    const bool pin_end = v == n - 1 && fixed_end.has_value();
    if (pin_start && pin_end) {
      ColorSet s = validated(*fixed_start, v);
      ColorSet t = validated(*fixed_end, v);
      if (s == t) dp.candidates[v] = {std::move(s)};
    } else if (pin_start) {
      dp.candidates[v] = {validated(*fixed_start, v)};
    } else if (pin_end) {
      dp.candidates[v] = {validated(*fixed_end, v)};
    } else {
      dp.candidates[v] = subset_candidates(lists[v], weights[v], work, who);
    }
    if (dp.candidates[v].empty()) return dp;  // any_feasible stays false
  }

  // Backward sweep: a candidate is feasible when some feasible successor is
  // disjoint from it. Probes are charged so adversarial instances hit the
  // budget instead of stalling.
  dp.feasible[n - 1].assign(dp.candidates[n - 1].size(), 1);
  for (int v = n - 2; v >= 0; --v) {
    auto& here = dp.candidates[v];
    auto& next = dp.candidates[v + 1];
    auto& next_ok = dp.feasible[v + 1];
    dp.feasible[v].assign(here.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < here.size(); ++i) {
      for (std::size_t j = 0; j < next.size(); ++j) {
        if (!next_ok[j]) continue;
        work.charge(1, who);
        if (here[i].disjoint_with(next[j])) {
          dp.feasible[v][i] = 1;
          any = true;
          break;
        }
      }
    }
    if (!any) return dp;
  }
  for (char f : dp.feasible[0])
    if (f) dp.any_feasible = true;
  return dp;
}

// Lexicographically-first reconstruction from a completed DP.
inline MultiColoring reconstruct_path(const PathDp& dp) {
  const int n = static_cast<int>(dp.candidates.size());
  MultiColoring out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    bool placed = false;
    for (std::size_t i = 0; i < dp.candidates[static_cast<std::size_t>(v)].size(); ++i) {
      if (!dp.feasible[static_cast<std::size_t>(v)][i]) continue;
      if (v > 0 && !dp.candidates[static_cast<std::size_t>(v)][i].disjoint_with(out.back()))
        continue;
      out.push_back(dp.candidates[static_cast<std::size_t>(v)][i]);
      placed = true;
      break;
    }
    if (!placed) throw StructuralViolation("exact solver: reconstruction lost feasibility");
  }
  return out;
}

}  // namespace detail

/// Exact path solver by dynamic programming over demand-sized candidate
/// subsets. Returns the coloring that is lexicographically first vertex by
/// vertex, or nullopt when the instance is infeasible. Optional fixed sets
/// pin the first and last vertex exactly.
inline std::optional<MultiColoring> solve_path_exact(
    const ListAssignment& lists, const WeightFn& weights,
    const std::optional<ColorSet>& fixed_start = std::nullopt,
    const std::optional<ColorSet>& fixed_end = std::nullopt, OracleLimits limits = {}) {
  if (lists.empty()) return MultiColoring{};
  detail::OracleWork work{0, limits.max_work};
  detail::PathDp dp = detail::path_dp(lists, weights, fixed_start, fixed_end, work,
                                      "solve_path_exact");
  if (!dp.any_feasible) return std::nullopt;
  return detail::reconstruct_path(dp);
}

/// Feasibility-only variant of solve_path_exact: same verdict, no coloring.
inline bool path_colorable_exact(const ListAssignment& lists, const WeightFn& weights,
                                 const std::optional<ColorSet>& fixed_start = std::nullopt,
                                 const std::optional<ColorSet>& fixed_end = std::nullopt,
                                 OracleLimits limits = {}) {
  if (lists.empty()) return true;
  detail::OracleWork work{0, limits.max_work};
  return detail::path_dp(lists, weights, fixed_start, fixed_end, work, "path_colorable_exact")
      .any_feasible;
}

/// Exact cycle solver. Enumerates the anchor vertex's candidate sets in
/// lexicographic order and, for each, solves the cycle cut open at the
/// anchor with both copies pinned to the candidate. The work budget is
/// shared across all anchors. The verdict does not depend on which vertex
/// is index 0.
inline std::optional<MultiColoring> solve_cycle_exact(const ListAssignment& lists,
                                                      const WeightFn& weights,
                                                      OracleLimits limits = {}) {
  if (lists.size() < 3) throw InputError("solve_cycle_exact: cycle length must be at least 3");
  if (lists.size() != weights.size())
    throw InputError("solve_cycle_exact: lists and weights must cover the same vertices");
  detail::OracleWork work{0, limits.max_work};
  std::vector<ColorSet> anchors =
      detail::subset_candidates(lists[0], weights[0], work, "solve_cycle_exact");

  ListAssignment cut = lists;
  cut.push_back(lists[0]);
  WeightFn cut_w = weights;
  cut_w.push_back(weights[0]);

  for (const ColorSet& anchor : anchors) {
    detail::PathDp dp = detail::path_dp(cut, cut_w, anchor, anchor, work, "solve_cycle_exact");
    if (dp.any_feasible) {
      MultiColoring path = detail::reconstruct_path(dp);
      path.pop_back();  // drop the duplicated anchor copy
      return path;
    }
  }
  return std::nullopt;
}

/// Feasibility-only variant of solve_cycle_exact.
inline bool cycle_colorable_exact(const ListAssignment& lists, const WeightFn& weights,
                                  OracleLimits limits = {}) {
  if (lists.size() < 3) throw InputError("cycle_colorable_exact: cycle length must be at least 3");
  if (lists.size() != weights.size())
    throw InputError("cycle_colorable_exact: lists and weights must cover the same vertices");
  detail::OracleWork work{0, limits.max_work};
  std::vector<ColorSet> anchors =
      detail::subset_candidates(lists[0], weights[0], work, "cycle_colorable_exact");
  ListAssignment cut = lists;
  cut.push_back(lists[0]);
  WeightFn cut_w = weights;
  cut_w.push_back(weights[0]);
  for (const ColorSet& anchor : anchors)
    if (detail::path_dp(cut, cut_w, anchor, anchor, work, "cycle_colorable_exact").any_feasible)
      return true;
  return false;
}

}  // namespace latcol
