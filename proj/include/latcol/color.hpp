#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "latcol/errors.hpp"

namespace latcol {

/// Nonnegative color identifier. Equality is identity of the integer.
using Color = int;

/// Set of colors backed by a bitset. Colors below 64 live in an inline word,
/// larger identifiers spill into a heap vector, so the common small-palette
/// case never allocates. Cardinality is cached; size() is O(1).
class ColorSet {
 public:
  ColorSet() = default;
  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }

  static ColorSet from_vector(const std::vector<Color>& colors) {
    ColorSet s;
    for (Color c : colors) s.insert(c);
    return s;
  }

  bool contains(Color c) const {
    if (c < 0) return false;
    if (c < 64) return (low_ >> c) & 1u;
    std::size_t w = static_cast<std::size_t>(c) / 64 - 1;
    return w < ext_.size() && ((ext_[w] >> (c % 64)) & 1u);
  }

  void insert(Color c) {
    if (c < 0) throw InputError("ColorSet: negative color id");
    if (c < 64) {
      std::uint64_t bit = 1ull << c;
      if (!(low_ & bit)) {
        low_ |= bit;
        ++count_;
      }
      return;
    }
    std::size_t w = static_cast<std::size_t>(c) / 64 - 1;
    if (w >= ext_.size()) ext_.resize(w + 1, 0);
    std::uint64_t bit = 1ull << (c % 64);
    if (!(ext_[w] & bit)) {
      ext_[w] |= bit;
      ++count_;
    }
  }

  void erase(Color c) {
    if (c < 0) return;
    if (c < 64) {
      std::uint64_t bit = 1ull << c;
      if (low_ & bit) {
        low_ &= ~bit;
        --count_;
      }
      return;
    }
    std::size_t w = static_cast<std::size_t>(c) / 64 - 1;
    if (w < ext_.size()) {
      std::uint64_t bit = 1ull << (c % 64);
      if (ext_[w] & bit) {
        ext_[w] &= ~bit;
        --count_;
        trim();
      }
    }
  }

  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  void clear() {
    low_ = 0;
    ext_.clear();
    count_ = 0;
  }

  bool intersects(const ColorSet& o) const {
    if (low_ & o.low_) return true;
    std::size_t n = std::min(ext_.size(), o.ext_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (ext_[i] & o.ext_[i]) return true;
    return false;
  }

  bool disjoint_with(const ColorSet& o) const { return !intersects(o); }

  bool subset_of(const ColorSet& o) const {
    if (low_ & ~o.low_) return false;
    for (std::size_t i = 0; i < ext_.size(); ++i) {
      std::uint64_t other = i < o.ext_.size() ? o.ext_[i] : 0;
      if (ext_[i] & ~other) return false;
    }
    return true;
  }

  ColorSet& operator|=(const ColorSet& o) {
    low_ |= o.low_;
    if (ext_.size() < o.ext_.size()) ext_.resize(o.ext_.size(), 0);
    for (std::size_t i = 0; i < o.ext_.size(); ++i) ext_[i] |= o.ext_[i];
    recount();
    return *this;
  }

  ColorSet& operator&=(const ColorSet& o) {
    low_ &= o.low_;
    if (ext_.size() > o.ext_.size()) ext_.resize(o.ext_.size());
    for (std::size_t i = 0; i < ext_.size(); ++i) ext_[i] &= o.ext_[i];
    trim();
    recount();
    return *this;
  }

  ColorSet& operator-=(const ColorSet& o) {
    low_ &= ~o.low_;
    std::size_t n = std::min(ext_.size(), o.ext_.size());
    for (std::size_t i = 0; i < n; ++i) ext_[i] &= ~o.ext_[i];
    trim();
    recount();
    return *this;
  }

  friend ColorSet operator|(ColorSet a, const ColorSet& b) { return a |= b; }
  friend ColorSet operator&(ColorSet a, const ColorSet& b) { return a &= b; }
  friend ColorSet operator-(ColorSet a, const ColorSet& b) { return a -= b; }

  bool operator==(const ColorSet& o) const { return low_ == o.low_ && ext_ == o.ext_; }
  bool operator!=(const ColorSet& o) const { return !(*this == o); }

  Color min() const {
    if (low_) return std::countr_zero(low_);
    for (std::size_t i = 0; i < ext_.size(); ++i)
      if (ext_[i]) return static_cast<Color>(64 * (i + 1) + std::countr_zero(ext_[i]));
    throw InputError("ColorSet::min on empty set");
  }

  Color max() const {
    for (std::size_t i = ext_.size(); i-- > 0;)
      if (ext_[i]) return static_cast<Color>(64 * (i + 1) + 63 - std::countl_zero(ext_[i]));
    if (low_) return 63 - std::countl_zero(low_);
    throw InputError("ColorSet::max on empty set");
  }

  /// The k smallest elements as a new set.
  ColorSet lowest(int k) const {
    if (k > count_) throw InputError("ColorSet::lowest: not enough elements");
    ColorSet out;
    for_each([&](Color c) {
      if (out.count_ < k) out.insert(c);
    });
    return out;
  }

  template <class F>
  void for_each(F&& fn) const {
    std::uint64_t w = low_;
    while (w) {
      fn(static_cast<Color>(std::countr_zero(w)));
      w &= w - 1;
    }
    for (std::size_t i = 0; i < ext_.size(); ++i) {
      w = ext_[i];
      while (w) {
        fn(static_cast<Color>(64 * (i + 1) + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Color> to_vector() const {
    std::vector<Color> v;
    v.reserve(static_cast<std::size_t>(count_));
    for_each([&](Color c) { v.push_back(c); });
    return v;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](Color c) {
      if (!first) s += ",";
      s += std::to_string(c);
      first = false;
    });
    return s + "}";
  }

 private:
  void trim() {
    while (!ext_.empty() && ext_.back() == 0) ext_.pop_back();
  }
  void recount() {
    int n = std::popcount(low_);
    for (std::uint64_t w : ext_) n += std::popcount(w);
    count_ = n;
  }

  std::uint64_t low_ = 0;
  std::vector<std::uint64_t> ext_;
  int count_ = 0;
};

/// Per-vertex color lists over a fixed vertex ordering.
using ListAssignment = std::vector<ColorSet>;
/// Per-vertex nonnegative demand.
using WeightFn = std::vector<int>;
/// Per-vertex chosen color sets.
using MultiColoring = std::vector<ColorSet>;

/// Instance parameters tied together by a = 2b + e.
struct ProblemParams {
  int a = 0;  // list size
  int b = 0;  // demand per vertex
  int e = 0;  // excess, a - 2b
  int m = 0;  // multiplier when constructed as (5m, 2m)

  static ProblemParams for_multiplier(int m) { return {5 * m, 2 * m, m, m}; }
  static ProblemParams from_ab(int a, int b) { return {a, b, a - 2 * b, 0}; }

  /// True when a/b >= 5/2 (the supported regime for full-lattice solving).
  bool meets_ratio_gate() const { return b >= 1 && 2LL * a >= 5LL * b; }
};

struct VerifyReport {
  enum class Kind { Pass, NotSubset, WrongSize, EdgeOverlap };
  Kind kind = Kind::Pass;
  int vertex = -1;
  std::pair<int, int> edge{-1, -1};

  bool ok() const { return kind == Kind::Pass; }

  std::string message() const {
    switch (kind) {
      case Kind::Pass:
        return "pass";
      case Kind::NotSubset:
        return "vertex " + std::to_string(vertex) + ": chosen colors are not a subset of its list";
      case Kind::WrongSize:
        return "vertex " + std::to_string(vertex) + ": chosen set size differs from the demand";
      case Kind::EdgeOverlap:
        return "edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
               "): endpoints share a color";
    }
    return "";
  }
};

/// Checks c against lists, demands and edge disjointness. Scans vertices in
/// index order, then edges in the given order, and reports the first
/// violation so failures are reproducible.
inline VerifyReport verify_coloring(const std::vector<std::pair<int, int>>& edges,
                                    const ListAssignment& L, const WeightFn& w,
                                    const MultiColoring& c) {
  if (L.size() != w.size() || L.size() != c.size())
    throw InputError("verify_coloring: mismatched vertex domains");
  int n = static_cast<int>(L.size());
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("verify_coloring: edge endpoint out of range");
  for (int v = 0; v < n; ++v) {
    if (!c[v].subset_of(L[v])) return {VerifyReport::Kind::NotSubset, v, {-1, -1}};
    if (c[v].size() != w[v]) return {VerifyReport::Kind::WrongSize, v, {-1, -1}};
  }
  for (auto [u, v] : edges)
    if (c[u].intersects(c[v])) return {VerifyReport::Kind::EdgeOverlap, -1, {u, v}};
  return {};
}

/// True iff every list has exactly a elements. Vacuously true when empty.
inline bool list_sizes_ok(const ListAssignment& L, int a) {
  return std::all_of(L.begin(), L.end(), [a](const ColorSet& s) { return s.size() == a; });
}

}  // namespace latcol
