#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "latcol/color.hpp"
#include "latcol/errors.hpp"
#include "latcol/lattice.hpp"

namespace latcol {

namespace detail {

// splitmix64; small, seeded, stable across platforms, which keeps generated
// instances byte-identical for a given seed.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by Lemire's multiply-shift reduction.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }
};

}  // namespace detail

/// Seeded random instance shape. The seed fully determines the output.
struct GeneratorConfig {
  int width = 8;
  int height = 6;
  double density = 0.6;
  std::uint64_t seed = 1;
  int palette = 0;  // 0 means 3 * list_size
  int list_size = 5;
};

/// Random induced subgraph of a width x height lattice window: keep each
/// vertex with the given density, then destroy every triangle by scanning
/// the two triangle shapes in row-major order and deleting the
/// lexicographically largest corner of each hit. Deletion never creates a
/// triangle, so one ordered pass leaves the graph triangle-free.
inline LatticeGraph gen_lattice_graph(const GeneratorConfig& cfg) {
  if (cfg.width < 1 || cfg.height < 1 || cfg.density < 0.0 || cfg.density > 1.0)
    throw InputError("gen_lattice_graph: bad window or density");
  detail::Rng rng(cfg.seed);
  const std::uint64_t threshold = static_cast<std::uint64_t>(cfg.density * 1'000'000.0 + 0.5);
  std::set<Coord> present;
  for (int y = 0; y < cfg.height; ++y)
    for (int x = 0; x < cfg.width; ++x)
      if (rng.below(1'000'000) < threshold) present.insert({x, y});

  std::vector<Coord> row_major(present.begin(), present.end());
  std::sort(row_major.begin(), row_major.end(),
            [](Coord a, Coord b) { return std::pair(a.y, a.x) < std::pair(b.y, b.x); });
  auto largest = [](Coord a, Coord b, Coord c) { return std::max(a, std::max(b, c)); };
  for (Coord v : row_major) {
    if (!present.count(v)) continue;
    Coord right{v.x + 1, v.y}, up{v.x, v.y + 1}, down{v.x + 1, v.y - 1};
    if (present.count(right) && present.count(up)) present.erase(largest(v, right, up));
    if (present.count(v) && present.count(right) && present.count(down))
      present.erase(largest(v, right, down));
  }

  LatticeGraph G({present.begin(), present.end()});
  if (find_triangle(G)) throw StructuralViolation("gen_lattice_graph: triangle survived");
  return G;
}

enum class ListStyle {
  Uniform,          // independent random subsets of the palette
  ShiftedInterval,  // contiguous color intervals with random shifts
  NearIdentical,    // one base list, each vertex perturbed by at most a swap
};

/// Seeded per-vertex lists of exactly list_size colors from {1..palette},
/// aligned with the graph's vertex order.
inline ListAssignment gen_lists(const LatticeGraph& G, int list_size, int palette,
                                std::uint64_t seed, ListStyle style = ListStyle::Uniform) {
  if (palette <= 0) palette = 3 * list_size;
  if (list_size < 1 || palette < list_size)
    throw InputError("gen_lists: palette must hold at least list_size colors");
  detail::Rng rng(seed ^ 0x5eed1157ull);

  auto random_subset = [&]() {
    // Partial Fisher-Yates over 1..palette.
    std::vector<Color> pool(static_cast<std::size_t>(palette));
    for (int i = 0; i < palette; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    ColorSet s;
    for (int i = 0; i < list_size; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(palette - i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      s.insert(pool[static_cast<std::size_t>(i)]);
    }
    return s;
  };

  ListAssignment out;
  out.reserve(static_cast<std::size_t>(G.size()));
  switch (style) {
    case ListStyle::Uniform:
      for (int i = 0; i < G.size(); ++i) out.push_back(random_subset());
      break;
    case ListStyle::ShiftedInterval:
      for (int i = 0; i < G.size(); ++i) {
        Color start = 1 + static_cast<Color>(rng.below(static_cast<std::uint64_t>(palette - list_size + 1)));
        ColorSet s;
        for (int k = 0; k < list_size; ++k) s.insert(start + k);
        out.push_back(std::move(s));
      }
      break;
    case ListStyle::NearIdentical: {
      ColorSet base = random_subset();
      for (int i = 0; i < G.size(); ++i) {
        ColorSet s = base;
        if (rng.below(2) == 1) {
          std::vector<Color> in = s.to_vector();
          Color out_color = in[static_cast<std::size_t>(rng.below(in.size()))];
          std::vector<Color> outside;
          for (Color c = 1; c <= palette; ++c)
            if (!s.contains(c)) outside.push_back(c);
          if (!outside.empty()) {
            s.erase(out_color);
            s.insert(outside[static_cast<std::size_t>(rng.below(outside.size()))]);
          }
        }
        out.push_back(std::move(s));
      }
      break;
    }
  }
  return out;
}

}  // namespace latcol
