#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latcol/errors.hpp"

namespace latcol {

/// Axial coordinate of a triangular-lattice vertex. Ordered lexicographically
/// by (x, y); that order is the tie-break used everywhere determinism is
/// needed.
struct Coord {
  int x = 0;
  int y = 0;
  auto operator<=>(const Coord&) const = default;
};

/// The six neighbor offsets in fixed order: left, right, top-left,
/// top-right, bottom-left, bottom-right.
inline constexpr std::array<Coord, 6> kNeighborOffsets{{
    {-1, 0},  // left
    {1, 0},   // right
    {-1, 1},  // top-left
    {0, 1},   // top-right
    {0, -1},  // bottom-left
    {1, -1},  // bottom-right
}};

inline std::array<Coord, 6> neighbors(Coord c) {
  std::array<Coord, 6> out;
  for (std::size_t i = 0; i < 6; ++i)
    out[i] = {c.x + kNeighborOffsets[i].x, c.y + kNeighborOffsets[i].y};
  return out;
}

/// Finite induced subgraph of the triangular lattice. The edge set is always
/// exactly the lattice-neighbor pairs among the present vertices; it is
/// derived from the vertex set at construction and never stored separately.
class LatticeGraph {
 public:
  LatticeGraph() = default;

  explicit LatticeGraph(std::vector<Coord> vertices) : verts_(std::move(vertices)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    adj_.resize(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      for (Coord nb : neighbors(verts_[i])) {
        if (std::optional<int> j = index_of(nb)) adj_[i].push_back(*j);
      }
    }
  }

  const std::vector<Coord>& vertices() const { return verts_; }
  int size() const { return static_cast<int>(verts_.size()); }
  bool empty() const { return verts_.empty(); }

  std::optional<int> index_of(Coord c) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), c);
    if (it == verts_.end() || !(*it == c)) return std::nullopt;
    return static_cast<int>(it - verts_.begin());
  }

  bool contains(Coord c) const { return index_of(c).has_value(); }

  const std::vector<int>& neighbors_of(int idx) const { return adj_[static_cast<std::size_t>(idx)]; }
  int degree(int idx) const { return static_cast<int>(adj_[static_cast<std::size_t>(idx)].size()); }

  int degree_of(Coord c) const {
    std::optional<int> i = index_of(c);
    if (!i) throw InputError("LatticeGraph: vertex not present");
    return degree(*i);
  }

  /// Edges as index pairs (u < v), enumerated in vertex order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < size(); ++u)
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (u < v) es.emplace_back(u, v);
    return es;
  }

 private:
  std::vector<Coord> verts_;
  std::vector<std::vector<int>> adj_;
};

inline LatticeGraph induced_graph(std::vector<Coord> vertices) {
  return LatticeGraph(std::move(vertices));
}

/// First triangle found, scanning vertices in order. Every triangle of the
/// lattice consists of a horizontal edge plus either the apex above its left
/// end or the apex below its right end, so two shapes per vertex suffice.
inline std::optional<std::array<Coord, 3>> find_triangle(const LatticeGraph& G) {
  for (Coord v : G.vertices()) {
    Coord right{v.x + 1, v.y}, up{v.x, v.y + 1}, down{v.x + 1, v.y - 1};
    if (G.contains(right) && G.contains(up)) return std::array<Coord, 3>{v, right, up};
    if (G.contains(right) && G.contains(down)) return std::array<Coord, 3>{v, right, down};
  }
  return std::nullopt;
}

inline bool is_triangle_free(const LatticeGraph& G) { return !find_triangle(G).has_value(); }

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Length of a shortest cycle, or kInfiniteGirth for forests. BFS from every
/// vertex; fine at the sizes this library deals with.
inline int girth(const LatticeGraph& G) {
  int best = kInfiniteGirth;
  const int n = G.size();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : G.neighbors_of(u)) {
        if (v == parent[static_cast<std::size_t>(u)]) continue;
        if (dist[static_cast<std::size_t>(v)] == -1) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          q.push(v);
        } else {
          best = std::min(best,
                          dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1);
        }
      }
    }
  }
  return best;
}

inline bool girth_at_least_6(const LatticeGraph& G) { return girth(G) >= 6; }

enum class NodeKind { LeftNode, RightNode, NotANode };

/// Degree-3 vertices come in two chiralities. A left node is attached to its
/// left, top-right and bottom-right neighbors; a right node to its right,
/// top-left and bottom-left neighbors. In a triangle-free induced subgraph
/// these are the only degree-3 patterns, because the chosen neighbors must
/// form an independent set in the hexagon around the vertex.
inline NodeKind classify_node(const LatticeGraph& G, Coord v) {
  std::optional<int> idx = G.index_of(v);
  if (!idx) throw InputError("classify_node: vertex not present");
  if (G.degree(*idx) != 3) return NodeKind::NotANode;
  const bool left = G.contains({v.x - 1, v.y});
  const bool right = G.contains({v.x + 1, v.y});
  const bool top_left = G.contains({v.x - 1, v.y + 1});
  const bool top_right = G.contains({v.x, v.y + 1});
  const bool bottom_left = G.contains({v.x, v.y - 1});
  const bool bottom_right = G.contains({v.x + 1, v.y - 1});
  if (left && top_right && bottom_right) return NodeKind::LeftNode;
  if (right && top_left && bottom_left) return NodeKind::RightNode;
  return NodeKind::NotANode;
}

/// All degree-3 vertices, in vertex order.
inline std::vector<Coord> find_nodes(const LatticeGraph& G) {
  std::vector<Coord> out;
  for (int i = 0; i < G.size(); ++i)
    if (G.degree(i) == 3) out.push_back(G.vertices()[static_cast<std::size_t>(i)]);
  return out;
}

/// The left node in the highest row that contains any node, rightmost among
/// the left nodes of that row. Absent when there are no nodes or the top
/// node row holds no left node (the caller then works on the mirror graph).
inline std::optional<Coord> cutting_node(const LatticeGraph& G) {
  std::vector<Coord> nodes = find_nodes(G);
  if (nodes.empty()) return std::nullopt;
  int top_row = nodes.front().y;
  for (Coord v : nodes) top_row = std::max(top_row, v.y);
  std::optional<Coord> best;
  for (Coord v : nodes) {
    if (v.y != top_row || classify_node(G, v) != NodeKind::LeftNode) continue;
    if (!best || v.x > best->x) best = v;
  }
  return best;
}

/// Reflection that swaps the two node chiralities while preserving rows.
/// It maps left <-> right, top-left <-> top-right and bottom-left <->
/// bottom-right among the neighbor slots, and is an exact involution.
inline Coord mirror_coord(Coord c) { return {-c.x - c.y, c.y}; }

inline LatticeGraph mirror_graph(const LatticeGraph& G) {
  std::vector<Coord> vs;
  vs.reserve(G.vertices().size());
  for (Coord v : G.vertices()) vs.push_back(mirror_coord(v));
  return LatticeGraph(std::move(vs));
}

/// Mirror image together with the vertex bijection, for callers that map
/// colorings back explicitly rather than through mirror_coord.
struct MirrorResult {
  LatticeGraph graph;
  std::vector<std::pair<Coord, Coord>> bijection;  // original -> mirrored
};

inline MirrorResult mirror(const LatticeGraph& G) {
  MirrorResult out;
  out.graph = mirror_graph(G);
  out.bijection.reserve(G.vertices().size());
  for (Coord v : G.vertices()) out.bijection.emplace_back(v, mirror_coord(v));
  return out;
}

/// Node-to-node path whose interior vertices all have degree 2. A handle may
/// return to its own starting node (a cycle hanging off one node).
struct Handle {
  std::vector<Coord> seq;

  int length() const { return static_cast<int>(seq.size()) - 1; }
  Coord front() const { return seq.front(); }
  Coord back() const { return seq.back(); }
  bool self_returning() const { return seq.size() > 1 && seq.front() == seq.back(); }

  std::vector<Coord> interior() const {
    if (seq.size() <= 2) return {};
    return {seq.begin() + 1, seq.end() - 1};
  }
};

namespace detail {

// Walks from a node into one neighbor, through degree-2 vertices, until a
// vertex of degree != 2. Returns the handle when that terminal is a node.
inline std::optional<Handle> walk_handle(const LatticeGraph& G, int start, int first) {
  Handle h;
  h.seq.push_back(G.vertices()[static_cast<std::size_t>(start)]);
  int prev = start;
  int cur = first;
  while (G.degree(cur) == 2) {
    h.seq.push_back(G.vertices()[static_cast<std::size_t>(cur)]);
    const auto& nbrs = G.neighbors_of(cur);
    int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  if (G.degree(cur) != 3) return std::nullopt;  // dead end at a pendant
  h.seq.push_back(G.vertices()[static_cast<std::size_t>(cur)]);
  return h;
}

inline Handle canonical_orientation(Handle h) {
  bool flip;
  if (h.front() != h.back())
    flip = h.back() < h.front();
  else
    flip = h.seq.size() > 2 && h.seq[h.seq.size() - 2] < h.seq[1];
  if (flip) std::reverse(h.seq.begin(), h.seq.end());
  return h;
}

}  // namespace detail

/// Every handle of the graph, each reported once in canonical orientation
/// (lexicographically smaller endpoint first), sorted.
inline std::vector<Handle> find_handles(const LatticeGraph& G) {
  std::set<std::vector<Coord>> seen;
  for (int u = 0; u < G.size(); ++u) {
    if (G.degree(u) != 3) continue;
    for (int t : G.neighbors_of(u)) {
      std::optional<Handle> h = detail::walk_handle(G, u, t);
      if (h) seen.insert(detail::canonical_orientation(*h).seq);
    }
  }
  std::vector<Handle> out;
  out.reserve(seen.size());
  for (const auto& seq : seen) out.push_back(Handle{seq});
  return out;
}

/// The handle that leaves the cutting node through its top-right neighbor.
/// Absent when there is no cutting node, or when that walk dies in a
/// pendant before reaching another node.
inline std::optional<Handle> cutting_handle(const LatticeGraph& G) {
  std::optional<Coord> cn = cutting_node(G);
  if (!cn) return std::nullopt;
  Coord above{cn->x, cn->y + 1};
  std::optional<int> first = G.index_of(above);
  if (!first)
    throw StructuralViolation("cutting_handle: left node lacks its top-right neighbor");
  if (G.degree(*first) == 3)
    throw StructuralViolation("cutting_handle: node found above the top node row");
  return detail::walk_handle(G, *G.index_of(*cn), *first);
}

/// A length-3 cutting handle plus the vertices its extension needs: the far
/// endpoint v3, its low-degree neighbor v4, v4's other neighbor v5 when v4
/// has degree 2, and v3's remaining neighbor u (which stays colored while
/// the extension recolors v3 and v4).
struct HandleContext {
  Handle handle;
  Coord v3;
  Coord v4;
  Coord u;
  std::optional<Coord> v5;
};

/// Extracts the context for a cutting handle of length <= 3. Any shape other
/// than length exactly 3 with a qualifying v4 contradicts what the lattice
/// geometry guarantees and raises StructuralViolation.
inline HandleContext short_handle_context(const LatticeGraph& G, const Handle& H) {
  if (H.length() > 3) throw InputError("short_handle_context: handle longer than 3");
  if (H.length() != 3)
    throw StructuralViolation("short_handle_context: cutting handle of length " +
                              std::to_string(H.length()) + ", expected exactly 3");
  HandleContext ctx;
  ctx.handle = H;
  ctx.v3 = H.seq[3];
  const Coord v2 = H.seq[2];
  std::optional<int> idx3 = G.index_of(ctx.v3);
  if (!idx3 || G.degree(*idx3) != 3)
    throw StructuralViolation("short_handle_context: handle endpoint is not a node");

  std::vector<Coord> candidates;
  std::vector<Coord> others;
  for (int nb : G.neighbors_of(*idx3)) {
    Coord c = G.vertices()[static_cast<std::size_t>(nb)];
    if (c == v2) continue;
    others.push_back(c);
    if (G.degree(nb) <= 2) candidates.push_back(c);
  }
  if (candidates.empty())
    throw StructuralViolation("short_handle_context: no neighbor of v3 with degree <= 2");

  // Prefer the right neighbor of v3, matching the geometry of the length-3
  // configuration; otherwise lowest coordinate. Any qualifying choice works.
  Coord right{ctx.v3.x + 1, ctx.v3.y};
  auto it = std::find(candidates.begin(), candidates.end(), right);
  ctx.v4 = it != candidates.end() ? *it : *std::min_element(candidates.begin(), candidates.end());

  bool found_u = false;
  for (Coord c : others) {
    if (c == ctx.v4) continue;
    ctx.u = c;
    found_u = true;
  }
  if (!found_u) throw StructuralViolation("short_handle_context: v3 lacks a third neighbor");

  int idx4 = *G.index_of(ctx.v4);
  if (G.degree(idx4) == 2) {
    for (int nb : G.neighbors_of(idx4)) {
      Coord c = G.vertices()[static_cast<std::size_t>(nb)];
      if (!(c == ctx.v3)) ctx.v5 = c;
    }
    if (!ctx.v5)
      throw StructuralViolation("short_handle_context: degree-2 v4 has no second neighbor");
  }

  // Girth >= 6 keeps the extension path induced; a violation here means the
  // input was not a triangle-free induced lattice subgraph.
  for (const Coord& hv : H.seq)
    if (ctx.v4 == hv)
      throw StructuralViolation("short_handle_context: v4 collides with the handle");
  if (ctx.v5 && (*ctx.v5 == ctx.u || std::find(H.seq.begin(), H.seq.end(), *ctx.v5) != H.seq.end()))
    throw StructuralViolation("short_handle_context: v5 collides with the handle or u");
  return ctx;
}

}  // namespace latcol
