#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "latcol/generator.hpp"
#include "latcol/lattice.hpp"

using namespace latcol;

namespace {

// Hexagonal 6-cycle.
std::vector<Coord> hexagon() {
  return {{0, 0}, {0, 1}, {1, 1}, {2, 0}, {2, -1}, {1, -1}};
}

// Hexagon with one pendant on each side: (0,0) becomes a left node and
// (2,0) a right node.
std::vector<Coord> double_pendant_hexagon() {
  auto vs = hexagon();
  vs.push_back({-1, 0});
  vs.push_back({3, 0});
  return vs;
}

}  // namespace

TEST_CASE("neighbors in fixed order") {
  std::array<Coord, 6> n0 = neighbors({0, 0});
  CHECK(n0 == std::array<Coord, 6>{{{-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {0, -1}, {1, -1}}});
  std::array<Coord, 6> n2 = neighbors({2, 0});
  CHECK(n2 == std::array<Coord, 6>{{{1, 0}, {3, 0}, {1, 1}, {2, 1}, {2, -1}, {3, -1}}});
}

TEST_CASE("neighbor relation is symmetric") {
  for (int x = -2; x <= 2; ++x) {
    for (int y = -2; y <= 2; ++y) {
      Coord v{x, y};
      for (Coord u : neighbors(v)) {
        auto back = neighbors(u);
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
      }
    }
  }
}

TEST_CASE("induced_graph") {
  CHECK(induced_graph({{0, 0}, {1, 0}}).edges().size() == 1);
  CHECK(induced_graph({{0, 0}, {2, 0}}).edges().size() == 0);
  LatticeGraph hex = induced_graph(hexagon());
  CHECK(hex.edges().size() == 6);
  for (int i = 0; i < hex.size(); ++i) CHECK(hex.degree(i) == 2);
}

TEST_CASE("is_triangle_free") {
  LatticeGraph tri = induced_graph({{0, 0}, {1, 0}, {0, 1}});
  CHECK_FALSE(is_triangle_free(tri));
  auto found = find_triangle(tri);
  REQUIRE(found.has_value());
  CHECK(is_triangle_free(induced_graph(hexagon())));
  CHECK(is_triangle_free(induced_graph({{0, 0}, {1, 0}})));
  CHECK(is_triangle_free(induced_graph({})));
}

TEST_CASE("girth") {
  CHECK(girth(induced_graph(hexagon())) == 6);
  CHECK(girth_at_least_6(induced_graph(hexagon())));
  CHECK(girth(induced_graph({{0, 0}, {1, 0}, {2, 0}})) == kInfiniteGirth);  // path: no cycle
  CHECK(girth(induced_graph({{0, 0}, {1, 0}, {0, 1}})) == 3);
}

TEST_CASE("classify_node") {
  LatticeGraph G = induced_graph(double_pendant_hexagon());
  CHECK(classify_node(G, {0, 0}) == NodeKind::LeftNode);
  CHECK(classify_node(G, {2, 0}) == NodeKind::RightNode);
  CHECK(classify_node(G, {0, 1}) == NodeKind::NotANode);  // degree 2
  CHECK(classify_node(G, {-1, 0}) == NodeKind::NotANode);  // degree 1
  CHECK_THROWS_AS(classify_node(G, {9, 9}), InputError);
}

TEST_CASE("cutting_node") {
  SECTION("left node at the top node row wins") {
    LatticeGraph G = induced_graph(double_pendant_hexagon());
    auto cn = cutting_node(G);
    REQUIRE(cn.has_value());
    CHECK(*cn == Coord{0, 0});
  }
  SECTION("no nodes, no cutting node") {
    CHECK_FALSE(cutting_node(induced_graph(hexagon())).has_value());
  }
  SECTION("right nodes only: absent until mirrored") {
    std::vector<Coord> left_only = hexagon();
    left_only.push_back({-1, 0});  // only (0,0) becomes a node, a left one
    LatticeGraph L = induced_graph(left_only);
    REQUIRE(cutting_node(L).has_value());
    LatticeGraph R = mirror_graph(L);
    CHECK_FALSE(cutting_node(R).has_value());
  }
}

TEST_CASE("mirror_coord") {
  SECTION("adjacency is preserved") {
    Coord a{0, 0}, b{1, 0};
    Coord ma = mirror_coord(a), mb = mirror_coord(b);
    auto ns = neighbors(ma);
    CHECK(std::find(ns.begin(), ns.end(), mb) != ns.end());
  }
  SECTION("left nodes become right nodes") {
    LatticeGraph G = induced_graph(double_pendant_hexagon());
    LatticeGraph M = mirror_graph(G);
    CHECK(classify_node(G, {0, 0}) == NodeKind::LeftNode);
    CHECK(classify_node(M, mirror_coord({0, 0})) == NodeKind::RightNode);
  }
  SECTION("involution") {
    for (int x = -3; x <= 3; ++x)
      for (int y = -3; y <= 3; ++y) CHECK(mirror_coord(mirror_coord({x, y})) == Coord{x, y});
  }
  SECTION("mirror returns the bijection") {
    LatticeGraph G = induced_graph(double_pendant_hexagon());
    MirrorResult m = mirror(G);
    CHECK(m.graph.size() == G.size());
    for (auto [from, to] : m.bijection) {
      CHECK(G.contains(from));
      CHECK(m.graph.contains(to));
      CHECK(mirror_coord(from) == to);
    }
  }
  SECTION("chirality counts swap on generated graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      GeneratorConfig cfg;
      cfg.width = 7;
      cfg.height = 5;
      cfg.density = 0.7;
      cfg.seed = seed;
      LatticeGraph G = gen_lattice_graph(cfg);
      LatticeGraph M = mirror_graph(G);
      auto count = [](const LatticeGraph& g, NodeKind k) {
        int c = 0;
        for (Coord v : find_nodes(g))
          if (classify_node(g, v) == k) ++c;
        return c;
      };
      CHECK(count(G, NodeKind::LeftNode) == count(M, NodeKind::RightNode));
      CHECK(count(G, NodeKind::RightNode) == count(M, NodeKind::LeftNode));
      CHECK(G.edges().size() == M.edges().size());
    }
  }
}

TEST_CASE("find_handles") {
  SECTION("double-pendant hexagon has the two arcs") {
    LatticeGraph G = induced_graph(double_pendant_hexagon());
    std::vector<Handle> hs = find_handles(G);
    REQUIRE(hs.size() == 2);
    CHECK(hs[0].length() == 3);
    CHECK(hs[1].length() == 3);
    for (const Handle& h : hs) {
      CHECK(h.front() == Coord{0, 0});
      CHECK(h.back() == Coord{2, 0});
    }
  }
  SECTION("plain hexagon has none") {
    CHECK(find_handles(induced_graph(hexagon())).empty());
  }
  SECTION("a cycle attached to one node gives a self-returning handle") {
    std::vector<Coord> vs = hexagon();
    vs.push_back({-1, 0});  // pendant at (0,0)
    LatticeGraph G = induced_graph(vs);
    std::vector<Handle> hs = find_handles(G);
    REQUIRE(hs.size() == 1);
    CHECK(hs[0].self_returning());
    CHECK(hs[0].length() == 6);
    CHECK(hs[0].front() == Coord{0, 0});
  }
}

TEST_CASE("cutting_handle") {
  SECTION("double-pendant hexagon: the top arc") {
    LatticeGraph G = induced_graph(double_pendant_hexagon());
    auto h = cutting_handle(G);
    REQUIRE(h.has_value());
    CHECK(h->seq == std::vector<Coord>{{0, 0}, {0, 1}, {1, 1}, {2, 0}});
  }
  SECTION("right-only graph has none") {
    std::vector<Coord> left_only = hexagon();
    left_only.push_back({-1, 0});
    LatticeGraph R = mirror_graph(induced_graph(left_only));
    CHECK_FALSE(cutting_handle(R).has_value());
  }
  SECTION("longer arcs are followed to the far node") {
    // A 10-cycle with one pendant at the left node (0,0) and one at the
    // right node (4,-1); the walk from (0,0) has to travel five edges.
    std::vector<Coord> vs{{0, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 0}, {4, -1},
                          {4, -2}, {3, -2}, {2, -2}, {1, -1}, {-1, 0}, {5, -1}};
    LatticeGraph G = induced_graph(vs);
    REQUIRE(is_triangle_free(G));
    auto h = cutting_handle(G);
    REQUIRE(h.has_value());
    CHECK(h->front() == Coord{0, 0});
    CHECK(h->seq[1] == Coord{0, 1});
    CHECK(h->length() == 5);
    CHECK(h->back() == Coord{4, -1});
  }
  SECTION("pendant walk from the cutting node yields nothing") {
    // Pendant hangs on the cutting node's top-right slot, so the walk dies.
    std::vector<Coord> vs{{0, 0}, {-1, 0}, {-1, -1}, {0, -2}, {1, -2}, {1, -1}, {0, 1}};
    LatticeGraph G = induced_graph(vs);
    REQUIRE(is_triangle_free(G));
    REQUIRE(classify_node(G, {0, 0}) == NodeKind::LeftNode);
    CHECK_FALSE(cutting_handle(G).has_value());
    CHECK_FALSE(cutting_handle(mirror_graph(G)).has_value());
  }
}

TEST_CASE("short_handle_context") {
  SECTION("pendant v4 with no v5") {
    LatticeGraph G = induced_graph(double_pendant_hexagon());
    auto h = cutting_handle(G);
    REQUIRE(h.has_value());
    HandleContext ctx = short_handle_context(G, *h);
    CHECK(ctx.v3 == Coord{2, 0});
    CHECK(ctx.v4 == Coord{3, 0});  // right neighbor preferred
    CHECK_FALSE(ctx.v5.has_value());
    CHECK(ctx.u == Coord{2, -1});
  }
  SECTION("degree-2 v4 exposes its other neighbor") {
    auto vs = double_pendant_hexagon();
    vs.push_back({4, 0});
    LatticeGraph G = induced_graph(vs);
    auto h = cutting_handle(G);
    REQUIRE(h.has_value());
    HandleContext ctx = short_handle_context(G, *h);
    CHECK(ctx.v4 == Coord{3, 0});
    REQUIRE(ctx.v5.has_value());
    CHECK(*ctx.v5 == Coord{4, 0});
  }
  SECTION("long handles are rejected as input errors") {
    std::vector<Coord> vs{{0, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 0}, {4, -1},
                          {4, -2}, {3, -2}, {2, -2}, {1, -1}, {-1, 0}, {5, -1}};
    LatticeGraph G = induced_graph(vs);
    auto h = cutting_handle(G);
    REQUIRE(h.has_value());
    CHECK_THROWS_AS(short_handle_context(G, *h), InputError);
  }
}

TEST_CASE("handle cover: degree-2 vertices between nodes appear in exactly one handle") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    GeneratorConfig cfg;
    cfg.width = 8;
    cfg.height = 6;
    cfg.density = 0.75;
    cfg.seed = seed;
    LatticeGraph G = gen_lattice_graph(cfg);
    std::vector<Handle> hs = find_handles(G);
    std::map<Coord, int> cover;
    for (const Handle& h : hs)
      for (Coord v : h.interior()) ++cover[v];
    for (const auto& [v, count] : cover) CHECK(count == 1);
    // Every interior vertex must have degree 2 and handle ends degree 3.
    for (const Handle& h : hs) {
      for (Coord v : h.interior()) CHECK(G.degree_of(v) == 2);
      CHECK(G.degree_of(h.front()) == 3);
      CHECK(G.degree_of(h.back()) == 3);
    }
  }
}

TEST_CASE("node partition on generated graphs") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    GeneratorConfig cfg;
    cfg.width = 9;
    cfg.height = 6;
    cfg.density = 0.8;
    cfg.seed = seed;
    LatticeGraph G = gen_lattice_graph(cfg);
    for (int i = 0; i < G.size(); ++i) {
      CHECK(G.degree(i) <= 3);
      if (G.degree(i) == 3)
        CHECK(classify_node(G, G.vertices()[static_cast<std::size_t>(i)]) != NodeKind::NotANode);
    }
  }
}
