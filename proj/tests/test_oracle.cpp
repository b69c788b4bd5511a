#include <catch2/catch_amalgamated.hpp>

#include "latcol/generator.hpp"
#include "latcol/oracle.hpp"
#include "latcol/path.hpp"

using namespace latcol;

namespace {

std::vector<std::pair<int, int>> cycle_edges(int n) {
  auto es = path_edges(n);
  es.emplace_back(n - 1, 0);
  return es;
}

WeightedPath random_path(detail::Rng& rng, int max_n, int palette, int max_w) {
  int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n + 1)));
  WeightedPath P;
  for (int i = 0; i <= n; ++i) {
    int size = 1 + static_cast<int>(rng.below(4));
    ColorSet L;
    while (L.size() < size) L.insert(1 + static_cast<Color>(rng.below(palette)));
    P.lists.push_back(L);
    P.weights.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(max_w + 1))));
  }
  return P;
}

}  // namespace

TEST_CASE("solve_path_exact spec examples") {
  SECTION("forcing chain is infeasible") {
    ListAssignment L{ColorSet{1}, ColorSet{1, 2}, ColorSet{2}};
    CHECK_FALSE(solve_path_exact(L, {1, 1, 1}).has_value());
    CHECK_FALSE(path_colorable_exact(L, {1, 1, 1}));
  }
  SECTION("feasible path returns the lexicographically first coloring") {
    ListAssignment L{ColorSet{1, 2}, ColorSet{1, 2, 3}, ColorSet{1, 3}};
    auto c = solve_path_exact(L, {1, 1, 1});
    REQUIRE(c.has_value());
    CHECK(*c == MultiColoring{ColorSet{1}, ColorSet{2}, ColorSet{1}});
    CHECK(verify_coloring(path_edges(3), L, {1, 1, 1}, *c).ok());
  }
  SECTION("fixed start on a single vertex") {
    auto c = solve_path_exact({ColorSet{1, 2, 3}}, {2}, ColorSet{1, 2});
    REQUIRE(c.has_value());
    CHECK(*c == MultiColoring{ColorSet{1, 2}});
  }
}

TEST_CASE("solve_path_exact endpoint forcing") {
  ListAssignment L{ColorSet{1, 2, 3}, ColorSet{1, 2, 3, 4}, ColorSet{2, 3, 4}};
  auto c = solve_path_exact(L, {1, 1, 1}, ColorSet{3}, ColorSet{4});
  REQUIRE(c.has_value());
  CHECK(c->front() == ColorSet{3});
  CHECK(c->back() == ColorSet{4});
  CHECK(verify_coloring(path_edges(3), L, {1, 1, 1}, *c).ok());

  SECTION("contradictory pins on one vertex are infeasible") {
    CHECK_FALSE(solve_path_exact({ColorSet{1, 2}}, {1}, ColorSet{1}, ColorSet{2}).has_value());
  }
  SECTION("oversized pin is an input error") {
    CHECK_THROWS_AS(solve_path_exact(L, {1, 1, 1}, ColorSet{1, 2}, std::nullopt), InputError);
  }
}

TEST_CASE("empty path is trivially feasible") {
  CHECK(path_colorable_exact(ListAssignment{}, WeightFn{}));
  auto c = solve_path_exact(ListAssignment{}, WeightFn{});
  REQUIRE(c.has_value());
  CHECK(c->empty());
}

TEST_CASE("solve_cycle_exact spec examples") {
  SECTION("C4 alternation") {
    ListAssignment L(4, ColorSet{1, 2});
    auto c = solve_cycle_exact(L, {1, 1, 1, 1});
    REQUIRE(c.has_value());
    CHECK(*c == MultiColoring{ColorSet{1}, ColorSet{2}, ColorSet{1}, ColorSet{2}});
  }
  SECTION("C5 with demand two") {
    ListAssignment L(5, ColorSet{1, 2, 3, 4, 5});
    WeightFn w(5, 2);
    auto c = solve_cycle_exact(L, w);
    REQUIRE(c.has_value());
    CHECK(*c == MultiColoring{ColorSet{1, 2}, ColorSet{3, 4}, ColorSet{1, 5}, ColorSet{2, 3},
                              ColorSet{4, 5}});
    CHECK(verify_coloring(cycle_edges(5), L, w, *c).ok());
  }
  SECTION("C3 from two colors is infeasible") {
    ListAssignment L(3, ColorSet{1, 2});
    CHECK_FALSE(solve_cycle_exact(L, {1, 1, 1}).has_value());
    CHECK_FALSE(cycle_colorable_exact(L, {1, 1, 1}));
  }
  SECTION("cycles shorter than 3 are rejected") {
    CHECK_THROWS_AS(solve_cycle_exact(ListAssignment(2, ColorSet{1}), {1, 1}), InputError);
  }
}

TEST_CASE("cycle verdict is rotation invariant") {
  detail::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int len = 3 + static_cast<int>(rng.below(5));
    ListAssignment L;
    WeightFn w;
    for (int i = 0; i < len; ++i) {
      ColorSet s;
      int size = 1 + static_cast<int>(rng.below(3));
      while (s.size() < size) s.insert(1 + static_cast<Color>(rng.below(6)));
      L.push_back(s);
      w.push_back(static_cast<int>(rng.below(3)));
    }
    bool base = cycle_colorable_exact(L, w);
    for (int r = 1; r < len; ++r) {
      ListAssignment L2(L.begin() + r, L.end());
      L2.insert(L2.end(), L.begin(), L.begin() + r);
      WeightFn w2(w.begin() + r, w.end());
      w2.insert(w2.end(), w.begin(), w.begin() + r);
      CHECK(cycle_colorable_exact(L2, w2) == base);
    }
  }
}

TEST_CASE("oracle self-consistency on random paths") {
  detail::Rng rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    WeightedPath P = random_path(rng, 5, 7, 2);
    auto c = solve_path_exact(P);
    bool feasible = path_colorable_exact(P);
    CHECK(c.has_value() == feasible);
    if (c) CHECK(verify_coloring(path_edges(P.vertex_count()), P.lists, P.weights, *c).ok());
  }
}

TEST_CASE("work budget failure is loud") {
  // 18-choose-9 candidates per vertex blow a tiny budget immediately.
  ColorSet big;
  for (Color c = 1; c <= 18; ++c) big.insert(c);
  ListAssignment L(6, big);
  WeightFn w(6, 9);
  CHECK_THROWS_AS(solve_path_exact(L, w, std::nullopt, std::nullopt, OracleLimits{1000}),
                  ResourceLimitError);
}
