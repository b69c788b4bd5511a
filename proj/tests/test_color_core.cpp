#include <catch2/catch_amalgamated.hpp>

#include "latcol/color.hpp"
#include "latcol/generator.hpp"

using namespace latcol;

TEST_CASE("ColorSet basics") {
  ColorSet s{1, 2, 3};
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(4));
  s.insert(70);  // spills past the inline word
  CHECK(s.size() == 4);
  CHECK(s.contains(70));
  CHECK(s.max() == 70);
  CHECK(s.min() == 1);
  s.erase(70);
  CHECK(s == ColorSet{1, 2, 3});

  CHECK((ColorSet{1, 2} | ColorSet{2, 3}) == ColorSet{1, 2, 3});
  CHECK((ColorSet{1, 2} & ColorSet{2, 3}) == ColorSet{2});
  CHECK((ColorSet{1, 2} - ColorSet{2, 3}) == ColorSet{1});
  CHECK(ColorSet{1, 2}.disjoint_with(ColorSet{3, 4}));
  CHECK(ColorSet{1, 2}.subset_of(ColorSet{1, 2, 3}));
  CHECK_FALSE(ColorSet{1, 4}.subset_of(ColorSet{1, 2, 3}));
  CHECK(ColorSet{3, 1, 5}.lowest(2) == ColorSet{1, 3});
  CHECK(ColorSet{2, 7, 9}.to_vector() == std::vector<Color>{2, 7, 9});
}

TEST_CASE("ColorSet across word boundaries") {
  ColorSet a{10, 65, 130};
  ColorSet b{65, 200};
  CHECK(a.intersects(b));
  CHECK((a & b) == ColorSet{65});
  CHECK((a | b).size() == 4);
  CHECK((a - b) == ColorSet{10, 130});
  ColorSet c = a;
  c.erase(130);
  c.erase(65);
  CHECK(c == ColorSet{10});  // ext words trimmed, equality stays structural
}

TEST_CASE("verify_coloring spec examples") {
  SECTION("single vertex passes") {
    VerifyReport r = verify_coloring({}, {ColorSet{1, 2, 3, 4, 5}}, {2}, {ColorSet{1, 2}});
    CHECK(r.ok());
  }
  SECTION("shared color on an edge fails at that edge") {
    VerifyReport r = verify_coloring({{0, 1}}, {ColorSet{1, 2}, ColorSet{1, 2}}, {1, 1},
                                     {ColorSet{1}, ColorSet{1}});
    REQUIRE_FALSE(r.ok());
    CHECK(r.kind == VerifyReport::Kind::EdgeOverlap);
    CHECK(r.edge == std::pair<int, int>{0, 1});
  }
  SECTION("three-vertex path passes") {
    VerifyReport r = verify_coloring({{0, 1}, {1, 2}},
                                     {ColorSet{1, 2}, ColorSet{1, 2, 3}, ColorSet{1, 3}},
                                     {1, 1, 1}, {ColorSet{2}, ColorSet{3}, ColorSet{1}});
    CHECK(r.ok());
  }
}

TEST_CASE("verify_coloring reports the first violation deterministically") {
  ListAssignment L{ColorSet{1, 2}, ColorSet{1, 2}, ColorSet{1, 2}};
  SECTION("subset violation before size violation on the same scan") {
    VerifyReport r =
        verify_coloring({{0, 1}}, L, {1, 1, 1}, {ColorSet{3}, ColorSet{1, 2}, ColorSet{1}});
    CHECK(r.kind == VerifyReport::Kind::NotSubset);
    CHECK(r.vertex == 0);
  }
  SECTION("vertex clauses precede edge clauses") {
    VerifyReport r =
        verify_coloring({{0, 1}}, L, {1, 1, 1}, {ColorSet{1}, ColorSet{1}, ColorSet{1, 2}});
    CHECK(r.kind == VerifyReport::Kind::WrongSize);
    CHECK(r.vertex == 2);
  }
  SECTION("domain mismatch is an input error, not a violation") {
    CHECK_THROWS_AS(verify_coloring({}, L, {1, 1}, {ColorSet{1}, ColorSet{1}, ColorSet{1}}),
                    InputError);
  }
}

TEST_CASE("verify_coloring is invariant under color relabeling") {
  detail::Rng rng(20240809);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    ListAssignment L;
    MultiColoring c;
    WeightFn w;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      ColorSet list;
      while (list.size() < 3) list.insert(1 + static_cast<Color>(rng.below(8)));
      L.push_back(list);
      w.push_back(1 + static_cast<int>(rng.below(2)));
      ColorSet chosen;
      std::vector<Color> elems = list.to_vector();
      while (chosen.size() < std::min<int>(w.back(), list.size()))
        chosen.insert(elems[rng.below(elems.size())]);
      c.push_back(chosen);
      if (i > 0) edges.emplace_back(i - 1, i);
    }
    // Relabel by an arbitrary strictly monotone-breaking bijection.
    auto relabel = [](Color x) { return 97 - x; };
    ListAssignment L2;
    MultiColoring c2;
    for (const ColorSet& s : L) {
      ColorSet t;
      s.for_each([&](Color x) { t.insert(relabel(x)); });
      L2.push_back(t);
    }
    for (const ColorSet& s : c) {
      ColorSet t;
      s.for_each([&](Color x) { t.insert(relabel(x)); });
      c2.push_back(t);
    }
    CHECK(verify_coloring(edges, L, w, c).ok() == verify_coloring(edges, L2, w, c2).ok());
  }
}

TEST_CASE("list_sizes_ok") {
  ListAssignment fives{ColorSet{1, 2, 3, 4, 5}, ColorSet{2, 3, 4, 5, 6}};
  CHECK(list_sizes_ok(fives, 5));
  ListAssignment mixed = fives;
  mixed.push_back(ColorSet{1, 2, 3, 4});
  CHECK_FALSE(list_sizes_ok(mixed, 5));
  CHECK(list_sizes_ok({}, 5));
}

TEST_CASE("ProblemParams") {
  ProblemParams p = ProblemParams::for_multiplier(2);
  CHECK(p.a == 10);
  CHECK(p.b == 4);
  CHECK(p.e == 2);
  CHECK(p.a == 2 * p.b + p.e);
  CHECK(p.meets_ratio_gate());
  CHECK(ProblemParams::from_ab(8, 3).meets_ratio_gate());
  CHECK(ProblemParams::from_ab(5, 2).meets_ratio_gate());
  CHECK_FALSE(ProblemParams::from_ab(9, 4).meets_ratio_gate());
}
