#include <catch2/catch_amalgamated.hpp>

#include "latcol/generator.hpp"
#include "latcol/io.hpp"

using namespace latcol;

TEST_CASE("graph document round-trip") {
  std::vector<Coord> vs{{0, 0}, {1, 0}, {-2, 3}};
  nlohmann::json doc = graph_to_json(vs);
  CHECK(graph_from_json(doc) == vs);
  CHECK(nlohmann::json::parse(doc.dump()) == doc);
}

TEST_CASE("graph document validation") {
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"nope":[]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":[[0]]})")), InputError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":[[0,0],[0,0]]})")),
                  InputError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":[[0,0.5]]})")), InputError);
}

TEST_CASE("lists and coloring documents round-trip") {
  ListAssignment L{ColorSet{1, 2, 3}, ColorSet{4, 5, 6}};
  CHECK(lists_from_json(lists_to_json(L)) == L);
  MultiColoring c{ColorSet{1}, ColorSet{4, 6}};
  CHECK(coloring_from_json(coloring_to_json(c)) == c);

  std::vector<DecompositionStep> trace{{StepKind::ShortHandle, {{0, 0}, {0, 1}}}};
  nlohmann::json with_trace = coloring_to_json(c, &trace);
  CHECK(with_trace["trace"][0]["step"] == "short-handle");
  CHECK(coloring_from_json(with_trace) == c);
}

TEST_CASE("lists document validation") {
  CHECK_THROWS_AS(lists_from_json(nlohmann::json::parse(R"({"lists":[[1,1]]})")), InputError);
  CHECK_THROWS_AS(lists_from_json(nlohmann::json::parse(R"({"lists":[[-1]]})")), InputError);
  CHECK_THROWS_AS(lists_from_json(nlohmann::json::parse(R"({"lists":"x"})")), InputError);
}

TEST_CASE("generator is deterministic") {
  GeneratorConfig cfg;
  cfg.width = 8;
  cfg.height = 6;
  cfg.density = 0.7;
  cfg.seed = 7;
  LatticeGraph a = gen_lattice_graph(cfg);
  LatticeGraph b = gen_lattice_graph(cfg);
  CHECK(a.vertices() == b.vertices());
  CHECK(gen_lists(a, 5, 15, 7) == gen_lists(b, 5, 15, 7));
  cfg.seed = 8;
  CHECK(gen_lattice_graph(cfg).vertices() != a.vertices());
}

TEST_CASE("generator output is triangle-free with girth at least 6") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GeneratorConfig cfg;
    cfg.width = 6 + static_cast<int>(seed % 5);
    cfg.height = 4 + static_cast<int>(seed % 4);
    cfg.density = 0.4 + 0.15 * static_cast<double>(seed % 4);
    cfg.seed = seed;
    LatticeGraph G = gen_lattice_graph(cfg);
    CHECK(is_triangle_free(G));
    CHECK(girth_at_least_6(G));
  }
}

TEST_CASE("list styles") {
  GeneratorConfig cfg;
  cfg.seed = 3;
  LatticeGraph G = gen_lattice_graph(cfg);
  REQUIRE(G.size() > 0);
  SECTION("uniform lists have the right size and palette") {
    ListAssignment L = gen_lists(G, 5, 15, 11, ListStyle::Uniform);
    CHECK(list_sizes_ok(L, 5));
    for (const ColorSet& s : L) {
      CHECK(s.min() >= 1);
      CHECK(s.max() <= 15);
    }
  }
  SECTION("shifted intervals are contiguous") {
    ListAssignment L = gen_lists(G, 5, 15, 11, ListStyle::ShiftedInterval);
    CHECK(list_sizes_ok(L, 5));
    for (const ColorSet& s : L) CHECK(s.max() - s.min() == 4);
  }
  SECTION("near-identical lists differ from the base by at most one color") {
    ListAssignment L = gen_lists(G, 5, 15, 11, ListStyle::NearIdentical);
    CHECK(list_sizes_ok(L, 5));
    for (const ColorSet& s : L) CHECK((s & L[0]).size() >= 3);
  }
}

TEST_CASE("alignment between document order and graph order") {
  std::vector<Coord> doc_vs{{1, 0}, {0, 0}};  // deliberately unsorted
  LatticeGraph G = induced_graph(doc_vs);
  ListAssignment doc_lists{ColorSet{9}, ColorSet{1}};
  ListAssignment aligned = align_to_graph(G, doc_vs, doc_lists);
  CHECK(aligned[static_cast<std::size_t>(*G.index_of({1, 0}))] == ColorSet{9});
  CHECK(aligned[static_cast<std::size_t>(*G.index_of({0, 0}))] == ColorSet{1});
  MultiColoring back = align_to_document(G, doc_vs, aligned);
  CHECK(back == doc_lists);
}
