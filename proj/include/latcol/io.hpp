#pragma once

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "latcol/color.hpp"
#include "latcol/errors.hpp"
#include "latcol/lattice.hpp"
#include "latcol/solver.hpp"

namespace latcol {

// Document shapes:
//   graph     {"vertices": [[x, y], ...]}
//   lists     {"lists": [[color, ...], ...]}        aligned with the vertices
//   coloring  {"coloring": [[color, ...], ...],
//              "trace": [{"step": name, "vertices": [[x, y], ...]}, ...]}
// Edges are never serialized; adjacency is induced by the vertex set.

inline nlohmann::json graph_to_json(const std::vector<Coord>& vertices) {
  nlohmann::json vs = nlohmann::json::array();
  for (Coord v : vertices) vs.push_back({v.x, v.y});
  return nlohmann::json{{"vertices", vs}};
}

inline std::vector<Coord> graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw InputError("graph document: expected {\"vertices\": [[x,y],...]}");
  std::vector<Coord> out;
  std::set<Coord> seen;
  for (const auto& item : doc["vertices"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw InputError("graph document: vertex entries must be [x, y] integer pairs");
    Coord v{item[0].get<int>(), item[1].get<int>()};
    if (!seen.insert(v).second)
      throw InputError("graph document: duplicate vertex (" + std::to_string(v.x) + "," +
                       std::to_string(v.y) + ")");
    out.push_back(v);
  }
  return out;
}

namespace detail {

inline nlohmann::json sets_to_json(const std::vector<ColorSet>& sets) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ColorSet& s : sets) {
    nlohmann::json one = nlohmann::json::array();
    s.for_each([&](Color c) { one.push_back(c); });
    arr.push_back(std::move(one));
  }
  return arr;
}

inline std::vector<ColorSet> sets_from_json(const nlohmann::json& arr, const char* what) {
  std::vector<ColorSet> out;
  for (const auto& one : arr) {
    if (!one.is_array()) throw InputError(std::string(what) + ": entries must be color arrays");
    ColorSet s;
    for (const auto& c : one) {
      if (!c.is_number_integer() || c.get<int>() < 0)
        throw InputError(std::string(what) + ": colors must be nonnegative integers");
      if (s.contains(c.get<int>()))
        throw InputError(std::string(what) + ": duplicate color in one entry");
      s.insert(c.get<int>());
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

inline nlohmann::json lists_to_json(const ListAssignment& lists) {
  return nlohmann::json{{"lists", detail::sets_to_json(lists)}};
}

inline ListAssignment lists_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("lists") || !doc["lists"].is_array())
    throw InputError("lists document: expected {\"lists\": [[colors...],...]}");
  return detail::sets_from_json(doc["lists"], "lists document");
}

inline nlohmann::json coloring_to_json(const MultiColoring& coloring,
                                       const std::vector<DecompositionStep>* trace = nullptr) {
  nlohmann::json doc{{"coloring", detail::sets_to_json(coloring)}};
  if (trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const DecompositionStep& s : *trace) {
      nlohmann::json vs = nlohmann::json::array();
      for (Coord v : s.vertices) vs.push_back({v.x, v.y});
      steps.push_back({{"step", step_kind_name(s.kind)}, {"vertices", vs}});
    }
    doc["trace"] = std::move(steps);
  }
  return doc;
}

inline MultiColoring coloring_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("coloring") || !doc["coloring"].is_array())
    throw InputError("coloring document: expected {\"coloring\": [[colors...],...]}");
  return detail::sets_from_json(doc["coloring"], "coloring document");
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return doc;
}

inline void write_json_file(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << doc.dump(2) << "\n";
}

/// A graph document plus an aligned lists document.
struct Instance {
  std::vector<Coord> vertices;
  ListAssignment lists;
};

inline Instance load_instance(const std::string& graph_path, const std::string& lists_path) {
  Instance inst;
  inst.vertices = graph_from_json(read_json_file(graph_path));
  inst.lists = lists_from_json(read_json_file(lists_path));
  if (inst.vertices.size() != inst.lists.size())
    throw InputError("instance: vertex count and list count differ");
  return inst;
}

/// Reorders per-vertex data given in document order to the sorted vertex
/// order used by LatticeGraph.
inline ListAssignment align_to_graph(const LatticeGraph& G, const std::vector<Coord>& doc_vertices,
                                     const ListAssignment& doc_lists) {
  ListAssignment aligned(static_cast<std::size_t>(G.size()));
  for (std::size_t i = 0; i < doc_vertices.size(); ++i) {
    std::optional<int> idx = G.index_of(doc_vertices[i]);
    if (!idx) throw InputError("instance: vertex missing from the graph");
    aligned[static_cast<std::size_t>(*idx)] = doc_lists[i];
  }
  return aligned;
}

/// Inverse of align_to_graph for writing results in document order.
inline MultiColoring align_to_document(const LatticeGraph& G,
                                       const std::vector<Coord>& doc_vertices,
                                       const MultiColoring& by_graph_order) {
  MultiColoring out(doc_vertices.size());
  for (std::size_t i = 0; i < doc_vertices.size(); ++i)
    out[i] = by_graph_order[static_cast<std::size_t>(*G.index_of(doc_vertices[i]))];
  return out;
}

}  // namespace latcol
