#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "powerclass/edge_coloring.hpp"
#include "powerclass/rhee.hpp"

namespace powerclass {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": int, "edges": [[u,v],...], "labels": [...]}, edges sorted with u < v.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Undirected DOT; edges carry a 1-based `label`/`color` attribute when a coloring is supplied.
std::string graph_to_dot(const Graph& g, const EdgeColoring* coloring = nullptr);

/// Table layout: header row 1..palette, column k lists the edges of
/// color k as "(a, b)" in display labels (vertex 0 shown as n).
std::string coloring_to_csv(const EdgeColoring& c);
/// Inverse of coloring_to_csv for an n-vertex graph. Throws FormatError on
/// malformed cells, labels outside 1..n, loops, or an edge listed twice.
EdgeColoring coloring_from_csv(const std::string& text, std::size_t n);

/// {"palette": k, "edges": [{"u":..,"v":..,"color":..}]}, internal vertex indices, 1-based colors.
nlohmann::json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j, std::size_t n);

nlohmann::json verification_to_json(const VerificationReport& r);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& content);

}  // namespace powerclass
