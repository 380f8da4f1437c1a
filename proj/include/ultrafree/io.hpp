#pragma once

#include "ultrafree/blowup.hpp"
#include "ultrafree/convexity.hpp"
#include "ultrafree/graph.hpp"
#include "ultrafree/setsystem.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ultrafree {

/// DIMACS edge format (`p edge n m`, `e u v` with 1-based vertices, `c` comments) or JSON
/// {"n": n, "edges": [[u, v], ...]} with 0-based vertices; JSON is detected by a leading '{'.
/// Throws ParseError (with line and column) or SelfLoopRejected.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

std::string read_file(const std::string& path);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
std::string emit_graph_json(const Graph& g);
std::string emit_dimacs(const Graph& g);

/// {"ground": m, "sets": [[...], ...], "labels": [...]}; inner lists sorted, outer order kept.
nlohmann::json setsystem_to_json(const SetSystem& f);
SetSystem setsystem_from_json(const nlohmann::json& j);

/// {"kind": "from_graph", "graph": {...}} | {"kind": "subcubes", "n": n} |
/// {"kind": "explicit", "generators": {...}}.
nlohmann::json space_to_json(const ConvexitySpace& s);
ConvexitySpace space_from_json(const nlohmann::json& j, const SearchBudget& budget = {});

/// {"parts": [[...], ...], "quotient": {...}, "origin": [...]}.
nlohmann::json decomposition_to_json(const BlowupDecomposition& d);
BlowupDecomposition decomposition_from_json(const nlohmann::json& j);

/// {"weights": ["P/Q", ...]}.
Measure measure_from_json(const nlohmann::json& j);

/// Parses JSON text, converting syntax errors to ParseError with line and column.
nlohmann::json parse_json(std::string_view text);

}  // namespace ultrafree
