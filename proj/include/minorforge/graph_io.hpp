#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "minorforge/graph.hpp"

namespace minorforge {

/// graph6 encoding of a simple graph (no header, no trailing newline).
/// Throws std::invalid_argument for graphs with loops or parallel edges.
std::string to_graph6(const MultiGraph& g);

/// Parses one graph6 line. A leading ">>graph6<<" header and surrounding
/// whitespace are accepted. Edges come out in column order (j ascending, then i).
MultiGraph from_graph6(std::string_view text);

/// {"vertices": n, "edges": [[u, v], ...]}
nlohmann::json to_json(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& j);

}  // namespace minorforge
