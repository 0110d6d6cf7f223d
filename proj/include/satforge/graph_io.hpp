#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "satforge/graph.hpp"

namespace satforge {

// graph6 per the de-facto standard ASCII encoding (McKay). Bit-exact:
// header-free output, optional ">>graph6<<" header accepted on input.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

std::string to_dot(const Graph& g);

// {"n": int, "edges": [[u, v], ...]}
nlohmann::json to_edge_list_json(const Graph& g);
Graph from_edge_list_json(const nlohmann::json& j);

// Dispatches on extension (.g6/.graph6 vs .json); .json content may also be
// a {"n","set"} object, which loads as the corresponding Cayley graph.
Graph load_graph_file(const std::filesystem::path& path);
void save_graph_file(const Graph& g, const std::filesystem::path& path);

}  // namespace satforge
