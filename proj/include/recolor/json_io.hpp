#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// File formats, all 0-based ids:
///   graph:     {"n": int, "edges": [[u,v],...], "lists": [[...],...]?, "rotation": [[...],...]?}
///   colouring: [c0, c1, ...]
///   sequence:  {"steps": [{"v": int, "c": int}, ...],
///               "meta": {"length": int, "per_vertex": [...]}}
struct GraphFile {
    Graph graph;
    std::optional<std::vector<std::vector<int>>> lists;
    std::optional<std::vector<std::vector<int>>> rotation;
};

GraphFile parse_graph_json(const std::string& text);
GraphFile load_graph_file(const std::string& path);
std::string graph_to_json(const Graph& g,
                          const std::optional<std::vector<std::vector<int>>>& lists = std::nullopt,
                          const std::optional<std::vector<std::vector<int>>>& rotation = std::nullopt);

Colouring parse_colouring_json(const std::string& text);
Colouring load_colouring_file(const std::string& path);
std::string colouring_to_json(const Colouring& c);

/// Sequences are stored without per-step previous colours; replaying from
/// the start colouring reconstructs them on load when one is supplied.
RecoloringSequence parse_sequence_json(const std::string& text,
                                       const Colouring* start = nullptr);
RecoloringSequence load_sequence_file(const std::string& path, const Colouring* start = nullptr);
std::string sequence_to_json(const RecoloringSequence& seq, int n);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace recolor
