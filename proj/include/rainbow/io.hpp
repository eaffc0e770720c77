#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

// A graph with the optional "pairs" and "k" of an instance file.
struct InstanceData {
  Graph graph;
  std::optional<PairSet> pairs;
  std::optional<std::size_t> k;
};

enum class Format { EdgeList, Json };

// Edge-list text: a header line "n m" followed by m lines "u v", 0-based.
// Blank trailing lines are allowed; anything else malformed is a ParseError
// pointing at the offending token.
Graph parse_edge_list(std::string_view text);
// Canonical edge-list form: deduplicated, sorted edges, LF line ends.
std::string emit_edge_list(const Graph& g);

// {"n": int, "edges": [[u,v],...], "pairs": [[u,v],...], "k": int}; the last
// two keys are optional.
InstanceData parse_instance_json(std::string_view text);
InstanceData instance_from_json(const Json& doc);
Json instance_to_json(const Graph& g, const PairSet* pairs = nullptr,
                      std::optional<std::size_t> k = std::nullopt);
std::string emit_instance_json(const InstanceData& inst);

InstanceData parse_instance(std::string_view text, Format format);

// {"k": int, "colors": [[u,v,c],...]} with exactly one triple per host edge.
EdgeColoring coloring_from_json(const Json& doc, const Graph& host);
EdgeColoring parse_coloring_json(std::string_view text, const Graph& host);
Json coloring_to_json(const Graph& host, const EdgeColoring& c);

// Parses JSON, converting syntax errors to ParseError with line and column.
Json parse_json(std::string_view text);

// Undirected DOT; highlighted vertices get shape=doublecircle. `labels`, if
// non-empty, must have one entry per vertex.
std::string to_dot(const Graph& g, std::span<const Vertex> highlights = {},
                   std::span<const std::string> labels = {});

}  // namespace rainbow
