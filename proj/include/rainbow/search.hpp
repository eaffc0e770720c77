#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Proper vertex coloring: entry v is the color of vertex v.
using VertexColoring = std::vector<Color>;

struct SearchOptions {
  // Search nodes (partial assignments) allowed before BudgetExceeded.
  std::uint64_t node_budget = 200'000'000;
};

template <typename Witness>
struct SolveResult {
  bool feasible = false;
  std::optional<Witness> witness;  // present iff feasible
  std::uint64_t nodes_explored = 0;
};

// Is the chromatic number at most k? Backtracking in vertex order; vertex i
// may only take a color at most one above the largest color among vertices
// before it, so each color class partition is visited once. The witness is
// the lexicographically least proper coloring in that canonical form.
SolveResult<VertexColoring> vertex_coloring_leq(const Graph& g, std::size_t k,
                                                const SearchOptions& options = {});

// Is there a k-edge-coloring under which every pair in `pairs` has a rainbow
// path (resp. rainbow geodesic)? Colorings are enumerated as restricted-growth
// strings over the sorted edge list, and the witness is the lexicographically
// least feasible one. Throws DisconnectedError for a pair with no path and
// BudgetExceeded when the node budget runs out.
SolveResult<EdgeColoring> subset_rc_leq(const Graph& g, const PairSet& pairs, std::size_t k,
                                        const SearchOptions& options = {});
SolveResult<EdgeColoring> subset_src_leq(const Graph& g, const PairSet& pairs, std::size_t k,
                                         const SearchOptions& options = {});

struct ExactResult {
  std::size_t value = 0;
  EdgeColoring witness;
  std::uint64_t nodes_explored = 0;
};

// Least k making g (strongly) rainbow connected, scanning upward from the
// diameter. Requires a connected graph on at least two vertices.
ExactResult rc_exact(const Graph& g, const SearchOptions& options = {});
ExactResult src_exact(const Graph& g, const SearchOptions& options = {});

// Least k with vertex_coloring_leq feasible.
std::size_t chromatic_number(const Graph& g, const SearchOptions& options = {});

// Calls visit(colors) for every restricted-growth coloring of `edge_count`
// edges with at most k colors, in lexicographic order. Stops early when
// visit returns false; returns the number of colorings visited.
template <typename Visit>
std::uint64_t for_each_canonical_coloring(std::size_t edge_count, std::size_t k, Visit&& visit) {
  std::vector<Color> colors(edge_count, 0);
  std::uint64_t visited = 0;
  if (k == 0) return 0;
  // prefix_max[i] = largest color among colors[0..i).
  std::vector<Color> prefix_max(edge_count + 1, 0);
  auto recurse = [&](auto&& self, std::size_t i) -> bool {
    if (i == edge_count) {
      ++visited;
      return visit(static_cast<const std::vector<Color>&>(colors));
    }
    const Color cap = static_cast<Color>(
        std::min<std::size_t>(k - 1, i == 0 ? 0 : static_cast<std::size_t>(prefix_max[i]) + 1));
    for (Color c = 0; c <= cap; ++c) {
      colors[i] = c;
      prefix_max[i + 1] = i == 0 ? c : std::max(prefix_max[i], c);
      if (!self(self, i + 1)) return false;
    }
    return true;
  };
  recurse(recurse, 0);
  return visited;
}

}  // namespace rainbow
