#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using Color = std::uint32_t;

// Used-color sets are 64-bit masks, which bounds the palette size.
inline constexpr std::size_t kMaxColors = 64;

// Total assignment of a color in [0, k) to every edge of a host graph,
// indexed by the host's EdgeId. Colors c_1..c_k map to indices 0..k-1.
// The coloring does not keep a reference to its host; functions taking both
// check that the edge counts agree and throw DomainMismatch otherwise.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(const Graph& host, std::vector<Color> colors, std::size_t color_count);

  static EdgeColoring uniform(const Graph& host, Color color, std::size_t color_count);

  std::size_t color_count() const noexcept { return color_count_; }
  std::size_t edge_count() const noexcept { return colors_.size(); }
  std::span<const Color> colors() const noexcept { return colors_; }
  Color color(EdgeId e) const { return colors_.at(e); }
  // Throws PathNotInGraph if {u, v} is not an edge of host.
  Color color(const Graph& host, Vertex u, Vertex v) const;

  // Number of distinct colors actually used.
  std::size_t used_color_count() const;

  void check_host(const Graph& host) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
  std::size_t color_count_ = 0;
};

enum class PathKind { Any, Geodesic };

bool is_rainbow_path(const Graph& g, const EdgeColoring& c, const Path& p);

// A rainbow u-v path (simple, at most k edges), or nullopt.
std::optional<Path> find_rainbow_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);
bool exists_rainbow_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);

// A rainbow shortest u-v path, or nullopt. Throws DisconnectedError.
std::optional<Path> find_rainbow_geodesic(const Graph& g, const EdgeColoring& c, Vertex u,
                                          Vertex v);
bool exists_geodesic_rainbow_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v);

// Batch queries over one coloring. All-pairs distances are computed once in
// the constructor; every query afterwards is const.
class RainbowChecker {
 public:
  RainbowChecker(const Graph& g, const EdgeColoring& c);

  // nullopt when no suitable path exists, including when u and v are
  // disconnected.
  std::optional<Path> find(Vertex u, Vertex v, PathKind kind) const;

  Distance distance(Vertex u, Vertex v) const { return distances_.at(v).at(u); }

  // First pair (in the given order) without a suitable path.
  std::optional<VertexPair> first_failure(std::span<const VertexPair> pairs, PathKind kind) const;

 private:
  const Graph& graph_;
  const EdgeColoring& coloring_;
  std::vector<std::vector<Distance>> distances_;
};

// These throw DisconnectedError naming the first pair that has no path at
// all.
bool is_rainbow_connected(const Graph& g, const EdgeColoring& c);
bool is_strong_rainbow_connected(const Graph& g, const EdgeColoring& c);
bool is_subset_rainbow_connected(const Graph& g, const EdgeColoring& c, const PairSet& pairs);
bool is_subset_strong_rainbow_connected(const Graph& g, const EdgeColoring& c,
                                        const PairSet& pairs);

}  // namespace rainbow
