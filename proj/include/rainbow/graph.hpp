#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Distance = std::uint32_t;

// Distance reported for vertices that cannot be reached from the source.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// Unordered vertex pair. Use make() to obtain the canonical form
// (smaller index first); comparison is lexicographic on the canonical form.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  static constexpr VertexPair make(Vertex a, Vertex b) noexcept {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
  }

  friend constexpr auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

using Edge = VertexPair;

// Undirected simple graph over the dense vertex range [0, vertex_count).
// Immutable once built. Edges are stored canonically and sorted; an edge's
// EdgeId is its position in edges().
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  Graph(std::size_t vertex_count, std::span<const VertexPair> edges);
  Graph(std::size_t vertex_count, std::initializer_list<VertexPair> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const;
  // Parallel to neighbors(v): the id of the edge to each neighbor.
  std::span<const EdgeId> incident_edges(Vertex v) const;

  bool has_edge(Vertex u, Vertex v) const;
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> adjacency_edges_;
};

// A simple path, given by its vertex sequence.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }

  friend auto operator<=>(const Path&, const Path&) = default;
};

// Set of unordered vertex pairs, kept canonical and sorted.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::span<const VertexPair> pairs);
  PairSet(std::initializer_list<VertexPair> pairs);

  // Every unordered pair of distinct vertices in [0, n).
  static PairSet all_pairs(std::size_t n);

  bool contains(Vertex u, Vertex v) const;
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

  // Throws IndexOutOfRange unless every endpoint is < n.
  void check_range(std::size_t n) const;

  // Unordered pairs over [0, n) that are not in this set, in canonical order.
  std::vector<VertexPair> complement(std::size_t n) const;

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::vector<VertexPair> pairs_;
};

// Breadth-first distances; kUnreachable for other components.
std::vector<Distance> distances_from(const Graph& g, Vertex source);

// Row i holds distances_from(g, i).
std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g);

// Largest finite pairwise distance, kUnreachable if g is disconnected and 0
// for graphs with fewer than two vertices.
Distance diameter(const Graph& g);

bool is_connected(const Graph& g);

// All simple u-v paths with at most max_len edges, in lexicographic order of
// their vertex sequences.
std::vector<Path> simple_paths_up_to(const Graph& g, Vertex u, Vertex v,
                                     std::size_t max_len);

// All shortest u-v paths in lexicographic order. Throws DisconnectedError.
std::vector<Path> geodesics(const Graph& g, Vertex u, Vertex v);

// Side (0 or 1) of every vertex in a proper 2-coloring, or nullopt if g has
// an odd cycle. Each component's smallest vertex gets side 0.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);

bool is_valid_path(const Graph& g, const Path& p);

// Edge ids along p. Throws PathNotInGraph if p is not a simple path of g.
std::vector<EdgeId> path_edges(const Graph& g, const Path& p);

}  // namespace rainbow
