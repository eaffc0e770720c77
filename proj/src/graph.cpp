#include "rainbow/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Distance-pruned depth-first enumeration shared by simple_paths_up_to and
// geodesics. `to_target` holds BFS distances to the target; a branch is cut
// as soon as the target is out of reach within the remaining length.
class PathEnumerator {
 public:
  PathEnumerator(const Graph& g, Vertex target, std::size_t max_len,
                 const std::vector<Distance>& to_target)
      : g_(g), target_(target), max_len_(max_len), to_target_(to_target),
        on_path_(g.vertex_count(), false) {}

  std::vector<Path> run(Vertex source) {
    stack_.push_back(source);
    on_path_[source] = true;
    extend(source);
    return std::move(out_);
  }

 private:
  void extend(Vertex x) {
    if (x == target_) {
      out_.push_back(Path{stack_});
      return;
    }
    const std::size_t used = stack_.size() - 1;
    for (Vertex y : g_.neighbors(x)) {
      if (on_path_[y]) continue;
      const Distance rest = to_target_[y];
      if (rest == kUnreachable || used + 1 + rest > max_len_) continue;
      stack_.push_back(y);
      on_path_[y] = true;
      extend(y);
      on_path_[y] = false;
      stack_.pop_back();
    }
  }

  const Graph& g_;
  Vertex target_;
  std::size_t max_len_;
  const std::vector<Distance>& to_target_;
  std::vector<bool> on_path_;
  std::vector<Vertex> stack_;
  std::vector<Path> out_;
};

}  // namespace

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count), adjacency_edges_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::initializer_list<VertexPair> edges)
    : Graph(vertex_count, std::span<const VertexPair>(edges.begin(), edges.size())) {}

Graph::Graph(std::size_t vertex_count, std::span<const VertexPair> edges)
    : adjacency_(vertex_count), adjacency_edges_(vertex_count) {
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.first >= vertex_count || e.second >= vertex_count) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge " + pair_text(e.first, e.second) + " has an endpoint >= " +
                      std::to_string(vertex_count));
    }
    if (e.first == e.second) {
      throw Error(ErrorCode::SelfLoop, "edge " + pair_text(e.first, e.second));
    }
    edges_.push_back(VertexPair::make(e.first, e.second));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  for (EdgeId id = 0; id < edges_.size(); ++id) {
    adjacency_[edges_[id].first].push_back(edges_[id].second);
    adjacency_[edges_[id].second].push_back(edges_[id].first);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    auto& ids = adjacency_edges_[v];
    ids.reserve(nbrs.size());
    for (Vertex w : nbrs) {
      const auto key = VertexPair::make(v, w);
      ids.push_back(static_cast<EdgeId>(
          std::lower_bound(edges_.begin(), edges_.end(), key) - edges_.begin()));
    }
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(v) + " not in graph with " +
                    std::to_string(vertex_count()) + " vertices");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::span<const EdgeId> Graph::incident_edges(Vertex v) const {
  check_vertex(v);
  return adjacency_edges_[v];
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count() || u == v) return std::nullopt;
  const auto& nbrs = adjacency_[u];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return adjacency_edges_[u][static_cast<std::size_t>(it - nbrs.begin())];
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

PairSet::PairSet(std::initializer_list<VertexPair> pairs)
    : PairSet(std::span<const VertexPair>(pairs.begin(), pairs.size())) {}

PairSet::PairSet(std::span<const VertexPair> pairs) {
  pairs_.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.first == p.second) {
      throw Error(ErrorCode::SelfLoop, "pair " + pair_text(p.first, p.second));
    }
    pairs_.push_back(VertexPair::make(p.first, p.second));
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

PairSet PairSet::all_pairs(std::size_t n) {
  std::vector<VertexPair> pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  return PairSet(pairs);
}

bool PairSet::contains(Vertex u, Vertex v) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), VertexPair::make(u, v));
}

void PairSet::check_range(std::size_t n) const {
  for (const auto& p : pairs_) {
    if (p.second >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "pair " + pair_text(p.first, p.second) + " has an endpoint >= " +
                      std::to_string(n));
    }
  }
}

std::vector<VertexPair> PairSet::complement(std::size_t n) const {
  std::vector<VertexPair> out;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!contains(i, j)) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Distance> distances_from(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<Distance> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] != kUnreachable) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<Distance>> table;
  table.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) table.push_back(distances_from(g, v));
  return table;
}

Distance diameter(const Graph& g) {
  Distance best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Distance d : distances_from(g, v)) {
      if (d == kUnreachable) return kUnreachable;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](Distance d) { return d == kUnreachable; });
}

std::vector<Path> simple_paths_up_to(const Graph& g, Vertex u, Vertex v, std::size_t max_len) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw Error(ErrorCode::InvalidArgument, "path endpoints must differ");
  if (max_len < 1) throw Error(ErrorCode::InvalidArgument, "max_len must be at least 1");
  const auto to_target = distances_from(g, v);
  if (to_target[u] == kUnreachable || to_target[u] > max_len) return {};
  return PathEnumerator(g, v, max_len, to_target).run(u);
}

std::vector<Path> geodesics(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return {Path{{u}}};
  const auto to_target = distances_from(g, v);
  if (to_target[u] == kUnreachable) throw DisconnectedError(u, v);
  // With the budget pinned to dist(u, v), only shortest paths survive pruning.
  return PathEnumerator(g, v, to_target[u], to_target).run(u);
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> side(g.vertex_count(), kUnset);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (side[root] != kUnset) continue;
    side[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == kUnset) {
          side[y] = static_cast<std::uint8_t>(1 - side[x]);
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex x = p.vertices[i];
    if (x >= g.vertex_count() || seen[x]) return false;
    seen[x] = true;
    if (i > 0 && !g.has_edge(p.vertices[i - 1], x)) return false;
  }
  return true;
}

std::vector<EdgeId> path_edges(const Graph& g, const Path& p) {
  if (!is_valid_path(g, p)) {
    throw Error(ErrorCode::PathNotInGraph, "not a simple path of the host graph");
  }
  std::vector<EdgeId> ids;
  ids.reserve(p.length());
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    ids.push_back(*g.edge_id(p.vertices[i - 1], p.vertices[i]));
  }
  return ids;
}

}  // namespace rainbow
