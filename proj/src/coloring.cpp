#include "rainbow/coloring.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

using ColorSet = std::uint64_t;

struct State {
  Vertex vertex;
  ColorSet used;
  friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.used * 0x9E3779B97F4A7C15ULL ^ s.vertex);
  }
};

// Depth-first search for a rainbow walk from `from` to the target whose
// length never exceeds the number of colors still unused. Any rainbow walk
// contains a rainbow path (erase its loops), so walks may revisit vertices
// and the outcome at a state depends only on (vertex, used colors); failed
// states are memoized. In geodesic mode each step must move one closer to
// the target, so the walk is a shortest path.
class RainbowSearch {
 public:
  RainbowSearch(const Graph& g, const EdgeColoring& c, Vertex target,
                const std::vector<Distance>& to_target, PathKind kind)
      : g_(g), c_(c), target_(target), to_target_(to_target), kind_(kind) {}

  std::optional<Path> run(Vertex from) {
    if (to_target_[from] == kUnreachable) return std::nullopt;
    walk_.assign(1, from);
    if (!extend(from, 0)) return std::nullopt;
    return erase_loops(walk_);
  }

 private:
  bool extend(Vertex x, ColorSet used) {
    if (x == target_) return true;
    const std::size_t left = c_.color_count() - static_cast<std::size_t>(std::popcount(used));
    if (to_target_[x] > left) return false;
    if (failed_.contains({x, used})) return false;
    const auto nbrs = g_.neighbors(x);
    const auto ids = g_.incident_edges(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex y = nbrs[i];
      const Distance rest = to_target_[y];
      if (kind_ == PathKind::Geodesic) {
        if (rest + 1 != to_target_[x]) continue;
      } else if (rest == kUnreachable || rest + 1 > left) {
        continue;
      }
      const ColorSet bit = ColorSet{1} << c_.color(ids[i]);
      if (used & bit) continue;
      walk_.push_back(y);
      if (extend(y, used | bit)) return true;
      walk_.pop_back();
    }
    failed_.insert({x, used});
    return false;
  }

  static Path erase_loops(const std::vector<Vertex>& walk) {
    Path p;
    for (Vertex x : walk) {
      auto it = std::find(p.vertices.begin(), p.vertices.end(), x);
      if (it != p.vertices.end()) {
        p.vertices.erase(it + 1, p.vertices.end());
      } else {
        p.vertices.push_back(x);
      }
    }
    return p;
  }

  const Graph& g_;
  const EdgeColoring& c_;
  Vertex target_;
  const std::vector<Distance>& to_target_;
  PathKind kind_;
  std::vector<Vertex> walk_;
  std::unordered_set<State, StateHash> failed_;
};

void check_pair(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw Error(ErrorCode::InvalidArgument, "pair endpoints must differ");
}

bool connected_for(const Graph& g, const EdgeColoring& c, std::span<const VertexPair> pairs,
                   PathKind kind) {
  c.check_host(g);
  RainbowChecker checker(g, c);
  for (const auto& p : pairs) {
    if (checker.distance(p.first, p.second) == kUnreachable) {
      throw DisconnectedError(p.first, p.second);
    }
  }
  return !checker.first_failure(pairs, kind).has_value();
}

}  // namespace

EdgeColoring::EdgeColoring(const Graph& host, std::vector<Color> colors, std::size_t color_count)
    : colors_(std::move(colors)), color_count_(color_count) {
  if (color_count_ < 1 || color_count_ > kMaxColors) {
    throw Error(ErrorCode::InvalidArgument,
                "color count must be in [1, " + std::to_string(kMaxColors) + "], got " +
                    std::to_string(color_count_));
  }
  check_host(host);
  for (EdgeId e = 0; e < colors_.size(); ++e) {
    if (colors_[e] >= color_count_) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge " + std::to_string(e) + " has color " + std::to_string(colors_[e]) +
                      " outside [0, " + std::to_string(color_count_) + ")");
    }
  }
}

EdgeColoring EdgeColoring::uniform(const Graph& host, Color color, std::size_t color_count) {
  return EdgeColoring(host, std::vector<Color>(host.edge_count(), color), color_count);
}

Color EdgeColoring::color(const Graph& host, Vertex u, Vertex v) const {
  check_host(host);
  const auto id = host.edge_id(u, v);
  if (!id) {
    throw Error(ErrorCode::PathNotInGraph,
                "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return colors_[*id];
}

std::size_t EdgeColoring::used_color_count() const {
  ColorSet seen = 0;
  for (Color c : colors_) seen |= ColorSet{1} << c;
  return static_cast<std::size_t>(std::popcount(seen));
}

void EdgeColoring::check_host(const Graph& host) const {
  if (host.edge_count() != colors_.size()) {
    throw Error(ErrorCode::DomainMismatch,
                "coloring covers " + std::to_string(colors_.size()) + " edges, host has " +
                    std::to_string(host.edge_count()));
  }
}

bool is_rainbow_path(const Graph& g, const EdgeColoring& c, const Path& p) {
  c.check_host(g);
  ColorSet seen = 0;
  for (EdgeId e : path_edges(g, p)) {
    const ColorSet bit = ColorSet{1} << c.color(e);
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

std::optional<Path> find_rainbow_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  check_pair(g, u, v);
  c.check_host(g);
  const auto to_target = distances_from(g, v);
  return RainbowSearch(g, c, v, to_target, PathKind::Any).run(u);
}

bool exists_rainbow_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  return find_rainbow_path(g, c, u, v).has_value();
}

std::optional<Path> find_rainbow_geodesic(const Graph& g, const EdgeColoring& c, Vertex u,
                                          Vertex v) {
  check_pair(g, u, v);
  c.check_host(g);
  const auto to_target = distances_from(g, v);
  if (to_target[u] == kUnreachable) throw DisconnectedError(u, v);
  return RainbowSearch(g, c, v, to_target, PathKind::Geodesic).run(u);
}

bool exists_geodesic_rainbow_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  return find_rainbow_geodesic(g, c, u, v).has_value();
}

RainbowChecker::RainbowChecker(const Graph& g, const EdgeColoring& c)
    : graph_(g), coloring_(c), distances_(all_pairs_distances(g)) {
  c.check_host(g);
}

std::optional<Path> RainbowChecker::find(Vertex u, Vertex v, PathKind kind) const {
  check_pair(graph_, u, v);
  return RainbowSearch(graph_, coloring_, v, distances_[v], kind).run(u);
}

std::optional<VertexPair> RainbowChecker::first_failure(std::span<const VertexPair> pairs,
                                                        PathKind kind) const {
  for (const auto& p : pairs) {
    if (!find(p.first, p.second, kind)) return p;
  }
  return std::nullopt;
}

bool is_rainbow_connected(const Graph& g, const EdgeColoring& c) {
  return connected_for(g, c, PairSet::all_pairs(g.vertex_count()).pairs(), PathKind::Any);
}

bool is_strong_rainbow_connected(const Graph& g, const EdgeColoring& c) {
  return connected_for(g, c, PairSet::all_pairs(g.vertex_count()).pairs(), PathKind::Geodesic);
}

bool is_subset_rainbow_connected(const Graph& g, const EdgeColoring& c, const PairSet& pairs) {
  pairs.check_range(g.vertex_count());
  return connected_for(g, c, pairs.pairs(), PathKind::Any);
}

bool is_subset_strong_rainbow_connected(const Graph& g, const EdgeColoring& c,
                                        const PairSet& pairs) {
  pairs.check_range(g.vertex_count());
  return connected_for(g, c, pairs.pairs(), PathKind::Geodesic);
}

}  // namespace rainbow
