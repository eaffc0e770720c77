#pragma once

// Independent reference implementations used only by the tests. They are
// deliberately naive: no pruning, no symmetry breaking, no shared code with
// the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace oracle {

using rainbow::Color;
using rainbow::Graph;
using rainbow::Vertex;
using rainbow::VertexPair;

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  std::vector<std::vector<std::uint32_t>> out(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = d[i][j] >= kInf ? kInf : static_cast<std::uint32_t>(d[i][j]);
  return out;
}

// Every vertex sequence of length 2..max_len+1 starting at u and ending at
// v, filtered down to the simple paths of g. Exponential on purpose.
inline std::vector<std::vector<Vertex>> brute_simple_paths(const Graph& g, Vertex u, Vertex v,
                                                           std::size_t max_len) {
  const auto adj = adjacency_matrix(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> out;
  for (std::size_t len = 1; len <= max_len && len < n; ++len) {
    // Interior has len - 1 vertices, each any of n.
    const std::size_t interior = len - 1;
    std::vector<Vertex> seq(interior, 0);
    while (true) {
      std::vector<Vertex> path{u};
      path.insert(path.end(), seq.begin(), seq.end());
      path.push_back(v);
      std::set<Vertex> distinct(path.begin(), path.end());
      bool ok = distinct.size() == path.size();
      for (std::size_t i = 0; ok && i + 1 < path.size(); ++i) ok = adj[path[i]][path[i + 1]];
      if (ok) out.push_back(path);
      std::size_t i = 0;
      while (i < interior && ++seq[i] == n) seq[i++] = 0;
      if (i == interior) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool rainbow(const Graph& g, const std::vector<Color>& colors,
                    const std::vector<Vertex>& path) {
  std::set<Color> seen;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!seen.insert(colors[*g.edge_id(path[i], path[i + 1])]).second) return false;
  }
  return true;
}

// Per-pair candidate paths, precomputed once per graph so that many
// colorings can be tested cheaply.
struct PathTable {
  std::vector<VertexPair> pairs;
  std::vector<std::vector<std::vector<Vertex>>> paths;  // parallel to pairs

  PathTable(const Graph& g, const std::vector<VertexPair>& ps, std::size_t max_len,
            bool geodesic_only) {
    const auto d = floyd_warshall(g);
    for (const auto& p : ps) {
      auto all = brute_simple_paths(g, p.first, p.second, max_len);
      if (geodesic_only) {
        std::erase_if(all, [&](const auto& path) { return path.size() - 1 != d[p.first][p.second]; });
      }
      pairs.push_back(p);
      paths.push_back(std::move(all));
    }
  }

  bool satisfied(const Graph& g, const std::vector<Color>& colors) const {
    for (const auto& candidates : paths) {
      bool any = false;
      for (const auto& path : candidates) {
        if (rainbow(g, colors, path)) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  }
};

// Calls visit for every one of the k^m colorings; stops when it returns true.
inline bool any_coloring(std::size_t m, std::size_t k,
                         const std::function<bool(const std::vector<Color>&)>& visit) {
  std::vector<Color> c(m, 0);
  while (true) {
    if (visit(c)) return true;
    std::size_t i = 0;
    while (i < m && ++c[i] == k) c[i++] = 0;
    if (i == m) return false;
  }
}

inline bool subset_feasible(const Graph& g, const std::vector<VertexPair>& pairs, std::size_t k,
                            bool geodesic) {
  const PathTable table(g, pairs, std::max<std::size_t>(g.vertex_count(), 1), geodesic);
  return any_coloring(g.edge_count(), k,
                      [&](const std::vector<Color>& c) { return table.satisfied(g, c); });
}

inline std::vector<VertexPair> all_pairs(std::size_t n) {
  std::vector<VertexPair> out;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

inline bool k_colorable(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  if (k == 0) return false;
  std::vector<Color> c(n, 0);
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : g.edges()) proper = proper && c[u] != c[v];
    if (proper) return true;
    std::size_t i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return false;
  }
}

// Graph on n vertices whose edges are the set bits of mask over the pairs
// of all_pairs(n).
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  const auto ps = all_pairs(n);
  std::vector<VertexPair> edges;
  for (std::size_t b = 0; b < ps.size(); ++b)
    if (mask >> b & 1) edges.push_back(ps[b]);
  return Graph(n, edges);
}

inline std::vector<VertexPair> pairs_from_mask(std::size_t n, std::uint64_t mask) {
  const auto ps = all_pairs(n);
  std::vector<VertexPair> out;
  for (std::size_t b = 0; b < ps.size(); ++b)
    if (mask >> b & 1) out.push_back(ps[b]);
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<VertexPair> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph(n, edges);
}

// Sum of Stirling numbers of the second kind S(m, j) for j = 1..k: the
// number of restricted-growth strings of length m with at most k values.
inline std::uint64_t canonical_count(std::size_t m, std::size_t k) {
  if (m == 0) return 1;
  std::vector<std::vector<std::uint64_t>> s(m + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= k; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  std::uint64_t total = 0;
  for (std::size_t j = 1; j <= k; ++j) total += s[m][j];
  return total;
}

// Plain DFS over simple paths of at most max_len edges, carrying the colors
// seen so far. No distance pruning and no memoization.
inline bool rainbow_reachable(const Graph& g, const std::vector<Color>& colors, Vertex u,
                              Vertex v, std::size_t max_len) {
  std::vector<bool> on_path(g.vertex_count(), false);
  std::set<Color> used;
  std::function<bool(Vertex, std::size_t)> go = [&](Vertex x, std::size_t depth) {
    if (x == v) return true;
    if (depth == max_len) return false;
    on_path[x] = true;
    for (Vertex y : g.neighbors(x)) {
      const Color c = colors[*g.edge_id(x, y)];
      if (on_path[y] || used.count(c)) continue;
      used.insert(c);
      const bool found = go(y, depth + 1);
      used.erase(c);
      if (found) {
        on_path[x] = false;
        return true;
      }
    }
    on_path[x] = false;
    return false;
  };
  return go(u, 0);
}

inline Graph complete(std::size_t n) { return graph_from_mask(n, (1ULL << (n * (n - 1) / 2)) - 1); }

inline Graph cycle(std::size_t n) {
  std::vector<VertexPair> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back(VertexPair::make(i, static_cast<Vertex>((i + 1) % n)));
  return Graph(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<VertexPair> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

inline Graph star(std::size_t leaves) {
  std::vector<VertexPair> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

}  // namespace oracle
