#include <algorithm>
#include <string>

#include "rainbow/error.hpp"
#include "rainbow/reductions.hpp"

namespace rainbow {

StarInstance star_reduction(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "star reduction needs at least one vertex");
  StarInstance inst;
  inst.source = g;
  inst.center = static_cast<Vertex>(n);
  std::vector<Edge> spokes;
  for (Vertex v = 0; v < n; ++v) {
    inst.leaves.push_back(v);
    spokes.push_back({v, inst.center});
  }
  inst.graph = Graph(n + 1, spokes);
  inst.pairs = PairSet(g.edges());
  inst.k = k;
  inst.below_hardness_threshold = k < 3;
  return inst;
}

EdgeColoring lift_vertex_coloring(const StarInstance& inst, const VertexColoring& vc) {
  const Graph& src = inst.source;
  if (vc.size() != src.vertex_count()) {
    throw Error(ErrorCode::ImproperColoring, "vertex coloring has " + std::to_string(vc.size()) +
                                                 " entries for " +
                                                 std::to_string(src.vertex_count()) + " vertices");
  }
  for (Vertex v = 0; v < vc.size(); ++v) {
    if (vc[v] >= inst.k) {
      throw Error(ErrorCode::ImproperColoring,
                  "vertex " + std::to_string(v) + " uses color " + std::to_string(vc[v]) +
                      " with k = " + std::to_string(inst.k));
    }
  }
  for (const auto& e : src.edges()) {
    if (vc[e.first] == vc[e.second]) {
      throw Error(ErrorCode::ImproperColoring, "edge (" + std::to_string(e.first) + "," +
                                                   std::to_string(e.second) +
                                                   ") is monochromatic");
    }
  }
  std::vector<Color> colors(inst.graph.edge_count());
  for (Vertex v = 0; v < vc.size(); ++v) {
    colors[*inst.graph.edge_id(inst.center, inst.leaves[v])] = vc[v];
  }
  return EdgeColoring(inst.graph, std::move(colors), inst.k);
}

VertexColoring project_star_coloring(const StarInstance& inst, const EdgeColoring& c) {
  if (!is_subset_rainbow_connected(inst.graph, c, inst.pairs)) {
    throw Error(ErrorCode::NotSubsetRainbowConnected,
                "coloring leaves some leaf pair without a rainbow path");
  }
  VertexColoring vc(inst.leaves.size());
  for (Vertex v = 0; v < inst.leaves.size(); ++v) {
    vc[v] = c.color(inst.graph, inst.center, inst.leaves[v]);
  }
  return vc;
}

std::vector<std::uint8_t> SrcExtension::expected_sides() const {
  std::vector<std::uint8_t> side(graph.vertex_count(), 1);
  side[center] = 0;
  for (Vertex x : side_one) side[x] = 0;
  return side;
}

namespace {

Vertex find_center(const Graph& star) {
  const std::size_t n = star.vertex_count();
  if (n == 0) throw Error(ErrorCode::NotAStar, "empty graph");
  if (star.edge_count() != n - 1) {
    throw Error(ErrorCode::NotAStar, "a star on " + std::to_string(n) + " vertices has " +
                                         std::to_string(n - 1) + " edges, got " +
                                         std::to_string(star.edge_count()));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (star.neighbors(v).size() == n - 1) return v;
  }
  throw Error(ErrorCode::NotAStar, "no vertex is adjacent to all others");
}

SrcExtension extend(const Graph& star, const PairSet& pairs, Vertex center) {
  pairs.check_range(star.vertex_count());
  for (const auto& p : pairs) {
    if (p.first == center || p.second == center) {
      throw Error(ErrorCode::PairNotLeafPair, "pair (" + std::to_string(p.first) + "," +
                                                  std::to_string(p.second) + ") uses the center");
    }
  }
  SrcExtension ext;
  ext.star = star;
  ext.pairs = pairs;
  ext.center = center;
  for (Vertex v = 0; v < star.vertex_count(); ++v) {
    if (v != center) ext.leaves.push_back(v);
  }

  ext.roles.assign(star.vertex_count(), ExtensionVertex{ExtensionRole::Leaf, 0, 0});
  for (Vertex v : ext.leaves) ext.roles[v] = {ExtensionRole::Leaf, v, 0};
  ext.roles[center] = {ExtensionRole::Center, center, 0};

  std::vector<VertexPair> non_pairs;
  for (std::size_t a = 0; a < ext.leaves.size(); ++a) {
    for (std::size_t b = a + 1; b < ext.leaves.size(); ++b) {
      if (!pairs.contains(ext.leaves[a], ext.leaves[b])) {
        non_pairs.push_back({ext.leaves[a], ext.leaves[b]});
      }
    }
  }
  const std::size_t side = ext.leaves.size() + non_pairs.size();
  const Vertex first_one = static_cast<Vertex>(star.vertex_count());
  const Vertex first_two = static_cast<Vertex>(first_one + side);
  for (Vertex t = 0; t < side; ++t) {
    ext.side_one.push_back(first_one + t);
    ext.side_two.push_back(first_two + t);
  }
  ext.roles.resize(first_two + side);

  std::vector<Edge> edges(star.edges().begin(), star.edges().end());
  for (std::size_t t = 0; t < ext.leaves.size(); ++t) {
    const Vertex leaf = ext.leaves[t];
    ext.roles[ext.side_one[t]] = {ExtensionRole::U, leaf, 0};
    ext.roles[ext.side_two[t]] = {ExtensionRole::UPrime, leaf, 0};
    edges.push_back({leaf, ext.side_one[t]});
  }
  for (std::size_t q = 0; q < non_pairs.size(); ++q) {
    const std::size_t t = ext.leaves.size() + q;
    const auto [vi, vj] = non_pairs[q];
    ext.roles[ext.side_one[t]] = {ExtensionRole::W, vi, vj};
    ext.roles[ext.side_two[t]] = {ExtensionRole::WPrime, vi, vj};
    edges.push_back({vi, ext.side_one[t]});
    edges.push_back({vj, ext.side_one[t]});
  }
  for (Vertex x : ext.side_one) {
    for (Vertex y : ext.side_two) edges.push_back({x, y});
  }
  for (Vertex y : ext.side_two) edges.push_back({center, y});
  for (std::size_t t = 0; t < side; ++t) ext.matching.push_back({ext.side_one[t], ext.side_two[t]});

  ext.graph = Graph(ext.roles.size(), edges);
  ext.edge_layers.resize(ext.graph.edge_count());
  for (EdgeId e = 0; e < ext.graph.edge_count(); ++e) {
    const auto [x, y] = ext.graph.edge(e);  // x < y
    if (y < first_one) {
      ext.edge_layers[e] = ExtensionLayer::Star;
    } else if (x < first_one) {
      ext.edge_layers[e] = x == center ? ExtensionLayer::Hub : ExtensionLayer::Spoke;
    } else {
      ext.edge_layers[e] = ExtensionLayer::Bipartite;
    }
  }
  return ext;
}

}  // namespace

SrcExtension src_extension(const Graph& star, const PairSet& pairs) {
  return extend(star, pairs, find_center(star));
}

SrcExtension src_extension(const StarInstance& inst) {
  return extend(inst.graph, inst.pairs, inst.center);
}

EdgeColoring src_witness_coloring(const SrcExtension& ext, const EdgeColoring& base) {
  base.check_host(ext.star);
  if (base.color_count() < 3) {
    throw Error(ErrorCode::TooFewColors,
                "the extension coloring needs 3 colors, base has " +
                    std::to_string(base.color_count()));
  }
  constexpr Color c1 = 0, c2 = 1, c3 = 2;
  const Graph& g = ext.graph;
  std::vector<Color> colors(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [x, y] = g.edge(e);
    switch (ext.edge_layers[e]) {
      case ExtensionLayer::Star:
        colors[e] = base.color(ext.star, x, y);
        break;
      case ExtensionLayer::Spoke: {
        const auto& r = ext.roles[y];
        if (r.role == ExtensionRole::U) {
          colors[e] = c3;
        } else {
          colors[e] = x == r.i ? c1 : c2;  // r.i < r.j
        }
        break;
      }
      case ExtensionLayer::Bipartite: {
        const bool matched = y - x == ext.side_one.size();
        colors[e] = matched ? c1 : c2;
        break;
      }
      case ExtensionLayer::Hub:
        colors[e] = c3;
        break;
    }
  }
  return EdgeColoring(g, std::move(colors), base.color_count());
}

}  // namespace rainbow
