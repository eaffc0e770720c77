#include <algorithm>
#include <string>

#include "rainbow/error.hpp"
#include "rainbow/reductions.hpp"

namespace rainbow {

ReducedInstance rc_reduction(const SubsetInstance& inst) {
  if (inst.k < 2) {
    throw Error(ErrorCode::InvalidOrder,
                "rainbow reduction needs k >= 2, got " + std::to_string(inst.k));
  }
  inst.pairs.check_range(inst.graph.vertex_count());
  ReducedInstance r;
  r.source = inst;
  r.gadget = build_hk(inst.graph.vertex_count(), inst.pairs, inst.k);
  const auto& base = r.gadget.base_vertices;

  std::vector<Edge> edges(r.gadget.graph.edges().begin(), r.gadget.graph.edges().end());
  for (const auto& [i, j] : inst.graph.edges()) {
    const Edge e = VertexPair::make(base[i], base[j]);
    r.base_edges.push_back(e);
    edges.push_back(e);
  }
  std::sort(r.base_edges.begin(), r.base_edges.end());
  r.graph = Graph(r.gadget.graph.vertex_count(), edges);

  std::vector<VertexPair> lifted;
  for (const auto& [i, j] : inst.pairs) lifted.push_back(VertexPair::make(base[i], base[j]));
  r.pairs = PairSet(lifted);
  return r;
}

bool ReducedInstance::is_base_edge(EdgeId e) const {
  return std::binary_search(base_edges.begin(), base_edges.end(), graph.edge(e));
}

Graph ReducedInstance::base_graph() const {
  const auto& base = gadget.base_vertices;
  std::vector<Vertex> source_of(graph.vertex_count(), static_cast<Vertex>(-1));
  for (Vertex i = 0; i < base.size(); ++i) source_of[base[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [x, y] : graph.edges()) {
    if (source_of[x] != static_cast<Vertex>(-1) && source_of[y] != static_cast<Vertex>(-1)) {
      edges.push_back(VertexPair::make(source_of[x], source_of[y]));
    }
  }
  return Graph(base.size(), edges);
}

EdgeColoring combine_colorings(const ReducedInstance& r, const EdgeColoring& base,
                               const EdgeColoring& gadget) {
  const Graph& source = r.source.graph;
  const Graph& h = r.gadget.graph;
  if (base.edge_count() != source.edge_count()) {
    throw Error(ErrorCode::DomainMismatch, "base coloring covers " +
                                               std::to_string(base.edge_count()) +
                                               " edges, the source graph has " +
                                               std::to_string(source.edge_count()));
  }
  if (gadget.edge_count() != h.edge_count()) {
    throw Error(ErrorCode::DomainMismatch, "gadget coloring covers " +
                                               std::to_string(gadget.edge_count()) +
                                               " edges, the gadget has " +
                                               std::to_string(h.edge_count()));
  }
  const std::size_t k = r.source.k;
  if (base.color_count() > k || gadget.color_count() > k) {
    throw Error(ErrorCode::DomainMismatch, "colorings must use at most k = " + std::to_string(k) +
                                               " colors");
  }
  const auto& vertex_of = r.gadget.base_vertices;
  std::vector<Vertex> source_of(r.graph.vertex_count(), static_cast<Vertex>(-1));
  for (Vertex i = 0; i < vertex_of.size(); ++i) source_of[vertex_of[i]] = i;

  std::vector<Color> colors(r.graph.edge_count());
  for (EdgeId e = 0; e < r.graph.edge_count(); ++e) {
    const auto [x, y] = r.graph.edge(e);
    if (auto id = h.edge_id(x, y)) {
      colors[e] = gadget.color(*id);
    } else {
      colors[e] = base.color(*source.edge_id(source_of[x], source_of[y]));
    }
  }
  return EdgeColoring(r.graph, std::move(colors), k);
}

}  // namespace rainbow
