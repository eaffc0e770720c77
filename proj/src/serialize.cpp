#include "rainbow/serialize.hpp"

#include <algorithm>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

Json pairs_json(std::span<const VertexPair> pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back({p.first, p.second});
  return out;
}

Json vertices_json(std::span<const Vertex> vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

Json layer_map(const std::vector<std::string>& labels) {
  Json out = Json::object();
  for (std::size_t v = 0; v < labels.size(); ++v) out[std::to_string(v)] = labels[v];
  return out;
}

std::string_view layer_name(ExtensionLayer l) {
  switch (l) {
    case ExtensionLayer::Star: return "E";
    case ExtensionLayer::Spoke: return "E1";
    case ExtensionLayer::Bipartite: return "E2";
    case ExtensionLayer::Hub: return "E3";
  }
  return "?";
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(0, 0, std::string("gadget lacks \"") + key + "\"");
  return doc[key];
}

}  // namespace

Json star_to_json(const StarInstance& inst) {
  Json out = instance_to_json(inst.graph, &inst.pairs, inst.k);
  out["center"] = inst.center;
  out["leaves"] = vertices_json(inst.leaves);
  std::vector<std::string> labels(inst.graph.vertex_count());
  for (Vertex v : inst.leaves) labels[v] = "v[" + std::to_string(v) + "]";
  labels[inst.center] = "a";
  out["layer"] = layer_map(labels);
  out["below_hardness_threshold"] = inst.below_hardness_threshold;
  out["source"] = instance_to_json(inst.source);
  return out;
}

std::string label(const ExtensionVertex& v) {
  const std::string one = "[" + std::to_string(v.i) + "]";
  const std::string two = "[" + std::to_string(v.i) + "," + std::to_string(v.j) + "]";
  switch (v.role) {
    case ExtensionRole::Center: return "a";
    case ExtensionRole::Leaf: return "v" + one;
    case ExtensionRole::U: return "u" + one;
    case ExtensionRole::W: return "w" + two;
    case ExtensionRole::UPrime: return "u'" + one;
    case ExtensionRole::WPrime: return "w'" + two;
  }
  return "?";
}

Json extension_to_json(const SrcExtension& ext) {
  Json out = instance_to_json(ext.graph, &ext.pairs);
  out["center"] = ext.center;
  out["leaves"] = vertices_json(ext.leaves);
  out["side_one"] = vertices_json(ext.side_one);
  out["side_two"] = vertices_json(ext.side_two);
  std::vector<std::string> labels;
  for (const auto& r : ext.roles) labels.push_back(label(r));
  out["layer"] = layer_map(labels);
  Json layers = Json::array();
  for (auto l : ext.edge_layers) layers.push_back(std::string(layer_name(l)));
  out["edge_layers"] = std::move(layers);
  out["matching"] = pairs_json(ext.matching);
  return out;
}

std::vector<std::string> gadget_labels(const Gadget& g) {
  std::vector<std::string> out;
  out.reserve(g.tags.size());
  for (const auto& t : g.tags) out.push_back(label(t));
  return out;
}

Json reduced_to_json(const ReducedInstance& r) {
  Json out = instance_to_json(r.graph, &r.pairs, r.source.k);
  out["base_vertices"] = vertices_json(r.gadget.base_vertices);
  out["layer"] = layer_map(gadget_labels(r.gadget));
  out["base_edges"] = pairs_json(r.base_edges);
  out["source"] = instance_to_json(r.source.graph, &r.source.pairs, r.source.k);
  out["gadget_coloring"] = coloring_to_json(r.gadget.graph, witness_coloring(r.gadget));
  return out;
}

Gadget gadget_from_json(const Json& doc) {
  const InstanceData data = instance_from_json(doc);
  if (!data.k) throw ParseError(0, 0, "gadget lacks \"k\"");
  Gadget g;
  g.order = *data.k;
  for (const auto& v : require(doc, "base_vertices")) {
    if (!v.is_number_unsigned()) throw ParseError(0, 0, "\"base_vertices\" must hold vertices");
    g.base_vertices.push_back(v.get<Vertex>());
  }
  g.n = g.base_vertices.size();
  for (Vertex v : g.base_vertices) data.graph.check_vertex(v);

  std::vector<Edge> base_edges;
  if (doc.contains("base_edges")) {
    for (const auto& e : doc["base_edges"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError(0, 0, "\"base_edges\" entries must be [u, v]");
      base_edges.push_back(VertexPair::make(e[0].get<Vertex>(), e[1].get<Vertex>()));
    }
  }
  std::sort(base_edges.begin(), base_edges.end());
  std::vector<Edge> kept;
  for (const auto& e : data.graph.edges()) {
    if (!std::binary_search(base_edges.begin(), base_edges.end(), e)) kept.push_back(e);
  }
  g.graph = Graph(data.graph.vertex_count(), kept);

  g.lifted_pairs = data.pairs.value_or(PairSet{});
  std::vector<std::optional<Vertex>> source_of(data.graph.vertex_count());
  for (Vertex i = 0; i < g.n; ++i) source_of[g.base_vertices[i]] = i;
  std::vector<VertexPair> source_pairs;
  for (const auto& [x, y] : g.lifted_pairs) {
    if (!source_of[x] || !source_of[y]) {
      throw ParseError(0, 0, "pair (" + std::to_string(x) + "," + std::to_string(y) +
                                 ") is not a pair of base vertices");
    }
    source_pairs.push_back(VertexPair::make(*source_of[x], *source_of[y]));
  }
  g.source_pairs = PairSet(source_pairs);
  return g;
}

ReducedInstance reduced_from_json(const Json& doc) {
  ReducedInstance r;
  r.gadget = gadget_from_json(doc);
  r.graph = instance_from_json(doc).graph;
  r.pairs = r.gadget.lifted_pairs;
  std::vector<std::optional<Vertex>> source_of(r.graph.vertex_count());
  for (Vertex i = 0; i < r.gadget.n; ++i) source_of[r.gadget.base_vertices[i]] = i;
  std::vector<Edge> source_edges;
  if (doc.contains("base_edges")) {
    for (const auto& e : doc["base_edges"]) {
      const Edge edge = VertexPair::make(e[0].get<Vertex>(), e[1].get<Vertex>());
      if (!source_of[edge.first] || !source_of[edge.second]) {
        throw ParseError(0, 0, "base edge (" + std::to_string(edge.first) + "," +
                                   std::to_string(edge.second) + ") leaves the base vertices");
      }
      if (!r.graph.has_edge(edge.first, edge.second)) {
        throw ParseError(0, 0, "base edge (" + std::to_string(edge.first) + "," +
                                   std::to_string(edge.second) + ") is not in \"edges\"");
      }
      r.base_edges.push_back(edge);
      source_edges.push_back(VertexPair::make(*source_of[edge.first], *source_of[edge.second]));
    }
  }
  std::sort(r.base_edges.begin(), r.base_edges.end());
  r.source = SubsetInstance{Graph(r.gadget.n, source_edges), r.gadget.source_pairs, r.gadget.order};
  return r;
}

}  // namespace rainbow
