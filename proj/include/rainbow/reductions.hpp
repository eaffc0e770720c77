#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

// Graph, pair set and palette size of a subset (strong) rainbow
// connectivity question.
struct SubsetInstance {
  Graph graph;
  PairSet pairs;
  std::size_t k = 1;
};

// ---------------------------------------------------------------------------
// Star reduction from vertex coloring.
// ---------------------------------------------------------------------------

// Star with one leaf per source vertex plus a center. Leaf i sits at index i
// and stands for source vertex i; the center is the last vertex. Every
// source edge becomes a leaf pair.
struct StarInstance {
  Graph source;
  Graph graph;
  PairSet pairs;
  Vertex center = 0;
  std::vector<Vertex> leaves;
  std::size_t k = 0;
  // The equivalence with vertex coloring is only a hardness statement for
  // k >= 3; smaller k are still constructed.
  bool below_hardness_threshold = false;

  SubsetInstance as_subset() const { return {graph, pairs, k}; }
};

StarInstance star_reduction(const Graph& g, std::size_t k);

// Colors edge (center, leaf v) with vc[v]. Throws ImproperColoring unless vc
// is a proper coloring of the source with colors below inst.k.
EdgeColoring lift_vertex_coloring(const StarInstance& inst, const VertexColoring& vc);

// Reads the color of edge (center, leaf v) back onto v. Throws
// NotSubsetRainbowConnected if c does not rainbow-connect the pairs.
VertexColoring project_star_coloring(const StarInstance& inst, const EdgeColoring& c);

// ---------------------------------------------------------------------------
// Extension of a star instance to a graph whose strong rainbow connectivity
// encodes the subset question.
// ---------------------------------------------------------------------------

enum class ExtensionRole : std::uint8_t { Center, Leaf, U, W, UPrime, WPrime };
enum class ExtensionLayer : std::uint8_t { Star, Spoke, Bipartite, Hub };

struct ExtensionVertex {
  ExtensionRole role = ExtensionRole::Leaf;
  // Star vertex ids: the leaf for U/UPrime/Leaf, the leaf pair for W/WPrime.
  Vertex i = 0;
  Vertex j = 0;
};

// Star vertices keep their ids. The first side block follows (u per leaf in
// leaf order, then w per non-pair of leaves in canonical order) and the
// second side block repeats it with primed twins: side_two[t] is the twin of
// side_one[t].
struct SrcExtension {
  Graph star;
  Graph graph;
  PairSet pairs;
  Vertex center = 0;
  std::vector<Vertex> leaves;
  std::vector<Vertex> side_one;
  std::vector<Vertex> side_two;
  std::vector<ExtensionVertex> roles;
  std::vector<ExtensionLayer> edge_layers;  // indexed by EdgeId of graph
  std::vector<VertexPair> matching;         // (side_one[t], side_two[t])

  // Sides of the bipartition: {center} + side_one and leaves + side_two.
  std::vector<std::uint8_t> expected_sides() const;
};

// Throws NotAStar if `star` is not a star and PairNotLeafPair if a pair
// touches the center.
SrcExtension src_extension(const Graph& star, const PairSet& pairs);
SrcExtension src_extension(const StarInstance& inst);

// Extends a star coloring that strongly rainbow-connects the pairs to the
// whole extension. Throws TooFewColors when base has fewer than 3 colors.
EdgeColoring src_witness_coloring(const SrcExtension& ext, const EdgeColoring& base);

// ---------------------------------------------------------------------------
// Gadgets H_l.
// ---------------------------------------------------------------------------

enum class GadgetRole : std::uint8_t { Base, U, W, A, B, UPrime, APrime, BPrime, Copy };

struct GadgetVertex {
  GadgetRole role = GadgetRole::Base;
  // Source vertex index (Base, U, UPrime, Copy) or source pair (W, A, B and
  // primes, with i < j).
  Vertex i = 0;
  Vertex j = 0;
  // Copy number 1..3 and the order of the gadget whose base vertex was split.
  std::uint8_t copy = 0;
  std::uint32_t order = 0;

  friend bool operator==(const GadgetVertex&, const GadgetVertex&) = default;
};

std::string label(const GadgetVertex& v);

// Gadget of order l over n source vertices. Base vertices are 0..n-1 and
// carry source vertex i at index i.
//
// Layout: order 2 puts u_0..u_{n-1} and then w per non-pair after the base
// block. Order 3 puts u_0..u_{n-1}, then a and b per non-pair, then the
// primed twins in the same order. Order l >= 4 places copy c (1..3) of inner
// base vertex i at n + 3i + c - 1 and inner non-base vertex x at x + 3n.
struct Gadget {
  Graph graph;
  std::size_t order = 0;
  std::size_t n = 0;
  std::vector<Vertex> base_vertices;
  PairSet source_pairs;
  PairSet lifted_pairs;
  std::vector<GadgetVertex> tags;
  // For order >= 4: index in `inner` of every non-base vertex.
  std::vector<std::optional<Vertex>> previous;
  std::shared_ptr<const Gadget> inner;
};

Gadget build_h2(std::size_t n, const PairSet& pairs);
Gadget build_h3(std::size_t n, const PairSet& pairs);

// Each base vertex of g becomes a triangle of copies, every edge at a base
// vertex is repeated for each copy and all other edges are kept. Copy c of
// base vertex i sits at 3i + c - 1, other vertices x at x + 2n.
struct SplitGadget {
  Graph graph;
  std::size_t n = 0;
  std::vector<GadgetVertex> tags;
  std::vector<Vertex> previous;
};

SplitGadget split_base(const Gadget& g);

// Throws InvalidOrder for order < 2.
Gadget build_hk(std::size_t n, const PairSet& pairs, std::size_t order);

// Edge coloring with `order` colors connecting every pair outside
// lifted_pairs by a rainbow path. Throws MissingLayerTags.
EdgeColoring witness_coloring(const Gadget& g);

// ---------------------------------------------------------------------------
// Rainbow connectivity instance built from a subset instance.
// ---------------------------------------------------------------------------

// G' = H_k plus a copy of the source edges on the base vertices.
struct ReducedInstance {
  SubsetInstance source;
  Gadget gadget;
  Graph graph;
  std::vector<Edge> base_edges;  // in G' ids, sorted
  PairSet pairs;                 // lifted pairs P_k

  bool is_base_edge(EdgeId e) const;
  // Induced subgraph on the base vertices, relabeled to source ids.
  Graph base_graph() const;
};

ReducedInstance rc_reduction(const SubsetInstance& inst);

// chi'' : gadget colors on H_k edges, base colors on the copied source edges.
// Throws DomainMismatch unless base colors the source graph, gadget colors
// H_k and neither uses more than k colors.
EdgeColoring combine_colorings(const ReducedInstance& r, const EdgeColoring& base,
                               const EdgeColoring& gadget);

}  // namespace rainbow
