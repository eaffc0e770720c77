#pragma once

#include <string>
#include <vector>

#include "rainbow/io.hpp"
#include "rainbow/reductions.hpp"

namespace rainbow {

// Instance JSON of the star plus "center", "leaves", "layer" and the source
// graph under "source".
Json star_to_json(const StarInstance& inst);

std::string label(const ExtensionVertex& v);

// Instance JSON of the extension plus its vertex blocks, per-vertex "layer"
// labels, per-edge "edge_layers" and the matching.
Json extension_to_json(const SrcExtension& ext);

// Instance JSON of G' (edges of H_k and the base copy, pairs P_k) plus
// "base_vertices", "layer", "base_edges", "source" and "gadget_coloring",
// the witness coloring of the H_k edges.
Json reduced_to_json(const ReducedInstance& r);

// Per-vertex labels of a gadget, in vertex order.
std::vector<std::string> gadget_labels(const Gadget& g);

// A gadget read back from reduced-instance JSON. Base edges are dropped, so
// the graph is H_k. Layer tags are not restored; `inner` stays empty.
Gadget gadget_from_json(const Json& doc);

// Reduced instance read back from reduced_to_json output. The source graph
// is recovered from "base_edges" and the source pairs from "pairs"; "k" is
// the gadget order.
ReducedInstance reduced_from_json(const Json& doc);

}  // namespace rainbow
