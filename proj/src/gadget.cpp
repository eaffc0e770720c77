#include <algorithm>
#include <string>

#include "rainbow/error.hpp"
#include "rainbow/reductions.hpp"

namespace rainbow {

namespace {

void check_source(std::size_t n, const PairSet& pairs) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "gadgets need at least one base vertex");
  pairs.check_range(n);
}

Gadget base_case_shell(std::size_t n, const PairSet& pairs, std::size_t order) {
  Gadget g;
  g.order = order;
  g.n = n;
  g.source_pairs = pairs;
  g.lifted_pairs = pairs;  // base vertex i carries source vertex i
  for (Vertex i = 0; i < n; ++i) {
    g.base_vertices.push_back(i);
    g.tags.push_back({GadgetRole::Base, i, 0, 0, static_cast<std::uint32_t>(order)});
  }
  return g;
}

bool is_prime(GadgetRole r) {
  return r == GadgetRole::UPrime || r == GadgetRole::APrime || r == GadgetRole::BPrime;
}

GadgetRole unprimed(GadgetRole r) {
  switch (r) {
    case GadgetRole::UPrime: return GadgetRole::U;
    case GadgetRole::APrime: return GadgetRole::A;
    case GadgetRole::BPrime: return GadgetRole::B;
    default: return r;
  }
}

void require_tags(const Gadget& g) {
  if (g.tags.size() != g.graph.vertex_count()) {
    throw Error(ErrorCode::MissingLayerTags,
                "gadget has " + std::to_string(g.tags.size()) + " tags for " +
                    std::to_string(g.graph.vertex_count()) + " vertices");
  }
}

EdgeColoring color_h2(const Gadget& g) {
  constexpr Color c1 = 0, c2 = 1;
  std::vector<Color> colors(g.graph.edge_count());
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    const auto [x, y] = g.graph.edge(e);
    const auto& tx = g.tags[x];
    const auto& ty = g.tags[y];
    if (tx.role == GadgetRole::Base && ty.role == GadgetRole::U) {
      colors[e] = c2;
    } else if (tx.role == GadgetRole::Base && ty.role == GadgetRole::W) {
      colors[e] = tx.i == ty.i ? c1 : c2;
    } else if (tx.role != GadgetRole::Base && ty.role != GadgetRole::Base) {
      colors[e] = c1;
    } else {
      throw Error(ErrorCode::MissingLayerTags, "edge " + label(tx) + " - " + label(ty) +
                                                   " matches no layer of H_2");
    }
  }
  return EdgeColoring(g.graph, std::move(colors), 2);
}

EdgeColoring color_h3(const Gadget& g) {
  constexpr Color c1 = 0, c2 = 1, c3 = 2;
  std::vector<Color> colors(g.graph.edge_count());
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    const auto [x, y] = g.graph.edge(e);
    const auto& tx = g.tags[x];
    const auto& ty = g.tags[y];
    if (tx.role == GadgetRole::Base) {
      switch (ty.role) {
        case GadgetRole::U: colors[e] = c3; break;
        case GadgetRole::A: colors[e] = c1; break;
        case GadgetRole::B: colors[e] = c2; break;
        default:
          throw Error(ErrorCode::MissingLayerTags, "edge " + label(tx) + " - " + label(ty) +
                                                       " matches no layer of H_3");
      }
    } else if (is_prime(tx.role) != is_prime(ty.role)) {
      const auto& plain = is_prime(tx.role) ? ty : tx;
      const auto& primed = is_prime(tx.role) ? tx : ty;
      const bool matched = unprimed(primed.role) == plain.role && primed.i == plain.i &&
                           primed.j == plain.j;
      colors[e] = matched ? c1 : c2;
    } else if (tx.role == GadgetRole::A && ty.role == GadgetRole::B) {
      colors[e] = c3;
    } else {
      throw Error(ErrorCode::MissingLayerTags, "edge " + label(tx) + " - " + label(ty) +
                                                   " matches no layer of H_3");
    }
  }
  return EdgeColoring(g.graph, std::move(colors), 3);
}

// Order l >= 4: copies 1 and 2 inherit the inner coloring, copy 3 and the
// spoke to copy 1 take c_{l-1}, triangles and the other spokes take c_l.
EdgeColoring color_inductive(const Gadget& g) {
  if (!g.inner || g.previous.size() != g.graph.vertex_count()) {
    throw Error(ErrorCode::MissingLayerTags, "gadget of order " + std::to_string(g.order) +
                                                 " lacks its recursion trace");
  }
  const Gadget& inner = *g.inner;
  const EdgeColoring inner_colors = witness_coloring(inner);
  const std::size_t n = g.n;
  const Color c_prev = static_cast<Color>(g.order - 2);  // c_{l-1}
  const Color c_last = static_cast<Color>(g.order - 1);  // c_l
  auto copy_number = [&](Vertex x) { return (x - n) % 3 + 1; };
  auto is_copy = [&](Vertex x) { return x >= n && x < 4 * n; };

  std::vector<Color> colors(g.graph.edge_count());
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    const auto [x, y] = g.graph.edge(e);  // x < y, so base and copies come first
    if (x < n) {
      colors[e] = copy_number(y) == 1 ? c_prev : c_last;
    } else if (is_copy(x) && is_copy(y)) {
      colors[e] = c_last;
    } else if (is_copy(x)) {
      colors[e] = copy_number(x) == 3
                      ? c_prev
                      : inner_colors.color(inner.graph, *g.previous[x], *g.previous[y]);
    } else {
      colors[e] = inner_colors.color(inner.graph, *g.previous[x], *g.previous[y]);
    }
  }
  return EdgeColoring(g.graph, std::move(colors), g.order);
}

}  // namespace

std::string label(const GadgetVertex& v) {
  const std::string i = std::to_string(v.i);
  const std::string ij = i + "," + std::to_string(v.j);
  switch (v.role) {
    case GadgetRole::Base: return "v[" + i + "," + std::to_string(v.order) + "]";
    case GadgetRole::U: return "u[" + i + "]";
    case GadgetRole::UPrime: return "u'[" + i + "]";
    case GadgetRole::W: return "w[" + ij + "]";
    case GadgetRole::A: return "a[" + ij + "]";
    case GadgetRole::B: return "b[" + ij + "]";
    case GadgetRole::APrime: return "a'[" + ij + "]";
    case GadgetRole::BPrime: return "b'[" + ij + "]";
    case GadgetRole::Copy:
      return "v[" + i + "," + std::to_string(v.order) + "]^(" + std::to_string(v.copy) + ")";
  }
  return "?";
}

Gadget build_h2(std::size_t n, const PairSet& pairs) {
  check_source(n, pairs);
  Gadget g = base_case_shell(n, pairs, 2);
  std::vector<Edge> edges;
  std::vector<Vertex> inner_layer;
  for (Vertex i = 0; i < n; ++i) {
    const auto u = static_cast<Vertex>(g.tags.size());
    g.tags.push_back({GadgetRole::U, i, 0, 0, 2});
    inner_layer.push_back(u);
    edges.push_back({i, u});
  }
  for (const auto& [i, j] : pairs.complement(n)) {
    const auto w = static_cast<Vertex>(g.tags.size());
    g.tags.push_back({GadgetRole::W, i, j, 0, 2});
    inner_layer.push_back(w);
    edges.push_back({i, w});
    edges.push_back({j, w});
  }
  for (std::size_t a = 0; a < inner_layer.size(); ++a) {
    for (std::size_t b = a + 1; b < inner_layer.size(); ++b) {
      edges.push_back({inner_layer[a], inner_layer[b]});
    }
  }
  g.graph = Graph(g.tags.size(), edges);
  return g;
}

Gadget build_h3(std::size_t n, const PairSet& pairs) {
  check_source(n, pairs);
  Gadget g = base_case_shell(n, pairs, 3);
  std::vector<Edge> edges;
  std::vector<GadgetVertex> middle;
  for (Vertex i = 0; i < n; ++i) middle.push_back({GadgetRole::U, i, 0, 0, 3});
  for (const auto& [i, j] : pairs.complement(n)) {
    middle.push_back({GadgetRole::A, i, j, 0, 3});
    middle.push_back({GadgetRole::B, i, j, 0, 3});
  }
  const auto first_middle = static_cast<Vertex>(n);
  const auto first_outer = static_cast<Vertex>(n + middle.size());
  for (const auto& t : middle) g.tags.push_back(t);
  for (auto t : middle) {
    t.role = t.role == GadgetRole::U ? GadgetRole::UPrime
             : t.role == GadgetRole::A ? GadgetRole::APrime
                                       : GadgetRole::BPrime;
    g.tags.push_back(t);
  }
  for (Vertex t = 0; t < middle.size(); ++t) {
    const Vertex x = first_middle + t;
    const auto& tag = middle[t];
    switch (tag.role) {
      case GadgetRole::U: edges.push_back({tag.i, x}); break;
      case GadgetRole::A:
        edges.push_back({tag.i, x});
        edges.push_back({x, x + 1});  // b follows its a
        break;
      case GadgetRole::B: edges.push_back({tag.j, x}); break;
      default: break;
    }
    for (Vertex s = 0; s < middle.size(); ++s) edges.push_back({x, first_outer + s});
  }
  g.graph = Graph(g.tags.size(), edges);
  return g;
}

SplitGadget split_base(const Gadget& g) {
  require_tags(g);
  const std::size_t n = g.n;
  const std::size_t total = g.graph.vertex_count();
  SplitGadget out;
  out.n = n;
  auto is_base = [&](Vertex x) { return x < n; };
  auto moved = [&](Vertex x) { return static_cast<Vertex>(x + 2 * n); };
  auto copy = [](Vertex i, Vertex c) { return 3 * i + c - 1; };

  out.tags.resize(total + 2 * n);
  out.previous.resize(total + 2 * n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex c = 1; c <= 3; ++c) {
      out.tags[copy(i, c)] = {GadgetRole::Copy, i, 0, static_cast<std::uint8_t>(c),
                              static_cast<std::uint32_t>(g.order)};
      out.previous[copy(i, c)] = i;
    }
  }
  for (Vertex x = static_cast<Vertex>(n); x < total; ++x) {
    out.tags[moved(x)] = g.tags[x];
    out.previous[moved(x)] = x;
  }

  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    edges.push_back({copy(i, 1), copy(i, 2)});
    edges.push_back({copy(i, 1), copy(i, 3)});
    edges.push_back({copy(i, 2), copy(i, 3)});
  }
  for (const auto& [x, y] : g.graph.edges()) {
    if (is_base(x) && is_base(y)) {
      throw Error(ErrorCode::InvalidArgument, "base vertices " + std::to_string(x) + " and " +
                                                  std::to_string(y) + " are adjacent");
    }
    if (is_base(x)) {
      for (Vertex c = 1; c <= 3; ++c) edges.push_back({copy(x, c), moved(y)});
    } else {
      edges.push_back({moved(x), moved(y)});
    }
  }
  out.graph = Graph(total + 2 * n, edges);
  return out;
}

Gadget build_hk(std::size_t n, const PairSet& pairs, std::size_t order) {
  if (order < 2) {
    throw Error(ErrorCode::InvalidOrder, "gadget order must be at least 2, got " +
                                             std::to_string(order));
  }
  if (order == 2) return build_h2(n, pairs);
  if (order == 3) return build_h3(n, pairs);

  auto inner = std::make_shared<const Gadget>(build_hk(n, pairs, order - 2));
  const SplitGadget split = split_base(*inner);
  Gadget g = base_case_shell(n, pairs, order);
  g.previous.assign(n, std::nullopt);
  for (std::size_t x = 0; x < split.tags.size(); ++x) {
    g.tags.push_back(split.tags[x]);
    g.previous.push_back(split.previous[x]);
  }
  std::vector<Edge> edges;
  for (const auto& [x, y] : split.graph.edges()) {
    edges.push_back({static_cast<Vertex>(x + n), static_cast<Vertex>(y + n)});
  }
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex c = 0; c < 3; ++c) edges.push_back({i, static_cast<Vertex>(n + 3 * i + c)});
  }
  g.graph = Graph(g.tags.size(), edges);
  g.inner = std::move(inner);
  return g;
}

EdgeColoring witness_coloring(const Gadget& g) {
  require_tags(g);
  switch (g.order) {
    case 2: return color_h2(g);
    case 3: return color_h3(g);
    default: return color_inductive(g);
  }
}

}  // namespace rainbow
