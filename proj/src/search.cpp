#include "rainbow/search.hpp"

#include <algorithm>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

using ColorSet = std::uint64_t;

void charge(std::uint64_t& nodes, const SearchOptions& options) {
  if (++nodes > options.node_budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "search exceeded node budget of " + std::to_string(options.node_budget));
  }
}

// Backtracking over restricted-growth edge colorings. Every pair owns a list
// of candidate paths (simple paths of at most k edges, or geodesics); a
// candidate dies once two of its assigned edges share a color, and a branch
// is abandoned as soon as some pair has no live candidate. Edges that lie on
// no candidate path are pinned to color 0, which keeps the first feasible
// leaf the lexicographically least feasible canonical coloring.
class SubsetSolver {
 public:
  SubsetSolver(const Graph& g, const PairSet& pairs, std::size_t k, PathKind kind,
               const SearchOptions& options)
      : g_(g), k_(k), options_(options) {
    pairs.check_range(g.vertex_count());
    if (k < 1 || k > kMaxColors) {
      throw Error(ErrorCode::InvalidArgument,
                  "k must be in [1, " + std::to_string(kMaxColors) + "], got " + std::to_string(k));
    }
    std::vector<std::vector<Distance>> dist_cache(g.vertex_count());
    for (const auto& p : pairs) {
      auto& row = dist_cache[p.first];
      if (row.empty()) row = distances_from(g, p.first);
      if (row[p.second] == kUnreachable) throw DisconnectedError(p.first, p.second);
      if (row[p.second] > k) trivially_infeasible_ = true;
    }
    if (trivially_infeasible_) return;

    paths_of_edge_.resize(g.edge_count());
    for (const auto& p : pairs) {
      const auto paths = kind == PathKind::Geodesic
                             ? geodesics(g, p.first, p.second)
                             : simple_paths_up_to(g, p.first, p.second,
                                                  std::min(k, g.vertex_count() - 1));
      const auto pair_index = alive_.size();
      alive_.push_back(paths.size());
      for (const auto& path : paths) {
        const auto path_index = path_pair_.size();
        path_pair_.push_back(pair_index);
        for (EdgeId e : path_edges(g, path)) paths_of_edge_[e].push_back(path_index);
      }
    }
    path_mask_.assign(path_pair_.size(), 0);
    path_dead_.assign(path_pair_.size(), false);
  }

  SolveResult<EdgeColoring> run() {
    SolveResult<EdgeColoring> result;
    if (trivially_infeasible_) return result;
    colors_.assign(g_.edge_count(), 0);
    if (descend(0, 0)) {
      result.feasible = true;
      result.witness = EdgeColoring(g_, colors_, k_);
    }
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  struct Undo {
    std::size_t path;
    bool killed;
  };

  // Assigns color c to edge e and records changes on the trail. Returns
  // false if some pair lost its last candidate.
  bool assign(EdgeId e, Color c) {
    colors_[e] = c;
    const ColorSet bit = ColorSet{1} << c;
    bool ok = true;
    for (std::size_t p : paths_of_edge_[e]) {
      if (path_dead_[p]) continue;
      if (path_mask_[p] & bit) {
        path_dead_[p] = true;
        if (--alive_[path_pair_[p]] == 0) ok = false;
        trail_.push_back({p, true});
      } else {
        path_mask_[p] |= bit;
        trail_.push_back({p, false});
      }
    }
    return ok;
  }

  void rollback(std::size_t mark, Color c) {
    const ColorSet bit = ColorSet{1} << c;
    while (trail_.size() > mark) {
      const Undo u = trail_.back();
      trail_.pop_back();
      if (u.killed) {
        path_dead_[u.path] = false;
        ++alive_[path_pair_[u.path]];
      } else {
        path_mask_[u.path] &= ~bit;
      }
    }
  }

  bool descend(std::size_t e, std::size_t used) {
    if (e == g_.edge_count()) return true;
    const bool relevant = !paths_of_edge_[e].empty();
    const std::size_t cap = relevant ? std::min(k_, used + 1) : 1;
    for (std::size_t c = 0; c < cap; ++c) {
      charge(nodes_, options_);
      const std::size_t mark = trail_.size();
      const bool ok = assign(static_cast<EdgeId>(e), static_cast<Color>(c));
      if (ok && descend(e + 1, std::max(used, c + 1))) return true;
      rollback(mark, static_cast<Color>(c));
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  SearchOptions options_;
  bool trivially_infeasible_ = false;
  std::vector<std::vector<std::size_t>> paths_of_edge_;
  std::vector<std::size_t> path_pair_;
  std::vector<ColorSet> path_mask_;
  std::vector<bool> path_dead_;
  std::vector<std::size_t> alive_;
  std::vector<Undo> trail_;
  std::vector<Color> colors_;
  std::uint64_t nodes_ = 0;
};

ExactResult exact(const Graph& g, PathKind kind, const SearchOptions& options) {
  if (g.vertex_count() < 2) {
    throw Error(ErrorCode::InvalidArgument, "need a graph with at least two vertices");
  }
  const auto from_zero = distances_from(g, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (from_zero[v] == kUnreachable) throw DisconnectedError(0, v);
  }
  const auto all = PairSet::all_pairs(g.vertex_count());
  ExactResult out;
  for (std::size_t k = std::max<Distance>(1, diameter(g)); k <= kMaxColors; ++k) {
    auto r = SubsetSolver(g, all, k, kind, options).run();
    out.nodes_explored += r.nodes_explored;
    if (r.feasible) {
      out.value = k;
      out.witness = std::move(*r.witness);
      return out;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "more than " + std::to_string(kMaxColors) + " colors needed");
}

}  // namespace

SolveResult<VertexColoring> vertex_coloring_leq(const Graph& g, std::size_t k,
                                                const SearchOptions& options) {
  SolveResult<VertexColoring> result;
  const std::size_t n = g.vertex_count();
  if (k == 0) {
    result.feasible = n == 0;
    if (result.feasible) result.witness = VertexColoring{};
    return result;
  }
  VertexColoring colors(n, 0);
  auto fits = [&](Vertex v, Color c) {
    for (Vertex w : g.neighbors(v)) {
      if (w < v && colors[w] == c) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, Vertex v, std::size_t used) -> bool {
    if (v == n) return true;
    const std::size_t cap = std::min(k, used + 1);
    for (std::size_t c = 0; c < cap; ++c) {
      charge(result.nodes_explored, options);
      if (!fits(v, static_cast<Color>(c))) continue;
      colors[v] = static_cast<Color>(c);
      if (self(self, v + 1, std::max(used, c + 1))) return true;
    }
    return false;
  };
  if (recurse(recurse, 0, 0)) {
    result.feasible = true;
    result.witness = std::move(colors);
  }
  return result;
}

SolveResult<EdgeColoring> subset_rc_leq(const Graph& g, const PairSet& pairs, std::size_t k,
                                        const SearchOptions& options) {
  return SubsetSolver(g, pairs, k, PathKind::Any, options).run();
}

SolveResult<EdgeColoring> subset_src_leq(const Graph& g, const PairSet& pairs, std::size_t k,
                                         const SearchOptions& options) {
  return SubsetSolver(g, pairs, k, PathKind::Geodesic, options).run();
}

ExactResult rc_exact(const Graph& g, const SearchOptions& options) {
  return exact(g, PathKind::Any, options);
}

ExactResult src_exact(const Graph& g, const SearchOptions& options) {
  return exact(g, PathKind::Geodesic, options);
}

std::size_t chromatic_number(const Graph& g, const SearchOptions& options) {
  for (std::size_t k = 0;; ++k) {
    if (vertex_coloring_leq(g, k, options).feasible) return k;
  }
}

}  // namespace rainbow
