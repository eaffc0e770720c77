#include "rainbow/verify.hpp"

#include <algorithm>
#include <string>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(CheckReport& r) : report_(r), start_(Clock::now()) {}
  ~Timer() { report_.elapsed = Clock::now() - start_; }

 private:
  CheckReport& report_;
  Clock::time_point start_;
};

InstanceDescriptor describe(std::string label, std::size_t n, const PairSet& pairs,
                            std::size_t k) {
  return {std::move(label), n, pairs.pairs(), k, std::nullopt, std::nullopt};
}

void fail(CheckReport& r, Counterexample cx) {
  r.verdict = Verdict::Fail;
  r.counterexample = std::move(cx);
}

Json path_json(const Path& p) {
  Json out = Json::array();
  for (Vertex v : p.vertices) out.push_back(v);
  return out;
}

std::uint64_t saturating_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > kNaiveExhaustionLimit) return out;
    out *= base;
  }
  return out;
}

// Calls visit(colors) for every coloring of m edges with k colors, stopping
// when visit returns false. Uses all k^m colorings while that is at most
// kNaiveExhaustionLimit and the canonical restricted-growth set otherwise.
// Returns the count visited and whether the exhaustion was naive.
template <typename Visit>
std::pair<std::uint64_t, bool> exhaust(std::size_t m, std::size_t k, Visit&& visit) {
  if (saturating_power(k, m) > kNaiveExhaustionLimit) {
    return {for_each_canonical_coloring(m, k, visit), false};
  }
  std::vector<Color> colors(m, 0);
  std::uint64_t count = 0;
  while (true) {
    ++count;
    if (!visit(static_cast<const std::vector<Color>&>(colors))) return {count, true};
    std::size_t i = 0;
    while (i < m && ++colors[i] == k) colors[i++] = 0;
    if (i == m) return {count, true};
  }
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

Json report_to_json(const CheckReport& report) {
  Json out;
  out["check"] = report.check;
  Json inst;
  inst["label"] = report.instance.label;
  inst["n"] = report.instance.n;
  Json pairs = Json::array();
  for (const auto& p : report.instance.pairs) pairs.push_back({p.first, p.second});
  inst["pairs"] = std::move(pairs);
  inst["k"] = report.instance.k;
  if (report.instance.seed) inst["seed"] = *report.instance.seed;
  if (report.instance.index) inst["index"] = *report.instance.index;
  out["instance"] = std::move(inst);
  out["verdict"] = std::string(to_string(report.verdict));
  if (report.counterexample) {
    const auto& cx = *report.counterexample;
    Json c;
    if (cx.pair) c["pair"] = {cx.pair->first, cx.pair->second};
    if (cx.path) c["path"] = path_json(*cx.path);
    if (cx.coloring) c["coloring"] = *cx.coloring;
    if (!cx.note.empty()) c["note"] = cx.note;
    out["counterexample"] = std::move(c);
  } else {
    out["counterexample"] = nullptr;
  }
  out["details"] = report.details;
  return out;
}

CheckReport check_pair_distances(const Gadget& g) {
  CheckReport r;
  Timer timer(r);
  r.check = "pair-distances";
  r.instance = describe("H_" + std::to_string(g.order), g.n, g.source_pairs, g.order);
  const Distance proof_threshold = static_cast<Distance>(g.order + 1);
  std::optional<Distance> min_distance;
  for (const auto& [x, y] : g.lifted_pairs) {
    const Distance d = distances_from(g.graph, x)[y];
    if (!min_distance || d < *min_distance) min_distance = d;
    if (d < proof_threshold && !r.counterexample) {
      fail(r, {VertexPair{x, y}, geodesics(g.graph, x, y).front(), std::nullopt,
               "distance " + std::to_string(d) + " < " + std::to_string(proof_threshold)});
    }
  }
  r.details["pairs_checked"] = g.lifted_pairs.size();
  r.details["proof_threshold"] = proof_threshold;
  r.details["statement_threshold"] = g.order;
  if (min_distance && *min_distance != kUnreachable) {
    r.details["min_pair_distance"] = *min_distance;
  } else {
    r.details["min_pair_distance"] = nullptr;
  }
  r.details["statement_holds"] = !min_distance || *min_distance >= g.order;
  return r;
}

CheckReport check_nonpair_distances(const Gadget& g) {
  CheckReport r;
  Timer timer(r);
  r.check = "nonpair-distances";
  r.instance = describe("H_" + std::to_string(g.order), g.n, g.source_pairs, g.order);
  const auto non_pairs = g.source_pairs.complement(g.n);
  for (const auto& [i, j] : non_pairs) {
    const Vertex x = g.base_vertices[i];
    const Vertex y = g.base_vertices[j];
    const Distance d = distances_from(g.graph, x)[y];
    if (d != g.order) {
      Counterexample cx{VertexPair::make(x, y), std::nullopt, std::nullopt,
                        d == kUnreachable ? std::string("unreachable")
                                          : "distance " + std::to_string(d)};
      if (d != kUnreachable) cx.path = geodesics(g.graph, x, y).front();
      fail(r, std::move(cx));
      break;
    }
  }
  r.details["pairs_checked"] = non_pairs.size();
  r.details["expected_distance"] = g.order;
  return r;
}

CheckReport check_witness(const Graph& graph, const PairSet& excluded, const EdgeColoring& c,
                          std::size_t k) {
  CheckReport r;
  Timer timer(r);
  r.check = "witness";
  r.instance = describe("coloring", graph.vertex_count(), excluded, k);
  c.check_host(graph);
  const auto max_color = std::max_element(c.colors().begin(), c.colors().end());
  r.details["colors_used"] = c.used_color_count();
  if (max_color != c.colors().end() && *max_color >= k) {
    fail(r, {std::nullopt, std::nullopt, std::vector<Color>(c.colors().begin(), c.colors().end()),
             "color index " + std::to_string(*max_color) + " exceeds k - 1"});
    return r;
  }
  RainbowChecker checker(graph, c);
  std::size_t checked = 0;
  for (Vertex u = 0; u < graph.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < graph.vertex_count(); ++v) {
      if (excluded.contains(u, v)) continue;
      ++checked;
      if (!checker.find(u, v, PathKind::Any)) {
        fail(r, {VertexPair{u, v}, std::nullopt, std::nullopt, "no rainbow path"});
        r.details["pairs_checked"] = checked;
        return r;
      }
    }
  }
  r.details["pairs_checked"] = checked;
  return r;
}

CheckReport check_witness(const Gadget& g) {
  CheckReport r = check_witness(g.graph, g.lifted_pairs, witness_coloring(g), g.order);
  r.instance = describe("H_" + std::to_string(g.order), g.n, g.source_pairs, g.order);
  return r;
}

CheckReport check_path_containment(const ReducedInstance& red) {
  CheckReport r;
  Timer timer(r);
  r.check = "path-containment";
  r.instance = describe("G'", red.source.graph.vertex_count(), red.source.pairs, red.source.k);
  std::size_t paths = 0;
  for (const auto& [x, y] : red.pairs) {
    for (const auto& p : simple_paths_up_to(red.graph, x, y, red.source.k)) {
      ++paths;
      for (EdgeId e : path_edges(red.graph, p)) {
        if (!red.is_base_edge(e)) {
          fail(r, {VertexPair{x, y}, p, std::nullopt, "path leaves the base graph"});
          r.details["paths_checked"] = paths;
          return r;
        }
      }
    }
  }
  r.details["paths_checked"] = paths;
  return r;
}

CheckReport check_lemma1(const Graph& g, std::size_t k, const SearchOptions& options) {
  CheckReport r;
  Timer timer(r);
  r.check = "lemma1";
  r.instance = describe("vertex-coloring", g.vertex_count(), PairSet(g.edges()), k);
  const StarInstance star = star_reduction(g, k);
  const auto vc = vertex_coloring_leq(g, k, options);
  const auto src = subset_src_leq(star.graph, star.pairs, k, options);
  const auto rc = subset_rc_leq(star.graph, star.pairs, k, options);
  r.details["vertex_coloring"] = vc.feasible;
  r.details["subset_src"] = src.feasible;
  r.details["subset_rc"] = rc.feasible;
  r.details["below_hardness_threshold"] = star.below_hardness_threshold;
  if (vc.feasible != src.feasible || vc.feasible != rc.feasible) {
    fail(r, {std::nullopt, std::nullopt, std::nullopt, "verdicts disagree"});
    return r;
  }
  if (vc.feasible) {
    const auto lifted = lift_vertex_coloring(star, *vc.witness);
    if (!is_subset_strong_rainbow_connected(star.graph, lifted, star.pairs)) {
      fail(r, {std::nullopt, std::nullopt,
               std::vector<Color>(lifted.colors().begin(), lifted.colors().end()),
               "lifted vertex coloring does not connect the pairs"});
      return r;
    }
    const auto projected = project_star_coloring(star, *rc.witness);
    for (const auto& [u, v] : g.edges()) {
      if (projected[u] == projected[v]) {
        fail(r, {VertexPair{u, v}, std::nullopt, projected, "projected coloring is improper"});
        return r;
      }
    }
  }
  return r;
}

CheckReport check_src_equivalence(const StarInstance& inst, const SearchOptions& options) {
  CheckReport r;
  Timer timer(r);
  r.check = "src-equivalence";
  r.instance = describe("star", inst.graph.vertex_count(), inst.pairs, inst.k);
  const SrcExtension ext = src_extension(inst);
  r.details["extension_vertices"] = ext.graph.vertex_count();
  r.details["extension_edges"] = ext.graph.edge_count();
  if (inst.k < 3) r.details["regime"] = "TooFewColors";

  const auto sides = bipartition(ext.graph);
  // Sides are only defined up to swapping them.
  bool bipartite_as_expected = false;
  if (sides) {
    auto flipped = ext.expected_sides();
    const bool same = *sides == flipped;
    for (auto& s : flipped) s ^= 1;
    bipartite_as_expected = same || *sides == flipped;
  }
  r.details["bipartite"] = bipartite_as_expected;
  if (!bipartite_as_expected) {
    fail(r, {std::nullopt, std::nullopt, std::nullopt,
             "extension is not bipartite with sides {a} + V1 and L + V2"});
    return r;
  }

  const auto subset = subset_src_leq(inst.graph, inst.pairs, inst.k, options);
  r.details["subset_src_feasible"] = subset.feasible;
  if (subset.feasible) {
    r.details["direction"] = "forward";
    if (inst.k < 3) {
      r.verdict = Verdict::Skipped;
      return r;
    }
    const auto colored = src_witness_coloring(ext, *subset.witness);
    RainbowChecker checker(ext.graph, colored);
    const auto all = PairSet::all_pairs(ext.graph.vertex_count());
    if (auto bad = checker.first_failure(all.pairs(), PathKind::Geodesic)) {
      fail(r, {bad, std::nullopt,
               std::vector<Color>(colored.colors().begin(), colored.colors().end()),
               "no rainbow geodesic"});
    }
    r.details["pairs_checked"] = all.size();
    return r;
  }

  r.details["direction"] = "backward";
  for (const auto& [u, v] : inst.pairs) {
    const auto paths = geodesics(ext.graph, u, v);
    const Path forced{{u, inst.center, v}};
    if (paths.size() != 1 || paths.front() != forced) {
      fail(r, {VertexPair{u, v}, paths.front(), std::nullopt,
               "star path is not the unique geodesic"});
      return r;
    }
  }
  std::vector<Path> forced_paths;
  for (const auto& [u, v] : inst.pairs) forced_paths.push_back(Path{{u, inst.center, v}});
  std::optional<std::vector<Color>> success;
  const auto [count, naive] =
      exhaust(inst.graph.edge_count(), inst.k, [&](const std::vector<Color>& colors) {
        const EdgeColoring c(inst.graph, colors, inst.k);
        for (const auto& p : forced_paths) {
          if (!is_rainbow_path(inst.graph, c, p)) return true;
        }
        success = colors;
        return false;
      });
  r.details["base_colorings_checked"] = count;
  r.details["exhaustion"] = naive ? "all" : "canonical";
  if (success) {
    fail(r, {std::nullopt, std::nullopt, success,
             "star coloring makes every forced geodesic rainbow"});
  }
  return r;
}

CheckReport check_rc_equivalence(const SubsetInstance& inst, bool full_bruteforce,
                                 const SearchOptions& options) {
  CheckReport r;
  Timer timer(r);
  r.check = "rc-equivalence";
  r.instance = describe("subset", inst.graph.vertex_count(), inst.pairs, inst.k);
  const ReducedInstance red = rc_reduction(inst);
  r.details["reduced_vertices"] = red.graph.vertex_count();
  r.details["reduced_edges"] = red.graph.edge_count();
  if (full_bruteforce && red.graph.edge_count() > kFullBruteforceEdgeLimit) {
    throw Error(ErrorCode::BudgetExceeded,
                "full brute force limited to " + std::to_string(kFullBruteforceEdgeLimit) +
                    " edges, G' has " + std::to_string(red.graph.edge_count()));
  }

  bool feasible = false;
  std::optional<EdgeColoring> base_witness;
  try {
    auto s = subset_rc_leq(inst.graph, inst.pairs, inst.k, options);
    feasible = s.feasible;
    base_witness = std::move(s.witness);
  } catch (const DisconnectedError& e) {
    r.details["disconnected_pair"] = {e.first(), e.second()};
  }
  r.details["subset_rc_feasible"] = feasible;

  if (feasible) {
    r.details["direction"] = "forward";
    const auto combined = combine_colorings(red, *base_witness, witness_coloring(red.gadget));
    RainbowChecker checker(red.graph, combined);
    const auto all = PairSet::all_pairs(red.graph.vertex_count());
    if (auto bad = checker.first_failure(all.pairs(), PathKind::Any)) {
      fail(r, {bad, std::nullopt,
               std::vector<Color>(combined.colors().begin(), combined.colors().end()),
               "combined coloring leaves a pair without a rainbow path"});
      return r;
    }
    r.details["pairs_checked"] = all.size();
  } else {
    r.details["direction"] = "backward";
    const CheckReport containment = check_path_containment(red);
    r.details["containment"] = containment.passed();
    if (!containment.passed()) {
      r.verdict = Verdict::Fail;
      r.counterexample = containment.counterexample;
      return r;
    }
    const Graph& g = inst.graph;
    if (r.details.contains("disconnected_pair")) {
      r.details["exhaustion"] = "none";
      return r;
    }
    std::optional<std::vector<Color>> success;
    const auto [count, naive] =
        exhaust(g.edge_count(), inst.k, [&](const std::vector<Color>& colors) {
          const EdgeColoring c(g, colors, inst.k);
          const RainbowChecker checker(g, c);
          if (checker.first_failure(inst.pairs.pairs(), PathKind::Any)) return true;
          success = colors;
          return false;
        });
    r.details["base_colorings_checked"] = count;
    r.details["exhaustion"] = naive ? "all" : "canonical";
    if (success) {
      fail(r, {std::nullopt, std::nullopt, success,
               "a base coloring connects every pair although the solver said infeasible"});
      return r;
    }
  }

  if (full_bruteforce) {
    const auto all = PairSet::all_pairs(red.graph.vertex_count());
    std::uint64_t feasible_count = 0;
    const std::uint64_t total = for_each_canonical_coloring(
        red.graph.edge_count(), inst.k, [&](const std::vector<Color>& colors) {
          const EdgeColoring c(red.graph, colors, inst.k);
          const RainbowChecker checker(red.graph, c);
          if (!checker.first_failure(all.pairs(), PathKind::Any)) ++feasible_count;
          return true;
        });
    r.details["full_bruteforce"] = {{"colorings", total}, {"rainbow_connected", feasible_count}};
    if ((feasible_count > 0) != feasible) {
      fail(r, {std::nullopt, std::nullopt, std::nullopt,
               "exhaustive search over G' disagrees with the subset solver"});
    }
  }
  return r;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t index) : state_(seed) {
  state_ = next() ^ index;
  next();
}

// SplitMix64.
std::uint64_t CounterRng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::size_t CounterRng::below(std::size_t bound) {
  return static_cast<std::size_t>(next() % bound);
}

const std::vector<std::string>& fuzz_check_names() {
  static const std::vector<std::string> names{
      "pair-distances", "nonpair-distances", "witness",        "path-containment",
      "rc-equivalence", "lemma1",            "src-equivalence"};
  return names;
}

FuzzInstance fuzz_instance(const FuzzConfig& config, std::size_t index) {
  if (config.n_max < 2 || config.k_set.empty()) {
    throw Error(ErrorCode::InvalidArgument, "fuzzing needs n_max >= 2 and a non-empty k set");
  }
  CounterRng rng(config.seed, index);
  const std::size_t n = 2 + rng.below(config.n_max - 1);
  const std::size_t k = config.k_set[rng.below(config.k_set.size())];
  std::vector<VertexPair> pairs;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.uniform() < config.pair_prob) pairs.push_back({i, j});
      if (rng.uniform() < config.edge_prob) edges.push_back({i, j});
    }
  }
  return {SubsetInstance{Graph(n, edges), PairSet(pairs), k}, config.seed, index};
}

std::vector<CheckReport> fuzz(const FuzzConfig& config) {
  const auto& names = fuzz_check_names();
  for (const auto& c : config.checks) {
    if (std::find(names.begin(), names.end(), c) == names.end()) {
      throw Error(ErrorCode::InvalidArgument, "unknown check '" + c + "'");
    }
  }
  auto wanted = [&](const std::string& name) {
    return config.checks.empty() ||
           std::find(config.checks.begin(), config.checks.end(), name) != config.checks.end();
  };

  std::vector<CheckReport> reports;
  for (std::size_t index = 0; index < config.seeds; ++index) {
    const FuzzInstance fi = fuzz_instance(config, index);
    const SubsetInstance& inst = fi.instance;
    const std::size_t n = inst.graph.vertex_count();
    std::vector<CheckReport> batch;
    const Gadget gadget = build_hk(n, inst.pairs, inst.k);
    if (wanted("pair-distances")) batch.push_back(check_pair_distances(gadget));
    if (wanted("nonpair-distances")) batch.push_back(check_nonpair_distances(gadget));
    if (wanted("witness")) batch.push_back(check_witness(gadget));
    if (wanted("path-containment")) batch.push_back(check_path_containment(rc_reduction(inst)));
    if (wanted("rc-equivalence")) {
      const bool small = rc_reduction(inst).graph.edge_count() <= 6;
      batch.push_back(check_rc_equivalence(inst, small, config.options));
    }
    if (wanted("lemma1")) batch.push_back(check_lemma1(inst.graph, inst.k, config.options));
    if (wanted("src-equivalence")) {
      batch.push_back(check_src_equivalence(star_reduction(inst.graph, inst.k), config.options));
    }
    for (auto& report : batch) {
      report.instance.label = "fuzz";
      report.instance.seed = fi.seed;
      report.instance.index = fi.index;
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

}  // namespace rainbow
