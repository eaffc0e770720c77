#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/error.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/io.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/search.hpp"
#include "rainbow/serialize.hpp"
#include "rainbow/verify.hpp"

namespace {

using namespace rainbow;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct RunConfig {
  std::string input;
  std::string inline_text;
  std::string format = "auto";
  std::optional<std::size_t> k;
  std::string problem = "rc";
  std::string reduction = "rc-gadget";
  std::string check = "all";
  std::uint64_t seed = 0;
  std::size_t seeds = 200;
  std::size_t n_max = 5;
  std::uint64_t budget = SearchOptions{}.node_budget;
  std::string output;
  std::string dot;
  std::string demo = "all";
};

// Payload goes to --output or stdout; human-readable text goes to stdout
// when the payload is in a file and to stderr otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    }
  }
  std::ostream& payload() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  std::ostream& info() { return file_.is_open() ? std::cout : std::cerr; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_input(const RunConfig& cfg) { return !cfg.input.empty() || !cfg.inline_text.empty(); }

std::string input_text(const RunConfig& cfg) {
  if (!cfg.input.empty() && !cfg.inline_text.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give either --input or --inline, not both");
  }
  if (!cfg.inline_text.empty()) return cfg.inline_text;
  if (cfg.input.empty()) throw Error(ErrorCode::InvalidArgument, "no instance: use --input or --inline");
  return read_file(cfg.input);
}

bool looks_like_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

Format resolve_format(const RunConfig& cfg, const std::string& text) {
  if (cfg.format == "json") return Format::Json;
  if (cfg.format == "edge-list") return Format::EdgeList;
  return looks_like_json(text) ? Format::Json : Format::EdgeList;
}

InstanceData load_instance(const RunConfig& cfg) {
  const std::string text = input_text(cfg);
  InstanceData data = parse_instance(text, resolve_format(cfg, text));
  if (cfg.k) data.k = cfg.k;
  return data;
}

std::size_t require_k(const InstanceData& data) {
  if (!data.k) throw Error(ErrorCode::InvalidArgument, "k is required: pass --k or a \"k\" key");
  return *data.k;
}

const PairSet& require_pairs(const InstanceData& data) {
  if (!data.pairs) throw Error(ErrorCode::InvalidArgument, "the instance has no \"pairs\"");
  return *data.pairs;
}

SearchOptions search_options(const RunConfig& cfg) {
  if (cfg.budget == 0) throw Error(ErrorCode::InvalidArgument, "--budget must be positive");
  return SearchOptions{cfg.budget};
}

Json vertex_coloring_json(const VertexColoring& vc, std::size_t k) {
  Json out;
  out["k"] = k;
  out["colors"] = vc;
  return out;
}

void write_dot(const std::string& path, const std::string& dot) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << dot;
}

// ---------------------------------------------------------------------------

int cmd_solve(const RunConfig& cfg) {
  const InstanceData data = load_instance(cfg);
  const SearchOptions options = search_options(cfg);
  Sink sink(cfg.output);
  Json result;
  result["problem"] = cfg.problem;
  const Graph& g = data.graph;

  auto emit = [&](bool feasible) {
    result["feasible"] = feasible;
    sink.payload() << result.dump() << "\n";
    return feasible ? kExitOk : kExitNo;
  };

  if (cfg.problem == "chromatic") {
    if (data.k) {
      const auto r = vertex_coloring_leq(g, *data.k, options);
      result["k"] = *data.k;
      result["nodes_explored"] = r.nodes_explored;
      if (r.witness) result["witness"] = vertex_coloring_json(*r.witness, *data.k);
      sink.info() << "chromatic number " << (r.feasible ? "<= " : "> ") << *data.k << "\n";
      return emit(r.feasible);
    }
    const std::size_t chi = chromatic_number(g, options);
    const auto r = vertex_coloring_leq(g, chi, options);
    result["value"] = chi;
    result["witness"] = vertex_coloring_json(*r.witness, chi);
    sink.info() << "chromatic number = " << chi << "\n";
    return emit(true);
  }

  if (cfg.problem == "rc" || cfg.problem == "src") {
    const bool strong = cfg.problem == "src";
    if (data.k) {
      if (!is_connected(g)) {
        const auto d = distances_from(g, 0);
        const auto v = static_cast<std::size_t>(
            std::find(d.begin(), d.end(), kUnreachable) - d.begin());
        throw DisconnectedError(0, v);
      }
      const auto all = PairSet::all_pairs(g.vertex_count());
      const auto r = strong ? subset_src_leq(g, all, *data.k, options)
                            : subset_rc_leq(g, all, *data.k, options);
      result["k"] = *data.k;
      result["nodes_explored"] = r.nodes_explored;
      if (r.witness) result["witness"] = coloring_to_json(g, *r.witness);
      sink.info() << cfg.problem << (r.feasible ? " <= " : " > ") << *data.k << "\n";
      return emit(r.feasible);
    }
    const auto r = strong ? src_exact(g, options) : rc_exact(g, options);
    result["value"] = r.value;
    result["nodes_explored"] = r.nodes_explored;
    result["witness"] = coloring_to_json(g, r.witness);
    sink.info() << cfg.problem << " = " << r.value << "\n";
    return emit(true);
  }

  // subset-rc, subset-src
  const bool strong = cfg.problem == "subset-src";
  const std::size_t k = require_k(data);
  const PairSet& pairs = require_pairs(data);
  const auto r = strong ? subset_src_leq(g, pairs, k, options) : subset_rc_leq(g, pairs, k, options);
  result["k"] = k;
  result["nodes_explored"] = r.nodes_explored;
  if (r.witness) result["witness"] = coloring_to_json(g, *r.witness);
  sink.info() << cfg.problem << (r.feasible ? ": feasible with " : ": infeasible with ") << k
              << " colors\n";
  return emit(r.feasible);
}

// ---------------------------------------------------------------------------

int cmd_reduce(const RunConfig& cfg) {
  const InstanceData data = load_instance(cfg);
  Sink sink(cfg.output);
  Json out;
  std::string dot;
  std::map<std::string, std::size_t> layer_sizes;
  auto count_layers = [&](const Json& layers) {
    for (const auto& [id, name] : layers.items()) {
      const std::string s = name.get<std::string>();
      layer_sizes[s.substr(0, s.find('['))] += 1;
    }
  };

  if (cfg.reduction == "star") {
    const StarInstance star = star_reduction(data.graph, data.k.value_or(3));
    out = star_to_json(star);
    const std::vector<Vertex> leaves = star.leaves;
    dot = to_dot(star.graph, leaves);
    if (star.below_hardness_threshold) {
      sink.info() << "note: k < 3 is below the hardness threshold of the star reduction\n";
    }
  } else if (cfg.reduction == "src-ext") {
    const SrcExtension ext = src_extension(data.graph, require_pairs(data));
    out = extension_to_json(ext);
    std::vector<std::string> labels;
    for (const auto& r : ext.roles) labels.push_back(label(r));
    const std::vector<Vertex> highlights = ext.leaves;
    dot = to_dot(ext.graph, highlights, labels);
  } else {
    const ReducedInstance r =
        rc_reduction(SubsetInstance{data.graph, require_pairs(data), require_k(data)});
    out = reduced_to_json(r);
    const auto labels = gadget_labels(r.gadget);
    dot = to_dot(r.graph, r.gadget.base_vertices, labels);
  }
  count_layers(out["layer"]);
  sink.payload() << out.dump() << "\n";
  write_dot(cfg.dot, dot);

  sink.info() << cfg.reduction << ": " << out["n"].get<std::size_t>() << " vertices, "
              << out["edges"].size() << " edges";
  if (out.contains("pairs")) sink.info() << ", " << out["pairs"].size() << " pairs";
  sink.info() << "\n  layers:";
  for (const auto& [name, count] : layer_sizes) sink.info() << " " << name << "=" << count;
  sink.info() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

bool wants(const RunConfig& cfg, const std::string& name) {
  return cfg.check == "all" || cfg.check == name;
}

std::vector<CheckReport> verify_reduced_file(const RunConfig& cfg, const Json& doc,
                                             const SearchOptions& options) {
  const ReducedInstance red = reduced_from_json(doc);
  const Gadget& g = red.gadget;
  std::vector<CheckReport> out;
  if (wants(cfg, "pair-distances")) out.push_back(check_pair_distances(g));
  if (wants(cfg, "nonpair-distances")) out.push_back(check_nonpair_distances(g));
  if (wants(cfg, "witness")) {
    if (doc.contains("gadget_coloring")) {
      out.push_back(check_witness(g.graph, g.lifted_pairs,
                                  coloring_from_json(doc["gadget_coloring"], g.graph), g.order));
    } else if (doc.contains("coloring")) {
      out.push_back(check_witness(red.graph, red.pairs,
                                  coloring_from_json(doc["coloring"], red.graph), g.order));
    } else {
      const Gadget rebuilt = build_hk(g.n, g.source_pairs, g.order);
      if (!(rebuilt.graph == g.graph)) {
        throw Error(ErrorCode::DomainMismatch,
                    "file has no coloring and its gadget differs from the constructed one");
      }
      out.push_back(check_witness(rebuilt));
    }
    out.back().instance.label = "file";
  }
  if (wants(cfg, "path-containment")) out.push_back(check_path_containment(red));
  if (wants(cfg, "rc-equivalence")) {
    out.push_back(check_rc_equivalence(
        red.source, rc_reduction(red.source).graph.edge_count() <= 6, options));
  }
  if (wants(cfg, "lemma1")) out.push_back(check_lemma1(red.source.graph, red.source.k, options));
  if (wants(cfg, "src-equivalence")) {
    out.push_back(check_src_equivalence(star_reduction(red.source.graph, red.source.k), options));
  }
  return out;
}

std::vector<CheckReport> verify_instance(const RunConfig& cfg, const InstanceData& data,
                                         const SearchOptions& options) {
  const SubsetInstance inst{data.graph, data.pairs.value_or(PairSet{}), require_k(data)};
  std::vector<CheckReport> out;
  const bool structural = wants(cfg, "pair-distances") || wants(cfg, "nonpair-distances") ||
                          wants(cfg, "witness") || wants(cfg, "path-containment");
  if (structural) {
    const ReducedInstance red = rc_reduction(inst);
    if (wants(cfg, "pair-distances")) out.push_back(check_pair_distances(red.gadget));
    if (wants(cfg, "nonpair-distances")) out.push_back(check_nonpair_distances(red.gadget));
    if (wants(cfg, "witness")) out.push_back(check_witness(red.gadget));
    if (wants(cfg, "path-containment")) out.push_back(check_path_containment(red));
  }
  if (wants(cfg, "rc-equivalence")) {
    out.push_back(
        check_rc_equivalence(inst, rc_reduction(inst).graph.edge_count() <= 6, options));
  }
  if (wants(cfg, "lemma1")) out.push_back(check_lemma1(inst.graph, inst.k, options));
  if (wants(cfg, "src-equivalence")) {
    out.push_back(check_src_equivalence(star_reduction(inst.graph, inst.k), options));
  }
  return out;
}

void print_summary(std::ostream& os, const std::vector<CheckReport>& reports) {
  struct Row {
    std::size_t pass = 0, fail = 0, skipped = 0;
  };
  std::vector<std::string> order;
  std::map<std::string, Row> rows;
  for (const auto& r : reports) {
    if (!rows.count(r.check)) order.push_back(r.check);
    auto& row = rows[r.check];
    if (r.verdict == Verdict::Pass) ++row.pass;
    if (r.verdict == Verdict::Fail) ++row.fail;
    if (r.verdict == Verdict::Skipped) ++row.skipped;
  }
  os << std::left << std::setw(20) << "check" << std::right << std::setw(8) << "pass"
     << std::setw(8) << "fail" << std::setw(9) << "skipped" << "\n";
  for (const auto& name : order) {
    const auto& row = rows[name];
    os << std::left << std::setw(20) << name << std::right << std::setw(8) << row.pass
       << std::setw(8) << row.fail << std::setw(9) << row.skipped << "\n";
  }
  for (const auto& r : reports) {
    if (r.verdict != Verdict::Fail) continue;
    os << "FAIL " << r.check << " [" << r.instance.label;
    if (r.instance.index) os << " #" << *r.instance.index;
    os << "]: " << r.counterexample->note;
    if (r.counterexample->pair) {
      os << " at pair (" << r.counterexample->pair->first << "," << r.counterexample->pair->second
         << ")";
    }
    os << "\n";
  }
}

int cmd_verify(const RunConfig& cfg) {
  const auto& names = fuzz_check_names();
  if (cfg.check != "all" && std::find(names.begin(), names.end(), cfg.check) == names.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown check '" + cfg.check + "'");
  }
  const SearchOptions options = search_options(cfg);
  std::vector<CheckReport> reports;
  if (has_input(cfg)) {
    const std::string text = input_text(cfg);
    const Format format = resolve_format(cfg, text);
    if (format == Format::Json) {
      const Json doc = parse_json(text);
      if (doc.is_object() && doc.contains("base_vertices")) {
        reports = verify_reduced_file(cfg, doc, options);
      } else {
        InstanceData data = instance_from_json(doc);
        if (cfg.k) data.k = cfg.k;
        reports = verify_instance(cfg, data, options);
      }
    } else {
      InstanceData data = parse_instance(text, format);
      if (cfg.k) data.k = cfg.k;
      reports = verify_instance(cfg, data, options);
    }
  } else {
    FuzzConfig fc;
    fc.n_max = cfg.n_max;
    fc.seeds = cfg.seeds;
    fc.seed = cfg.seed;
    if (cfg.k) fc.k_set = {*cfg.k};
    if (cfg.check != "all") fc.checks = {cfg.check};
    fc.options = options;
    reports = fuzz(fc);
  }

  Sink sink(cfg.output);
  bool all_passed = true;
  for (const auto& r : reports) {
    sink.payload() << report_to_json(r).dump() << "\n";
    if (r.verdict == Verdict::Fail) all_passed = false;
  }
  sink.payload().flush();
  print_summary(sink.info(), reports);
  return all_passed ? kExitOk : kExitNo;
}

// ---------------------------------------------------------------------------

bool step(std::ostream& os, const std::string& what, bool ok) {
  os << "  [" << (ok ? "ok" : "FAILED") << "] " << what << "\n";
  return ok;
}

bool demo_chain(std::ostream& os, const std::string& name, const Graph& source, std::size_t k,
                const SearchOptions& options) {
  bool ok = true;
  os << "== " << name << ": source graph with " << source.vertex_count() << " vertices and "
     << source.edge_count() << " edges, k = " << k << "\n";

  const auto vc = vertex_coloring_leq(source, k, options);
  os << "1. vertex coloring: " << (vc.feasible ? "colorable" : "not colorable") << " with " << k
     << " colors\n";

  const StarInstance star = star_reduction(source, k);
  os << "2. star reduction: star with " << star.graph.vertex_count() << " vertices, "
     << star.graph.edge_count() << " edges, " << star.pairs.size() << " leaf pairs\n";
  const auto l1 = check_lemma1(source, k, options);
  ok &= step(os, "colorability agrees with subset rc and subset src on the star", l1.passed());

  const auto src = check_src_equivalence(star, options);
  os << "3. strong-rainbow extension: "
     << src.details["extension_vertices"].get<std::size_t>() << " vertices, "
     << src.details["extension_edges"].get<std::size_t>() << " edges\n";
  ok &= step(os, "extension is bipartite and " +
                     std::string(src.details["direction"] == "forward"
                                     ? "the extended witness is a strong rainbow coloring"
                                     : "infeasibility is forced through the unique star geodesics"),
             src.passed());

  const SubsetInstance inst = star.as_subset();
  const ReducedInstance red = rc_reduction(inst);
  os << "4. gadget H_" << k << " over " << inst.graph.vertex_count() << " base vertices: "
     << red.gadget.graph.vertex_count() << " vertices, " << red.gadget.graph.edge_count()
     << " edges\n";
  ok &= step(os, "pair base vertices are more than k apart",
             check_pair_distances(red.gadget).passed());
  ok &= step(os, "non-pair base vertices are exactly k apart",
             check_nonpair_distances(red.gadget).passed());
  ok &= step(os, "witness coloring connects every pair outside P_k",
             check_witness(red.gadget).passed());

  os << "5. G' = H_" << k << " + base copy: " << red.graph.vertex_count() << " vertices, "
     << red.graph.edge_count() << " edges\n";
  ok &= step(os, "short paths between pair base vertices stay in the base graph",
             check_path_containment(red).passed());
  const auto rc = check_rc_equivalence(inst, false, options);
  ok &= rc.passed();
  if (!rc.passed()) {
    os << "  [FAILED] " << rc.counterexample->note << "\n";
  } else if (rc.details["direction"] == "forward") {
    os << "rc(G′) ≤ " << k << " certified by witness\n";
  } else {
    os << "  base colorings checked: " << rc.details["base_colorings_checked"].get<std::uint64_t>()
       << "\n";
    os << "rc(G′) > " << k << " certified (containment + base exhaustion)\n";
  }
  return ok;
}

bool demo_micro(std::ostream& os, const SearchOptions& options) {
  os << "== micro: single edge, P = {(0,1)}, k = 2\n";
  const SubsetInstance inst{Graph(2, {{0, 1}}), PairSet{{0, 1}}, 2};
  const ReducedInstance red = rc_reduction(inst);
  os << "1. G' = H_2 + base edge: " << red.graph.vertex_count() << " vertices, "
     << red.graph.edge_count() << " edges, diameter " << diameter(red.graph) << "\n";
  const auto rc = check_rc_equivalence(inst, true, options);
  bool ok = step(os, "full brute force over " +
                         std::to_string(rc.details["full_bruteforce"]["colorings"].get<std::uint64_t>()) +
                         " canonical colorings agrees with the subset solver",
                 rc.passed());
  const auto exact = rc_exact(red.graph, options);
  ok &= step(os, "rc(G′) = " + std::to_string(exact.value), exact.value == 2);
  return ok;
}

int cmd_demo(const RunConfig& cfg) {
  const SearchOptions options = search_options(cfg);
  std::ostream& os = std::cout;
  bool ok = true;
  const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (cfg.demo == "micro" || cfg.demo == "all") ok &= demo_micro(os, options);
  if (cfg.demo == "k3" || cfg.demo == "all") ok &= demo_chain(os, "k3", k3, 3, options);
  if (cfg.demo == "k4" || cfg.demo == "all") ok &= demo_chain(os, "k4", k4, 3, options);
  return ok ? kExitOk : kExitNo;
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input", cfg.input, "Instance file ('-' for stdin)");
  sub->add_option("--inline", cfg.inline_text, "Instance text given directly");
  sub->add_option("--format", cfg.format, "Input format")
      ->check(CLI::IsMember({"auto", "edge-list", "json"}));
  sub->add_option("--k", cfg.k, "Number of colors / gadget order")->check(CLI::PositiveNumber);
  sub->add_option("--output", cfg.output, "Write the main output here instead of stdout");
  sub->add_option("--budget", cfg.budget, "Search node budget");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow connectivity solvers, reductions and verifiers"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* solve = app.add_subcommand("solve", "Decide or compute rc, src, subset variants or chi");
  add_input_options(solve, cfg);
  solve->add_option("--problem", cfg.problem, "Problem to solve")
      ->check(CLI::IsMember({"rc", "src", "subset-rc", "subset-src", "chromatic"}));

  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
  add_input_options(reduce, cfg);
  reduce->add_option("--reduction", cfg.reduction, "Reduction to build")
      ->check(CLI::IsMember({"star", "src-ext", "rc-gadget"}));
  reduce->add_option("--dot", cfg.dot, "Also write a DOT rendering here");

  auto* verify = app.add_subcommand("verify", "Run machine checks on an instance or fuzz stream");
  add_input_options(verify, cfg);
  auto* check_flag = verify->add_option("--check", cfg.check, "Check name or 'all'");
  verify->add_option("name", cfg.check, "Check name or 'all' (same as --check)")
      ->excludes(check_flag);
  verify->add_option("--seed", cfg.seed, "Fuzzer seed");
  verify->add_option("--seeds", cfg.seeds, "Number of fuzzed instances");
  verify->add_option("--n-max", cfg.n_max, "Largest fuzzed vertex count")
      ->check(CLI::Range(2, 12));

  auto* demo = app.add_subcommand("demo", "Run the built-in showcase pipelines");
  demo->add_option("name", cfg.demo, "Showcase to run")
      ->check(CLI::IsMember({"all", "k3", "k4", "micro"}));
  demo->add_option("--budget", cfg.budget, "Search node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg);
    if (reduce->parsed()) return cmd_reduce(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_demo(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
