#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/io.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

enum class Verdict { Pass, Fail, Skipped };

std::string_view to_string(Verdict v);

struct InstanceDescriptor {
  std::string label;
  std::size_t n = 0;
  std::vector<VertexPair> pairs;
  std::size_t k = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> index;
};

// Evidence for a failed check: the pair that broke the property and, where
// one exists, the offending path or coloring.
struct Counterexample {
  std::optional<VertexPair> pair;
  std::optional<Path> path;
  std::optional<std::vector<Color>> coloring;
  std::string note;
};

struct CheckReport {
  std::string check;
  InstanceDescriptor instance;
  Verdict verdict = Verdict::Pass;
  std::optional<Counterexample> counterexample;  // present iff verdict == Fail
  Json details = Json::object();
  // Wall time; kept out of the serialized form so reports stay reproducible.
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return verdict == Verdict::Pass; }
};

Json report_to_json(const CheckReport& report);

// Every lifted pair is at base distance >= order + 1. The weaker reading
// (distance >= order) is reported in the details as well.
CheckReport check_pair_distances(const Gadget& g);

// Every base non-pair is at distance exactly `order`.
CheckReport check_nonpair_distances(const Gadget& g);

// witness_coloring(g) uses at most `order` colors and rainbow-connects every
// vertex pair outside the lifted pairs.
CheckReport check_witness(const Gadget& g);
// Same property for an explicit coloring of `graph`.
CheckReport check_witness(const Graph& graph, const PairSet& excluded, const EdgeColoring& c,
                          std::size_t k);

// Every simple path of at most k edges between lifted pairs uses base edges
// only.
CheckReport check_path_containment(const ReducedInstance& r);

// Vertex k-colorability of g agrees with both subset solvers on its star.
CheckReport check_lemma1(const Graph& g, std::size_t k, const SearchOptions& options = {});

// Colorings are exhausted one by one while k^m is at most this; above it the
// restricted-growth canonical set is used instead.
inline constexpr std::uint64_t kNaiveExhaustionLimit = 1u << 16;

// Feasible side: the extension coloring is a strong rainbow coloring.
// Infeasible side: each pair's only geodesic in the extension is its star
// path, and no coloring of the star edges makes all of those rainbow.
CheckReport check_src_equivalence(const StarInstance& inst, const SearchOptions& options = {});

// Feasible side: combined coloring rainbow-connects G'. Infeasible side: path
// containment holds and no coloring of the source edges connects the pairs.
// With full_bruteforce every canonical k-coloring of G' is also tried;
// BudgetExceeded if G' has more than kFullBruteforceEdgeLimit edges.
inline constexpr std::size_t kFullBruteforceEdgeLimit = 16;
CheckReport check_rc_equivalence(const SubsetInstance& inst, bool full_bruteforce,
                                 const SearchOptions& options = {});

// Counter-based generator: the stream for (seed, index) does not depend on
// any other stream, so instance i is reproducible on its own.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  // Uniform in [0, 1) with 53 bits.
  double uniform();
  std::size_t below(std::size_t bound);

 private:
  std::uint64_t state_;
};

struct FuzzConfig {
  std::size_t n_max = 5;
  std::vector<std::size_t> k_set{2, 3, 4, 5};
  double edge_prob = 0.4;
  double pair_prob = 0.3;
  std::size_t seeds = 200;
  std::uint64_t seed = 0;
  // Empty means every check.
  std::vector<std::string> checks;
  SearchOptions options;
};

// Names accepted in FuzzConfig::checks, in report order.
const std::vector<std::string>& fuzz_check_names();

struct FuzzInstance {
  SubsetInstance instance;
  std::uint64_t seed = 0;
  std::size_t index = 0;
};

FuzzInstance fuzz_instance(const FuzzConfig& config, std::size_t index);

// Reports for instances 0..seeds-1 in instance order, checks in the order of
// fuzz_check_names().
std::vector<CheckReport> fuzz(const FuzzConfig& config);

}  // namespace rainbow
