#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/error.hpp"
#include "rainbow/reductions.hpp"

using namespace rainbow;

namespace {

EdgeColoring colored(const Graph& g, std::vector<Color> colors, std::size_t k) {
  return EdgeColoring(g, std::move(colors), k);
}

// C4 edges sorted: (0,1) (0,3) (1,2) (2,3); alternate around the cycle.
EdgeColoring alternating_c4(const Graph& c4) {
  std::vector<Color> colors(4);
  colors[*c4.edge_id(0, 1)] = 0;
  colors[*c4.edge_id(1, 2)] = 1;
  colors[*c4.edge_id(2, 3)] = 0;
  colors[*c4.edge_id(3, 0)] = 1;
  return EdgeColoring(c4, colors, 2);
}

}  // namespace

TEST_CASE("EdgeColoring validation") {
  const Graph c4 = oracle::cycle(4);
  CHECK_THROWS_AS(colored(c4, {0, 0, 0}, 2), Error);
  CHECK_THROWS_AS(colored(c4, {0, 0, 0, 2}, 2), Error);
  CHECK_THROWS_AS(colored(c4, {0, 0, 0, 0}, 0), Error);
  CHECK_THROWS_AS(colored(c4, {0, 0, 0, 0}, kMaxColors + 1), Error);
  const auto c = colored(c4, {0, 0, 1, 1}, 3);
  CHECK(c.used_color_count() == 2);
  CHECK(c.color_count() == 3);
  try {
    c.check_host(oracle::cycle(5));
    FAIL("expected DomainMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainMismatch);
  }
}

TEST_CASE("is_rainbow_path") {
  const Graph p3 = oracle::path_graph(3);
  const auto same = colored(p3, {0, 0}, 2);
  const auto diff = colored(p3, {0, 1}, 2);
  CHECK(is_rainbow_path(p3, same, Path{{0, 1}}));
  CHECK_FALSE(is_rainbow_path(p3, same, Path{{0, 1, 2}}));
  CHECK(is_rainbow_path(p3, diff, Path{{0, 1, 2}}));
  try {
    is_rainbow_path(p3, same, Path{{0, 2}});
    FAIL("expected PathNotInGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PathNotInGraph);
  }
}

TEST_CASE("lifted proper coloring of a triangle makes the star paths rainbow") {
  const StarInstance star = star_reduction(oracle::complete(3), 3);
  const auto lifted = lift_vertex_coloring(star, {0, 1, 2});
  for (const auto& [u, v] : star.pairs) {
    CHECK(is_rainbow_path(star.graph, lifted, Path{{u, star.center, v}}));
    CHECK(exists_geodesic_rainbow_path(star.graph, lifted, u, v));
  }
}

TEST_CASE("exists_rainbow_path examples") {
  const Graph c4 = oracle::cycle(4);
  const auto alt = alternating_c4(c4);
  CHECK(exists_rainbow_path(c4, alt, 0, 2));
  CHECK(exists_rainbow_path(c4, alt, 1, 3));
  CHECK(exists_rainbow_path(c4, EdgeColoring::uniform(c4, 0, 1), 0, 1));

  const Gadget h2 = build_h2(3, PairSet{{0, 1}});
  const auto chi = witness_coloring(h2);
  CHECK_FALSE(exists_rainbow_path(h2.graph, chi, 0, 1));
  CHECK(exists_rainbow_path(h2.graph, chi, 0, 2));
  CHECK_THROWS_AS(exists_rainbow_path(c4, alt, 0, 7), Error);

  const auto found = find_rainbow_path(c4, alt, 0, 2);
  REQUIRE(found);
  CHECK(is_rainbow_path(c4, alt, *found));
  CHECK(found->vertices.front() == 0);
  CHECK(found->vertices.back() == 2);
}

TEST_CASE("geodesic rainbow paths") {
  const Graph p3 = oracle::path_graph(3);
  CHECK_FALSE(exists_geodesic_rainbow_path(p3, colored(p3, {0, 0}, 1), 0, 2));
  CHECK(exists_geodesic_rainbow_path(p3, colored(p3, {0, 0}, 1), 0, 1));
  CHECK_THROWS_AS(exists_geodesic_rainbow_path(Graph(2), EdgeColoring::uniform(Graph(2), 0, 1), 0, 1),
                  DisconnectedError);

  // C5: the long way round 0-4-3-2 is rainbow but the geodesic 0-1-2 is not.
  const Graph c5 = oracle::cycle(5);
  std::vector<Color> colors(5);
  colors[*c5.edge_id(0, 1)] = 0;
  colors[*c5.edge_id(1, 2)] = 0;
  colors[*c5.edge_id(2, 3)] = 1;
  colors[*c5.edge_id(3, 4)] = 2;
  colors[*c5.edge_id(4, 0)] = 3;
  const EdgeColoring c(c5, colors, 4);
  CHECK(exists_rainbow_path(c5, c, 0, 2));
  CHECK_FALSE(exists_geodesic_rainbow_path(c5, c, 0, 2));
}

TEST_CASE("global and subset predicates") {
  const Graph k4 = oracle::complete(4);
  CHECK(is_rainbow_connected(k4, EdgeColoring::uniform(k4, 0, 1)));
  CHECK(is_strong_rainbow_connected(k4, EdgeColoring::uniform(k4, 0, 1)));

  const Graph c4 = oracle::cycle(4);
  CHECK(is_rainbow_connected(c4, alternating_c4(c4)));
  CHECK_FALSE(is_rainbow_connected(c4, EdgeColoring::uniform(c4, 0, 2)));

  const Graph k13 = oracle::star(3);  // center 0, leaves 1..3
  std::vector<Color> colors(3);
  colors[*k13.edge_id(0, 1)] = 0;
  colors[*k13.edge_id(0, 2)] = 0;
  colors[*k13.edge_id(0, 3)] = 1;
  const EdgeColoring c(k13, colors, 2);
  CHECK_FALSE(is_subset_rainbow_connected(k13, c, PairSet{{1, 2}}));
  CHECK(is_subset_rainbow_connected(k13, c, PairSet{{1, 3}}));
  CHECK(is_subset_strong_rainbow_connected(k13, c, PairSet{}));

  try {
    is_rainbow_connected(Graph(3, {{0, 1}}), EdgeColoring::uniform(Graph(3, {{0, 1}}), 0, 1));
    FAIL("expected DisconnectedError");
  } catch (const DisconnectedError& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 2);
  }
}

TEST_CASE("predicate implications hold on random colorings") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + t % 5;
    const Graph g = oracle::random_graph(rng, n, 0.6);
    if (!is_connected(g)) continue;
    const std::size_t k = 1 + t % 4;
    std::vector<Color> colors(g.edge_count());
    for (auto& c : colors) c = static_cast<Color>(rng() % k);
    const EdgeColoring c(g, colors, k);
    const bool rc = is_rainbow_connected(g, c);
    const bool src = is_strong_rainbow_connected(g, c);
    if (rc) CHECK(diameter(g) <= k);
    if (src) CHECK(rc);
    const auto some = PairSet(oracle::pairs_from_mask(n, rng()));
    if (rc) CHECK(is_subset_rainbow_connected(g, c, some));
    if (src) CHECK(is_subset_strong_rainbow_connected(g, c, some));
  }
}

TEST_CASE("rainbow search agrees with brute-force path enumeration") {
  // Exhaustive over every coloring with k <= 3 for a sample of graphs on up
  // to 7 vertices, and over all graphs on 4 vertices.
  std::vector<Graph> graphs;
  for (std::uint64_t mask = 0; mask < 64; ++mask) graphs.push_back(oracle::graph_from_mask(4, mask));
  std::mt19937_64 rng(99);
  while (graphs.size() < 64 + 8) {
    const Graph g = oracle::random_graph(rng, 6 + graphs.size() % 2, 0.35);
    if (g.edge_count() >= 5 && g.edge_count() <= 8) graphs.push_back(g);
  }
  for (const Graph& g : graphs) {
    const auto pairs = oracle::all_pairs(g.vertex_count());
    const oracle::PathTable any(g, pairs, g.vertex_count(), false);
    const oracle::PathTable geo(g, pairs, g.vertex_count(), true);
    const auto fw = oracle::floyd_warshall(g);
    for (std::size_t k = 1; k <= 3; ++k) {
      oracle::any_coloring(g.edge_count(), k, [&](const std::vector<Color>& colors) {
        const EdgeColoring c(g, colors, k);
        const RainbowChecker checker(g, c);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          const auto [u, v] = pairs[p];
          bool expect_any = false, expect_geo = false;
          for (const auto& path : any.paths[p]) expect_any |= oracle::rainbow(g, colors, path);
          for (const auto& path : geo.paths[p]) expect_geo |= oracle::rainbow(g, colors, path);
          const auto found = checker.find(u, v, PathKind::Any);
          REQUIRE(found.has_value() == expect_any);
          if (found) REQUIRE(is_rainbow_path(g, c, *found));
          const auto found_geo = checker.find(u, v, PathKind::Geodesic);
          REQUIRE(found_geo.has_value() == expect_geo);
          if (found_geo) REQUIRE(found_geo->length() == fw[u][v]);
          REQUIRE(exists_rainbow_path(g, c, u, v) == expect_any);
        }
        return false;
      });
    }
  }
}
