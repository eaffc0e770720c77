#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/error.hpp"
#include "rainbow/io.hpp"
#include "rainbow/serialize.hpp"

using namespace rainbow;

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("4 2\n0 1\n2 3\n");
  CHECK(g == Graph(4, {{0, 1}, {2, 3}}));
  CHECK(parse_edge_list("3 0\n\n\n") == Graph(3));
  CHECK(parse_edge_list("3 2\r\n1 0\r\n2 1\r\n") == Graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("edge list errors carry line and column") {
  try {
    parse_edge_list("4 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
  }
  try {
    parse_edge_list("4 2\n0 1\n2 q\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("4 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("4 1\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 5\n"), Error);
}

TEST_CASE("edge list emission is canonical and round-trips") {
  const std::string messy = "4 4\n3 2\n1 0\n0 1\n2 1\n";
  const Graph g = parse_edge_list(messy);
  const std::string canonical = emit_edge_list(g);
  CHECK(canonical == "4 3\n0 1\n1 2\n2 3\n");
  CHECK(emit_edge_list(parse_edge_list(canonical)) == canonical);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const Graph r = oracle::random_graph(rng, 1 + t % 7, 0.5);
    CHECK(parse_edge_list(emit_edge_list(r)) == r);
  }
}

TEST_CASE("instance JSON") {
  const auto inst = parse_instance_json(R"({"n": 3, "edges": [[1,0],[1,2]], "pairs": [[2,0]], "k": 2})");
  CHECK(inst.graph == Graph(3, {{0, 1}, {1, 2}}));
  REQUIRE(inst.pairs);
  CHECK(inst.pairs->pairs() == std::vector<VertexPair>{{0, 2}});
  CHECK(inst.k == 2u);

  const auto bare = parse_instance_json(R"({"n": 2, "edges": []})");
  CHECK_FALSE(bare.pairs);
  CHECK_FALSE(bare.k);

  const std::string text = emit_instance_json(inst);
  CHECK(text == "{\"n\":3,\"edges\":[[0,1],[1,2]],\"pairs\":[[0,2]],\"k\":2}\n");
  const auto again = parse_instance_json(text);
  CHECK(again.graph == inst.graph);
  CHECK(*again.pairs == *inst.pairs);

  CHECK(parse_instance("2 1\n0 1\n", Format::EdgeList).graph == Graph(2, {{0, 1}}));
}

TEST_CASE("instance JSON errors") {
  try {
    parse_json("{\n  \"n\": 3,\n  \"edges\": [[0,1]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_instance_json(R"({"edges": []})"), ParseError);
  CHECK_THROWS_AS(parse_instance_json(R"({"n": -1})"), ParseError);
  CHECK_THROWS_AS(parse_instance_json(R"({"n": 2, "edges": [[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_instance_json(R"([1,2])"), ParseError);
  CHECK_THROWS_AS(parse_instance_json(R"({"n": 2, "pairs": [[0,3]]})"), Error);
}

TEST_CASE("coloring JSON validates totality") {
  const Graph c4 = oracle::cycle(4);
  const auto c = parse_coloring_json(R"({"k":2,"colors":[[0,1,0],[1,2,1],[2,3,0],[0,3,1]]})", c4);
  CHECK(c.color(c4, 0, 3) == 1);
  CHECK(coloring_from_json(coloring_to_json(c4, c), c4) == c);

  CHECK_THROWS_AS(parse_coloring_json(R"({"k":2,"colors":[[0,1,0],[1,2,1],[2,3,0]]})", c4),
                  ParseError);
  CHECK_THROWS_AS(
      parse_coloring_json(R"({"k":2,"colors":[[0,1,0],[1,0,1],[1,2,1],[2,3,0],[0,3,1]]})", c4),
      ParseError);
  CHECK_THROWS_AS(
      parse_coloring_json(R"({"k":2,"colors":[[0,2,0],[1,2,1],[2,3,0],[0,3,1]]})", c4),
      ParseError);
  CHECK_THROWS_AS(
      parse_coloring_json(R"({"k":2,"colors":[[0,1,2],[1,2,1],[2,3,0],[0,3,1]]})", c4), Error);
}

TEST_CASE("DOT export marks highlighted vertices") {
  const Graph g(3, {{0, 1}, {1, 2}});
  const std::vector<Vertex> hl{2};
  const std::string dot = to_dot(g, hl);
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("2 [shape=doublecircle]") != std::string::npos);
  CHECK(dot.find("0 [shape=doublecircle]") == std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);

  const std::vector<std::string> labels{"a", "b", "c"};
  CHECK(to_dot(g, hl, labels).find("label=\"c\"") != std::string::npos);
}

TEST_CASE("reduced instance JSON round-trips") {
  const SubsetInstance inst{oracle::star(3), PairSet{{1, 2}, {1, 3}}, 3};
  const ReducedInstance red = rc_reduction(inst);
  const Json doc = reduced_to_json(red);
  CHECK(doc["n"] == red.graph.vertex_count());
  CHECK(doc["edges"].size() == red.graph.edge_count());
  CHECK(doc["base_vertices"].size() == 4);
  CHECK(doc["layer"]["0"] == "v[0,3]");
  CHECK(doc["layer"]["4"] == "u[0]");
  CHECK(doc["gadget_coloring"]["colors"].size() == red.gadget.graph.edge_count());

  const ReducedInstance back = reduced_from_json(parse_json(doc.dump()));
  CHECK(back.graph == red.graph);
  CHECK(back.gadget.graph == red.gadget.graph);
  CHECK(back.base_edges == red.base_edges);
  CHECK(back.pairs == red.pairs);
  CHECK(back.source.graph == inst.graph);
  CHECK(back.source.pairs == inst.pairs);
  CHECK(back.source.k == 3);
}

TEST_CASE("star and extension JSON") {
  const StarInstance star = star_reduction(oracle::complete(3), 3);
  const Json s = star_to_json(star);
  CHECK(s["n"] == 4);
  CHECK(s["center"] == 3);
  CHECK(s["pairs"].size() == 3);
  CHECK(s["layer"]["3"] == "a");

  const Json e = extension_to_json(src_extension(star));
  CHECK(e["n"] == 10);
  CHECK(e["side_one"].size() == 3);
  CHECK(e["matching"].size() == 3);
  CHECK(e["edge_layers"].size() == e["edges"].size());
}
