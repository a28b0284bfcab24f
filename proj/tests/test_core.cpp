#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ecgraph/core.hpp"
#include "ecgraph/io.hpp"
#include "ecgraph/reductions.hpp"
#include "support.hpp"

using namespace ecg;

TEST_CASE("colour helpers") {
  CHECK(other(other(Colour::Red)) == Colour::Red);
  CHECK(other(Colour::Blue) == Colour::Red);
  CHECK(colour_from_name("red") == Colour::Red);
  CHECK(!colour_from_name("green"));
}

TEST_CASE("parse minimal graph") {
  Graph g = parse_graph(R"({"vertices":["a","b"],"edges":[{"id":"e1","u":"a","v":"b","colour":"red"}]})");
  CHECK(g.n() == 2);
  CHECK(g.m() == 1);
  CHECK(g.edge(0).colour == Colour::Red);
  CHECK(g.edge(0).id == "e1");
}

TEST_CASE("parse errors name their location") {
  auto expect = [](const std::string& text, const std::string& fragment) {
    try {
      parse_graph(text);
      FAIL("accepted " << text);
    } catch (const ParseError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
    }
  };
  expect(R"({"vertices":["a"],"edges":[{"id":"e1","u":"a","v":"a","colour":"red"}]})", "self-loop");
  expect(R"({"vertices":["a","b"],"edges":[{"id":"e1","u":"a","v":"b","colour":"green"}]})", "$.edges[0].colour");
  expect(R"({"vertices":["a","b"],"edges":[{"id":"e1","u":"a","v":"b","colour":"red"},)"
         R"({"id":"e1","u":"a","v":"b","colour":"blue"}]})",
         "duplicate edge id");
  expect(R"({"vertices":["a","b"],"edges":[{"id":"e1","u":"a","v":"c","colour":"red"}]})", "$.edges[0].v");
  expect(R"({"vertices":["a"]})", "edges");
  expect("not json", "malformed");
}

TEST_CASE("efig fixture has 6 vertices and 5 + 5 edges") {
  Graph g = fixture("efig");
  CHECK(g.n() == 6);
  CHECK(g.m() == 10);
  int red = 0;
  for (const Edge& e : g.edges()) red += e.colour == Colour::Red;
  CHECK(red == 5);
}

TEST_CASE("json round trip keeps ids, parallel edges and order") {
  Graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("r", 0, 1, Colour::Red);
  g.add_edge("b", 0, 1, Colour::Blue);
  Graph h = parse_graph(serialize_graph(g, Format::Json));
  REQUIRE(h.n() == 2);
  REQUIRE(h.m() == 2);
  for (int e = 0; e < 2; ++e) {
    CHECK(h.edge(e).id == g.edge(e).id);
    CHECK(h.edge(e).colour == g.edge(e).colour);
    CHECK(h.edge(e).u == g.edge(e).u);
  }
  for (const auto& name : fixture_names()) {
    Graph f = fixture(name);
    CHECK(serialize_graph(parse_graph(serialize_graph(f, Format::Json)), Format::Json) ==
          serialize_graph(f, Format::Json));
  }
}

TEST_CASE("dot output of halfm has 11 coloured edges") {
  std::string dot = serialize_graph(fixture("halfm"), Format::Dot);
  auto count = [&](const std::string& s) {
    size_t k = 0;
    for (size_t p = dot.find(s); p != std::string::npos; p = dot.find(s, p + 1)) ++k;
    return k;
  };
  CHECK(count(" -- ") == 11);
  CHECK(count("color=red") == 6);
  CHECK(count("color=blue") == 5);
}

TEST_CASE("empty graph serializes to a valid document") {
  Graph g;
  Graph h = parse_graph(serialize_graph(g, Format::Json));
  CHECK(h.n() == 0);
  CHECK(h.m() == 0);
}

TEST_CASE("efig spanning closed trail verifies") {
  Graph g = fixture("efig");
  Trail t = support::closed_walk(g, {"v1", "v2", "v3", "v4", "v5", "v6", "v3", "v5"});
  CHECK(t.edges.size() == 8);
  CHECK(verify_trail(g, t));
  CHECK(verify_spanning_closed_trail(g, t));
  auto visits = visit_counts(g, t);
  CHECK(visits[g.vertex("v3")] == 2);
  CHECK(visits[g.vertex("v5")] == 2);
  CHECK(visits[g.vertex("v1")] == 1);

  Trail cut = t;
  cut.edges.pop_back();
  auto v = verify_trail(g, cut, TrailShape::Cycle);
  CHECK(!v);
  CHECK(v.violation == "not closed");
}

TEST_CASE("reusing an edge is rejected") {
  Graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("r", 0, 1, Colour::Red);
  g.add_edge("b", 0, 1, Colour::Blue);
  Trail good{0, {0, 1}, true};
  CHECK(verify_hamiltonian_cycle(g, good));
  Trail twice{0, {0, 0}, true};
  auto v = verify_trail(g, twice);
  CHECK(!v);
  CHECK(v.violation.find("edge repeated") == 0);
  Trail dangling{0, {0, 7}, true};
  CHECK(verify_trail(g, dangling).violation.find("dangling") == 0);
}

TEST_CASE("closed trail colour rule and balance") {
  Graph g;
  for (auto s : {"a", "b", "c"}) g.add_vertex(s);
  g.add_edge(0, 1, Colour::Red);
  g.add_edge(1, 2, Colour::Blue);
  g.add_edge(2, 0, Colour::Red);
  Trail tri{0, {0, 1, 2}, true};
  CHECK(!verify_trail(g, tri));
}

TEST_CASE("trail json round trip") {
  Graph g = fixture("efig");
  Trail t = support::closed_walk(g, {"v1", "v2", "v3", "v4", "v5", "v6", "v3", "v5"});
  Trail back = trail_from_json(g, trail_to_json(g, t));
  CHECK(back.edges == t.edges);
  CHECK(back.start == t.start);
  CHECK(back.closed);
  Json bad = trail_to_json(g, t);
  bad["edges"][0] = "nope";
  CHECK_THROWS_AS(trail_from_json(g, bad), ParseError);
}

TEST_CASE("realize assigns distinct parallel edges and refuses overuse") {
  Graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge(0, 1, Colour::Red);
  g.add_edge(0, 1, Colour::Blue);
  CHECK(realize_closed_walk(g, {0, 1}, {Colour::Red, Colour::Blue}));
  CHECK(!realize_closed_walk(g, {0, 1, 0, 1}, {Colour::Red, Colour::Blue, Colour::Red, Colour::Blue}));
}
