#include "doctest.h"

#include <array>

#include "cubeconf/error.hpp"
#include "cubeconf/graph.hpp"
#include "oracle.hpp"

using namespace cubeconf;

namespace {

std::vector<std::string> zoo_specs() {
  return {"Y", "Q", "X", "K5", "K33", "Upsilon:5", "cycle:1", "cycle:2", "cycle:5", "path:1", "path:3"};
}

std::vector<std::string> names_of(const Graph& g, const std::vector<VertexId>& ids) {
  std::vector<std::string> out;
  for (VertexId v : ids) out.push_back(g.vertex(v).name);
  return out;
}

}  // namespace

TEST_CASE("parse the smallest nonempty graph") {
  const Graph g = parse_graph("v a\nv b\ne e1 a b");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
}

TEST_CASE("parse accepts comments, blank lines and interleaving") {
  const Graph g = parse_graph("# two edges\n\nv a\nv b\ne x a b\nv c\r\ne y b c\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.find_edge("y") == EdgeId{1});
}

TEST_CASE("parse errors carry the line number") {
  SUBCASE("unknown endpoint") {
    try {
      parse_graph("e e1 a b");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(std::string(e.what()).find("unknown endpoint") != std::string::npos);
    }
  }
  SUBCASE("duplicate vertex") {
    try {
      parse_graph("v a\n# x\nv a\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("duplicate edge") { CHECK_THROWS_AS(parse_graph("v a\nv b\ne x a b\ne x a b"), ParseError); }
  SUBCASE("syntax") {
    CHECK_THROWS_AS(parse_graph("v"), ParseError);
    CHECK_THROWS_AS(parse_graph("v a b"), ParseError);
    CHECK_THROWS_AS(parse_graph("q a"), ParseError);
    CHECK_THROWS_AS(parse_graph("v a$"), ParseError);
  }
}

TEST_CASE("serialize then parse is the identity on the builtin zoo") {
  for (const auto& spec : zoo_specs()) {
    CAPTURE(spec);
    const Graph g = builtin_from_spec(spec);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("builtin sizes") {
  const Graph k5 = builtin("K5");
  CHECK(k5.vertex_count() == 5);
  CHECK(k5.edge_count() == 10);
  const Graph k33 = builtin("K33");
  CHECK(k33.vertex_count() == 6);
  CHECK(k33.edge_count() == 9);
  const Graph q = builtin("Q");
  CHECK(q.vertex_count() == 3);
  CHECK(q.edge_count() == 3);
  int parallel_pairs = 0;
  for (const auto& a : q.edges()) {
    for (const auto& b : q.edges()) {
      if (a.id < b.id && a.tail() == b.tail() && a.head() == b.head()) ++parallel_pairs;
    }
  }
  CHECK(parallel_pairs == 1);
  CHECK(builtin("Y") == builtin_from_spec("Upsilon:3"));
  CHECK(builtin("X") == builtin_from_spec("Upsilon(4)"));
  CHECK(builtin_from_spec("cycle:1").has_self_loop());
  CHECK(builtin_from_spec("path:4").vertex_count() == 5);
}

TEST_CASE("builtin rejects bad names and parameters") {
  CHECK_THROWS_AS(builtin("K7"), Error);
  CHECK_THROWS_AS(builtin_from_spec("Upsilon:2"), Error);
  CHECK_THROWS_AS(builtin_from_spec("cycle:0"), Error);
  CHECK_THROWS_AS(builtin_from_spec("path:x"), Error);
  CHECK_THROWS_AS(builtin_from_spec("Upsilon"), Error);
}

TEST_CASE("essential vertices") {
  const Graph y = builtin("Y");
  CHECK(names_of(y, essential_vertices(y)) == std::vector<std::string>{"c", "l1", "l2", "l3"});
  CHECK(essential_vertices(builtin_from_spec("cycle:5")).empty());
  const Graph q = builtin("Q");
  CHECK(q.valence(*q.find_vertex("b")) == 2);
  CHECK(names_of(q, essential_vertices(q)) == std::vector<std::string>{"a", "c"});
  CHECK(builtin_from_spec("cycle:1").valence(0) == 2);
}

TEST_CASE("separation and girth of the named examples") {
  const Graph y = builtin("Y");
  CHECK(essential_separation(y) == 1);
  CHECK_FALSE(girth(y).has_value());
  CHECK(girth(builtin("Q")) == 2);
  CHECK(girth(builtin("K5")) == 3);
  CHECK(essential_separation(builtin("K5")) == 1);
  CHECK(girth(builtin("K33")) == 4);
  CHECK_FALSE(essential_separation(builtin_from_spec("cycle:4")).has_value());
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(girth(builtin("cycle", std::array{n})) == n);
    CHECK(essential_separation(builtin("path", std::array{n})) == n);
  }
}

TEST_CASE("shortest cycle witness is a genuine cycle of girth length") {
  for (const auto& spec : zoo_specs()) {
    CAPTURE(spec);
    const Graph g = builtin_from_spec(spec);
    const auto cycle = shortest_cycle(g);
    const int expected = oracle::brute_girth(g);
    if (expected < 0) {
      CHECK_FALSE(cycle.has_value());
      continue;
    }
    REQUIRE(cycle.has_value());
    CHECK(cycle->length() == expected);
    CHECK(is_simple_cycle(g, cycle->edges));
  }
  // Subdivided graphs have longer, less obvious shortest cycles.
  for (const auto& spec : {"K5", "K33", "Q"}) {
    const Graph g = subdivide(builtin_from_spec(spec), 0, 3);
    const auto cycle = shortest_cycle(g);
    REQUIRE(cycle.has_value());
    CHECK(cycle->length() == oracle::brute_girth(g));
    CHECK(is_simple_cycle(g, cycle->edges));
  }
}

TEST_CASE("check_sufficiency") {
  SUBCASE("Y with two robots is faithful") {
    const auto r = check_sufficiency(builtin("Y"), 2);
    CHECK(r.satisfied);
    CHECK_FALSE(r.witness_path.has_value());
    CHECK_FALSE(r.witness_cycle.has_value());
  }
  SUBCASE("Q fails the loop condition with a 2-cycle") {
    const Graph q = builtin("Q");
    const auto r = check_sufficiency(q, 2);
    CHECK_FALSE(r.satisfied);
    CHECK(r.condition1_ok);
    CHECK_FALSE(r.condition2_ok);
    REQUIRE(r.witness_cycle.has_value());
    CHECK(r.witness_cycle->length() == 2);
    CHECK(is_simple_cycle(q, r.witness_cycle->edges));
  }
  SUBCASE("one extra vertex on a parallel edge of Q fixes it") {
    const Graph q = builtin("Q");
    const auto r = check_sufficiency(subdivide(q, *q.find_edge("ab1"), 2), 2);
    CHECK(r.satisfied);
  }
  SUBCASE("path witness re-measures as a violation") {
    const Graph y = builtin("Y");
    const auto r = check_sufficiency(y, 3);
    CHECK_FALSE(r.condition1_ok);
    REQUIRE(r.witness_path.has_value());
    CHECK(distance(y, r.witness_path->a, r.witness_path->b) == r.witness_path->edges);
    CHECK(r.witness_path->edges < 3 - 1);
  }
  SUBCASE("too few vertices") {
    const auto r = check_sufficiency(builtin_from_spec("path:1"), 3);
    CHECK_FALSE(r.vertex_count_ok);
    CHECK_FALSE(r.satisfied);
  }
  SUBCASE("n below 2 is rejected") { CHECK_THROWS_AS(check_sufficiency(builtin("Y"), 1), Error); }
}

TEST_CASE("subdivide") {
  const Graph one = builtin_from_spec("path:1");
  const Graph two = subdivide(one, 0, 2);
  CHECK(two.vertex_count() == 3);
  CHECK(two.edge_count() == 2);
  CHECK(essential_separation(two) == 2);
  CHECK(girth(two) == std::nullopt);
  CHECK_THROWS_AS(subdivide(one, 5, 2), Error);
  CHECK_THROWS_AS(subdivide(one, 0, 1), Error);

  const Graph loop = subdivide(builtin_from_spec("cycle:1"), 0, 3);
  CHECK_FALSE(loop.has_self_loop());
  CHECK(girth(loop) == 3);
}

TEST_CASE("subdivide_for picks the smallest uniform part count") {
  CHECK(uniform_parts_for(builtin("Q"), 2) == 2);
  CHECK(check_sufficiency(subdivide_for(builtin("Q"), 2), 2).satisfied);
  CHECK(uniform_parts_for(builtin("Y"), 3) == 2);
  CHECK(uniform_parts_for(builtin("Y"), 2) == 1);
  CHECK_THROWS_AS(uniform_parts_for(Graph{}, 2), Error);
}

TEST_CASE("property: uniform subdivision scales cycles and separation, keeps essentials") {
  for (const auto& spec : zoo_specs()) {
    const Graph g = builtin_from_spec(spec);
    for (int m = 2; m <= 4; ++m) {
      CAPTURE(spec);
      CAPTURE(m);
      const Graph h = subdivide_uniform(g, m);
      CHECK(names_of(h, essential_vertices(h)) == names_of(g, essential_vertices(g)));
      if (auto s = essential_separation(g)) CHECK(essential_separation(h) == *s * m);
      if (auto c = girth(g)) CHECK(girth(h) == *c * m);
    }
  }
}

TEST_CASE("property: subdivide_for satisfies the conditions across the zoo") {
  for (const auto& spec : zoo_specs()) {
    const Graph g = builtin_from_spec(spec);
    for (int n = 2; n <= 4; ++n) {
      CAPTURE(spec);
      CAPTURE(n);
      const int m = uniform_parts_for(g, n);
      CHECK(check_sufficiency(subdivide_uniform(g, m), n).satisfied);
      if (m > 1) CHECK_FALSE(check_sufficiency(subdivide_uniform(g, m - 1), n).satisfied);
    }
  }
}
