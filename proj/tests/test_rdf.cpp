#include <doctest.h>

#include <random>

#include "afkg/error.hpp"
#include "afkg/rdf/graph.hpp"
#include "afkg/rdf/turtle.hpp"
#include "helpers.hpp"

using afkg::rdf::Graph;
using afkg::rdf::Term;
using afkg::rdf::Triple;
using afkg::rdf::graphs_equal;
using afkg::rdf::parse_turtle;
using afkg::rdf::serialize_ntriples;
using afkg::rdf::serialize_turtle;

TEST_CASE("empty document parses to an empty graph") {
  Graph g = parse_turtle("");
  CHECK(g.size() == 0);
  CHECK(g.empty());
}

TEST_CASE("prefixed statement expands to the full predicate IRI") {
  Graph g = parse_turtle(
      "@prefix metanet: <https://w3id.org/framester/metanet/schema/> . "
      "@prefix metaphordata: <https://w3id.org/framester/metanet/metaphors/> . "
      "@prefix framedata: <https://w3id.org/framester/metanet/frames/> . "
      "metaphordata:CRIME_IS_A_DISEASE metanet:hasSourceFrame framedata:Disease .");
  REQUIRE(g.size() == 1);
  const Triple& t = *g.begin();
  CHECK(t.predicate.value ==
        "https://w3id.org/framester/metanet/schema/hasSourceFrame");
  CHECK(t.subject.value ==
        "https://w3id.org/framester/metanet/metaphors/CRIME_IS_A_DISEASE");
}

TEST_CASE("truncated statement reports position after the predicate") {
  const std::string text =
      "@prefix metanet: <https://w3id.org/framester/metanet/schema/> .\n"
      "@prefix metaphordata: <https://w3id.org/framester/metanet/metaphors/> .\n"
      "metaphordata:X metanet:hasSourceFrame";
  CHECK_THROWS_AS(parse_turtle(text), afkg::ParseError);
  try {
    parse_turtle(text);
  } catch (const afkg::ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() > 15);
  }
}

TEST_CASE("unknown prefix is rejected with a position") {
  CHECK_THROWS_AS(parse_turtle("nope:x nope:y nope:z ."), afkg::ParseError);
}

TEST_CASE("relative IRI without a base is rejected, with a base it resolves") {
  CHECK_THROWS_AS(parse_turtle("<x> <http://e/p> <http://e/o> ."),
                  afkg::ParseError);
  Graph g = parse_turtle("<x> <http://e/p> <http://e/o> .", "http://base/dir/");
  CHECK(g.begin()->subject.value == "http://base/dir/x");
}

TEST_CASE("collections and anonymous blank nodes are rejected") {
  CHECK_THROWS_AS(parse_turtle("<http://e/s> <http://e/p> ( 1 2 ) ."),
                  afkg::ParseError);
  CHECK_THROWS_AS(parse_turtle("<http://e/s> <http://e/p> [ <http://e/q> 1 ] ."),
                  afkg::ParseError);
}

TEST_CASE("semicolon and comma lists, 'a', comments, literals") {
  Graph g = parse_turtle(
      "@prefix ex: <http://e/> .\n"
      "# a comment line\n"
      "ex:s a ex:T ;\n"
      "  ex:p ex:o1 , ex:o2 ;\n"
      "  ex:q \"text\"@en , \"5\"^^ex:dt , 7 , 3.25 .\n");
  CHECK(g.size() == 7);
  CHECK(g.contains({Term::iri("http://e/s"),
                    Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"),
                    Term::iri("http://e/T")}));
  CHECK(g.contains({Term::iri("http://e/s"), Term::iri("http://e/q"),
                    Term::literal("text", "en")}));
  CHECK(g.contains({Term::iri("http://e/s"), Term::iri("http://e/q"),
                    Term::literal("5", "", "http://e/dt")}));
  CHECK(g.contains({Term::iri("http://e/s"), Term::iri("http://e/q"),
                    Term::literal("7", "",
                                  "http://www.w3.org/2001/XMLSchema#integer")}));
  CHECK(g.contains({Term::iri("http://e/s"), Term::iri("http://e/q"),
                    Term::literal("3.25", "",
                                  "http://www.w3.org/2001/XMLSchema#decimal")}));
}

TEST_CASE("labeled blank nodes parse; graphs_equal rejects them") {
  Graph g = parse_turtle("_:b <http://e/p> _:c .");
  CHECK(g.has_blank_nodes());
  CHECK_THROWS_AS(graphs_equal(g, g), afkg::Error);
}

TEST_CASE("insert rejects literal subjects and non-IRI predicates") {
  Graph g;
  CHECK_THROWS_AS(g.insert(Term::literal("x"), Term::iri("http://e/p"),
                           Term::iri("http://e/o")),
                  afkg::Error);
  CHECK_THROWS_AS(g.insert(Term::iri("http://e/s"), Term::blank("b"),
                           Term::iri("http://e/o")),
                  afkg::Error);
}

TEST_CASE("insert idempotence") {
  Graph g;
  Triple t{Term::iri("http://e/s"), Term::iri("http://e/p"),
           Term::literal("v")};
  CHECK(g.insert(t));
  CHECK_FALSE(g.insert(t));
  CHECK(g.size() == 1);
  CHECK(g.pos_index().size() == 1);
  CHECK(g.osp_index().size() == 1);
}

TEST_CASE("graphs_equal distinguishes a one-triple difference") {
  Graph a = parse_turtle("<http://e/s> <http://e/p> <http://e/o> .");
  Graph b = parse_turtle(
      "<http://e/s> <http://e/p> <http://e/o> .\n"
      "<http://e/s> <http://e/p> <http://e/o2> .");
  CHECK(graphs_equal(a, a));
  CHECK_FALSE(graphs_equal(a, b));
}

TEST_CASE("serialization is deterministic and round-trips the fixtures") {
  for (const char* name : {"fig1.ttl", "fig2.ttl", "fig3.ttl",
                           "forgery_is_amnesia.ttl", "propose_extra.ttl",
                           "suggest.ttl"}) {
    CAPTURE(name);
    Graph g = parse_turtle(testutil::read_fixture(name));
    std::string once = serialize_turtle(g);
    std::string twice = serialize_turtle(parse_turtle(once));
    CHECK(once == twice);
    CHECK(graphs_equal(g, parse_turtle(once)));
  }
}

TEST_CASE("empty graph serializes to prefix declarations only") {
  Graph g;
  CHECK(serialize_turtle(g).empty());
  g.add_prefix("ex", "http://e/");
  CHECK(serialize_turtle(g) == "@prefix ex: <http://e/> .\n");
}

TEST_CASE("ntriples output is one sorted line per triple with absolute IRIs") {
  Graph g = parse_turtle(
      "@prefix ex: <http://e/> . ex:b ex:p \"x\\ny\" . ex:a ex:p ex:o .");
  CHECK(serialize_ntriples(g) ==
        "<http://e/a> <http://e/p> <http://e/o> .\n"
        "<http://e/b> <http://e/p> \"x\\ny\" .\n");
}

TEST_CASE("literal escapes round-trip") {
  Graph g;
  g.insert(Term::iri("http://e/s"), Term::iri("http://e/p"),
           Term::literal("line\n\"quoted\"\ttab\\slash"));
  Graph back = parse_turtle(serialize_turtle(g));
  CHECK(graphs_equal(g, back));
}

TEST_CASE("round-trip property on random ground graphs") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 100; ++i) {
    auto pool = testutil::make_pool(rng);
    Graph g = testutil::random_graph(rng, pool, 500);
    Graph back = parse_turtle(serialize_turtle(g));
    CAPTURE(i);
    CHECK(graphs_equal(g, back));
  }
}

TEST_CASE("index coherence: every index answers single patterns identically") {
  using afkg::rdf::Binding;
  using afkg::rdf::TriplePattern;
  using afkg::rdf::Variable;
  std::mt19937 rng(7);
  auto pool = testutil::make_pool(rng);
  Graph g = testutil::random_graph(rng, pool, 200);
  std::vector<Triple> all(g.begin(), g.end());

  auto check_pattern = [&](const TriplePattern& p) {
    std::vector<Binding> expect;
    testutil::oracle_join(all, {p}, 0, {}, expect);
    auto got = afkg::rdf::match_pattern(g, p);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  };

  for (int i = 0; i < 200; ++i) check_pattern(testutil::random_pattern(rng, pool));
  // All eight concrete/variable shapes on a known triple.
  if (!all.empty()) {
    const Triple& t = all.front();
    for (int mask = 0; mask < 8; ++mask) {
      TriplePattern p{
          (mask & 1) ? afkg::rdf::PatternTerm{Variable{"s"}}
                     : afkg::rdf::PatternTerm{t.subject},
          (mask & 2) ? afkg::rdf::PatternTerm{Variable{"p"}}
                     : afkg::rdf::PatternTerm{t.predicate},
          (mask & 4) ? afkg::rdf::PatternTerm{Variable{"o"}}
                     : afkg::rdf::PatternTerm{t.object}};
      check_pattern(p);
    }
  }
}
