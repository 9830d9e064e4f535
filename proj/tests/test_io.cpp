#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "phylosemi/atlas.hpp"
#include "phylosemi/families.hpp"
#include "phylosemi/generators.hpp"
#include "phylosemi/io.hpp"
#include "support/suite.hpp"

using namespace phylosemi;
using suite::lab;

TEST_CASE("graph round trip") {
  for (const Graph& g : suite::all()) {
    std::string text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
  }
  CHECK(serialize_graph(theta()) ==
        "{\n"
        "  \"edges\": [\n"
        "    {\"ends\":[\"u\",\"v\"],\"id\":\"a\"},\n"
        "    {\"ends\":[\"u\",\"v\"],\"id\":\"b\"},\n"
        "    {\"ends\":[\"u\",\"v\"],\"id\":\"c\"}\n"
        "  ],\n"
        "  \"name\": \"theta\"\n"
        "}\n");
}

TEST_CASE("graph parsing accepts any edge order and no name") {
  Graph g = parse_graph(R"({"edges": [{"id": "b", "ends": ["w", "w"]}, {"id": "a", "ends": ["w", "x"]}]})");
  CHECK(g.edge_ids() == std::vector<std::string>{"a", "b"});
  CHECK(g.name().empty());
  CHECK(g.edge(1).is_loop());
}

TEST_CASE("graph parse errors") {
  CHECK_THROWS_AS(parse_graph("{"), ParseError);
  CHECK_THROWS_AS(parse_graph("[]"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"name": "x"})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"edges": [{"id": "a", "ends": ["u"]}]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"edges": [{"id": 3, "ends": ["u", "v"]}]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"edges": [{"id": "a", "ends": ["u", "v"]}, {"id": "a", "ends": ["u", "v"]}]})"),
                  ParseError);
  CHECK_THROWS_AS(read_file("/nonexistent/graph.json"), ParseError);
}

TEST_CASE("labeling round trip") {
  for (const Graph& g : suite::all()) {
    auto nets = enumerate_networks(g);
    for (std::size_t i = 0; i < nets.size(); i += 3) {
      Labeling w = nets[i] + nets[nets.size() - 1 - i];
      CHECK(parse_labeling(g, serialize_labeling(g, w)) == w);
    }
    CHECK(parse_labelings(g, serialize_labelings(g, nets)) == nets);
  }
  Graph t = theta();
  CHECK(serialize_labeling(t, lab(t, 1, {{"a", 1}, {"b", 1}})) ==
        "{\n  \"degree\": 1,\n  \"labels\": {\n    \"a\": 1,\n    \"b\": 1,\n    \"c\": 0\n  }\n}\n");
}

TEST_CASE("labeling parse errors") {
  Graph t = theta();
  CHECK_THROWS_AS(parse_labeling(t, R"({"degree": 1, "labels": {"a": 1, "b": 1}})"), ParseError);
  CHECK_THROWS_AS(parse_labeling(t, R"({"degree": 1, "labels": {"a": 1, "b": 1, "c": 0, "d": 0}})"), ParseError);
  CHECK_THROWS_AS(parse_labeling(t, R"({"labels": {"a": 1, "b": 1, "c": 0}})"), ParseError);
  CHECK_THROWS_AS(parse_labeling(t, R"({"degree": 1.5, "labels": {"a": 1, "b": 1, "c": 0}})"), ParseError);
  CHECK_THROWS_AS(parse_labelings(t, R"({"degree": 1})"), ParseError);
}

TEST_CASE("reports") {
  Graph t = theta();
  GeneratorReport r = minimal_generators(t, 3);
  std::vector<std::string> tags(r.generators.size(), "Network");
  CHECK(report_csv(t, r, tags) ==
        "degree,a,b,c,tag\n1,0,0,0,Network\n1,0,1,1,Network\n1,1,0,1,Network\n1,1,1,0,Network\n");
  std::string json = report_json(t, r, tags);
  CHECK(json.find("\"cap_hit\": false") != std::string::npos);
  CHECK(json.find("\"max_degree\": 1") != std::string::npos);
  std::string text = report_text(t, r, tags);
  CHECK(text.find("max_degree=1 cap=3 cap_hit=false") != std::string::npos);
}

TEST_CASE("atlas rows") {
  CHECK(atlas_header() == "family,params,betti,edges,max_degree,cap_hit,wall_ms");
  AtlasRow row{"multi_edge", 3, 3, 4, 1, false, 12.345};
  CHECK(atlas_csv(row) == "multi_edge,3,3,4,1,false,12.3");

  AtlasRow m = atlas_row("multi_edge", 2, std::nullopt);
  CHECK(m.betti == 2);
  CHECK(m.edges == 3);
  CHECK(m.max_degree == 1);
  CHECK_FALSE(m.cap_hit);

  std::vector<int> seen;
  run_atlas("polygon", 1, 5, 3, 3, {2, 4}, [&](const AtlasRow& r) {
    seen.push_back(r.param);
    CHECK(r.max_degree == 2);
  });
  CHECK(seen == std::vector<int>{1, 3, 5});
  CHECK_THROWS_AS(atlas_row("nope", 1, std::nullopt), std::invalid_argument);
}
