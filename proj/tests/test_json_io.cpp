#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lhemb/fixtures.hpp"
#include "lhemb/json_io.hpp"

using namespace lhemb;

TEST_CASE("graph round trip") {
  Multigraph g = build_graph({"u", "v", "x"},
                             {{"u", "v"}, {"u", "v"}, {"v", "x"}, {"x", "x"}}, true);
  std::string j = graph_to_json(g);
  ParsedInput in = parse_input(j);
  CHECK(same_graph(in.graph, g));
  CHECK_FALSE(in.scheme.has_value());
  CHECK(graph_to_json(in.graph) == j);
}

TEST_CASE("scheme round trip keeps rotations and signature") {
  Multigraph g = build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  EmbeddingScheme s = EmbeddingScheme::make(g, {{0, 5}, {1, 2}, {3, 4}}, {1, -1, 1});
  std::string j = scheme_to_json(s);
  ParsedInput in = parse_input(j);
  REQUIRE(in.scheme.has_value());
  CHECK(in.scheme->rotation == s.rotation);
  CHECK(in.scheme->signature == s.signature);
  CHECK(scheme_to_json(*in.scheme) == j);
}

TEST_CASE("parse errors name the offending field") {
  CHECK_THROWS_AS(parse_input("{"), Error);
  try {
    parse_input("{\"vertices\": [\"a\"], \"edges\": 3}");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(std::string(e.what()).find("edges") != std::string::npos);
  }
  // Edge id gap 0,2.
  std::string gap = R"({"vertices": ["a","b","c"],
    "edges": [{"id": 0, "ends": ["a","b"]}, {"id": 2, "ends": ["b","c"]}]})";
  try {
    parse_input(gap);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(std::string(e.what()).find("edges[1].id") != std::string::npos);
  }
  // Loop without the flag.
  CHECK_THROWS_AS(
      parse_input(R"({"vertices": ["a"], "edges": [{"id": 0, "ends": ["a","a"]}]})"), Error);
  // Rotation referencing a missing vertex.
  std::string badrot = R"({"vertices": ["a","b"], "edges": [{"id": 0, "ends": ["a","b"]}],
    "embedding": {"rotations": {"a": [[0,0]]}}})";
  try {
    parse_input(badrot);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("rotations") != std::string::npos);
  }
}

TEST_CASE("decomposition and trace round trips") {
  FlowerDecomposition d{"K3", {{PetalKind::K2o, "0"}, {PetalKind::K3o, "p0"}}};
  FlowerDecomposition back = parse_decomposition(decomposition_to_json(d));
  CHECK(back.base == d.base);
  REQUIRE(back.petals.size() == 2);
  CHECK(back.petals[1].at == "p0");
  CHECK(back.petals[1].kind == PetalKind::K3o);
  CHECK_THROWS_AS(parse_decomposition(R"({"base": "K5", "petals": []})"), Error);

  Multigraph oct = build_graph({"0", "1", "2", "3", "4", "5"},
                               {{"0", "2"}, {"0", "3"}, {"0", "4"}, {"0", "5"},
                                {"1", "2"}, {"1", "3"}, {"1", "4"}, {"1", "5"},
                                {"2", "4"}, {"2", "5"}, {"3", "4"}, {"3", "5"}});
  auto rec = reconstruct_triangulation(oct);
  ReconstructionTrace back_t = parse_trace(trace_to_json(rec.trace));
  EmbeddingScheme replayed = replay_trace(oct, back_t);
  CHECK(replayed.rotation == rec.scheme.rotation);
}

TEST_CASE("bundled fixtures parse and serialize bit-exactly") {
  for (const auto& f : bundled_fixtures()) {
    INFO(f.name);
    if (f.name == "flower_decomposition.json") {
      FlowerDecomposition d = parse_decomposition(f.content);
      CHECK(decomposition_to_json(d) == f.content);
      continue;
    }
    ParsedInput in = parse_input(f.content);
    REQUIRE(in.scheme.has_value());
    CHECK(scheme_to_json(*in.scheme) == f.content);
  }
}

TEST_CASE("counterexample fixtures have the advertised shapes") {
  for (const auto& f : bundled_fixtures()) {
    if (f.name == "k4_projective.json") {
      auto s = *parse_input(f.content).scheme;
      CHECK(euler_genus(s) == 1);
      FaceSet fs = trace_faces(s);
      CHECK(fs.count() == 3);
      for (const auto& fa : fs.faces) CHECK(fa.length() == 4);
      CHECK(is_edge_maximal(s).maximal);
    }
    if (f.name == "five_multi_projective.json") {
      auto s = *parse_input(f.content).scheme;
      CHECK(euler_genus(s) == 1);
      CHECK(is_edge_maximal(s).maximal);
    }
    if (f.name == "c5_sphere.json") {
      auto s = *parse_input(f.content).scheme;
      CHECK(euler_genus(s) == 0);
      CHECK_FALSE(is_edge_maximal(s).maximal);
    }
  }
}

TEST_CASE("to_dot lists every edge and rotation comments") {
  Multigraph g = build_graph({"a", "b"}, {{"a", "b"}, {"a", "b"}, {"a", "a"}}, true);
  std::string dot = to_dot(g);
  CHECK(dot.find("\"a\" -- \"b\" [label=\"0\"]") != std::string::npos);
  CHECK(dot.find("\"a\" -- \"b\" [label=\"1\"]") != std::string::npos);
  CHECK(dot.find("\"a\" -- \"a\" [label=\"2\"]") != std::string::npos);

  Multigraph t = build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  EmbeddingScheme s = EmbeddingScheme::make(t, {{0, 5}, {1, 2}, {3, 4}}, {1, 1, -1});
  std::string sdot = to_dot(t, &s);
  CHECK(sdot.find("rotation at a") != std::string::npos);
  CHECK(sdot.find("negative edges: 2") != std::string::npos);
}

TEST_CASE("parser survives 10k mutated fixtures") {
  std::vector<std::string> seeds;
  for (const auto& f : bundled_fixtures())
    if (f.name != "flower_decomposition.json") seeds.push_back(f.content);
  std::mt19937 rng(314159);
  int parsed_ok = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::string s = seeds[rng() % seeds.size()];
    int edits = 1 + rng() % 4;
    for (int k = 0; k < edits && !s.empty(); ++k) {
      std::size_t pos = rng() % s.size();
      switch (rng() % 4) {
        case 0: s[pos] = static_cast<char>(32 + rng() % 95); break;
        case 1: s.erase(pos, 1 + rng() % 3); break;
        case 2: s.insert(pos, 1, static_cast<char>(32 + rng() % 95)); break;
        case 3: s.resize(pos); break;
      }
    }
    try {
      parse_input(s);
      ++parsed_ok;
    } catch (const Error&) {
      // expected for most mutations; anything else would abort the test
    }
  }
  CHECK(parsed_ok >= 0);
}
