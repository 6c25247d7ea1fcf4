#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lhemb/flowers.hpp"

using namespace lhemb;

namespace {

FlowerDecomposition random_decomposition(std::mt19937& rng, int max_petals) {
  FlowerDecomposition d;
  d.base = (rng() % 2) ? "K2" : "K3";
  std::vector<std::string> avail = {"0", "1"};
  if (d.base == "K3") avail.push_back("2");
  int k = static_cast<int>(rng() % (max_petals + 1));
  for (int i = 0; i < k; ++i) {
    PetalKind kind = (rng() % 2) ? PetalKind::K2o : PetalKind::K3o;
    std::string at = avail[rng() % avail.size()];
    d.petals.push_back({kind, at});
    avail.push_back("p" + std::to_string(i));
    if (kind == PetalKind::K3o) avail.push_back("q" + std::to_string(i));
  }
  return d;
}

}  // namespace

TEST_CASE("build_flower: tiny cases and the 2n-3 identity") {
  Multigraph k2 = build_flower({"K2", {}});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  for (std::string at : {"0", "1"}) {
    Multigraph f = build_flower({"K2", {{PetalKind::K2o, at}}});
    CHECK(f.vertex_count() == 3);
    CHECK(f.edge_count() == 3);
  }

  Multigraph f3 = build_flower({"K3", {{PetalKind::K3o, "1"}}});
  CHECK(f3.vertex_count() == 5);
  CHECK(f3.edge_count() == 7);

  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    Multigraph f = build_flower(random_decomposition(rng, 6));
    CHECK(f.edge_count() == 2 * f.vertex_count() - 3);
    CHECK(is_connected(f));
  }
}

TEST_CASE("build_flower rejects bad input") {
  CHECK_THROWS_AS(build_flower({"K4", {}}), Error);
  try {
    build_flower({"K2", {{PetalKind::K2o, "zzz"}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadAttachmentVertex);
  }
  // "p0" exists only from step 1 on.
  CHECK_THROWS_AS(build_flower({"K2", {{PetalKind::K2o, "p0"}}}), Error);
  CHECK_NOTHROW(build_flower({"K2", {{PetalKind::K2o, "0"}, {PetalKind::K3o, "p0"}}}));
}

TEST_CASE("is_flower inverts build_flower up to isomorphism") {
  std::mt19937 rng(987123);
  int done = 0;
  for (int trial = 0; done < 100; ++trial) {
    FlowerDecomposition d = random_decomposition(rng, 3);
    Multigraph f = build_flower(d);
    if (f.vertex_count() > 10) continue;  // canonical_code cap
    ++done;
    auto back = is_flower(f);
    REQUIRE(back.has_value());
    Multigraph rebuilt = build_flower(*back);
    CHECK(canonical_code(rebuilt) == canonical_code(f));
  }
}

TEST_CASE("is_flower negatives") {
  // K3 plus one loop: m = 4 != 2n-3.
  Multigraph a = build_graph({"a", "b", "c"},
                             {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "a"}}, true);
  CHECK_FALSE(is_flower(a).has_value());

  // K2 with loops at both ends.
  Multigraph b = build_graph({"a", "b"}, {{"a", "b"}, {"a", "a"}, {"b", "b"}}, true);
  CHECK_FALSE(is_flower(b).has_value());

  // Right edge count but the loop sits on the wrong vertex for any peel:
  // pendant whose neighbor has no loop.
  Multigraph c = build_graph({"a", "b", "x"}, {{"a", "b"}, {"b", "b"}, {"a", "x"}}, true);
  CHECK_FALSE(is_flower(c).has_value());

  CHECK(is_flower(build_graph({"a", "b"}, {{"a", "b"}})).has_value());  // K2 itself
  CHECK(is_flower(build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}))
            .has_value());  // K3 itself
}

TEST_CASE("flower_scheme: genus 0 and edge-maximal") {
  // K2: a single face of length 2.
  EmbeddingScheme k2 = flower_scheme({"K2", {}});
  FaceSet fs = trace_faces(k2);
  CHECK(fs.count() == 1);
  CHECK(fs.faces[0].length() == 2);
  CHECK(euler_genus(k2) == 0);
  CHECK(is_edge_maximal(k2).maximal);

  // K2 + one K2o petal: the pendant shares faces only with its neighbor.
  EmbeddingScheme s = flower_scheme({"K2", {{PetalKind::K2o, "0"}}});
  CHECK(euler_genus(s) == 0);
  CHECK(is_edge_maximal(s).maximal);
  VertexId pendant = s.graph.vertex_by_label("p0");
  VertexId far = s.graph.vertex_by_label("1");
  for (const auto& f : trace_faces(s).faces) {
    auto vs = f.vertices(s.graph);
    bool has_p = std::find(vs.begin(), vs.end(), pendant) != vs.end();
    bool has_far = std::find(vs.begin(), vs.end(), far) != vs.end();
    CHECK_FALSE((has_p && has_far));
  }

  // K3 with three K2o petals stacked on one vertex: a long face appears.
  EmbeddingScheme t = flower_scheme(
      {"K3", {{PetalKind::K2o, "0"}, {PetalKind::K2o, "0"}, {PetalKind::K2o, "0"}}});
  CHECK(euler_genus(t) == 0);
  CHECK(is_edge_maximal(t).maximal);
  int longest = 0;
  for (const auto& f : trace_faces(t).faces) longest = std::max(longest, f.length());
  CHECK(longest >= 6);

  // Spread over all three vertices the scheme stays maximal and genus 0.
  EmbeddingScheme u = flower_scheme(
      {"K3", {{PetalKind::K2o, "0"}, {PetalKind::K2o, "1"}, {PetalKind::K2o, "2"}}});
  CHECK(euler_genus(u) == 0);
  CHECK(is_edge_maximal(u).maximal);
}

TEST_CASE("flower_scheme on random decompositions") {
  std::mt19937 rng(5550001);
  for (int trial = 0; trial < 100; ++trial) {
    FlowerDecomposition d = random_decomposition(rng, 6);
    EmbeddingScheme s = flower_scheme(d);
    CHECK(euler_genus(s) == 0);
    CHECK(is_edge_maximal(s).maximal);
    CHECK(same_graph(s.graph, build_flower(d)));
  }
}
