#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lhemb/multigraph.hpp"

using namespace lhemb;

namespace {

Multigraph triangle() { return build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

// Planar triangulation with multiple edges from the worked 5-vertex example:
// edges uv,ua,ub,uv,uc,va,vb,vc,ab.
Multigraph five_vertex_multi() {
  return build_graph({"a", "b", "c", "u", "v"},
                     {{"u", "v"},
                      {"u", "a"},
                      {"u", "b"},
                      {"u", "v"},
                      {"u", "c"},
                      {"v", "a"},
                      {"v", "b"},
                      {"v", "c"},
                      {"a", "b"}});
}

Multigraph octahedron() {
  return build_graph({"0", "1", "2", "3", "4", "5"},
                     {{"0", "2"}, {"0", "3"}, {"0", "4"}, {"0", "5"},
                      {"1", "2"}, {"1", "3"}, {"1", "4"}, {"1", "5"},
                      {"2", "4"}, {"2", "5"}, {"3", "4"}, {"3", "5"}});
}

Multigraph k4() {
  return build_graph({"a", "b", "c", "d"},
                     {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}

}  // namespace

TEST_CASE("build_graph basics and errors") {
  Multigraph t = triangle();
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.degree(0) == 2);

  Multigraph m = five_vertex_multi();
  CHECK(m.edge_count() == 9);
  CHECK(m.multiplicity(m.vertex_by_label("u"), m.vertex_by_label("v")) == 2);

  CHECK_THROWS_AS(build_graph({"a"}, {{"a", "a"}}, false), Error);
  CHECK_THROWS_AS(build_graph({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(build_graph({"a"}, {{"a", "b"}}), Error);
  CHECK_NOTHROW(build_graph({"a"}, {{"a", "a"}}, true));
}

TEST_CASE("handshake: sum of degrees is 2m, loops included") {
  for (const Multigraph& g :
       {triangle(), five_vertex_multi(), octahedron(),
        build_graph({"p", "q"}, {{"p", "q"}, {"p", "p"}}, true)}) {
    int total = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("is_simple_vertex") {
  Multigraph t = triangle();
  for (VertexId v = 0; v < 3; ++v) CHECK(is_simple_vertex(t, v));

  Multigraph m = five_vertex_multi();
  CHECK_FALSE(is_simple_vertex(m, m.vertex_by_label("u")));
  CHECK_FALSE(is_simple_vertex(m, m.vertex_by_label("v")));
  CHECK(is_simple_vertex(m, m.vertex_by_label("a")));

  Multigraph loop = build_graph({"p", "q"}, {{"p", "q"}, {"p", "p"}}, true);
  CHECK_FALSE(is_simple_vertex(loop, 0));
  CHECK(is_simple_vertex(loop, 1));
  CHECK_THROWS_AS(is_simple_vertex(t, 7), Error);
}

TEST_CASE("induced_neighborhood") {
  Multigraph oct = octahedron();
  // Every neighborhood of the octahedron is a 4-cycle: 4 vertices, 4 edges,
  // all degrees 2, connected.
  for (VertexId v = 0; v < 6; ++v) {
    Multigraph nb = induced_neighborhood(oct, v);
    CHECK(nb.vertex_count() == 4);
    CHECK(nb.edge_count() == 4);
    for (VertexId w = 0; w < 4; ++w) CHECK(nb.degree(w) == 2);
    CHECK(is_connected(nb));
  }

  Multigraph g = k4();
  Multigraph nb = induced_neighborhood(g, 0);
  CHECK(nb.vertex_count() == 3);
  CHECK(nb.edge_count() == 3);

  Multigraph path = build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  Multigraph nb2 = induced_neighborhood(path, 1);
  CHECK(nb2.vertex_count() == 2);
  CHECK(nb2.edge_count() == 0);

  // Never contains v; edges are exactly those of g with both ends in N(v).
  Multigraph m = five_vertex_multi();
  VertexId u = m.vertex_by_label("u");
  Multigraph nbu = induced_neighborhood(m, u);
  for (const auto& lab : nbu.labels()) CHECK(lab != "u");
}

TEST_CASE("canonical_code distinguishes and identifies") {
  // Two labelings of K4 agree.
  Multigraph a = k4();
  Multigraph b = build_graph({"x", "y", "z", "w"},
                             {{"z", "w"}, {"y", "w"}, {"x", "w"}, {"x", "y"}, {"y", "z"}, {"x", "z"}});
  CHECK(canonical_code(a) == canonical_code(b));

  // K4 vs. the 4-vertex multigraph triangulation (2-cycle uv + two simple
  // degree-2 vertices joined to both): same n and m, different codes.
  Multigraph mt = build_graph({"u", "v", "x", "y"},
                              {{"u", "v"}, {"u", "v"}, {"u", "x"}, {"v", "x"}, {"u", "y"}, {"v", "y"}});
  CHECK(canonical_code(a) != canonical_code(mt));

  // C5 vs P5.
  Multigraph c5 = build_graph({"1", "2", "3", "4", "5"},
                              {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}});
  Multigraph p5 = build_graph({"1", "2", "3", "4", "5"},
                              {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}});
  CHECK(canonical_code(c5) != canonical_code(p5));

  Multigraph big = build_graph_indexed(11, {});
  CHECK_THROWS_AS(canonical_code(big), Error);
}

TEST_CASE("canonical_code is invariant under relabeling (randomized)") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);  // n <= 7
    std::vector<std::array<VertexId, 2>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int mult = static_cast<int>(rng() % 3);  // 0..2 parallel edges
        for (int k = 0; k < mult; ++k) edges.push_back({i, j});
      }
    Multigraph g = build_graph_indexed(n, edges);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::array<VertexId, 2>> redges;
    for (auto [x, y] : edges) redges.push_back({perm[x], perm[y]});
    std::shuffle(redges.begin(), redges.end(), rng);
    Multigraph h = build_graph_indexed(n, redges);
    CHECK(canonical_code(g) == canonical_code(h));
  }
}

TEST_CASE("is_connected") {
  CHECK(is_connected(triangle()));
  CHECK(is_connected(build_graph({"a"}, {})));
  CHECK(is_connected(Multigraph()));
  Multigraph two = build_graph({"a", "b", "c", "d", "e", "f"},
                               {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}});
  CHECK_FALSE(is_connected(two));
}
