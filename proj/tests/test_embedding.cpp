#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "lhemb/embedding.hpp"

using namespace lhemb;

namespace {

Multigraph triangle() { return build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

Multigraph k4() {
  return build_graph({"a", "b", "c", "d"},
                     {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}

std::vector<std::vector<Dart>> rotation_by_dart_order(const Multigraph& g) {
  std::vector<std::vector<Dart>> rot;
  for (VertexId v = 0; v < g.vertex_count(); ++v) rot.push_back(g.darts_at(v));
  return rot;
}

// Test-local exhaustive scan over all schemes of g: every cyclic dart order
// per vertex (first dart pinned) times every signature pattern.
void for_each_scheme(const Multigraph& g, bool all_positive,
                     const std::function<bool(const EmbeddingScheme&)>& visit) {
  std::vector<std::vector<Dart>> rot = rotation_by_dart_order(g);
  const int m = g.edge_count();
  std::function<bool(VertexId)> rec = [&](VertexId v) -> bool {
    if (v == g.vertex_count()) {
      int patterns = all_positive ? 1 : (1 << m);
      for (int mask = 0; mask < patterns; ++mask) {
        std::vector<std::int8_t> sig(m, 1);
        for (int e = 0; e < m; ++e)
          if (mask & (1 << e)) sig[e] = -1;
        if (!visit(EmbeddingScheme::make(g, rot, sig))) return false;
      }
      return true;
    }
    auto& r = rot[v];
    if (r.size() <= 1) return rec(v + 1);
    std::sort(r.begin() + 1, r.end());
    do {
      if (!rec(v + 1)) return false;
    } while (std::next_permutation(r.begin() + 1, r.end()));
    return true;
  };
  rec(0);
}

EmbeddingScheme random_scheme(const Multigraph& g, std::mt19937& rng) {
  auto rot = rotation_by_dart_order(g);
  for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);
  std::vector<std::int8_t> sig(g.edge_count());
  for (auto& s : sig) s = (rng() & 1) ? 1 : -1;
  return EmbeddingScheme::make(g, std::move(rot), std::move(sig));
}

Multigraph random_connected_graph(std::mt19937& rng) {
  while (true) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<std::array<VertexId, 2>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int mult = static_cast<int>(rng() % 3);
        for (int k = 0; k < mult; ++k) edges.push_back({i, j});
      }
    Multigraph g = build_graph_indexed(n, edges);
    if (!edges.empty() && is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("K3 sphere scheme: 2 triangular faces, genus 0") {
  Multigraph t = triangle();
  EmbeddingScheme s = EmbeddingScheme::make(t, rotation_by_dart_order(t));
  FaceSet fs = trace_faces(s);
  REQUIRE(fs.count() == 2);
  CHECK(fs.faces[0].length() == 3);
  CHECK(fs.faces[1].length() == 3);
  CHECK(fs.total_length() == 2 * t.edge_count());
  CHECK(euler_genus(s) == 0);
  CHECK(is_sphere_triangulation(s));
}

TEST_CASE("single edge: one face of length 2") {
  Multigraph k2 = build_graph({"a", "b"}, {{"a", "b"}});
  EmbeddingScheme s = EmbeddingScheme::make(k2, rotation_by_dart_order(k2));
  FaceSet fs = trace_faces(s);
  REQUIRE(fs.count() == 1);
  CHECK(fs.faces[0].length() == 2);
  CHECK(euler_genus(s) == 0);
}

TEST_CASE("K3 with one negative edge embeds in the projective plane") {
  Multigraph t = triangle();
  EmbeddingScheme s = EmbeddingScheme::make(t, rotation_by_dart_order(t), {1, 1, -1});
  CHECK(count_faces(t, s.rotation, s.signature) == 1);
  CHECK(euler_genus(s) == 1);
}

TEST_CASE("K4 has a scheme with exactly three 4-faces (projective plane)") {
  Multigraph g = k4();
  bool found = false;
  for_each_scheme(g, false, [&](const EmbeddingScheme& s) {
    FaceSet fs = trace_faces(s);
    if (fs.count() == 3 && fs.faces[0].length() == 4 && fs.faces[1].length() == 4 &&
        fs.faces[2].length() == 4) {
      CHECK(euler_genus(s) == 1);
      CHECK_FALSE(is_sphere_triangulation(s));
      found = true;
      return false;
    }
    return true;
  });
  CHECK(found);
}

TEST_CASE("K4 has a planar scheme with 4 triangular faces") {
  Multigraph g = k4();
  bool found = false;
  for_each_scheme(g, true, [&](const EmbeddingScheme& s) {
    if (euler_genus(s) == 0) {
      FaceSet fs = trace_faces(s);
      CHECK(fs.count() == 4);
      CHECK(is_sphere_triangulation(s));
      found = true;
      return false;
    }
    return true;
  });
  CHECK(found);
}

TEST_CASE("double counting holds for random schemes") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Multigraph g = random_connected_graph(rng);
    EmbeddingScheme s = random_scheme(g, rng);
    FaceSet fs = trace_faces(s);
    CHECK(fs.total_length() == 2 * g.edge_count());
    CHECK(euler_genus(s) >= 0);
    // Each edge lies on exactly two face slots.
    std::vector<int> uses(g.edge_count(), 0);
    for (const auto& f : fs.faces)
      for (EdgeId e : f.edge_cycle()) ++uses[e];
    for (int u : uses) CHECK(u == 2);
  }
}

TEST_CASE("signature gauge invariance at a vertex") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    Multigraph g = random_connected_graph(rng);
    EmbeddingScheme s = random_scheme(g, rng);
    VertexId v = static_cast<VertexId>(rng() % g.vertex_count());
    EmbeddingScheme t = s;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [x, y] = g.ends(e);
      if ((x == v) != (y == v)) t.signature[e] = -t.signature[e];
    }
    std::reverse(t.rotation[v].begin(), t.rotation[v].end());
    CHECK(count_faces(g, s.rotation, s.signature) == count_faces(g, t.rotation, t.signature));
    CHECK(euler_genus(s) == euler_genus(t));
  }
}

TEST_CASE("edge-maximality") {
  // Complete graph: no non-adjacent pair, any scheme is maximal.
  std::mt19937 rng(3);
  Multigraph g = k4();
  for (int i = 0; i < 20; ++i) {
    EmbeddingScheme s = random_scheme(g, rng);
    CHECK(is_edge_maximal(s).maximal);
  }

  // C5: the unique all-positive scheme has a long face with non-adjacent pairs.
  Multigraph c5 = build_graph({"1", "2", "3", "4", "5"},
                              {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}});
  EmbeddingScheme sc5 = EmbeddingScheme::make(c5, rotation_by_dart_order(c5));
  MaximalityResult r = is_edge_maximal(sc5);
  CHECK_FALSE(r.maximal);
  REQUIRE(r.witness.has_value());
  CHECK_FALSE(c5.adjacent(r.witness->first, r.witness->second));

  // K4 minus cd: planar scheme fails with witness (c,d) on the 4-face.
  Multigraph k4e = build_graph({"a", "b", "c", "d"},
                               {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  bool checked = false;
  for_each_scheme(k4e, true, [&](const EmbeddingScheme& s) {
    if (euler_genus(s) != 0) return true;
    MaximalityResult mr = is_edge_maximal(s);
    CHECK_FALSE(mr.maximal);
    REQUIRE(mr.witness.has_value());
    VertexId c = k4e.vertex_by_label("c"), d = k4e.vertex_by_label("d");
    CHECK(mr.witness->first == std::min(c, d));
    CHECK(mr.witness->second == std::max(c, d));
    checked = true;
    return false;
  });
  CHECK(checked);
}

TEST_CASE("rotation orientation match") {
  std::mt19937 rng(19);
  Multigraph g = k4();
  EmbeddingScheme s = random_scheme(g, rng);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    CHECK(rotation_orientation_match(s, s, v) == OrientationMatch::Same);
  EmbeddingScheme m = s.mirrored();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    OrientationMatch om = rotation_orientation_match(s, m, v);
    CHECK(om != OrientationMatch::Mismatch);
  }
  Multigraph other = triangle();
  EmbeddingScheme so = EmbeddingScheme::make(other, rotation_by_dart_order(other));
  CHECK_THROWS_AS(rotation_orientation_match(s, so, 0), Error);
}

TEST_CASE("face sets: mirror-invariant, planar vs projective K4 differ") {
  std::mt19937 rng(23);
  for (int i = 0; i < 50; ++i) {
    Multigraph g = random_connected_graph(rng);
    EmbeddingScheme s = random_scheme(g, rng);
    CHECK(face_sets_equal(s, s.mirrored()));
  }

  Multigraph g = k4();
  EmbeddingScheme planar, projective;
  bool got_planar = false, got_projective = false;
  for_each_scheme(g, false, [&](const EmbeddingScheme& s) {
    if (!got_planar && euler_genus(s) == 0 && is_sphere_triangulation(s)) {
      planar = s;
      got_planar = true;
    }
    FaceSet fs = trace_faces(s);
    if (!got_projective && fs.count() == 3 && fs.faces[2].length() == 4 &&
        fs.faces[0].length() == 4) {
      projective = s;
      got_projective = true;
    }
    return !(got_planar && got_projective);
  });
  REQUIRE(got_planar);
  REQUIRE(got_projective);
  CHECK_FALSE(face_sets_equal(planar, projective));
}

TEST_CASE("invalid schemes are rejected") {
  Multigraph t = triangle();
  auto rot = rotation_by_dart_order(t);
  rot[0].pop_back();
  CHECK_THROWS_AS(EmbeddingScheme::make(t, rot), Error);
}
