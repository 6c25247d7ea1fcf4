#include "lhemb/fixtures.hpp"

#include <filesystem>
#include <fstream>

namespace lhemb {

namespace {

Multigraph k3() {
  return build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

Multigraph k4() {
  return build_graph({"a", "b", "c", "d"},
                     {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}

Multigraph two_cycle_4v() {
  return build_graph({"u", "v", "x", "y"},
                     {{"u", "v"}, {"u", "v"}, {"u", "x"}, {"v", "x"}, {"u", "y"}, {"v", "y"}});
}

Multigraph five_multi() {
  return build_graph({"a", "b", "c", "u", "v"},
                     {{"u", "v"}, {"u", "a"}, {"u", "b"}, {"u", "v"}, {"u", "c"},
                      {"v", "a"}, {"v", "b"}, {"v", "c"}, {"a", "b"}});
}

Multigraph octahedron() {
  return build_graph({"0", "1", "2", "3", "4", "5"},
                     {{"0", "2"}, {"0", "3"}, {"0", "4"}, {"0", "5"},
                      {"1", "2"}, {"1", "3"}, {"1", "4"}, {"1", "5"},
                      {"2", "4"}, {"2", "5"}, {"3", "4"}, {"3", "5"}});
}

// First edge-maximal K4 scheme with three faces, all of length 4 (genus 1).
EmbeddingScheme k4_projective() {
  Multigraph g = k4();
  std::optional<EmbeddingScheme> found;
  enumerate_schemes(g, true, 1, [&](int, const EmbeddingScheme& s) {
    if (found) return;
    FaceSet fs = trace_faces(s);
    if (euler_genus(s) != 1 || fs.count() != 3) return;
    for (const auto& f : fs.faces)
      if (f.length() != 4) return;
    found = s;
  });
  return *found;
}

// First edge-maximal genus-1 scheme of the 5-vertex multigraph whose
// rotation at u matches the sphere scheme's in neither direction.
EmbeddingScheme five_multi_projective() {
  Multigraph g = five_multi();
  EmbeddingScheme sphere = reconstruct_triangulation(g).scheme;
  VertexId u = g.vertex_by_label("u");
  std::optional<EmbeddingScheme> found;
  enumerate_schemes(g, true, 1, [&](int, const EmbeddingScheme& s) {
    if (found) return;
    if (euler_genus(s) != 1) return;
    if (rotation_orientation_match(s, sphere, u) != OrientationMatch::Mismatch) return;
    found = s;
  });
  return *found;
}

EmbeddingScheme double_octahedron() {
  EmbeddingScheme s = reconstruct_triangulation(octahedron()).scheme;
  FaceSet fs = trace_faces(s);
  return glue_on_facial_triangle(s, fs.faces.front(), s, fs.faces.front());
}

EmbeddingScheme c5_sphere() {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < 5; ++i) {
    labels.push_back(std::to_string(i));
    edges.emplace_back(std::to_string(i), std::to_string((i + 1) % 5));
  }
  Multigraph g = build_graph(labels, edges);
  std::vector<std::vector<Dart>> rot;
  for (VertexId v = 0; v < 5; ++v) rot.push_back(g.darts_at(v));
  return EmbeddingScheme::make(g, rot);
}

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out;
  auto add_scheme = [&](const std::string& name, const EmbeddingScheme& s) {
    out.push_back({name, scheme_to_json(s)});
  };
  add_scheme("k3.json", reconstruct_triangulation(k3()).scheme);
  add_scheme("k4_sphere.json", reconstruct_triangulation(k4()).scheme);
  add_scheme("k4_projective.json", k4_projective());
  add_scheme("two_cycle_4v.json", reconstruct_triangulation(two_cycle_4v()).scheme);
  add_scheme("five_multi_sphere.json", reconstruct_triangulation(five_multi()).scheme);
  add_scheme("five_multi_projective.json", five_multi_projective());
  add_scheme("octahedron.json", reconstruct_triangulation(octahedron()).scheme);
  add_scheme("double_octahedron.json", double_octahedron());
  add_scheme("c5_sphere.json", c5_sphere());

  FlowerDecomposition fd{"K3",
                         {{PetalKind::K2o, "0"}, {PetalKind::K3o, "1"}, {PetalKind::K2o, "p0"}}};
  out.push_back({"flower_decomposition.json", decomposition_to_json(fd)});
  add_scheme("flower_sample.json", flower_scheme(fd));
  return out;
}

}  // namespace

const std::vector<Fixture>& bundled_fixtures() {
  static const std::vector<Fixture> fixtures = make_fixtures();
  return fixtures;
}

void write_fixtures(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& f : bundled_fixtures()) {
    std::ofstream out(std::filesystem::path(dir) / f.name);
    if (!out) throw Error(ErrorCode::ValidationError, "cannot write fixture in '" + dir + "'");
    out << f.content;
  }
}

}  // namespace lhemb
