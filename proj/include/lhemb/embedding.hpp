#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lhemb/multigraph.hpp"

namespace lhemb {

/// Rotation system + edge signature: a combinatorial embedding on a compact
/// surface. Immutable in spirit; treat instances as values.
struct EmbeddingScheme {
  Multigraph graph;
  std::vector<std::vector<Dart>> rotation;  // per-vertex cyclic dart order
  std::vector<std::int8_t> signature;       // per-edge, +1 or -1

  static EmbeddingScheme make(Multigraph g, std::vector<std::vector<Dart>> rotation,
                              std::vector<std::int8_t> signature = {});

  /// Throws InvalidScheme if the rotation is inconsistent with the graph.
  void validate() const;

  /// All rotations reversed, signature unchanged.
  EmbeddingScheme mirrored() const;
};

/// One face boundary. `slots` is a representative traversal of the orbit
/// (dart, direction) pairs; `boundary` is the canonical cyclic dart sequence,
/// normalized over rotation and reversal, used for comparison and ordering.
struct FacialWalk {
  std::vector<std::pair<Dart, std::int8_t>> slots;
  std::vector<Dart> boundary;

  int length() const { return static_cast<int>(boundary.size()); }
  /// Distinct vertices visited, increasing.
  std::vector<VertexId> vertices(const Multigraph& g) const;
  /// Edge ids along the boundary (with repetition), in boundary order.
  std::vector<EdgeId> edge_cycle() const;
  /// Distinct edge ids, increasing.
  std::vector<EdgeId> edge_set() const;

  bool operator==(const FacialWalk& o) const { return boundary == o.boundary; }
  bool operator<(const FacialWalk& o) const {
    if (boundary.size() != o.boundary.size()) return boundary.size() < o.boundary.size();
    return boundary < o.boundary;
  }
};

/// Complete face list of a scheme, sorted by canonical boundary.
struct FaceSet {
  std::vector<FacialWalk> faces;

  int count() const { return static_cast<int>(faces.size()); }
  int total_length() const;
};

/// Orbit decomposition of all (dart, direction) pairs under the trace rule:
/// from dart d with orientation flag s, move to d's partner, flip s when the
/// edge has signature -1, then take the rotation successor (s = +1) or
/// predecessor (s = -1) at the partner's vertex. Each face appears as two
/// mutually reversed orbits; one canonical representative is kept.
FaceSet trace_faces(const EmbeddingScheme& s);

/// Face count only, no canonicalization. Same orbits as trace_faces.
int count_faces(const Multigraph& g, const std::vector<std::vector<Dart>>& rotation,
                const std::vector<std::int8_t>& signature);

/// 2 - n + m - f. Requires a connected graph.
int euler_genus(const EmbeddingScheme& s);

/// Genus 0 and every face a triangle. Requires loopless, connected, n >= 3.
bool is_sphere_triangulation(const EmbeddingScheme& s);

struct MaximalityResult {
  bool maximal = false;
  // Set when not maximal: two distinct non-adjacent vertices on one face.
  std::optional<std::pair<VertexId, VertexId>> witness;
  std::optional<FacialWalk> face;
};

/// Edge-maximality test: no facial walk may visit two distinct non-adjacent
/// vertices. The witness is the first offending pair in face order.
MaximalityResult is_edge_maximal(const EmbeddingScheme& s);

enum class OrientationMatch { Same, Reversed, Mismatch };

const char* orientation_match_name(OrientationMatch m);

/// Compares v's cyclic dart order in s1 against s2's and its reversal.
OrientationMatch rotation_orientation_match(const EmbeddingScheme& s1,
                                            const EmbeddingScheme& s2, VertexId v);

/// Canonicalized face sets equal (each walk up to rotation and reversal).
bool face_sets_equal(const EmbeddingScheme& s1, const EmbeddingScheme& s2);

/// True iff both schemes are over the same graph (ids, labels, edges).
bool same_graph(const Multigraph& a, const Multigraph& b);

}  // namespace lhemb
