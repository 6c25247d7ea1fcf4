#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lhemb/errors.hpp"

namespace lhemb {

using VertexId = int;
using EdgeId = int;

/// One end of an edge. Dart d belongs to edge d/2; d%2 selects the endpoint.
/// Every edge has exactly two darts; a loop's two darts attach to the same
/// vertex and stay distinct.
using Dart = int;

inline EdgeId dart_edge(Dart d) { return d >> 1; }
inline int dart_end(Dart d) { return d & 1; }
inline Dart dart_partner(Dart d) { return d ^ 1; }
inline Dart make_dart(EdgeId e, int end) { return (e << 1) | end; }

/// Finite multigraph: dense vertex/edge ids, user labels preserved.
/// Immutable after construction; all operations are pure.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::vector<std::string> labels,
             std::vector<std::array<VertexId, 2>> edges, bool loops_allowed);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool loops_allowed() const { return loops_allowed_; }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::array<VertexId, 2>& ends(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::array<VertexId, 2>>& edges() const { return edges_; }
  bool is_loop(EdgeId e) const { return edges_[e][0] == edges_[e][1]; }

  VertexId dart_vertex(Dart d) const { return edges_[dart_edge(d)][dart_end(d)]; }
  VertexId dart_far_vertex(Dart d) const { return dart_vertex(dart_partner(d)); }

  /// Darts attached at v, in increasing dart order. A loop contributes both.
  const std::vector<Dart>& darts_at(VertexId v) const { return darts_at_.at(v); }
  /// Degree with the usual convention: a loop adds 2.
  int degree(VertexId v) const { return static_cast<int>(darts_at_.at(v).size()); }

  /// Distinct neighbors of v, increasing, excluding v itself.
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Number of edges between u and v (u != v), or loops at u (u == v).
  int multiplicity(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return u != v && multiplicity(u, v) > 0; }

  VertexId vertex_by_label(const std::string& label) const;  // throws UnknownVertex
  void check_vertex(VertexId v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::array<VertexId, 2>> edges_;
  bool loops_allowed_ = false;
  std::vector<std::vector<Dart>> darts_at_;
};

/// Validating constructor from labels and label pairs.
Multigraph build_graph(const std::vector<std::string>& labels,
                       const std::vector<std::pair<std::string, std::string>>& edge_list,
                       bool loops_allowed = false);

/// Same, with endpoints given as dense vertex indices.
Multigraph build_graph_indexed(int n, const std::vector<std::array<VertexId, 2>>& edges,
                               bool loops_allowed = false,
                               const std::vector<std::string>* labels = nullptr);

/// True iff v is incident with no multiple edge. A loop at v counts as a
/// multiple incidence, so a loop vertex is never simple.
bool is_simple_vertex(const Multigraph& g, VertexId v);

bool is_simple_graph(const Multigraph& g);

/// Subgraph induced on the distinct neighbors of v (v excluded),
/// multiplicities retained, labels preserved. Requires a loopless graph.
Multigraph induced_neighborhood(const Multigraph& g, VertexId v);

/// Isomorphism-complete code for graphs with at most `cap` vertices:
/// the minimum adjacency-multiplicity matrix over all vertex permutations,
/// with degree-partition pruning. Loops count on the diagonal.
std::vector<std::uint8_t> canonical_code(const Multigraph& g, int cap = 10);

std::string canonical_code_hex(const Multigraph& g, int cap = 10);

/// Connectivity of the underlying graph; the empty graph counts as connected.
bool is_connected(const Multigraph& g);

}  // namespace lhemb
