#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lhemb/embedding.hpp"
#include "lhemb/local_hamiltonicity.hpp"

namespace lhemb {

/// A 2-cycle (two parallel edges) or a 3-cycle, given by its edge ids.
struct CycleSpec {
  std::vector<EdgeId> edges;
};

/// The two sides of a separating cycle in a genus-0 scheme. Which side is
/// "interior" is a convention: the side not containing the face with the
/// least canonical boundary.
struct SideDecomposition {
  std::vector<VertexId> interior;
  std::vector<VertexId> exterior;
  std::vector<FacialWalk> interior_faces;
  std::vector<FacialWalk> exterior_faces;
};

SideDecomposition side_decomposition(const EmbeddingScheme& s, const CycleSpec& c);

enum class Side { Interior, Exterior };

/// Vertices on the chosen side that are simple, have degree at most 5, at
/// most two non-simple neighbours, and lie in no non-facial 3-cycle of the
/// triangulation. Preconditions: s is a sphere triangulation, c is a 2-cycle
/// or non-facial 3-cycle, and every chosen-side vertex has degree >= 4.
std::vector<VertexId> lemma1_candidates(const EmbeddingScheme& s, const CycleSpec& c, Side side);

/// One replayable surgery of the reconstruction. Edge ids are in the final
/// graph's id space; helper edges introduced along the way get fresh ids at
/// and above the final edge count.
struct TraceStep {
  std::string kase;  // "base", "d2", "d3", "d4" or "d5"
  std::string vertex;                    // inserted vertex label ("" for base)
  std::vector<std::string> base_labels;  // base step: triangle vertices
  std::vector<EdgeId> base_edges;        // base step: triangle edges, matching order
  EdgeId readd_edge = -1;                // d2: the edge put back beside its twin
  EdgeId beside_edge = -1;               // d2: the surviving parallel edge
  int side_variant = 0;                  // d2: which flanks produced the 2-gon
  std::vector<EdgeId> delete_edges;      // d4/d5: helper edges removed
  std::vector<std::array<std::string, 2>> delete_edge_ends;  // their endpoint labels
  std::vector<EdgeId> face_edges;        // edge set naming the face to subdivide
  std::vector<EdgeId> corner_edges;      // new edges per corner of that face's walk
  int insert_dir = 0;                    // orientation of the new vertex's rotation
  bool backtracked = false;              // telemetry: search retried at this step
};

using ReconstructionTrace = std::vector<TraceStep>;  // base first

struct ReconstructionResult {
  EmbeddingScheme scheme;
  ReconstructionTrace trace;
  bool used_backtracking = false;
};

/// Builds a genus-0 all-triangle scheme of a connected loopless locally
/// Hamiltonian multigraph with exactly 3n-6 edges, by recursive reduction on
/// a low-degree vertex (cases d = 2,3,4,5) with bounded backtracking.
/// Throws EdgeCountMismatch / NotLocallyHamiltonian / Disconnected on bad
/// input and ReconstructionFailed if the search is exhausted.
ReconstructionResult reconstruct_triangulation(const Multigraph& g);

/// Applies a recorded trace forward from its base step; the result must
/// reproduce the scheme reconstruct_triangulation returned.
EmbeddingScheme replay_trace(const Multigraph& g, const ReconstructionTrace& trace);

/// Independent brute-force oracle: exhaustive scan over all-positive rotation
/// systems (first dart pinned per vertex) for a genus-0 scheme with all faces
/// of length 3. Hard cap n <= 8. Deterministic also when threaded.
std::optional<EmbeddingScheme> oracle_embed(const Multigraph& g, int threads = 1);

/// Glues two sphere triangulations along facial triangles, identifying the
/// corners of face f2 of s2 with those of face f1 of s1. Surviving s2 labels
/// keep their names (a "'" is appended on collision). The glue triangle
/// becomes a separating 3-cycle of the result.
EmbeddingScheme glue_on_facial_triangle(const EmbeddingScheme& s1, const FacialWalk& f1,
                                        const EmbeddingScheme& s2, const FacialWalk& f2);

}  // namespace lhemb
