#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lhemb/embedding.hpp"
#include "lhemb/flowers.hpp"
#include "lhemb/triangulation.hpp"

namespace lhemb {

/// Caps for exhaustive enumeration. max_edges / max_darts of -1 mean
/// "no extra cap beyond the others". Hard limit: max_n <= 8.
struct EnumerationRange {
  int max_n = 6;
  int max_multiplicity = 1;
  bool allow_loops = false;
  int max_edges = -1;
  int max_darts = -1;
};

/// Outcome of one exhaustive claim check. `violations` must stay empty;
/// each entry is a self-contained witness description. `equality_cases`
/// holds canonical codes (hex) of the classes attaining the claim's bound.
struct VerificationReport {
  std::string claim;
  EnumerationRange range;
  long long population = 0;
  std::vector<std::string> equality_cases;
  std::vector<std::string> violations;
  double seconds = 0.0;
};

/// Connected graphs in the range, one per isomorphism class, ordered by
/// (n, m, canonical code). Labeled odometer enumeration with canonical
/// dedupe; `keep` (optional) filters labeled graphs before dedupe.
std::vector<Multigraph> enumerate_graphs(
    const EnumerationRange& r,
    const std::function<bool(const Multigraph&)>& keep = nullptr);

/// Every embedding scheme of g, one per equivalence class under
/// spanning-tree signature gauge and global reflection: all rotation
/// systems (first dart pinned at each vertex) x signs on non-tree edges,
/// keeping a scheme only when it is lexicographically no larger than its
/// re-pinned mirror. With edge_max_only, non-maximal schemes are skipped.
/// fn receives a chunk id (the root vertex's rotation index) so threaded
/// callers can merge per-chunk results deterministically; within a chunk
/// calls arrive in a fixed order. Throws RangeTooLarge above 24 darts.
void enumerate_schemes(const Multigraph& g, bool edge_max_only, int threads,
                       const std::function<void(int chunk, const EmbeddingScheme&)>& fn);

/// Every connected locally Hamiltonian class in the range has m >= 3n-6;
/// equality classes reconstruct to a sphere triangulation confirmed by the
/// brute-force oracle.
VerificationReport verify_lh_bound(const EnumerationRange& r, int threads = 1);

/// Every edge-maximal scheme with m <= 3n-6 forces m = 3n-6; against the
/// reconstructed sphere scheme, simple graphs match rotations up to global
/// reversal at every vertex, and simple K4-free graphs with n >= 4 match
/// face sets outright.
VerificationReport verify_maximal_embeddings(const EnumerationRange& r, int threads = 1);

/// Loop-graph bound at n <= 3: a graph admitting an edge-maximal scheme has
/// m >= 2n-3, equality exactly on flowers, and every flower in range
/// attains it.
VerificationReport verify_loop_bound(const EnumerationRange& r, int threads = 1);

/// Removable-vertex guarantee behind the reduction: glues an octahedron or
/// pentagonal bipyramid onto `samples` randomly grown sphere triangulations
/// (combined n <= 12) and asserts that the glued-on side — every vertex of
/// which has degree >= 4 — always yields at least two candidates.
/// Deterministic for a fixed seed, regardless of threads.
VerificationReport verify_lemma1(int samples, unsigned seed, int threads = 1);

}  // namespace lhemb
