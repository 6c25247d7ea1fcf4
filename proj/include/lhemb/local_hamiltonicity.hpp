#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "lhemb/multigraph.hpp"

namespace lhemb {

/// Cyclic order of the darts at one vertex in which any two cyclically
/// consecutive darts with distinct far endpoints join adjacent vertices.
struct HamiltonianOrdering {
  VertexId vertex;
  std::vector<Dart> order;
};

struct HamiltonianCertificate {
  std::vector<HamiltonianOrdering> orderings;  // one per vertex, by vertex id
};

/// Re-checks every consecutive pair of an ordering against the graph.
/// Independent of the search below; also accepts scheme rotations verbatim.
bool validate_ordering(const Multigraph& g, const HamiltonianOrdering& o);

/// Backtracking search with the first dart pinned and successors tried in
/// dart-id order; consecutive darts to the same neighbor are always
/// compatible. Degree-0/1 vertices succeed vacuously.
std::optional<HamiltonianOrdering> hamiltonian_ordering(const Multigraph& g, VertexId v,
                                                        int degree_cap = 12);

struct LocalHamiltonicityResult {
  bool locally_hamiltonian = false;
  std::optional<HamiltonianCertificate> certificate;  // set on success
  std::optional<VertexId> failing_vertex;             // least id, on failure
};

LocalHamiltonicityResult is_locally_hamiltonian(const Multigraph& g, int degree_cap = 12);

/// All Hamiltonian cycles of induced_neighborhood(g, v), as cyclic vertex
/// sequences (labels of the neighborhood graph's ids), each reported once up
/// to rotation and reversal, stopping at `cap`. Requires v simple.
/// Conventions at tiny neighborhoods: one vertex has no cycle; two vertices
/// have one cycle iff joined by at least two parallel edges.
std::vector<std::vector<VertexId>> neighborhood_hamiltonian_cycles(const Multigraph& g,
                                                                   VertexId v, int cap);

}  // namespace lhemb
