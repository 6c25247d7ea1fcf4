#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lhemb/embedding.hpp"

namespace lhemb {

/// The two petal shapes: K2o is an edge with a loop on one end, K3o a
/// triangle with a loop on one vertex. Attaching identifies the loop vertex
/// with an existing vertex of the host graph.
enum class PetalKind { K2o, K3o };

const char* petal_kind_name(PetalKind k);

struct PetalAttachment {
  PetalKind kind;
  std::string at;  // label of the host vertex, in build coordinates
};

/// Witness of flowerhood: a K2 or K3 base plus an ordered attachment list.
/// Build coordinates: base vertices are "0", "1" (and "2" for K3); petal i
/// contributes "p<i>" (and "q<i>" for K3o).
struct FlowerDecomposition {
  std::string base;  // "K2" or "K3"
  std::vector<PetalAttachment> petals;
};

/// Replays the decomposition. Each K2o attachment adds a loop at the
/// attachment vertex plus one pendant; each K3o adds a loop plus a hanging
/// triangle through two new vertices. The result always has m = 2n - 3.
Multigraph build_flower(const FlowerDecomposition& d);

/// Flower recognition by reverse petal peeling with backtracking: repeatedly
/// strip a K2o leaf (degree-1 vertex whose neighbor carries a loop) or a K3o
/// leaf (two adjacent degree-2 vertices sharing a loop-carrying neighbor)
/// until K2 or K3 remains. Returns a decomposition that rebuilds a graph
/// isomorphic to g, or nothing.
std::optional<FlowerDecomposition> is_flower(const Multigraph& g);

/// Canonical genus-0 edge-maximal scheme of the flower: each petal nests
/// inside its loop, spliced in right after the attachment vertex's first
/// dart, so petal vertices never share a face with non-neighbors.
EmbeddingScheme flower_scheme(const FlowerDecomposition& d);

}  // namespace lhemb
