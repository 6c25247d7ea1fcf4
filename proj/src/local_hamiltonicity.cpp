#include "lhemb/local_hamiltonicity.hpp"

#include <algorithm>
#include <functional>

namespace lhemb {

namespace {

void require_loopless(const Multigraph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) throw Error(ErrorCode::HasLoops, "operation requires a loopless graph");
}

}  // namespace

bool validate_ordering(const Multigraph& g, const HamiltonianOrdering& o) {
  g.check_vertex(o.vertex);
  std::vector<Dart> want = g.darts_at(o.vertex);
  std::vector<Dart> have = o.order;
  std::sort(have.begin(), have.end());
  if (have != want) return false;
  const int d = static_cast<int>(o.order.size());
  for (int i = 0; i < d; ++i) {
    VertexId a = g.dart_far_vertex(o.order[i]);
    VertexId b = g.dart_far_vertex(o.order[(i + 1) % d]);
    if (a != b && !g.adjacent(a, b)) return false;
  }
  return true;
}

std::optional<HamiltonianOrdering> hamiltonian_ordering(const Multigraph& g, VertexId v,
                                                        int degree_cap) {
  require_loopless(g);
  g.check_vertex(v);
  const std::vector<Dart>& darts = g.darts_at(v);
  const int d = static_cast<int>(darts.size());
  if (d > degree_cap)
    throw Error(ErrorCode::TooLarge, "degree " + std::to_string(d) + " exceeds search cap");
  if (d <= 1) return HamiltonianOrdering{v, darts};

  std::vector<Dart> order{darts[0]};
  std::vector<bool> used(d, false);
  used[0] = true;

  auto compatible = [&](Dart a, Dart b) {
    VertexId x = g.dart_far_vertex(a), y = g.dart_far_vertex(b);
    return x == y || g.adjacent(x, y);
  };

  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(order.size()) == d)
      return compatible(order.back(), order.front());
    for (int i = 1; i < d; ++i) {
      if (used[i] || !compatible(order.back(), darts[i])) continue;
      used[i] = true;
      order.push_back(darts[i]);
      if (rec()) return true;
      order.pop_back();
      used[i] = false;
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return HamiltonianOrdering{v, order};
}

LocalHamiltonicityResult is_locally_hamiltonian(const Multigraph& g, int degree_cap) {
  require_loopless(g);
  LocalHamiltonicityResult r;
  HamiltonianCertificate cert;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto o = hamiltonian_ordering(g, v, degree_cap);
    if (!o) {
      r.locally_hamiltonian = false;
      r.failing_vertex = v;
      return r;
    }
    cert.orderings.push_back(std::move(*o));
  }
  r.locally_hamiltonian = true;
  r.certificate = std::move(cert);
  return r;
}

std::vector<std::vector<VertexId>> neighborhood_hamiltonian_cycles(const Multigraph& g,
                                                                   VertexId v, int cap) {
  require_loopless(g);
  g.check_vertex(v);
  if (!is_simple_vertex(g, v))
    throw Error(ErrorCode::NonSimpleVertex, "'" + g.label(v) + "' is incident with a multiple edge");
  Multigraph nb = induced_neighborhood(g, v);
  const int k = nb.vertex_count();
  std::vector<std::vector<VertexId>> cycles;
  if (k == 0 || cap <= 0) return cycles;
  if (k == 1) return cycles;
  if (k == 2) {
    if (nb.multiplicity(0, 1) >= 2) cycles.push_back({0, 1});
    return cycles;
  }
  // Fix vertex 0 first; force second < last to kill the reversal duplicate.
  std::vector<VertexId> rest(k - 1);
  for (int i = 0; i < k - 1; ++i) rest[i] = i + 1;
  std::vector<VertexId> cyc;
  do {
    if (rest.front() > rest.back()) continue;
    bool ok = nb.adjacent(0, rest.front()) && nb.adjacent(rest.back(), 0);
    for (int i = 0; ok && i + 1 < k - 1; ++i) ok = nb.adjacent(rest[i], rest[i + 1]);
    if (ok) {
      cyc.assign(1, 0);
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      cycles.push_back(cyc);
      if (static_cast<int>(cycles.size()) >= cap) break;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return cycles;
}

}  // namespace lhemb
