#include "lhemb/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lhemb {

Multigraph::Multigraph(std::vector<std::string> labels,
                       std::vector<std::array<VertexId, 2>> edges, bool loops_allowed)
    : labels_(std::move(labels)), edges_(std::move(edges)), loops_allowed_(loops_allowed) {
  const int n = vertex_count();
  for (EdgeId e = 0; e < edge_count(); ++e) {
    for (int end = 0; end < 2; ++end) {
      VertexId v = edges_[e][end];
      if (v < 0 || v >= n)
        throw Error(ErrorCode::UnknownEndpoint,
                    "edge " + std::to_string(e) + " references vertex index " + std::to_string(v));
    }
    if (!loops_allowed_ && edges_[e][0] == edges_[e][1])
      throw Error(ErrorCode::LoopForbidden,
                  "loop at vertex '" + labels_[edges_[e][0]] + "' (edge " + std::to_string(e) + ")");
  }
  darts_at_.assign(n, {});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    darts_at_[edges_[e][0]].push_back(make_dart(e, 0));
    darts_at_[edges_[e][1]].push_back(make_dart(e, 1));
  }
}

std::vector<VertexId> Multigraph::neighbors(VertexId v) const {
  check_vertex(v);
  std::set<VertexId> out;
  for (Dart d : darts_at_[v]) {
    VertexId w = dart_far_vertex(d);
    if (w != v) out.insert(w);
  }
  return {out.begin(), out.end()};
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  int count = 0;
  for (const auto& e : edges_) {
    if (u == v) {
      if (e[0] == u && e[1] == u) ++count;
    } else if ((e[0] == u && e[1] == v) || (e[0] == v && e[1] == u)) {
      ++count;
    }
  }
  return count;
}

VertexId Multigraph::vertex_by_label(const std::string& label) const {
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (labels_[v] == label) return v;
  throw Error(ErrorCode::UnknownVertex, "no vertex labelled '" + label + "'");
}

void Multigraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count())
    throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v));
}

Multigraph build_graph(const std::vector<std::string>& labels,
                       const std::vector<std::pair<std::string, std::string>>& edge_list,
                       bool loops_allowed) {
  std::map<std::string, VertexId> index;
  for (VertexId v = 0; v < static_cast<int>(labels.size()); ++v) {
    if (!index.emplace(labels[v], v).second)
      throw Error(ErrorCode::DuplicateLabel, "'" + labels[v] + "'");
  }
  std::vector<std::array<VertexId, 2>> edges;
  edges.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorCode::UnknownEndpoint, "'" + a + "'");
    if (ib == index.end()) throw Error(ErrorCode::UnknownEndpoint, "'" + b + "'");
    edges.push_back({ia->second, ib->second});
  }
  return Multigraph(labels, std::move(edges), loops_allowed);
}

Multigraph build_graph_indexed(int n, const std::vector<std::array<VertexId, 2>>& edges,
                               bool loops_allowed, const std::vector<std::string>* labels) {
  std::vector<std::string> ls;
  if (labels) {
    ls = *labels;
  } else {
    ls.reserve(n);
    for (int v = 0; v < n; ++v) ls.push_back("v" + std::to_string(v));
  }
  return Multigraph(std::move(ls), edges, loops_allowed);
}

bool is_simple_vertex(const Multigraph& g, VertexId v) {
  g.check_vertex(v);
  std::set<VertexId> seen;
  for (Dart d : g.darts_at(v)) {
    VertexId w = g.dart_far_vertex(d);
    if (w == v) return false;  // loop
    if (!seen.insert(w).second) return false;
  }
  return true;
}

bool is_simple_graph(const Multigraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!is_simple_vertex(g, v)) return false;
  return true;
}

Multigraph induced_neighborhood(const Multigraph& g, VertexId v) {
  g.check_vertex(v);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) throw Error(ErrorCode::HasLoops, "induced_neighborhood requires a loopless graph");
  std::vector<VertexId> nbrs = g.neighbors(v);
  std::vector<int> pos(g.vertex_count(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    pos[nbrs[i]] = static_cast<int>(i);
    labels.push_back(g.label(nbrs[i]));
  }
  std::vector<std::array<VertexId, 2>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(e);
    if (pos[a] >= 0 && pos[b] >= 0) edges.push_back({pos[a], pos[b]});
  }
  return Multigraph(std::move(labels), std::move(edges), false);
}

namespace {

struct CanonSearch {
  int n;
  const std::vector<std::vector<std::uint8_t>>& adj;
  const std::vector<std::uint64_t>& key;  // degree-class key per vertex
  std::vector<std::uint64_t> slot_key;    // required key per position
  std::vector<int> perm;                  // position -> vertex
  std::vector<bool> used;
  std::vector<std::uint8_t> best;
  bool have_best = false;

  // Assign position i; compare row i (entries 0..i) against the best code as
  // soon as it is complete. `tight` means the prefix so far equals the best
  // code's prefix, so larger continuations can be pruned.
  void rec(int i, const std::vector<std::uint8_t>& prefix, bool tight) {
    if (i == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || key[v] != slot_key[i]) continue;
      std::vector<std::uint8_t> next = prefix;
      for (int j = 0; j <= i; ++j) next.push_back(adj[v][j == i ? v : perm[j]]);
      bool next_tight = tight && have_best;
      if (tight && have_best) {
        bool worse = false;
        for (std::size_t k = prefix.size(); k < next.size(); ++k) {
          if (next[k] < best[k]) { next_tight = false; break; }
          if (next[k] > best[k]) { worse = true; break; }
        }
        if (worse) continue;
      }
      used[v] = true;
      perm[i] = v;
      rec(i + 1, next, next_tight);
      used[v] = false;
    }
  }
};

}  // namespace

std::vector<std::uint8_t> canonical_code(const Multigraph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw Error(ErrorCode::TooLarge,
                "canonical_code cap " + std::to_string(cap) + " < n = " + std::to_string(n));
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(e);
    if (a == b) {
      ++adj[a][a];
    } else {
      ++adj[a][b];
      ++adj[b][a];
    }
  }
  // Degree-partition key: (degree, loop count). Positions take vertices in
  // non-increasing key order, which prunes the permutation search hard.
  std::vector<std::uint64_t> key(n);
  for (int v = 0; v < n; ++v)
    key[v] = (static_cast<std::uint64_t>(g.degree(v)) << 16) | adj[v][v];
  std::vector<std::uint64_t> slots = key;
  std::sort(slots.rbegin(), slots.rend());

  CanonSearch s{n, adj, key, slots, std::vector<int>(n), std::vector<bool>(n, false), {}, false};
  s.rec(0, {}, true);
  std::vector<std::uint8_t> code;
  code.push_back(static_cast<std::uint8_t>(n));
  code.insert(code.end(), s.best.begin(), s.best.end());
  return code;
}

std::string canonical_code_hex(const Multigraph& g, int cap) {
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (std::uint8_t b : canonical_code(g, cap)) {
    out.push_back(hex[b >> 4]);
    out.push_back(hex[b & 15]);
  }
  return out;
}

bool is_connected(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (Dart d : g.darts_at(v)) {
      VertexId w = g.dart_far_vertex(d);
      if (!seen[w]) {
        seen[w] = true;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n;
}

}  // namespace lhemb
