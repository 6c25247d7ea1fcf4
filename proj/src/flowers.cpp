#include "lhemb/flowers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lhemb {

const char* petal_kind_name(PetalKind k) { return k == PetalKind::K2o ? "K2o" : "K3o"; }

namespace {

struct Builder {
  std::vector<std::string> labels;
  std::vector<std::array<std::string, 2>> edges;  // by label, creation order

  bool has(const std::string& l) const {
    return std::find(labels.begin(), labels.end(), l) != labels.end();
  }

  void start(const std::string& base) {
    if (base == "K2") {
      labels = {"0", "1"};
      edges = {{"0", "1"}};
    } else if (base == "K3") {
      labels = {"0", "1", "2"};
      edges = {{"0", "1"}, {"1", "2"}, {"2", "0"}};
    } else {
      throw Error(ErrorCode::ValidationError, "flower base must be K2 or K3, got '" + base + "'");
    }
  }

  void attach(const PetalAttachment& p, int index) {
    if (!has(p.at))
      throw Error(ErrorCode::BadAttachmentVertex,
                  "no vertex '" + p.at + "' at attachment step " + std::to_string(index));
    std::string pi = "p" + std::to_string(index);
    edges.push_back({p.at, p.at});  // the petal's loop
    if (p.kind == PetalKind::K2o) {
      labels.push_back(pi);
      edges.push_back({p.at, pi});
    } else {
      std::string qi = "q" + std::to_string(index);
      labels.push_back(pi);
      labels.push_back(qi);
      edges.push_back({p.at, pi});
      edges.push_back({p.at, qi});
      edges.push_back({pi, qi});
    }
  }

  Multigraph graph() const {
    std::vector<std::pair<std::string, std::string>> el;
    for (const auto& e : edges) el.emplace_back(e[0], e[1]);
    return build_graph(labels, el, true);
  }
};

}  // namespace

Multigraph build_flower(const FlowerDecomposition& d) {
  Builder b;
  b.start(d.base);
  for (std::size_t i = 0; i < d.petals.size(); ++i) b.attach(d.petals[i], static_cast<int>(i));
  return b.graph();
}

EmbeddingScheme flower_scheme(const FlowerDecomposition& d) {
  Builder b;
  b.start(d.base);
  Multigraph base = b.graph();
  std::map<std::string, std::vector<Dart>> rot;
  for (VertexId v = 0; v < base.vertex_count(); ++v) rot[base.label(v)] = base.darts_at(v);

  // Attach petals, keeping dart ids in the final graph's edge numbering.
  for (std::size_t i = 0; i < d.petals.size(); ++i) {
    const auto& p = d.petals[i];
    EdgeId loop = static_cast<EdgeId>(b.edges.size());
    b.attach(p, static_cast<int>(i));
    std::string pi = "p" + std::to_string(i);
    auto& ru = rot.at(p.at);  // throws only after attach validated p.at
    std::vector<Dart> block;
    if (p.kind == PetalKind::K2o) {
      EdgeId up = loop + 1;
      block = {make_dart(loop, 0), make_dart(up, 0), make_dart(loop, 1)};
      rot[pi] = {make_dart(up, 1)};
    } else {
      std::string qi = "q" + std::to_string(i);
      EdgeId up = loop + 1, uq = loop + 2, pq = loop + 3;
      block = {make_dart(loop, 0), make_dart(up, 0), make_dart(uq, 0), make_dart(loop, 1)};
      rot[pi] = {make_dart(up, 1), make_dart(pq, 0)};
      rot[qi] = {make_dart(uq, 1), make_dart(pq, 1)};
    }
    ru.insert(ru.begin() + 1, block.begin(), block.end());
  }

  Multigraph g = b.graph();
  std::vector<std::vector<Dart>> rotation(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) rotation[v] = rot.at(g.label(v));
  return EmbeddingScheme::make(g, rotation);
}

namespace {

// Mutable label-level view used by the peeling search.
struct Peel {
  std::set<std::string> verts;
  std::vector<std::array<std::string, 2>> edges;

  int degree(const std::string& v) const {
    int d = 0;
    for (const auto& e : edges) {
      if (e[0] == v) ++d;
      if (e[1] == v) ++d;
    }
    return d;
  }
  int loops_at(const std::string& v) const {
    int c = 0;
    for (const auto& e : edges)
      if (e[0] == v && e[1] == v) ++c;
    return c;
  }
  int mult(const std::string& a, const std::string& b) const {
    int c = 0;
    for (const auto& e : edges)
      if ((e[0] == a && e[1] == b) || (e[0] == b && e[1] == a)) ++c;
    return c;
  }
  std::vector<std::string> neighbors(const std::string& v) const {
    std::set<std::string> out;
    for (const auto& e : edges) {
      if (e[0] == v && e[1] != v) out.insert(e[1]);
      if (e[1] == v && e[0] != v) out.insert(e[0]);
    }
    return {out.begin(), out.end()};
  }
  void remove_vertex(const std::string& v) {
    verts.erase(v);
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const auto& e) { return e[0] == v || e[1] == v; }),
                edges.end());
  }
  void remove_one_loop(const std::string& v) {
    auto it = std::find(edges.begin(), edges.end(), std::array<std::string, 2>{v, v});
    edges.erase(it);
  }
};

struct PeeledPetal {
  PetalKind kind;
  std::string at;                     // original label
  std::array<std::string, 2> taken;   // removed original labels ("" unused)
};

// Appends peeled petals outermost-first; fills base_labels on success.
bool peel(Peel g, std::vector<PeeledPetal>& out, std::vector<std::string>& base_labels) {
  const int n = static_cast<int>(g.verts.size());
  const int m = static_cast<int>(g.edges.size());
  if (m != 2 * n - 3) return false;  // preserved by every peel step
  if (n == 2 && m == 1 && !g.edges.empty() && g.edges[0][0] != g.edges[0][1]) {
    base_labels.assign(g.verts.begin(), g.verts.end());
    return true;
  }
  if (n == 3 && m == 3) {
    bool triangle = true;
    for (const auto& v : g.verts)
      if (g.degree(v) != 2 || g.loops_at(v) != 0) triangle = false;
    std::set<std::string> seen;
    for (const auto& e : g.edges)
      if (e[0] == e[1]) triangle = false;
    if (triangle) {
      // degree checks leave only the triangle and the 2-vertex triple edge;
      // rule out the latter
      std::set<std::pair<std::string, std::string>> pairs;
      for (const auto& e : g.edges) pairs.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
      if (pairs.size() == 3) {
        base_labels.assign(g.verts.begin(), g.verts.end());
        return true;
      }
    }
    // fall through: a 3-vertex graph might still peel (e.g. K2 + K2o petal)
  }

  for (const auto& x : std::vector<std::string>(g.verts.begin(), g.verts.end())) {
    // K2o leaf: degree-1 vertex whose unique neighbor carries a loop.
    if (g.degree(x) == 1) {
      std::string u = g.neighbors(x)[0];
      if (g.loops_at(u) >= 1) {
        Peel h = g;
        h.remove_vertex(x);
        h.remove_one_loop(u);
        out.push_back({PetalKind::K2o, u, {x, ""}});
        if (peel(std::move(h), out, base_labels)) return true;
        out.pop_back();
      }
    }
    // K3o leaf: x and a degree-2 partner hanging off a loop-carrying vertex.
    if (g.degree(x) == 2 && g.loops_at(x) == 0) {
      for (const std::string& y : g.neighbors(x)) {
        if (y <= x) continue;  // try each pair once
        if (g.degree(y) != 2 || g.loops_at(y) != 0 || g.mult(x, y) != 1) continue;
        std::vector<std::string> nx = g.neighbors(x), ny = g.neighbors(y);
        std::string u;
        for (const auto& c : nx)
          if (c != y && std::find(ny.begin(), ny.end(), c) != ny.end() && c != x) u = c;
        if (u.empty() || g.loops_at(u) < 1) continue;
        if (g.mult(x, u) != 1 || g.mult(y, u) != 1) continue;
        Peel h = g;
        h.remove_vertex(x);
        h.remove_vertex(y);
        h.remove_one_loop(u);
        out.push_back({PetalKind::K3o, u, {x, y}});
        if (peel(std::move(h), out, base_labels)) return true;
        out.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

std::optional<FlowerDecomposition> is_flower(const Multigraph& g) {
  if (!is_connected(g)) return std::nullopt;
  Peel p;
  for (VertexId v = 0; v < g.vertex_count(); ++v) p.verts.insert(g.label(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    p.edges.push_back({g.label(g.ends(e)[0]), g.label(g.ends(e)[1])});

  std::vector<PeeledPetal> peeled;
  std::vector<std::string> base_labels;
  if (!peel(std::move(p), peeled, base_labels)) return std::nullopt;

  // Translate to build coordinates: base first, petals innermost-first.
  FlowerDecomposition d;
  d.base = base_labels.size() == 2 ? "K2" : "K3";
  std::map<std::string, std::string> to_build;
  for (std::size_t i = 0; i < base_labels.size(); ++i)
    to_build[base_labels[i]] = std::to_string(i);
  std::reverse(peeled.begin(), peeled.end());
  for (std::size_t i = 0; i < peeled.size(); ++i) {
    const auto& pp = peeled[i];
    d.petals.push_back({pp.kind, to_build.at(pp.at)});
    to_build[pp.taken[0]] = "p" + std::to_string(i);
    if (pp.kind == PetalKind::K3o) to_build[pp.taken[1]] = "q" + std::to_string(i);
  }
  return d;
}

}  // namespace lhemb
