#include "lhemb/embedding.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace lhemb {

EmbeddingScheme EmbeddingScheme::make(Multigraph g, std::vector<std::vector<Dart>> rotation,
                                      std::vector<std::int8_t> signature) {
  EmbeddingScheme s;
  s.graph = std::move(g);
  s.rotation = std::move(rotation);
  if (signature.empty()) signature.assign(s.graph.edge_count(), 1);
  s.signature = std::move(signature);
  s.validate();
  return s;
}

void EmbeddingScheme::validate() const {
  const int n = graph.vertex_count();
  if (static_cast<int>(rotation.size()) != n)
    throw Error(ErrorCode::InvalidScheme, "rotation table size != vertex count");
  if (static_cast<int>(signature.size()) != graph.edge_count())
    throw Error(ErrorCode::InvalidScheme, "signature size != edge count");
  for (std::int8_t s : signature)
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidScheme, "signature entries must be +1/-1");
  for (VertexId v = 0; v < n; ++v) {
    std::vector<Dart> want = graph.darts_at(v);
    std::vector<Dart> have = rotation[v];
    std::sort(have.begin(), have.end());
    if (have != want)
      throw Error(ErrorCode::InvalidScheme,
                  "rotation at '" + graph.label(v) + "' is not a permutation of its darts");
  }
}

EmbeddingScheme EmbeddingScheme::mirrored() const {
  EmbeddingScheme m = *this;
  for (auto& r : m.rotation) std::reverse(r.begin(), r.end());
  return m;
}

std::vector<VertexId> FacialWalk::vertices(const Multigraph& g) const {
  std::set<VertexId> vs;
  for (Dart d : boundary) vs.insert(g.dart_vertex(d));
  return {vs.begin(), vs.end()};
}

std::vector<EdgeId> FacialWalk::edge_cycle() const {
  std::vector<EdgeId> es;
  es.reserve(boundary.size());
  for (Dart d : boundary) es.push_back(dart_edge(d));
  return es;
}

std::vector<EdgeId> FacialWalk::edge_set() const {
  std::set<EdgeId> es;
  for (Dart d : boundary) es.insert(dart_edge(d));
  return {es.begin(), es.end()};
}

int FaceSet::total_length() const {
  int t = 0;
  for (const auto& f : faces) t += f.length();
  return t;
}

namespace {

// State encoding: dart * 2 + (0 for s=+1, 1 for s=-1).
inline int state_of(Dart d, int s) { return d * 2 + (s > 0 ? 0 : 1); }
inline Dart state_dart(int st) { return st / 2; }
inline int state_sign(int st) { return (st & 1) ? -1 : 1; }

struct Tracer {
  const Multigraph& g;
  const std::vector<std::vector<Dart>>& rot;
  const std::vector<std::int8_t>& sig;
  std::vector<int> pos;  // dart -> index within its vertex's rotation

  Tracer(const Multigraph& g_, const std::vector<std::vector<Dart>>& rot_,
         const std::vector<std::int8_t>& sig_)
      : g(g_), rot(rot_), sig(sig_), pos(2 * g_.edge_count(), -1) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      for (std::size_t i = 0; i < rot[v].size(); ++i) pos[rot[v][i]] = static_cast<int>(i);
  }

  int successor(int st) const {
    Dart d = state_dart(st);
    int s = state_sign(st) * sig[dart_edge(d)];
    Dart p = dart_partner(d);
    VertexId w = g.dart_vertex(p);
    const auto& r = rot[w];
    int k = static_cast<int>(r.size());
    int i = pos[p];
    Dart next = (s > 0) ? r[(i + 1) % k] : r[(i - 1 + k) % k];
    return state_of(next, s);
  }

  // The reversal involution: conjugates the successor map to its inverse and
  // pairs each orbit with the reverse traversal of the same face.
  int reversed(int st) const {
    Dart d = state_dart(st);
    return state_of(dart_partner(d), -state_sign(st) * sig[dart_edge(d)]);
  }
};

std::vector<Dart> least_rotation(const std::vector<Dart>& cyc) {
  const std::size_t k = cyc.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < k; ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      Dart a = cyc[(s + i) % k], b = cyc[(best + i) % k];
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  std::vector<Dart> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = cyc[(best + i) % k];
  return out;
}

}  // namespace

FaceSet trace_faces(const EmbeddingScheme& s) {
  s.validate();
  const Multigraph& g = s.graph;
  Tracer tr(g, s.rotation, s.signature);
  const int nstates = 4 * g.edge_count();
  std::vector<int> orbit_of(nstates, -1);
  std::vector<std::vector<int>> orbits;
  for (int st = 0; st < nstates; ++st) {
    if (orbit_of[st] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<int> orb;
    int cur = st;
    while (orbit_of[cur] < 0) {
      orbit_of[cur] = id;
      orb.push_back(cur);
      cur = tr.successor(cur);
    }
    orbits.push_back(std::move(orb));
  }

  FaceSet out;
  std::vector<bool> done(orbits.size(), false);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (done[i]) continue;
    int partner = orbit_of[tr.reversed(orbits[i][0])];
    assert(partner != static_cast<int>(i) && "self-reversed facial orbit");
    done[i] = true;
    done[partner] = true;

    auto darts_of = [](const std::vector<int>& orb) {
      std::vector<Dart> d;
      d.reserve(orb.size());
      for (int st : orb) d.push_back(state_dart(st));
      return d;
    };
    std::vector<Dart> ca = least_rotation(darts_of(orbits[i]));
    std::vector<Dart> cb = least_rotation(darts_of(orbits[partner]));
    const std::vector<int>& rep = (ca <= cb) ? orbits[i] : orbits[partner];
    FacialWalk w;
    w.boundary = (ca <= cb) ? ca : cb;
    // Rotate the representative orbit so its dart sequence starts where the
    // canonical boundary starts.
    std::vector<Dart> raw = darts_of(rep);
    std::size_t k = raw.size();
    std::size_t shift = 0;
    for (std::size_t sft = 0; sft < k; ++sft) {
      bool match = true;
      for (std::size_t j = 0; j < k; ++j)
        if (raw[(sft + j) % k] != w.boundary[j]) {
          match = false;
          break;
        }
      if (match) {
        shift = sft;
        break;
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      int st = rep[(shift + j) % k];
      w.slots.emplace_back(state_dart(st), static_cast<std::int8_t>(state_sign(st)));
    }
    out.faces.push_back(std::move(w));
  }
  std::sort(out.faces.begin(), out.faces.end());
  return out;
}

int count_faces(const Multigraph& g, const std::vector<std::vector<Dart>>& rotation,
                const std::vector<std::int8_t>& signature) {
  Tracer tr(g, rotation, signature);
  const int nstates = 4 * g.edge_count();
  std::vector<bool> seen(nstates, false);
  int orbits = 0;
  for (int st = 0; st < nstates; ++st) {
    if (seen[st]) continue;
    ++orbits;
    int cur = st;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = tr.successor(cur);
    }
  }
  return orbits / 2;
}

int euler_genus(const EmbeddingScheme& s) {
  if (!is_connected(s.graph)) throw Error(ErrorCode::Disconnected, "euler_genus needs a connected graph");
  int f = count_faces(s.graph, s.rotation, s.signature);
  return 2 - s.graph.vertex_count() + s.graph.edge_count() - f;
}

bool is_sphere_triangulation(const EmbeddingScheme& s) {
  for (EdgeId e = 0; e < s.graph.edge_count(); ++e)
    if (s.graph.is_loop(e)) throw Error(ErrorCode::HasLoops, "triangulation test needs a loopless graph");
  if (!is_connected(s.graph)) throw Error(ErrorCode::Disconnected, "triangulation test needs a connected graph");
  if (s.graph.vertex_count() < 3) return false;
  if (euler_genus(s) != 0) return false;
  FaceSet fs = trace_faces(s);
  for (const auto& f : fs.faces)
    if (f.length() != 3) return false;
  return true;
}

MaximalityResult is_edge_maximal(const EmbeddingScheme& s) {
  if (!is_connected(s.graph)) throw Error(ErrorCode::Disconnected, "maximality test needs a connected graph");
  const Multigraph& g = s.graph;
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(e);
    if (a != b) adj[a][b] = adj[b][a] = true;
  }
  FaceSet fs = trace_faces(s);
  for (const auto& f : fs.faces) {
    std::vector<VertexId> vs = f.vertices(g);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!adj[vs[i]][vs[j]]) {
          MaximalityResult r;
          r.maximal = false;
          r.witness = {vs[i], vs[j]};
          r.face = f;
          return r;
        }
  }
  MaximalityResult r;
  r.maximal = true;
  return r;
}

const char* orientation_match_name(OrientationMatch m) {
  switch (m) {
    case OrientationMatch::Same: return "same";
    case OrientationMatch::Reversed: return "reversed";
    case OrientationMatch::Mismatch: return "mismatch";
  }
  return "?";
}

namespace {

bool cyclically_equal(const std::vector<Dart>& a, const std::vector<Dart>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t k = a.size();
  if (k == 0) return true;
  for (std::size_t s = 0; s < k; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] != b[(s + i) % k]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool same_graph(const Multigraph& a, const Multigraph& b) {
  return a.labels() == b.labels() && a.edges() == b.edges() &&
         a.loops_allowed() == b.loops_allowed();
}

OrientationMatch rotation_orientation_match(const EmbeddingScheme& s1,
                                            const EmbeddingScheme& s2, VertexId v) {
  if (!same_graph(s1.graph, s2.graph))
    throw Error(ErrorCode::GraphMismatch, "orientation comparison needs identical graphs");
  s1.graph.check_vertex(v);
  const auto& r1 = s1.rotation[v];
  const auto& r2 = s2.rotation[v];
  if (cyclically_equal(r1, r2)) return OrientationMatch::Same;
  std::vector<Dart> rev(r2.rbegin(), r2.rend());
  if (cyclically_equal(r1, rev)) return OrientationMatch::Reversed;
  return OrientationMatch::Mismatch;
}

bool face_sets_equal(const EmbeddingScheme& s1, const EmbeddingScheme& s2) {
  if (!same_graph(s1.graph, s2.graph))
    throw Error(ErrorCode::GraphMismatch, "face set comparison needs identical graphs");
  FaceSet a = trace_faces(s1);
  FaceSet b = trace_faces(s2);
  if (a.count() != b.count()) return false;
  for (int i = 0; i < a.count(); ++i)
    if (!(a.faces[i] == b.faces[i])) return false;
  return true;
}

}  // namespace lhemb
