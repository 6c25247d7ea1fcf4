#include "lhemb/triangulation.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace lhemb {

namespace {

// ---------------------------------------------------------------------------
// Global-slot working space for the reconstruction.
//
// Vertices are final-graph ids throughout. Edges are "slots": ids below the
// final edge count are final edges, ids at or above it are helper edges with
// endpoints registered in Ctx. Darts are 2*slot + end.
// ---------------------------------------------------------------------------

struct Ctx {
  const Multigraph* final_graph;
  std::vector<std::array<VertexId, 2>> helper_ends;
  bool backtracked = false;

  std::array<VertexId, 2> ends(EdgeId slot) const {
    if (slot < final_graph->edge_count()) return final_graph->ends(slot);
    return helper_ends.at(slot - final_graph->edge_count());
  }
  EdgeId new_helper(VertexId a, VertexId b) {
    helper_ends.push_back({a, b});
    return final_graph->edge_count() + static_cast<EdgeId>(helper_ends.size()) - 1;
  }
  void pop_helpers(std::size_t count) {
    helper_ends.resize(helper_ends.size() - count);
  }
  VertexId slot_dart_vertex(Dart d) const { return ends(dart_edge(d))[dart_end(d)]; }
};

// Rotations over final vertex ids with slot darts; absent vertices empty.
using SlotRot = std::vector<std::vector<Dart>>;

// Dense view of a slot-space scheme for tracing and verification.
struct Compact {
  Multigraph graph;
  EmbeddingScheme scheme;
  std::vector<EdgeId> dense2slot;
  std::vector<VertexId> dense2vert;
  std::vector<int> vert2dense;  // -1 where absent
};

Compact compact_scheme(const std::vector<VertexId>& verts, const std::vector<EdgeId>& slots,
                       const SlotRot& rot, const Ctx& ctx) {
  Compact c;
  c.dense2vert = verts;
  c.vert2dense.assign(ctx.final_graph->vertex_count(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    c.vert2dense[verts[i]] = static_cast<int>(i);
    labels.push_back(ctx.final_graph->label(verts[i]));
  }
  c.dense2slot = slots;  // callers keep slots sorted ascending
  std::vector<std::array<VertexId, 2>> edges;
  for (EdgeId s : slots) {
    auto [a, b] = ctx.ends(s);
    edges.push_back({c.vert2dense[a], c.vert2dense[b]});
  }
  c.graph = Multigraph(labels, edges, false);
  std::vector<std::vector<Dart>> drot(verts.size());
  std::map<EdgeId, int> slot2dense;
  for (std::size_t i = 0; i < slots.size(); ++i) slot2dense[slots[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (Dart d : rot[verts[i]])
      drot[i].push_back(make_dart(slot2dense.at(dart_edge(d)), dart_end(d)));
  }
  c.scheme = EmbeddingScheme::make(c.graph, std::move(drot));
  return c;
}

// Faces of a slot-space scheme: canonical walks mapped back to slot darts,
// in canonical order (deterministic for a fixed sorted slot set).
std::vector<std::vector<Dart>> slot_faces(const std::vector<VertexId>& verts,
                                          const std::vector<EdgeId>& slots, const SlotRot& rot,
                                          const Ctx& ctx) {
  Compact c = compact_scheme(verts, slots, rot, ctx);
  FaceSet fs = trace_faces(c.scheme);
  std::vector<std::vector<Dart>> out;
  for (const auto& f : fs.faces) {
    std::vector<Dart> w;
    for (Dart d : f.boundary) w.push_back(make_dart(c.dense2slot[dart_edge(d)], dart_end(d)));
    out.push_back(std::move(w));
  }
  return out;
}

bool slot_is_sphere_triangulation(const std::vector<VertexId>& verts,
                                  const std::vector<EdgeId>& slots, const SlotRot& rot,
                                  const Ctx& ctx) {
  Compact c = compact_scheme(verts, slots, rot, ctx);
  if (!is_connected(c.graph)) return false;
  return is_sphere_triangulation(c.scheme);
}

void rot_insert_after(std::vector<Dart>& r, Dart anchor, Dart nd) {
  auto it = std::find(r.begin(), r.end(), anchor);
  assert(it != r.end());
  r.insert(it + 1, nd);
}

void rot_insert_before(std::vector<Dart>& r, Dart anchor, Dart nd) {
  auto it = std::find(r.begin(), r.end(), anchor);
  assert(it != r.end());
  r.insert(it, nd);
}

void rot_remove_edge(SlotRot& rot, EdgeId slot, const Ctx& ctx) {
  for (int end = 0; end < 2; ++end) {
    VertexId v = ctx.ends(slot)[end];
    auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), make_dart(slot, end));
    assert(it != r.end());
    r.erase(it);
  }
}

// Inserts new vertex v into the face given by `walk` (slot darts, traversal
// order), joining it to every corner: corner i's vertex w_i gets the dart of
// corner_edges[i]. dir reverses v's own rotation. Corner i sits between
// partner(walk[i-1]) and walk[i] in w_i's rotation.
void insert_vertex_in_face(SlotRot& rot, VertexId v, const std::vector<Dart>& walk,
                           const std::vector<EdgeId>& corner_edges, int dir, const Ctx& ctx) {
  const std::size_t k = walk.size();
  std::vector<Dart> vdarts;
  for (std::size_t i = 0; i < k; ++i) {
    Dart a = walk[i];
    Dart prev_in = dart_partner(walk[(i + k - 1) % k]);
    VertexId w = ctx.slot_dart_vertex(a);
    EdgeId e = corner_edges[i];
    int wend = (ctx.ends(e)[0] == w) ? 0 : 1;
    Dart nd = make_dart(e, wend);
    vdarts.push_back(dart_partner(nd));
    auto& r = rot[w];
    if (prev_in == a) {
      // Degree-1 corner: both sides are the same boundary; either works.
      rot_insert_after(r, a, nd);
      continue;
    }
    std::size_t pa = std::find(r.begin(), r.end(), a) - r.begin();
    std::size_t pp = std::find(r.begin(), r.end(), prev_in) - r.begin();
    assert(pa < r.size() && pp < r.size());
    if ((pp + 1) % r.size() == pa) {
      r.insert(r.begin() + pa, nd);
    } else {
      assert((pa + 1) % r.size() == pp);
      r.insert(r.begin() + pp, nd);
    }
  }
  if (dir) std::reverse(vdarts.begin(), vdarts.end());
  rot[v] = vdarts;
}

// ---------------------------------------------------------------------------
// Reconstruction search
// ---------------------------------------------------------------------------

Multigraph local_graph(const std::vector<VertexId>& verts, const std::vector<EdgeId>& slots,
                       const Ctx& ctx) {
  std::vector<int> v2l(ctx.final_graph->vertex_count(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    v2l[verts[i]] = static_cast<int>(i);
    labels.push_back(ctx.final_graph->label(verts[i]));
  }
  std::vector<std::array<VertexId, 2>> edges;
  for (EdgeId s : slots) {
    auto [a, b] = ctx.ends(s);
    edges.push_back({v2l[a], v2l[b]});
  }
  return Multigraph(labels, edges, false);
}

struct Solver {
  Ctx& ctx;
  ReconstructionTrace& trace;

  // verts and slots are sorted ascending. On success fills `rot` for the
  // given vertex set (slot darts) and appends trace steps, base first.
  bool solve(const std::vector<VertexId>& verts, std::vector<EdgeId> slots, SlotRot& rot) {
    std::sort(slots.begin(), slots.end());
    Multigraph g = local_graph(verts, slots, ctx);
    if (!is_connected(g)) return false;
    auto lh = is_locally_hamiltonian(g);
    if (!lh.locally_hamiltonian) return false;
    const int n = static_cast<int>(verts.size());
    if (static_cast<int>(slots.size()) != 3 * n - 6) return false;

    if (n == 3) return base_case(verts, slots, rot);

    // Candidate vertices of degree <= 5, ordered by the preference keys:
    // prefer d <= 3; then fewest darts on multiple edges; then fewest chords
    // among N(v); then fewest non-simple neighbours; then least degree.
    struct Cand {
      std::array<int, 6> key;
      int local;
    };
    std::vector<Cand> cands;
    for (int lv = 0; lv < n; ++lv) {
      int d = g.degree(lv);
      if (d < 2 || d > 5) continue;
      int multi_darts = 0;
      for (Dart dd : g.darts_at(lv))
        if (g.multiplicity(lv, g.dart_far_vertex(dd)) > 1) ++multi_darts;
      auto nbrs = g.neighbors(lv);
      int nb_edges = 0;
      {
        std::set<VertexId> ns(nbrs.begin(), nbrs.end());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          auto [a, b] = g.ends(e);
          if (ns.count(a) && ns.count(b)) ++nb_edges;
        }
      }
      int chords = std::max(0, nb_edges - static_cast<int>(nbrs.size()));
      int nonsimple_nbrs = 0;
      for (VertexId w : nbrs)
        if (!is_simple_vertex(g, w)) ++nonsimple_nbrs;
      cands.push_back({{d > 3 ? 1 : 0, multi_darts, chords, nonsimple_nbrs, d, lv}, lv});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.key < b.key; });

    bool first = true;
    for (const Cand& c : cands) {
      std::size_t tsnap = trace.size();
      std::size_t hsnap = ctx.helper_ends.size();
      bool ok = false;
      int d = g.degree(c.local);
      if (d == 2) ok = case_d2(verts, slots, g, c.local, rot);
      else if (d == 3) ok = case_d3(verts, slots, g, c.local, rot);
      else if (d == 4) ok = case_d4(verts, slots, g, c.local, rot);
      else if (d == 5) ok = case_d5(verts, slots, g, c.local, rot);
      if (ok) {
        if (!first) ctx.backtracked = true;
        return true;
      }
      trace.resize(tsnap);
      ctx.pop_helpers(ctx.helper_ends.size() - hsnap);
      ctx.backtracked = true;
      first = false;
    }
    return false;
  }

  bool base_case(const std::vector<VertexId>& verts, const std::vector<EdgeId>& slots,
                 SlotRot& rot) {
    // Exactly the triangle qualifies: three edges covering all three pairs.
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (EdgeId s : slots) {
      auto [a, b] = ctx.ends(s);
      pairs.insert({std::min(a, b), std::max(a, b)});
    }
    if (pairs.size() != 3) return false;
    for (VertexId v : verts) {
      rot[v].clear();
      for (EdgeId s : slots)
        for (int end = 0; end < 2; ++end)
          if (ctx.ends(s)[end] == v) rot[v].push_back(make_dart(s, end));
      if (rot[v].size() != 2) return false;
    }
    TraceStep st;
    st.kase = "base";
    for (VertexId v : verts) st.base_labels.push_back(ctx.final_graph->label(v));
    // base_edges[i] joins base_labels[i] and base_labels[i+1 mod 3].
    for (int i = 0; i < 3; ++i) {
      VertexId a = verts[i], b = verts[(i + 1) % 3];
      for (EdgeId s : slots) {
        auto [x, y] = ctx.ends(s);
        if ((x == a && y == b) || (x == b && y == a)) {
          st.base_edges.push_back(s);
          break;
        }
      }
    }
    trace.push_back(std::move(st));
    return true;
  }

  // Incident slot edges of final vertex fv within `slots`.
  std::vector<EdgeId> incident(VertexId fv, const std::vector<EdgeId>& slots) {
    std::vector<EdgeId> out;
    for (EdgeId s : slots) {
      auto [a, b] = ctx.ends(s);
      if (a == fv || b == fv) out.push_back(s);
    }
    return out;
  }

  // Tries every bijection between the corners of `walk` and the new vertex's
  // edges (matching far endpoints), and both rotation directions; keeps the
  // first assignment that verifies as a sphere triangulation.
  bool try_insertions(const std::vector<VertexId>& verts, const std::vector<EdgeId>& all_slots,
                      SlotRot& rot, VertexId fv, const std::vector<Dart>& walk,
                      const std::vector<EdgeId>& vedges, TraceStep& st) {
    const std::size_t k = walk.size();
    if (vedges.size() != k) return false;
    // Group corner indices by their vertex; group v's edges by far endpoint.
    std::map<VertexId, std::vector<int>> corner_groups;
    for (std::size_t i = 0; i < k; ++i)
      corner_groups[ctx.slot_dart_vertex(walk[i])].push_back(static_cast<int>(i));
    std::map<VertexId, std::vector<EdgeId>> edge_groups;
    for (EdgeId e : vedges) {
      auto [a, b] = ctx.ends(e);
      edge_groups[a == fv ? b : a].push_back(e);
    }
    if (corner_groups.size() != edge_groups.size()) return false;
    for (auto& [w, idxs] : corner_groups) {
      auto it = edge_groups.find(w);
      if (it == edge_groups.end() || it->second.size() != idxs.size()) return false;
    }
    // Enumerate assignments as products of within-group permutations.
    std::vector<std::pair<std::vector<int>, std::vector<EdgeId>>> groups;
    for (auto& [w, idxs] : corner_groups) groups.push_back({idxs, edge_groups[w]});
    std::vector<EdgeId> corner_edges(k, -1);
    std::function<bool(std::size_t)> assign = [&](std::size_t gi) -> bool {
      if (gi == groups.size()) {
        for (int dir = 0; dir < 2; ++dir) {
          SlotRot trial = rot;
          insert_vertex_in_face(trial, fv, walk, corner_edges, dir, ctx);
          if (slot_is_sphere_triangulation(verts, all_slots, trial, ctx)) {
            rot = trial;
            st.face_edges.clear();
            for (Dart d : walk) st.face_edges.push_back(dart_edge(d));
            st.corner_edges = corner_edges;
            st.insert_dir = dir;
            return true;
          }
        }
        return false;
      }
      auto& [idxs, edges] = groups[gi];
      std::vector<EdgeId> perm = edges;
      std::sort(perm.begin(), perm.end());
      do {
        for (std::size_t j = 0; j < idxs.size(); ++j) corner_edges[idxs[j]] = perm[j];
        if (assign(gi + 1)) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    };
    return assign(0);
  }

  bool case_d2(const std::vector<VertexId>& verts, const std::vector<EdgeId>& slots,
               const Multigraph& g, int lv, SlotRot& rot) {
    VertexId fv = verts[lv];
    std::vector<EdgeId> ve = incident(fv, slots);
    if (ve.size() != 2) return false;
    std::array<VertexId, 2> nb;
    for (int i = 0; i < 2; ++i) {
      auto [a, b] = ctx.ends(ve[i]);
      nb[i] = (a == fv) ? b : a;
    }
    if (nb[0] == nb[1]) return false;  // double-edge pendant: no proven surgery
    for (int pick = 0; pick < 2; ++pick) {
      VertexId v1 = nb[pick], v2 = nb[1 - pick];
      EdgeId ev1 = ve[pick], ev2 = ve[1 - pick];
      int lv1 = -1;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (verts[i] == v1) lv1 = static_cast<int>(i);
      if (g.degree(lv1) < 3) continue;
      auto ord = hamiltonian_ordering(g, lv1);
      if (!ord) continue;
      // Locate fv's edge in the cyclic order at v1; its flanks must both be
      // parallel v1-v2 edges.
      const auto& o = ord->order;
      int pos = -1;
      for (std::size_t i = 0; i < o.size(); ++i)
        if (slots[dart_edge(o[i])] == ev1) pos = static_cast<int>(i);
      if (pos < 0) return false;
      int dsz = static_cast<int>(o.size());
      Dart pred = o[(pos + dsz - 1) % dsz], succ = o[(pos + 1) % dsz];
      EdgeId e1 = slots[dart_edge(pred)], e2 = slots[dart_edge(succ)];
      if (e1 == e2) continue;
      auto far = [&](Dart d) { return verts[g.dart_far_vertex(d)]; };
      if (far(pred) != v2 || far(succ) != v2) continue;

      std::vector<VertexId> cverts;
      for (VertexId w : verts)
        if (w != fv) cverts.push_back(w);
      std::vector<EdgeId> cslots;
      for (EdgeId s : slots)
        if (s != e1 && s != ev1 && s != ev2) cslots.push_back(s);
      std::size_t tsnap = trace.size();
      if (!solve(cverts, cslots, rot)) {
        trace.resize(tsnap);
        continue;
      }

      std::vector<EdgeId> with_e1 = cslots;
      with_e1.push_back(e1);
      std::sort(with_e1.begin(), with_e1.end());
      int e1end1 = (ctx.ends(e1)[0] == v1) ? 0 : 1;
      for (int variant = 0; variant < 4; ++variant) {
        SlotRot trial = rot;
        Dart d1 = make_dart(e1, e1end1), d2d = make_dart(e1, 1 - e1end1);
        Dart a1 = make_dart(e2, (ctx.ends(e2)[0] == v1) ? 0 : 1);
        Dart a2 = dart_partner(a1);
        if (variant & 1) rot_insert_before(trial[v1], a1, d1);
        else rot_insert_after(trial[v1], a1, d1);
        if (variant & 2) rot_insert_before(trial[v2], a2, d2d);
        else rot_insert_after(trial[v2], a2, d2d);
        // The insertion must create a 2-gon bounded by e1 and e2.
        auto faces = slot_faces(cverts, with_e1, trial, ctx);
        const std::vector<Dart>* bigon = nullptr;
        for (const auto& f : faces) {
          if (f.size() != 2) continue;
          std::set<EdgeId> es{dart_edge(f[0]), dart_edge(f[1])};
          if (es == std::set<EdgeId>{e1, e2}) {
            bigon = &f;
            break;
          }
        }
        if (!bigon) continue;
        TraceStep st;
        st.kase = "d2";
        st.vertex = ctx.final_graph->label(fv);
        st.readd_edge = e1;
        st.beside_edge = e2;
        // Bits are stored relative to e1's endpoint order so a replay can
        // interpret them without knowing which neighbor played v1.
        st.side_variant = (e1end1 == 0) ? variant : (((variant & 1) << 1) | ((variant >> 1) & 1));
        if (try_insertions(verts, slots, trial, fv, *bigon, {ev1, ev2}, st)) {
          rot = trial;
          trace.push_back(std::move(st));
          return true;
        }
      }
      trace.resize(tsnap);
    }
    return false;
  }

  bool case_d3(const std::vector<VertexId>& verts, const std::vector<EdgeId>& slots,
               const Multigraph& g, int lv, SlotRot& rot) {
    VertexId fv = verts[lv];
    std::vector<EdgeId> ve = incident(fv, slots);
    if (ve.size() != 3) return false;
    std::set<VertexId> nb;
    for (EdgeId e : ve) {
      auto [a, b] = ctx.ends(e);
      nb.insert(a == fv ? b : a);
    }
    if (nb.size() != 3) return false;

    std::vector<VertexId> cverts;
    for (VertexId w : verts)
      if (w != fv) cverts.push_back(w);
    std::vector<EdgeId> cslots;
    for (EdgeId s : slots)
      if (std::find(ve.begin(), ve.end(), s) == ve.end()) cslots.push_back(s);
    std::size_t tsnap = trace.size();
    if (!solve(cverts, cslots, rot)) {
      trace.resize(tsnap);
      return false;
    }
    // The 3-cycle on N(v) must be facial; pick the least edge triple.
    auto faces = slot_faces(cverts, cslots, rot, ctx);
    const std::vector<Dart>* best = nullptr;
    std::vector<EdgeId> best_es;
    for (const auto& f : faces) {
      if (f.size() != 3) continue;
      std::set<VertexId> vs;
      for (Dart d : f) vs.insert(ctx.slot_dart_vertex(d));
      if (vs != nb) continue;
      std::vector<EdgeId> es;
      for (Dart d : f) es.push_back(dart_edge(d));
      std::sort(es.begin(), es.end());
      if (!best || es < best_es) {
        best = &f;
        best_es = es;
      }
    }
    if (!best) {
      trace.resize(tsnap);
      return false;
    }
    TraceStep st;
    st.kase = "d3";
    st.vertex = ctx.final_graph->label(fv);
    SlotRot trial = rot;
    if (try_insertions(verts, slots, trial, fv, *best, ve, st)) {
      rot = trial;
      trace.push_back(std::move(st));
      return true;
    }
    trace.resize(tsnap);
    return false;
  }

  // Shared by d4/d5: neighbor labelings consistent with a Hamiltonian
  // ordering at v (rotations x reflection of one found ordering).
  std::vector<std::vector<Dart>> orderings_at(const Multigraph& g, int lv) {
    std::vector<std::vector<Dart>> out;
    auto ord = hamiltonian_ordering(g, lv);
    if (!ord) return out;
    const auto& o = ord->order;
    const int d = static_cast<int>(o.size());
    for (int refl = 0; refl < 2; ++refl)
      for (int r = 0; r < d; ++r) {
        std::vector<Dart> seq;
        for (int i = 0; i < d; ++i)
          seq.push_back(refl ? o[(r + d - i) % d] : o[(r + i) % d]);
        out.push_back(seq);
      }
    return out;
  }

  bool case_d4(const std::vector<VertexId>& verts, const std::vector<EdgeId>& slots,
               const Multigraph& g, int lv, SlotRot& rot) {
    VertexId fv = verts[lv];
    std::vector<EdgeId> ve = incident(fv, slots);
    if (ve.size() != 4) return false;
    for (const auto& seq : orderings_at(g, lv)) {
      std::array<int, 4> wl;
      std::array<VertexId, 4> w;
      for (int i = 0; i < 4; ++i) {
        wl[i] = g.dart_far_vertex(seq[i]);
        w[i] = verts[wl[i]];
      }
      if (wl[0] == wl[2] || g.adjacent(wl[0], wl[2])) continue;
      std::size_t tsnap = trace.size();
      std::size_t hsnap = ctx.helper_ends.size();
      EdgeId h = ctx.new_helper(w[0], w[2]);
      std::vector<VertexId> cverts;
      for (VertexId x : verts)
        if (x != fv) cverts.push_back(x);
      std::vector<EdgeId> cslots;
      for (EdgeId s : slots)
        if (std::find(ve.begin(), ve.end(), s) == ve.end()) cslots.push_back(s);
      cslots.push_back(h);
      if (!solve(cverts, cslots, rot)) {
        trace.resize(tsnap);
        ctx.pop_helpers(ctx.helper_ends.size() - hsnap);
        continue;
      }
      std::sort(cslots.begin(), cslots.end());
      // The two faces flanking h must be the triangles w0-w2-w1 and w0-w2-w3.
      auto faces = slot_faces(cverts, cslots, rot, ctx);
      std::vector<const std::vector<Dart>*> hf;
      for (const auto& f : faces)
        for (Dart d : f)
          if (dart_edge(d) == h) {
            hf.push_back(&f);
            break;
          }
      auto third = [&](const std::vector<Dart>& f) -> std::optional<VertexId> {
        if (f.size() != 3) return std::nullopt;
        std::set<VertexId> vs;
        for (Dart d : f) vs.insert(ctx.slot_dart_vertex(d));
        if (!vs.count(w[0]) || !vs.count(w[2]) || vs.size() != 3) return std::nullopt;
        for (VertexId x : vs)
          if (x != w[0] && x != w[2]) return x;
        return std::nullopt;
      };
      bool flanks_ok = false;
      if (hf.size() == 2) {
        auto t0 = third(*hf[0]), t1 = third(*hf[1]);
        flanks_ok = t0 && t1 &&
                    ((*t0 == w[1] && *t1 == w[3]) || (*t0 == w[3] && *t1 == w[1]));
      }
      if (flanks_ok) {
        SlotRot trial = rot;
        rot_remove_edge(trial, h, ctx);
        std::vector<EdgeId> merged_slots;
        for (EdgeId s : cslots)
          if (s != h) merged_slots.push_back(s);
        std::set<EdgeId> quad_es;
        for (auto* f : hf)
          for (Dart d : *f)
            if (dart_edge(d) != h) quad_es.insert(dart_edge(d));
        auto mfaces = slot_faces(cverts, merged_slots, trial, ctx);
        const std::vector<Dart>* quad = nullptr;
        for (const auto& f : mfaces) {
          if (f.size() != 4) continue;
          std::set<EdgeId> es;
          for (Dart d : f) es.insert(dart_edge(d));
          if (es == quad_es) {
            quad = &f;
            break;
          }
        }
        if (quad) {
          TraceStep st;
          st.kase = "d4";
          st.vertex = ctx.final_graph->label(fv);
          st.delete_edges = {h};
          if (try_insertions(verts, slots, trial, fv, *quad,
                             {ve.begin(), ve.end()}, st)) {
            rot = trial;
            trace.push_back(std::move(st));
            return true;
          }
        }
      }
      trace.resize(tsnap);
      ctx.pop_helpers(ctx.helper_ends.size() - hsnap);
    }
    return false;
  }

  bool case_d5(const std::vector<VertexId>& verts, const std::vector<EdgeId>& slots,
               const Multigraph& g, int lv, SlotRot& rot) {
    VertexId fv = verts[lv];
    std::vector<EdgeId> ve = incident(fv, slots);
    if (ve.size() != 5) return false;
    for (const auto& seq : orderings_at(g, lv)) {
      std::array<VertexId, 5> w;
      std::array<int, 5> wl;
      for (int i = 0; i < 5; ++i) {
        wl[i] = g.dart_far_vertex(seq[i]);
        w[i] = verts[wl[i]];
      }
      std::set<VertexId> distinct(w.begin(), w.end());
      if (distinct.size() != 5) return false;
      // N(v) must induce exactly the 5-cycle w0..w4.
      bool cycle_ok = true;
      for (int i = 0; i < 5 && cycle_ok; ++i)
        for (int j = i + 1; j < 5 && cycle_ok; ++j) {
          int mult = g.multiplicity(wl[i], wl[j]);
          bool consec = (j == i + 1) || (i == 0 && j == 4);
          if (mult != (consec ? 1 : 0)) cycle_ok = false;
        }
      if (!cycle_ok) return false;
      std::size_t tsnap = trace.size();
      std::size_t hsnap = ctx.helper_ends.size();
      EdgeId h1 = ctx.new_helper(w[0], w[2]);
      EdgeId h2 = ctx.new_helper(w[0], w[3]);
      std::vector<VertexId> cverts;
      for (VertexId x : verts)
        if (x != fv) cverts.push_back(x);
      std::vector<EdgeId> cslots;
      for (EdgeId s : slots)
        if (std::find(ve.begin(), ve.end(), s) == ve.end()) cslots.push_back(s);
      cslots.push_back(h1);
      cslots.push_back(h2);
      if (!solve(cverts, cslots, rot)) {
        trace.resize(tsnap);
        ctx.pop_helpers(ctx.helper_ends.size() - hsnap);
        continue;
      }
      std::sort(cslots.begin(), cslots.end());
      auto faces = slot_faces(cverts, cslots, rot, ctx);
      auto tri_with = [&](EdgeId e, const std::set<VertexId>& want) {
        for (const auto& f : faces) {
          if (f.size() != 3) continue;
          bool has = false;
          std::set<VertexId> vs;
          for (Dart d : f) {
            if (dart_edge(d) == e) has = true;
            vs.insert(ctx.slot_dart_vertex(d));
          }
          if (has && vs == want) return true;
        }
        return false;
      };
      bool flanks_ok = tri_with(h1, {w[0], w[1], w[2]}) &&
                       tri_with(h1, {w[0], w[2], w[3]}) &&
                       tri_with(h2, {w[0], w[2], w[3]}) &&
                       tri_with(h2, {w[0], w[3], w[4]});
      if (flanks_ok) {
        SlotRot trial = rot;
        rot_remove_edge(trial, h1, ctx);
        rot_remove_edge(trial, h2, ctx);
        std::vector<EdgeId> merged_slots;
        for (EdgeId s : cslots)
          if (s != h1 && s != h2) merged_slots.push_back(s);
        // The pentagon's boundary is the 5-cycle on N(v).
        std::set<EdgeId> pent_es;
        for (EdgeId s : merged_slots) {
          auto [a, b] = ctx.ends(s);
          for (int i = 0; i < 5; ++i) {
            VertexId x = w[i], y = w[(i + 1) % 5];
            if ((a == x && b == y) || (a == y && b == x)) pent_es.insert(s);
          }
        }
        auto mfaces = slot_faces(cverts, merged_slots, trial, ctx);
        const std::vector<Dart>* pent = nullptr;
        for (const auto& f : mfaces) {
          if (f.size() != 5) continue;
          std::set<EdgeId> es;
          for (Dart d : f) es.insert(dart_edge(d));
          if (es == pent_es) {
            pent = &f;
            break;
          }
        }
        if (pent) {
          TraceStep st;
          st.kase = "d5";
          st.vertex = ctx.final_graph->label(fv);
          st.delete_edges = {h1, h2};
          if (try_insertions(verts, slots, trial, fv, *pent,
                             {ve.begin(), ve.end()}, st)) {
            rot = trial;
            trace.push_back(std::move(st));
            return true;
          }
        }
      }
      trace.resize(tsnap);
      ctx.pop_helpers(ctx.helper_ends.size() - hsnap);
    }
    return false;
  }
};

}  // namespace

ReconstructionResult reconstruct_triangulation(const Multigraph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) throw Error(ErrorCode::HasLoops, "reconstruction needs a loopless graph");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "reconstruction needs a connected graph");
  const int n = g.vertex_count();
  if (n < 3) throw Error(ErrorCode::PreconditionViolated, "need n >= 3");
  if (g.edge_count() != 3 * n - 6)
    throw Error(ErrorCode::EdgeCountMismatch,
                "m = " + std::to_string(g.edge_count()) + " but 3n-6 = " + std::to_string(3 * n - 6));
  auto lh = is_locally_hamiltonian(g);
  if (!lh.locally_hamiltonian)
    throw Error(ErrorCode::NotLocallyHamiltonian,
                "vertex '" + g.label(*lh.failing_vertex) + "' admits no Hamiltonian ordering");

  Ctx ctx{&g, {}, false};
  ReconstructionTrace trace;
  Solver solver{ctx, trace};
  std::vector<VertexId> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<EdgeId> slots(g.edge_count());
  std::iota(slots.begin(), slots.end(), 0);
  SlotRot rot(n);
  if (!solver.solve(verts, slots, rot))
    throw Error(ErrorCode::ReconstructionFailed,
                "search exhausted; this signals a bug or a theorem counterexample");

  // Record helper endpoints so the trace replays standalone.
  for (auto& st : trace)
    for (EdgeId h : st.delete_edges) {
      auto [a, b] = ctx.ends(h);
      st.delete_edge_ends.push_back({g.label(a), g.label(b)});
    }

  ReconstructionResult res{EmbeddingScheme::make(g, rot), std::move(trace), ctx.backtracked};
  return res;
}

EmbeddingScheme replay_trace(const Multigraph& g, const ReconstructionTrace& trace) {
  Ctx ctx{&g, {}, false};
  // Pre-register helper edges (ids at/above the final edge count).
  EdgeId max_slot = g.edge_count() - 1;
  for (const auto& st : trace)
    for (EdgeId h : st.delete_edges) max_slot = std::max(max_slot, h);
  ctx.helper_ends.assign(std::max<EdgeId>(0, max_slot - g.edge_count() + 1), {-1, -1});
  for (const auto& st : trace)
    for (std::size_t i = 0; i < st.delete_edges.size(); ++i) {
      EdgeId h = st.delete_edges[i];
      if (h < g.edge_count()) continue;
      ctx.helper_ends[h - g.edge_count()] = {g.vertex_by_label(st.delete_edge_ends[i][0]),
                                             g.vertex_by_label(st.delete_edge_ends[i][1])};
    }

  SlotRot rot(g.vertex_count());
  std::vector<VertexId> verts;
  std::set<EdgeId> slots;
  for (const auto& st : trace) {
    if (st.kase == "base") {
      for (const auto& l : st.base_labels) verts.push_back(g.vertex_by_label(l));
      std::sort(verts.begin(), verts.end());
      for (EdgeId e : st.base_edges) slots.insert(e);
      for (VertexId v : verts) {
        rot[v].clear();
        for (EdgeId s : slots)
          for (int end = 0; end < 2; ++end)
            if (ctx.ends(s)[end] == v) rot[v].push_back(make_dart(s, end));
      }
      continue;
    }
    if (st.kase == "d2") {
      EdgeId e1 = st.readd_edge, e2 = st.beside_edge;
      VertexId v1 = ctx.ends(e1)[0], v2 = ctx.ends(e1)[1];
      Dart d1 = make_dart(e1, 0), d2d = make_dart(e1, 1);
      Dart a1 = make_dart(e2, (ctx.ends(e2)[0] == v1) ? 0 : 1);
      Dart a2 = dart_partner(a1);
      if (st.side_variant & 1) rot_insert_before(rot[v1], a1, d1);
      else rot_insert_after(rot[v1], a1, d1);
      if (st.side_variant & 2) rot_insert_before(rot[v2], a2, d2d);
      else rot_insert_after(rot[v2], a2, d2d);
      slots.insert(e1);
    }
    for (EdgeId h : st.delete_edges) {
      rot_remove_edge(rot, h, ctx);
      slots.erase(h);
    }
    // Locate the face to subdivide by its edge set.
    std::vector<EdgeId> slist(slots.begin(), slots.end());
    auto faces = slot_faces(verts, slist, rot, ctx);
    std::set<EdgeId> want(st.face_edges.begin(), st.face_edges.end());
    const std::vector<Dart>* face = nullptr;
    for (const auto& f : faces) {
      if (f.size() != st.face_edges.size()) continue;
      std::set<EdgeId> es;
      for (Dart d : f) es.insert(dart_edge(d));
      if (es == want) {
        face = &f;
        break;
      }
    }
    if (!face) throw Error(ErrorCode::ReconstructionFailed, "trace replay: face not found");
    VertexId fv = g.vertex_by_label(st.vertex);
    insert_vertex_in_face(rot, fv, *face, st.corner_edges, st.insert_dir, ctx);
    verts.push_back(fv);
    std::sort(verts.begin(), verts.end());
    for (EdgeId e : st.corner_edges) slots.insert(e);
  }
  return EmbeddingScheme::make(g, rot);
}

// ---------------------------------------------------------------------------
// d2 replay nuance: the d2 branch above inserts e1's darts by its stored
// endpoint order, matching the reconstruction which did the same.
// ---------------------------------------------------------------------------

SideDecomposition side_decomposition(const EmbeddingScheme& s, const CycleSpec& c) {
  if (euler_genus(s) != 0) throw Error(ErrorCode::NotGenusZero, "side decomposition needs genus 0");
  const Multigraph& g = s.graph;
  // Validate the cycle: length 2 (parallel pair) or 3 (triangle).
  std::set<EdgeId> ce(c.edges.begin(), c.edges.end());
  std::set<VertexId> cv;
  for (EdgeId e : c.edges) {
    if (e < 0 || e >= g.edge_count() || g.is_loop(e))
      throw Error(ErrorCode::NotACycle, "bad cycle edge id");
    cv.insert(g.ends(e)[0]);
    cv.insert(g.ends(e)[1]);
  }
  if (ce.size() != c.edges.size()) throw Error(ErrorCode::NotACycle, "repeated edge");
  if (c.edges.size() == 2) {
    if (cv.size() != 2 || g.ends(c.edges[0])[0] + g.ends(c.edges[0])[1] !=
                              g.ends(c.edges[1])[0] + g.ends(c.edges[1])[1] ||
        std::set<VertexId>{g.ends(c.edges[0])[0], g.ends(c.edges[0])[1]} !=
            std::set<VertexId>{g.ends(c.edges[1])[0], g.ends(c.edges[1])[1]})
      throw Error(ErrorCode::NotACycle, "a 2-cycle needs two parallel edges");
  } else if (c.edges.size() == 3) {
    if (cv.size() != 3) throw Error(ErrorCode::NotACycle, "a 3-cycle needs three distinct vertices");
    // each vertex must meet exactly two of the edges
    for (VertexId v : cv) {
      int deg = 0;
      for (EdgeId e : c.edges)
        if (g.ends(e)[0] == v || g.ends(e)[1] == v) ++deg;
      if (deg != 2) throw Error(ErrorCode::NotACycle, "edges do not close a 3-cycle");
    }
  } else {
    throw Error(ErrorCode::NotACycle, "cycle must have length 2 or 3");
  }

  FaceSet fs = trace_faces(s);
  const int nf = fs.count();
  std::vector<int> comp(nf);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  // Dual adjacency through edges not on the cycle.
  std::vector<std::vector<int>> faces_of_edge(g.edge_count());
  for (int i = 0; i < nf; ++i)
    for (EdgeId e : fs.faces[i].edge_cycle()) faces_of_edge[e].push_back(i);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (ce.count(e)) continue;
    auto& fl = faces_of_edge[e];
    for (std::size_t i = 1; i < fl.size(); ++i) comp[find(fl[i])] = find(fl[0]);
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < nf; ++i) groups[find(i)].push_back(i);
  if (groups.size() != 2)
    throw Error(ErrorCode::NotACycle,
                "cycle is not separating (" + std::to_string(groups.size()) + " dual components)");
  // The component holding the least face (faces are sorted) is the exterior.
  SideDecomposition out;
  int outer_root = find(0);
  for (auto& [root, members] : groups) {
    std::set<VertexId> side_v;
    for (int fi : members)
      for (VertexId v : fs.faces[fi].vertices(g))
        if (!cv.count(v)) side_v.insert(v);
    bool is_exterior = (root == outer_root);
    auto& vv = is_exterior ? out.exterior : out.interior;
    auto& ff = is_exterior ? out.exterior_faces : out.interior_faces;
    vv.assign(side_v.begin(), side_v.end());
    for (int fi : members) ff.push_back(fs.faces[fi]);
  }
  return out;
}

std::vector<VertexId> lemma1_candidates(const EmbeddingScheme& s, const CycleSpec& c, Side side) {
  if (!is_sphere_triangulation(s))
    throw Error(ErrorCode::PreconditionViolated, "scheme is not a sphere triangulation");
  const Multigraph& g = s.graph;
  FaceSet fs = trace_faces(s);
  std::set<std::multiset<EdgeId>> facial_triples;
  for (const auto& f : fs.faces) {
    auto ec = f.edge_cycle();
    facial_triples.insert({ec.begin(), ec.end()});
  }
  if (c.edges.size() == 3) {
    std::multiset<EdgeId> mine(c.edges.begin(), c.edges.end());
    if (facial_triples.count(mine))
      throw Error(ErrorCode::PreconditionViolated, "3-cycle is facial, not separating");
  }
  SideDecomposition sd = side_decomposition(s, c);
  const auto& chosen = (side == Side::Interior) ? sd.interior : sd.exterior;
  for (VertexId v : chosen)
    if (g.degree(v) < 4)
      throw Error(ErrorCode::PreconditionViolated,
                  "side vertex '" + g.label(v) + "' has degree " + std::to_string(g.degree(v)) +
                      " < 4");

  // Vertices lying on some non-facial 3-cycle of the whole triangulation.
  const int n = g.vertex_count();
  std::vector<std::vector<std::vector<EdgeId>>> between(n, std::vector<std::vector<EdgeId>>(n));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(e);
    between[a][b].push_back(e);
    between[b][a].push_back(e);
  }
  std::vector<bool> in_bad(n, false);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int cc = b + 1; cc < n; ++cc) {
        if (between[a][b].empty() || between[b][cc].empty() || between[a][cc].empty()) continue;
        for (EdgeId e1 : between[a][b])
          for (EdgeId e2 : between[b][cc])
            for (EdgeId e3 : between[a][cc])
              if (!facial_triples.count({e1, e2, e3}))
                in_bad[a] = in_bad[b] = in_bad[cc] = true;
      }

  std::vector<VertexId> out;
  for (VertexId v : chosen) {
    if (!is_simple_vertex(g, v)) continue;
    if (g.degree(v) > 5) continue;
    int nonsimple = 0;
    for (VertexId w : g.neighbors(v))
      if (!is_simple_vertex(g, w)) ++nonsimple;
    if (nonsimple > 2) continue;
    if (in_bad[v]) continue;
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

namespace {

// All cyclic orders at each vertex, first dart pinned; leaf test: every
// positive-direction orbit has length exactly 3 and Euler count closes.
struct OracleScan {
  const Multigraph& g;
  std::vector<std::vector<Dart>> rot;
  std::vector<int> pos;  // dart -> index in its rotation

  explicit OracleScan(const Multigraph& g_) : g(g_), pos(2 * g_.edge_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) rot.push_back(g.darts_at(v));
  }

  void refresh_pos(VertexId v) {
    for (std::size_t i = 0; i < rot[v].size(); ++i) pos[rot[v][i]] = static_cast<int>(i);
  }

  bool all_triangles() {
    for (VertexId v = 0; v < g.vertex_count(); ++v) refresh_pos(v);
    const int m = g.edge_count();
    for (Dart d = 0; d < 2 * m; ++d) {
      Dart cur = d;
      for (int step = 0; step < 3; ++step) {
        Dart p = dart_partner(cur);
        VertexId w = g.dart_vertex(p);
        const auto& r = rot[w];
        cur = r[(pos[p] + 1) % r.size()];
      }
      if (cur != d) return false;
    }
    return true;
  }

  bool scan(VertexId v) {
    if (v == g.vertex_count()) return all_triangles();
    auto& r = rot[v];
    if (r.size() <= 2) return scan(v + 1);
    std::sort(r.begin() + 1, r.end());
    do {
      if (scan(v + 1)) return true;
    } while (std::next_permutation(r.begin() + 1, r.end()));
    return false;
  }
};

}  // namespace

std::optional<EmbeddingScheme> oracle_embed(const Multigraph& g, int threads) {
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) throw Error(ErrorCode::HasLoops, "oracle needs a loopless graph");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "oracle needs a connected graph");
  const int n = g.vertex_count();
  if (n > 8) throw Error(ErrorCode::TooLarge, "oracle hard cap is n <= 8");
  if (n < 3) return std::nullopt;
  if (g.edge_count() != 3 * n - 6) return std::nullopt;  // all-triangle genus 0 forces m = 3n-6

  // Enumerate the root vertex's cyclic orders up front so the scan can be
  // partitioned deterministically across workers.
  std::vector<std::vector<Dart>> root_orders;
  {
    std::vector<Dart> r = g.darts_at(0);
    if (r.size() <= 2) {
      root_orders.push_back(r);
    } else {
      std::sort(r.begin() + 1, r.end());
      do {
        root_orders.push_back(r);
      } while (std::next_permutation(r.begin() + 1, r.end()));
    }
  }

  auto run_range = [&](std::size_t lo, std::size_t hi)
      -> std::optional<std::pair<std::size_t, std::vector<std::vector<Dart>>>> {
    OracleScan scan(g);
    for (std::size_t i = lo; i < hi; ++i) {
      scan.rot[0] = root_orders[i];
      if (scan.scan(1)) return std::make_pair(i, scan.rot);
    }
    return std::nullopt;
  };

  std::optional<std::pair<std::size_t, std::vector<std::vector<Dart>>>> best;
  if (threads <= 1 || root_orders.size() == 1) {
    best = run_range(0, root_orders.size());
  } else {
    const std::size_t nw = std::min<std::size_t>(threads, root_orders.size());
    std::vector<std::future<std::optional<std::pair<std::size_t, std::vector<std::vector<Dart>>>>>>
        futs;
    for (std::size_t w = 0; w < nw; ++w) {
      std::size_t lo = root_orders.size() * w / nw;
      std::size_t hi = root_orders.size() * (w + 1) / nw;
      futs.push_back(std::async(std::launch::async, run_range, lo, hi));
    }
    for (auto& f : futs) {
      auto r = f.get();
      if (r && (!best || r->first < best->first)) best = r;  // least index wins
    }
  }
  if (!best) return std::nullopt;
  return EmbeddingScheme::make(g, best->second);
}

// ---------------------------------------------------------------------------
// Gluing fixture machinery
// ---------------------------------------------------------------------------

EmbeddingScheme glue_on_facial_triangle(const EmbeddingScheme& s1, const FacialWalk& f1,
                                        const EmbeddingScheme& s2, const FacialWalk& f2) {
  if (f1.length() != 3 || f2.length() != 3)
    throw Error(ErrorCode::PreconditionViolated, "glue faces must be triangles");
  const Multigraph& g1 = s1.graph;

  auto corners_of = [](const Multigraph& g, const FacialWalk& f) {
    std::array<VertexId, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = g.dart_vertex(f.boundary[i]);
    return c;
  };
  std::array<VertexId, 3> c1 = corners_of(g1, f1);

  for (int refl = 0; refl < 2; ++refl) {
    EmbeddingScheme ss2 = refl ? s2.mirrored() : s2;
    const Multigraph& g2 = ss2.graph;
    std::array<VertexId, 3> c2 = corners_of(g2, f2);
    std::set<VertexId> glue2(c2.begin(), c2.end());
    std::vector<EdgeId> f2_edges = f2.edge_set();
    std::set<EdgeId> glue2_edges(f2_edges.begin(), f2_edges.end());

    for (int r = 0; r < 3; ++r)
      for (int flip = 0; flip < 2; ++flip) {
        // c2[i] is identified with c1[pi(i)].
        auto pi = [&](int i) { return flip ? (r + 3 - i) % 3 : (r + i) % 3; };
        // Combined graph.
        std::vector<std::string> labels = g1.labels();
        std::set<std::string> taken(labels.begin(), labels.end());
        std::vector<int> map2(g2.vertex_count(), -1);
        for (int i = 0; i < 3; ++i) map2[c2[i]] = c1[pi(i)];
        for (VertexId v = 0; v < g2.vertex_count(); ++v) {
          if (map2[v] >= 0) continue;
          std::string lab = g2.label(v);
          while (taken.count(lab)) lab += "'";
          taken.insert(lab);
          map2[v] = static_cast<int>(labels.size());
          labels.push_back(lab);
        }
        std::vector<std::array<VertexId, 2>> edges = g1.edges();
        std::vector<EdgeId> emap2(g2.edge_count(), -1);
        for (EdgeId e = 0; e < g2.edge_count(); ++e) {
          if (glue2_edges.count(e)) continue;
          emap2[e] = static_cast<EdgeId>(edges.size());
          edges.push_back({map2[g2.ends(e)[0]], map2[g2.ends(e)[1]]});
        }
        Multigraph combined(labels, edges, false);

        // Rotations: s1's everywhere; s2's arcs spliced into the glue corners.
        std::vector<std::vector<Dart>> rot(combined.vertex_count());
        for (VertexId v = 0; v < g1.vertex_count(); ++v) rot[v] = s1.rotation[v];
        for (VertexId v = 0; v < g2.vertex_count(); ++v) {
          if (glue2.count(v)) continue;
          for (Dart d : ss2.rotation[v])
            rot[map2[v]].push_back(make_dart(emap2[dart_edge(d)], dart_end(d)));
        }
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          VertexId v2 = c2[i];
          VertexId tgt = c1[pi(i)];
          // Arc: v2's rotation minus its two darts on the glue face,
          // linearized starting after that adjacent pair.
          const auto& r2 = ss2.rotation[v2];
          const int k = static_cast<int>(r2.size());
          std::vector<int> face_pos;
          for (int j = 0; j < k; ++j)
            if (glue2_edges.count(dart_edge(r2[j]))) face_pos.push_back(j);
          if (face_pos.size() != 2) {
            ok = false;
            break;
          }
          int start;
          if ((face_pos[0] + 1) % k == face_pos[1]) start = (face_pos[1] + 1) % k;
          else if ((face_pos[1] + 1) % k == face_pos[0]) start = (face_pos[0] + 1) % k;
          else {
            ok = false;  // the two face darts are not adjacent; wrong corner shape
            break;
          }
          std::vector<Dart> arc;
          for (int j = 0; j < k - 2; ++j) {
            Dart d = r2[(start + j) % k];
            arc.push_back(make_dart(emap2[dart_edge(d)], dart_end(d)));
          }
          // Splice the arc at the f1 corner of tgt: between the face's
          // incoming and outgoing darts there.
          int ci = -1;
          for (int j = 0; j < 3; ++j)
            if (g1.dart_vertex(f1.boundary[j]) == tgt) ci = j;
          Dart out_d = f1.boundary[ci];
          Dart in_d = dart_partner(f1.boundary[(ci + 2) % 3]);
          auto& r = rot[tgt];
          auto po = std::find(r.begin(), r.end(), out_d) - r.begin();
          auto pin = std::find(r.begin(), r.end(), in_d) - r.begin();
          std::size_t at;
          if ((pin + 1) % r.size() == static_cast<std::size_t>(po)) at = po;
          else if ((po + 1) % r.size() == static_cast<std::size_t>(pin)) at = pin;
          else {
            ok = false;
            break;
          }
          r.insert(r.begin() + at, arc.begin(), arc.end());
        }
        if (!ok) continue;
        try {
          EmbeddingScheme result = EmbeddingScheme::make(combined, rot);
          if (is_sphere_triangulation(result)) return result;
        } catch (const Error&) {
          continue;
        }
      }
  }
  throw Error(ErrorCode::ReconstructionFailed, "no orientation glued to a sphere triangulation");
}

}  // namespace lhemb
