#include "lhemb/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <random>
#include <set>

namespace lhemb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Applies f(i) to 0..count-1, contiguous ranges per worker, results in order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int threads, F&& f) {
  std::vector<T> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  const std::size_t nw = std::min<std::size_t>(threads, count);
  std::vector<std::future<void>> futs;
  for (std::size_t w = 0; w < nw; ++w) {
    std::size_t lo = count * w / nw, hi = count * (w + 1) / nw;
    futs.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = f(i);
    }));
  }
  for (auto& fu : futs) fu.get();
  return out;
}

std::string describe(const Multigraph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " edges[";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e) s += ",";
    s += std::to_string(g.ends(e)[0]) + "-" + std::to_string(g.ends(e)[1]);
  }
  return s + "]";
}

}  // namespace

std::vector<Multigraph> enumerate_graphs(const EnumerationRange& r,
                                         const std::function<bool(const Multigraph&)>& keep) {
  if (r.max_n < 1 || r.max_n > 8)
    throw Error(ErrorCode::RangeTooLarge, "graph enumeration hard cap is n <= 8");
  if (r.max_multiplicity < 1)
    throw Error(ErrorCode::RangeTooLarge, "max_multiplicity must be positive");

  struct Entry {
    int n, m;
    std::vector<std::uint8_t> code;
    Multigraph g;
  };
  std::vector<Entry> found;

  for (int n = 1; n <= r.max_n; ++n) {
    // Slot list: unordered pairs first, then loop slots.
    std::vector<std::array<VertexId, 2>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    if (r.allow_loops)
      for (int i = 0; i < n; ++i) slots.push_back({i, i});

    int edge_cap = r.max_edges >= 0 ? r.max_edges : 1 << 20;
    if (r.max_darts >= 0) edge_cap = std::min(edge_cap, r.max_darts / 2);

    std::set<std::vector<std::uint8_t>> seen;
    std::vector<int> mult(slots.size(), 0);
    int m = 0;
    while (true) {
      if (m <= edge_cap) {
        std::vector<std::array<VertexId, 2>> edges;
        for (std::size_t s = 0; s < slots.size(); ++s)
          for (int k = 0; k < mult[s]; ++k) edges.push_back(slots[s]);
        Multigraph g = build_graph_indexed(n, edges, r.allow_loops);
        if (is_connected(g) && (!keep || keep(g))) {
          auto code = canonical_code(g);
          if (seen.insert(code).second) found.push_back({n, m, code, std::move(g)});
        }
      }
      if (n == 1 && slots.empty()) break;
      // odometer
      std::size_t s = 0;
      while (s < slots.size()) {
        if (mult[s] < r.max_multiplicity) {
          ++mult[s];
          ++m;
          break;
        }
        m -= mult[s];
        mult[s] = 0;
        ++s;
      }
      if (s == slots.size()) break;
    }
  }

  std::sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.m != b.m) return a.m < b.m;
    return a.code < b.code;
  });
  std::vector<Multigraph> out;
  for (auto& e : found) out.push_back(std::move(e.g));
  return out;
}

namespace {

// All cyclic orders of the darts at one vertex: first dart pinned,
// remaining darts permuted in lexicographic order.
std::vector<std::vector<Dart>> cyclic_orders(std::vector<Dart> darts) {
  std::vector<std::vector<Dart>> out;
  if (darts.size() <= 2) {
    out.push_back(darts);
    return out;
  }
  std::sort(darts.begin() + 1, darts.end());
  do {
    out.push_back(darts);
  } while (std::next_permutation(darts.begin() + 1, darts.end()));
  return out;
}

bool self_not_above_mirror(const std::vector<std::vector<Dart>>& rot) {
  for (const auto& r : rot) {
    std::vector<Dart> mir = r;
    if (mir.size() > 2) std::reverse(mir.begin() + 1, mir.end());
    if (r < mir) return true;
    if (mir < r) return false;
  }
  return true;  // self-mirror
}

std::vector<EdgeId> non_tree_edges(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<char> in_tree(g.edge_count(), 0);
  std::vector<char> visited(n, 0);
  std::vector<VertexId> stack{0};
  if (n > 0) visited[0] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (Dart d : g.darts_at(v)) {
      VertexId w = g.dart_far_vertex(d);
      if (!visited[w]) {
        visited[w] = 1;
        in_tree[dart_edge(d)] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!in_tree[e]) out.push_back(e);
  return out;
}

}  // namespace

void enumerate_schemes(const Multigraph& g, bool edge_max_only, int threads,
                       const std::function<void(int chunk, const EmbeddingScheme&)>& fn) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (2 * m > 24)
    throw Error(ErrorCode::RangeTooLarge, "scheme enumeration hard cap is 24 darts");
  if (n == 0) return;
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "scheme scan needs a connected graph");

  std::vector<EdgeId> free_edges = non_tree_edges(g);
  const int nfree = static_cast<int>(free_edges.size());

  std::vector<std::vector<std::vector<Dart>>> orders(n);
  for (VertexId v = 0; v < n; ++v) orders[v] = cyclic_orders(g.darts_at(v));

  auto run_chunk = [&](int chunk) {
    std::vector<std::vector<Dart>> rot(n);
    rot[0] = orders[0][chunk];
    std::vector<int> idx(n, 0);
    while (true) {
      for (VertexId v = 1; v < n; ++v) rot[v] = orders[v][idx[v]];
      if (self_not_above_mirror(rot)) {
        for (int mask = 0; mask < (1 << nfree); ++mask) {
          std::vector<std::int8_t> sig(m, 1);
          for (int b = 0; b < nfree; ++b)
            if (mask & (1 << b)) sig[free_edges[b]] = -1;
          EmbeddingScheme s = EmbeddingScheme::make(g, rot, std::move(sig));
          if (edge_max_only && !is_edge_maximal(s).maximal) continue;
          fn(chunk, s);
        }
      }
      int v = 1;
      while (v < n) {
        if (++idx[v] < static_cast<int>(orders[v].size())) break;
        idx[v] = 0;
        ++v;
      }
      if (v == n) break;
    }
  };

  const int chunks = static_cast<int>(orders[0].size());
  if (threads <= 1 || chunks == 1) {
    for (int c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    const int nw = std::min(threads, chunks);
    std::vector<std::future<void>> futs;
    for (int w = 0; w < nw; ++w) {
      int lo = chunks * w / nw, hi = chunks * (w + 1) / nw;
      futs.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (int c = lo; c < hi; ++c) run_chunk(c);
      }));
    }
    for (auto& fu : futs) fu.get();
  }
}

VerificationReport verify_lh_bound(const EnumerationRange& r, int threads) {
  auto t0 = Clock::now();
  if (r.allow_loops)
    throw Error(ErrorCode::RangeTooLarge, "the 3n-6 bound concerns loopless ranges");
  std::vector<Multigraph> classes = enumerate_graphs(
      r, [](const Multigraph& g) { return is_locally_hamiltonian(g).locally_hamiltonian; });

  struct PerClass {
    std::string equality_code;
    std::vector<std::string> violations;
  };
  auto results = parallel_map<PerClass>(classes.size(), threads, [&](std::size_t i) {
    const Multigraph& g = classes[i];
    PerClass pc;
    const int n = g.vertex_count(), m = g.edge_count();
    if (m < 3 * n - 6) {
      pc.violations.push_back("LH graph below 3n-6: " + describe(g));
      return pc;
    }
    if (n >= 3 && m == 3 * n - 6) {
      pc.equality_code = canonical_code_hex(g);
      try {
        auto rec = reconstruct_triangulation(g);
        if (!is_sphere_triangulation(rec.scheme))
          pc.violations.push_back("reconstruction not a sphere triangulation: " + describe(g));
        else if (trace_faces(rec.scheme).count() != 2 * n - 4)
          pc.violations.push_back("face count not 2n-4: " + describe(g));
      } catch (const Error& e) {
        pc.violations.push_back("reconstruction failed (" + std::string(e.what()) + "): " +
                                describe(g));
      }
      auto oracle = oracle_embed(g);
      if (!oracle || !is_sphere_triangulation(*oracle))
        pc.violations.push_back("oracle found no sphere triangulation: " + describe(g));
    }
    return pc;
  });

  VerificationReport rep;
  rep.claim = "lh-bound";
  rep.range = r;
  rep.population = static_cast<long long>(classes.size());
  for (auto& pc : results) {
    if (!pc.equality_code.empty()) rep.equality_cases.push_back(pc.equality_code);
    for (auto& v : pc.violations) rep.violations.push_back(v);
  }
  rep.seconds = seconds_since(t0);
  return rep;
}

namespace {

bool has_k4(const Multigraph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) &&
              g.adjacent(b, d) && g.adjacent(c, d))
            return true;
  return false;
}

}  // namespace

VerificationReport verify_maximal_embeddings(const EnumerationRange& r, int threads) {
  auto t0 = Clock::now();
  if (r.allow_loops)
    throw Error(ErrorCode::RangeTooLarge, "the maximal-embedding scan concerns loopless ranges");
  if (r.max_darts < 0 || r.max_darts > 24)
    throw Error(ErrorCode::RangeTooLarge, "the maximal-embedding scan needs max_darts <= 24");
  std::vector<Multigraph> classes = enumerate_graphs(r);

  struct PerClass {
    long long schemes = 0;
    std::string equality_code;
    std::vector<std::string> violations;
  };
  auto results = parallel_map<PerClass>(classes.size(), threads, [&](std::size_t i) {
    const Multigraph& g = classes[i];
    PerClass pc;
    const int n = g.vertex_count(), m = g.edge_count();
    if (m > 3 * n - 6) return pc;  // theorem is conditioned on m <= 3n-6

    std::optional<EmbeddingScheme> sphere;
    bool simple = is_simple_graph(g);
    bool check_faces = simple && n >= 4 && !has_k4(g);
    enumerate_schemes(g, true, 1, [&](int, const EmbeddingScheme& s) {
      ++pc.schemes;
      if (m < 3 * n - 6) {
        pc.violations.push_back("edge-maximal scheme with m < 3n-6: " + describe(g));
        return;
      }
      if (!sphere) {
        try {
          sphere = reconstruct_triangulation(g).scheme;
        } catch (const Error& e) {
          pc.violations.push_back("no sphere scheme for graph with edge-maximal embedding (" +
                                  std::string(e.what()) + "): " + describe(g));
          return;
        }
      }
      if (simple) {
        for (VertexId v = 0; v < n; ++v) {
          if (rotation_orientation_match(s, *sphere, v) == OrientationMatch::Mismatch) {
            pc.violations.push_back("rotation mismatch at vertex " + std::to_string(v) + ": " +
                                    describe(g));
            break;
          }
        }
      }
      if (check_faces && !face_sets_equal(s, *sphere))
        pc.violations.push_back("face set differs from sphere scheme: " + describe(g));
    });
    if (pc.schemes > 0 && m == 3 * n - 6) pc.equality_code = canonical_code_hex(g);
    return pc;
  });

  VerificationReport rep;
  rep.claim = "maximal";
  rep.range = r;
  for (auto& pc : results) {
    rep.population += pc.schemes;
    if (!pc.equality_code.empty()) rep.equality_cases.push_back(pc.equality_code);
    for (auto& v : pc.violations) rep.violations.push_back(v);
  }
  rep.seconds = seconds_since(t0);
  return rep;
}

VerificationReport verify_loop_bound(const EnumerationRange& r, int threads) {
  auto t0 = Clock::now();
  if (!r.allow_loops || r.max_n > 3 || r.max_darts < 0 || r.max_darts > 12)
    throw Error(ErrorCode::RangeTooLarge,
                "the loop bound scan needs allow_loops, n <= 3 and max_darts <= 12");
  std::vector<Multigraph> classes = enumerate_graphs(r);

  struct PerClass {
    std::string equality_code;
    std::vector<std::string> violations;
  };
  auto results = parallel_map<PerClass>(classes.size(), threads, [&](std::size_t i) {
    const Multigraph& g = classes[i];
    PerClass pc;
    const int n = g.vertex_count(), m = g.edge_count();
    // The claim only constrains classes at or below the bound, so the
    // expensive scheme scan is skipped wherever m > 2n-3 already.
    if (m > 2 * n - 3) return pc;
    bool has_edge_max = false;
    enumerate_schemes(g, true, 1, [&](int, const EmbeddingScheme&) { has_edge_max = true; });
    bool flower = is_flower(g).has_value();
    if (has_edge_max && m < 2 * n - 3)
      pc.violations.push_back("edge-maximal scheme below 2n-3: " + describe(g));
    if (m == 2 * n - 3) {
      if (has_edge_max) {
        pc.equality_code = canonical_code_hex(g);
        if (!flower)
          pc.violations.push_back("equality case is not a flower: " + describe(g));
      }
      if (flower && !has_edge_max)
        pc.violations.push_back("flower without an edge-maximal scheme: " + describe(g));
    }
    return pc;
  });

  VerificationReport rep;
  rep.claim = "loop-bound";
  rep.range = r;
  rep.population = static_cast<long long>(classes.size());
  for (auto& pc : results) {
    if (!pc.equality_code.empty()) rep.equality_cases.push_back(pc.equality_code);
    for (auto& v : pc.violations) rep.violations.push_back(v);
  }
  rep.seconds = seconds_since(t0);
  return rep;
}

namespace {

Multigraph cap_octahedron() {
  return build_graph({"0", "1", "2", "3", "4", "5"},
                     {{"0", "2"}, {"0", "3"}, {"0", "4"}, {"0", "5"},
                      {"1", "2"}, {"1", "3"}, {"1", "4"}, {"1", "5"},
                      {"2", "4"}, {"2", "5"}, {"3", "4"}, {"3", "5"}});
}

Multigraph cap_bipyramid() {
  // Pentagonal bipyramid: every vertex has degree 4 or 5.
  std::vector<std::string> labels{"t", "b"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 5; ++i) {
    std::string e = "e" + std::to_string(i);
    std::string f = "e" + std::to_string((i + 1) % 5);
    labels.push_back(e);
    edges.push_back({"t", e});
    edges.push_back({"b", e});
    edges.push_back({e, f});
  }
  return build_graph(labels, edges);
}

Multigraph small_k4() {
  return build_graph({"a", "b", "c", "d"},
                     {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}

}  // namespace

VerificationReport verify_lemma1(int samples, unsigned seed, int threads) {
  auto t0 = Clock::now();
  if (samples < 1)
    throw Error(ErrorCode::RangeTooLarge, "need at least one sample");

  const EmbeddingScheme oct = reconstruct_triangulation(cap_octahedron()).scheme;
  const EmbeddingScheme bip = reconstruct_triangulation(cap_bipyramid()).scheme;
  const EmbeddingScheme k4 = reconstruct_triangulation(small_k4()).scheme;
  const FaceSet k4_faces = trace_faces(k4);

  auto violations_of = parallel_map<std::vector<std::string>>(
      static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
        std::vector<std::string> bad;
        // Seeded per sample, so the outcome is independent of threading.
        std::mt19937 rng(seed + 1000003u * static_cast<unsigned>(i));
        const EmbeddingScheme& cap = (rng() % 2) ? bip : oct;
        const int ncap = cap.graph.vertex_count();
        std::string what = "sample " + std::to_string(i) +
                           (ncap == 6 ? " (octahedron cap" : " (bipyramid cap");
        try {
          // Host: K4 grown by gluing K4 caps onto random faces (each adds
          // one vertex); combined size stays at or below 12 vertices.
          int grow = static_cast<int>(rng() % (15 - ncap - 4 + 1));
          what += ", host n=" + std::to_string(4 + grow) + ")";
          EmbeddingScheme host = k4;
          for (int step = 0; step < grow; ++step) {
            FaceSet fs = trace_faces(host);
            const FacialWalk& f = fs.faces[rng() % fs.count()];
            host = glue_on_facial_triangle(host, f, k4, k4_faces.faces[rng() % k4_faces.count()]);
          }
          FaceSet cap_fs = trace_faces(cap);
          FaceSet host_fs = trace_faces(host);
          const FacialWalk& f1 = cap_fs.faces[rng() % cap_fs.count()];
          EmbeddingScheme glued = glue_on_facial_triangle(
              cap, f1, host, host_fs.faces[rng() % host_fs.count()]);

          // The cap keeps its vertex ids and edge ids; its side of the glue
          // triangle is the cap's vertices off that triangle.
          std::set<VertexId> cap_side;
          for (VertexId v = 0; v < ncap; ++v) cap_side.insert(v);
          for (Dart d : f1.boundary) cap_side.erase(glued.graph.dart_vertex(d));
          CycleSpec c{f1.edge_set()};
          SideDecomposition sd = side_decomposition(glued, c);
          std::set<VertexId> interior(sd.interior.begin(), sd.interior.end());
          std::set<VertexId> exterior(sd.exterior.begin(), sd.exterior.end());
          Side side;
          if (interior == cap_side) side = Side::Interior;
          else if (exterior == cap_side) side = Side::Exterior;
          else {
            bad.push_back(what + ": glue side does not match the cap's vertices");
            return bad;
          }
          auto cands = lemma1_candidates(glued, c, side);
          if (cands.size() < 2)
            bad.push_back(what + ": only " + std::to_string(cands.size()) +
                          " candidate(s) on the cap side");
        } catch (const Error& e) {
          bad.push_back(what + ": " + e.what());
        }
        return bad;
      });

  VerificationReport rep;
  rep.claim = "lemma1";
  rep.range.max_n = 12;
  rep.population = samples;
  for (auto& vs : violations_of)
    for (auto& v : vs) rep.violations.push_back(v);
  rep.seconds = seconds_since(t0);
  return rep;
}

}  // namespace lhemb
