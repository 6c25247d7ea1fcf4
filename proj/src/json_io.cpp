#include "lhemb/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lhemb {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::ValidationError, "field '" + field + "': " + why);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

const Json& need(const Json& j, const char* key, const char* ctx) {
  if (!j.is_object()) bad(ctx, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string(ctx) + "." + key, "missing");
  return *it;
}

Multigraph graph_from_json(const Json& j) {
  const Json& jv = need(j, "vertices", "graph");
  if (!jv.is_array()) bad("vertices", "expected an array of strings");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < jv.size(); ++i) {
    if (!jv[i].is_string()) bad("vertices[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(jv[i].get<std::string>());
  }
  bool loops = false;
  if (auto it = j.find("loops_allowed"); it != j.end()) {
    if (!it->is_boolean()) bad("loops_allowed", "expected a boolean");
    loops = it->get<bool>();
  }
  const Json& je = need(j, "edges", "graph");
  if (!je.is_array()) bad("edges", "expected an array");
  std::vector<std::pair<std::string, std::string>> edge_list;
  for (std::size_t i = 0; i < je.size(); ++i) {
    std::string ctx = "edges[" + std::to_string(i) + "]";
    const Json& e = je[i];
    const Json& id = need(e, "id", ctx.c_str());
    if (!id.is_number_integer() || id.get<long long>() != static_cast<long long>(i))
      bad(ctx + ".id", "edge ids must be 0..m-1 in order, expected " + std::to_string(i));
    const Json& ends = need(e, "ends", ctx.c_str());
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string())
      bad(ctx + ".ends", "expected two vertex labels");
    edge_list.emplace_back(ends[0].get<std::string>(), ends[1].get<std::string>());
  }
  try {
    return build_graph(labels, edge_list, loops);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string("graph: ") + e.what());
  }
}

EmbeddingScheme scheme_from_json(const Json& j, const Multigraph& g) {
  const Json& jr = need(j, "rotations", "embedding");
  if (!jr.is_object()) bad("embedding.rotations", "expected an object");
  std::vector<std::vector<Dart>> rot(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  for (auto it = jr.begin(); it != jr.end(); ++it) {
    std::string ctx = "embedding.rotations." + it.key();
    VertexId v;
    try {
      v = g.vertex_by_label(it.key());
    } catch (const Error&) {
      bad(ctx, "unknown vertex label");
    }
    if (seen[v]) bad(ctx, "duplicate vertex");
    seen[v] = true;
    if (!it->is_array()) bad(ctx, "expected an array of [edgeId, end] pairs");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& p = (*it)[i];
      std::string pctx = ctx + "[" + std::to_string(i) + "]";
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
          !p[1].is_number_integer())
        bad(pctx, "expected [edgeId, end]");
      long long e = p[0].get<long long>(), end = p[1].get<long long>();
      if (e < 0 || e >= g.edge_count()) bad(pctx, "edge id out of range");
      if (end != 0 && end != 1) bad(pctx, "end must be 0 or 1");
      rot[v].push_back(make_dart(static_cast<EdgeId>(e), static_cast<int>(end)));
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) bad("embedding.rotations", "missing vertex '" + g.label(v) + "'");
  std::vector<std::int8_t> sig(g.edge_count(), 1);
  if (auto it = j.find("signature"); it != j.end()) {
    if (!it->is_object()) bad("embedding.signature", "expected an object");
    for (auto sit = it->begin(); sit != it->end(); ++sit) {
      std::string ctx = "embedding.signature." + sit.key();
      long long e;
      try {
        e = std::stoll(sit.key());
      } catch (...) {
        bad(ctx, "key must be an edge id");
      }
      if (e < 0 || e >= g.edge_count()) bad(ctx, "edge id out of range");
      if (!sit->is_number_integer() ||
          (sit->get<long long>() != 1 && sit->get<long long>() != -1))
        bad(ctx, "value must be 1 or -1");
      sig[e] = static_cast<std::int8_t>(sit->get<long long>());
    }
  }
  try {
    return EmbeddingScheme::make(g, rot, sig);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string("embedding: ") + e.what());
  }
}

Json graph_json(const Multigraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.label(v));
  j["edges"] = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Json je;
    je["id"] = e;
    je["ends"] = {g.label(g.ends(e)[0]), g.label(g.ends(e)[1])};
    j["edges"].push_back(je);
  }
  j["loops_allowed"] = g.loops_allowed();
  return j;
}

Json embedding_json(const EmbeddingScheme& s) {
  Json je;
  je["rotations"] = Json::object();
  for (VertexId v = 0; v < s.graph.vertex_count(); ++v) {
    Json ja = Json::array();
    for (Dart d : s.rotation[v]) ja.push_back({dart_edge(d), dart_end(d)});
    je["rotations"][s.graph.label(v)] = ja;
  }
  Json sig = Json::object();
  for (EdgeId e = 0; e < s.graph.edge_count(); ++e)
    if (s.signature[e] == -1) sig[std::to_string(e)] = -1;
  je["signature"] = sig;
  return je;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

ParsedInput parse_input(const std::string& json_text) {
  Json j = parse_json(json_text);
  ParsedInput in{graph_from_json(j), std::nullopt};
  if (auto it = j.find("embedding"); it != j.end())
    in.scheme = scheme_from_json(*it, in.graph);
  return in;
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_input(ss.str());
}

std::string graph_to_json(const Multigraph& g) { return dump(graph_json(g)); }

std::string scheme_to_json(const EmbeddingScheme& s) {
  Json j = graph_json(s.graph);
  j["embedding"] = embedding_json(s);
  return dump(j);
}

std::string decomposition_to_json(const FlowerDecomposition& d) {
  Json j;
  j["base"] = d.base;
  j["petals"] = Json::array();
  for (const auto& p : d.petals) {
    Json jp;
    jp["kind"] = petal_kind_name(p.kind);
    jp["at"] = p.at;
    j["petals"].push_back(jp);
  }
  return dump(j);
}

FlowerDecomposition parse_decomposition(const std::string& json_text) {
  Json j = parse_json(json_text);
  FlowerDecomposition d;
  const Json& base = need(j, "base", "decomposition");
  if (!base.is_string()) bad("base", "expected \"K2\" or \"K3\"");
  d.base = base.get<std::string>();
  if (d.base != "K2" && d.base != "K3") bad("base", "expected \"K2\" or \"K3\"");
  const Json& petals = need(j, "petals", "decomposition");
  if (!petals.is_array()) bad("petals", "expected an array");
  for (std::size_t i = 0; i < petals.size(); ++i) {
    std::string ctx = "petals[" + std::to_string(i) + "]";
    const Json& kind = need(petals[i], "kind", ctx.c_str());
    const Json& at = need(petals[i], "at", ctx.c_str());
    if (!kind.is_string() || (kind != "K2o" && kind != "K3o"))
      bad(ctx + ".kind", "expected \"K2o\" or \"K3o\"");
    if (!at.is_string()) bad(ctx + ".at", "expected a vertex label");
    d.petals.push_back({kind == "K2o" ? PetalKind::K2o : PetalKind::K3o, at.get<std::string>()});
  }
  return d;
}

std::string trace_to_json(const ReconstructionTrace& t) {
  Json arr = Json::array();
  for (const auto& st : t) {
    Json j;
    j["case"] = st.kase;
    j["vertex"] = st.vertex;
    Json p = Json::object();
    if (st.kase == "base") {
      p["labels"] = st.base_labels;
      p["edges"] = st.base_edges;
    } else {
      if (st.kase == "d2") {
        p["readd"] = st.readd_edge;
        p["beside"] = st.beside_edge;
        p["side_variant"] = st.side_variant;
      }
      if (!st.delete_edges.empty()) {
        Json del = Json::array();
        for (std::size_t i = 0; i < st.delete_edges.size(); ++i) {
          Json d;
          d["id"] = st.delete_edges[i];
          d["ends"] = {st.delete_edge_ends[i][0], st.delete_edge_ends[i][1]};
          del.push_back(d);
        }
        p["deleted"] = del;
      }
      p["face"] = st.face_edges;
      p["corners"] = st.corner_edges;
      p["dir"] = st.insert_dir;
    }
    j["params"] = p;
    arr.push_back(j);
  }
  return dump(arr);
}

ReconstructionTrace parse_trace(const std::string& json_text) {
  Json arr = parse_json(json_text);
  if (!arr.is_array()) bad("trace", "expected an array of steps");
  ReconstructionTrace t;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string ctx = "trace[" + std::to_string(i) + "]";
    const Json& j = arr[i];
    TraceStep st;
    const Json& kase = need(j, "case", ctx.c_str());
    if (!kase.is_string()) bad(ctx + ".case", "expected a string");
    st.kase = kase.get<std::string>();
    st.vertex = need(j, "vertex", ctx.c_str()).get<std::string>();
    const Json& p = need(j, "params", ctx.c_str());
    if (st.kase == "base") {
      st.base_labels = need(p, "labels", ctx.c_str()).get<std::vector<std::string>>();
      st.base_edges = need(p, "edges", ctx.c_str()).get<std::vector<EdgeId>>();
    } else {
      if (st.kase == "d2") {
        st.readd_edge = need(p, "readd", ctx.c_str()).get<EdgeId>();
        st.beside_edge = need(p, "beside", ctx.c_str()).get<EdgeId>();
        st.side_variant = need(p, "side_variant", ctx.c_str()).get<int>();
      }
      if (auto it = p.find("deleted"); it != p.end()) {
        for (const Json& d : *it) {
          st.delete_edges.push_back(need(d, "id", ctx.c_str()).get<EdgeId>());
          auto ends = need(d, "ends", ctx.c_str()).get<std::vector<std::string>>();
          if (ends.size() != 2) bad(ctx + ".deleted.ends", "expected two labels");
          st.delete_edge_ends.push_back({ends[0], ends[1]});
        }
      }
      st.face_edges = need(p, "face", ctx.c_str()).get<std::vector<EdgeId>>();
      st.corner_edges = need(p, "corners", ctx.c_str()).get<std::vector<EdgeId>>();
      st.insert_dir = need(p, "dir", ctx.c_str()).get<int>();
    }
    t.push_back(std::move(st));
  }
  return t;
}

std::string report_to_json(const VerificationReport& r) {
  Json j;
  j["claim"] = r.claim;
  Json rng;
  rng["max_n"] = r.range.max_n;
  rng["max_multiplicity"] = r.range.max_multiplicity;
  rng["allow_loops"] = r.range.allow_loops;
  rng["max_edges"] = r.range.max_edges;
  rng["max_darts"] = r.range.max_darts;
  j["range"] = rng;
  j["population"] = r.population;
  j["equality_cases"] = r.equality_cases;
  j["violations"] = r.violations;
  j["seconds"] = r.seconds;
  return dump(j);
}

std::string to_dot(const Multigraph& g, const EmbeddingScheme* s) {
  std::ostringstream o;
  o << "graph {\n";
  if (s) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      o << "  // rotation at " << g.label(v) << ":";
      for (Dart d : s->rotation[v]) o << " (" << dart_edge(d) << "," << dart_end(d) << ")";
      o << "\n";
    }
    bool any = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (s->signature[e] == -1) {
        if (!any) o << "  // negative edges:";
        any = true;
        o << " " << e;
      }
    if (any) o << "\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) o << "  \"" << g.label(v) << "\";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    o << "  \"" << g.label(g.ends(e)[0]) << "\" -- \"" << g.label(g.ends(e)[1])
      << "\" [label=\"" << e << "\"];\n";
  o << "}\n";
  return o.str();
}

}  // namespace lhemb
