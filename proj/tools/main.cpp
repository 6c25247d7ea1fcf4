// Command-line front door: every subcommand reads JSON (file or stdin),
// writes JSON (file or stdout), and exits 0 on success, 1 when a check or
// verification fails, 2 on bad usage, and 10+ for library errors (see the
// README for the full table).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "lhemb/fixtures.hpp"
#include "lhemb/json_io.hpp"

using Json = nlohmann::ordered_json;
using namespace lhemb;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string input = "-";
  std::string output = "-";
};

void add_io(CLI::App* cmd, CommonOpts& io, bool needs_input = true) {
  if (needs_input)
    cmd->add_option("--input", io.input, "input file ('-' for standard input)");
  cmd->add_option("--output", io.output, "output file ('-' for standard output)");
}

ParsedInput read_input(const CommonOpts& io) {
  if (io.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse_input(ss.str());
  }
  return parse_input_file(io.input);
}

std::string read_raw(const CommonOpts& io) {
  if (io.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(io.input);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + io.input + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const CommonOpts& io, const std::string& text) {
  if (io.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(io.output);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write '" + io.output + "'");
  out << text;
}

void emit(const CommonOpts& io, const Json& j) { emit(io, j.dump(2) + "\n"); }

const EmbeddingScheme& need_scheme(const ParsedInput& in) {
  if (!in.scheme)
    throw Error(ErrorCode::ValidationError, "this command needs an \"embedding\" object");
  return *in.scheme;
}

Json dart_json(const Multigraph& g, Dart d) {
  (void)g;
  return Json::array({dart_edge(d), dart_end(d)});
}

int cmd_check_lh(const CommonOpts& io) {
  ParsedInput in = read_input(io);
  auto res = is_locally_hamiltonian(in.graph);
  Json j;
  j["locally_hamiltonian"] = res.locally_hamiltonian;
  if (res.locally_hamiltonian) {
    Json cert = Json::object();
    for (const auto& o : res.certificate->orderings) {
      Json seq = Json::array();
      for (Dart d : o.order) seq.push_back(dart_json(in.graph, d));
      cert[in.graph.label(o.vertex)] = seq;
    }
    j["certificate"] = cert;
  } else {
    j["failing_vertex"] = in.graph.label(*res.failing_vertex);
  }
  emit(io, j);
  return res.locally_hamiltonian ? 0 : kExitCheckFailed;
}

Json face_json(const Multigraph& g, const FacialWalk& f) {
  Json jf;
  jf["length"] = f.length();
  Json vs = Json::array();
  for (VertexId v : f.vertices(g)) vs.push_back(g.label(v));
  jf["vertices"] = vs;
  jf["edges"] = f.edge_cycle();
  return jf;
}

int cmd_faces(const CommonOpts& io) {
  ParsedInput in = read_input(io);
  const EmbeddingScheme& s = need_scheme(in);
  FaceSet fs = trace_faces(s);
  Json j;
  j["face_count"] = fs.count();
  j["genus"] = euler_genus(s);
  Json faces = Json::array();
  for (const auto& f : fs.faces) faces.push_back(face_json(s.graph, f));
  j["faces"] = faces;
  emit(io, j);
  return 0;
}

int cmd_genus(const CommonOpts& io) {
  ParsedInput in = read_input(io);
  const EmbeddingScheme& s = need_scheme(in);
  Json j;
  j["genus"] = euler_genus(s);
  j["face_count"] = trace_faces(s).count();
  emit(io, j);
  return 0;
}

int cmd_check_maximal(const CommonOpts& io) {
  ParsedInput in = read_input(io);
  const EmbeddingScheme& s = need_scheme(in);
  MaximalityResult res = is_edge_maximal(s);
  Json j;
  j["maximal"] = res.maximal;
  if (!res.maximal) {
    j["witness"] = Json::array(
        {s.graph.label(res.witness->first), s.graph.label(res.witness->second)});
    j["witness_face"] = face_json(s.graph, *res.face);
  }
  emit(io, j);
  return res.maximal ? 0 : kExitCheckFailed;
}

int cmd_reconstruct(const CommonOpts& io, bool emit_trace) {
  ParsedInput in = read_input(io);
  ReconstructionResult rec = reconstruct_triangulation(in.graph);
  Json j;
  j["genus"] = euler_genus(rec.scheme);
  j["face_count"] = trace_faces(rec.scheme).count();
  j["used_backtracking"] = rec.used_backtracking;
  j["scheme"] = Json::parse(scheme_to_json(rec.scheme));
  if (emit_trace) j["trace"] = Json::parse(trace_to_json(rec.trace));
  emit(io, j);
  return 0;
}

int cmd_oracle(const CommonOpts& io, int threads) {
  ParsedInput in = read_input(io);
  auto found = oracle_embed(in.graph, threads);
  Json j;
  j["found"] = found.has_value();
  if (found) j["scheme"] = Json::parse(scheme_to_json(*found));
  emit(io, j);
  return found ? 0 : kExitCheckFailed;
}

int cmd_lemma1(const CommonOpts& io, const std::vector<EdgeId>& cycle, const std::string& side) {
  ParsedInput in = read_input(io);
  const EmbeddingScheme& s = need_scheme(in);
  CycleSpec c{cycle};
  SideDecomposition sd = side_decomposition(s, c);
  Side which = (side == "exterior") ? Side::Exterior : Side::Interior;
  auto cands = lemma1_candidates(s, c, which);
  auto labels = [&](const std::vector<VertexId>& vs) {
    Json a = Json::array();
    for (VertexId v : vs) a.push_back(s.graph.label(v));
    return a;
  };
  Json j;
  j["side"] = side;
  j["interior"] = labels(sd.interior);
  j["exterior"] = labels(sd.exterior);
  j["candidates"] = labels(cands);
  emit(io, j);
  return 0;
}

int cmd_flower_build(const CommonOpts& io) {
  FlowerDecomposition d = parse_decomposition(read_raw(io));
  emit(io, scheme_to_json(flower_scheme(d)));
  return 0;
}

int cmd_flower_recognize(const CommonOpts& io) {
  ParsedInput in = read_input(io);
  auto d = is_flower(in.graph);
  if (!d) {
    Json j;
    j["flower"] = false;
    emit(io, j);
    return kExitCheckFailed;
  }
  emit(io, decomposition_to_json(*d));
  return 0;
}

int cmd_enumerate(const CommonOpts& io, const std::string& claim, const EnumerationRange& r,
                  int threads, int samples, unsigned seed) {
  VerificationReport rep;
  if (claim == "lh-bound") rep = verify_lh_bound(r, threads);
  else if (claim == "maximal") rep = verify_maximal_embeddings(r, threads);
  else if (claim == "loop-bound") rep = verify_loop_bound(r, threads);
  else rep = verify_lemma1(samples, seed, threads);
  emit(io, report_to_json(rep));
  return rep.violations.empty() ? 0 : kExitCheckFailed;
}

int cmd_fixtures(const CommonOpts& io) {
  if (io.output == "-")
    throw Error(ErrorCode::ValidationError, "fixtures needs --output DIRECTORY");
  write_fixtures(io.output);
  Json j;
  j["directory"] = io.output;
  Json names = Json::array();
  for (const auto& f : bundled_fixtures()) names.push_back(f.name);
  j["written"] = names;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally Hamiltonian multigraphs and edge-maximal surface embeddings"};
  app.require_subcommand(1);

  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  CommonOpts io_check_lh, io_faces, io_genus, io_maximal, io_reconstruct, io_oracle, io_lemma1,
      io_fbuild, io_frec, io_enum, io_fixtures;

  auto* c_lh = app.add_subcommand("check-lh", "test local Hamiltonicity, emit a certificate");
  add_io(c_lh, io_check_lh);

  auto* c_faces = app.add_subcommand("faces", "trace the facial walks of an embedding scheme");
  add_io(c_faces, io_faces);

  auto* c_genus = app.add_subcommand("genus", "Euler genus and face count of a scheme");
  add_io(c_genus, io_genus);

  auto* c_max = app.add_subcommand("check-maximal", "test edge-maximality of a scheme");
  add_io(c_max, io_maximal);

  auto* c_rec = app.add_subcommand("reconstruct",
                                   "build a sphere triangulation scheme of a 3n-6-edge graph");
  add_io(c_rec, io_reconstruct);
  bool emit_trace = false;
  c_rec->add_flag("--emit-trace", emit_trace, "include the replayable surgery trace");

  auto* c_oracle = app.add_subcommand("oracle", "brute-force sphere triangulation search (n <= 8)");
  add_io(c_oracle, io_oracle);
  c_oracle->add_option("--threads", threads, "worker threads");

  auto* c_l1 = app.add_subcommand("lemma1", "removable vertices on one side of a separating cycle");
  add_io(c_l1, io_lemma1);
  std::vector<EdgeId> cycle;
  std::string side = "interior";
  c_l1->add_option("--cycle", cycle, "edge ids of the 2- or 3-cycle")->required()->delimiter(',');
  c_l1->add_option("--side", side, "interior or exterior")
      ->check(CLI::IsMember({"interior", "exterior"}));

  auto* c_fb = app.add_subcommand("flower-build", "build a flower scheme from a decomposition");
  add_io(c_fb, io_fbuild);

  auto* c_fr = app.add_subcommand("flower-recognize", "decompose a graph as a flower");
  add_io(c_fr, io_frec);

  auto* c_enum = app.add_subcommand("enumerate", "exhaustively verify a claim over a range");
  add_io(c_enum, io_enum, /*needs_input=*/false);
  std::string claim;
  EnumerationRange range;
  int samples = 100;
  unsigned seed = 20240817u;
  c_enum->add_option("--claim", claim, "lh-bound, maximal, loop-bound or lemma1")
      ->required()
      ->check(CLI::IsMember({"lh-bound", "maximal", "loop-bound", "lemma1"}));
  c_enum->add_option("--max-n", range.max_n, "largest vertex count");
  c_enum->add_option("--max-multiplicity", range.max_multiplicity, "largest edge multiplicity");
  c_enum->add_flag("--allow-loops", range.allow_loops, "include loops in the range");
  c_enum->add_option("--max-edges", range.max_edges, "edge-count cap (-1: none)");
  c_enum->add_option("--max-darts", range.max_darts, "dart-count cap (-1: none)");
  c_enum->add_option("--threads", threads, "worker threads (reports are thread-independent)");
  c_enum->add_option("--samples", samples, "random gluings for --claim lemma1");
  c_enum->add_option("--seed", seed, "random seed for --claim lemma1");

  auto* c_fx = app.add_subcommand("fixtures", "write the bundled example files to a directory");
  add_io(c_fx, io_fixtures, /*needs_input=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (c_lh->parsed()) return cmd_check_lh(io_check_lh);
    if (c_faces->parsed()) return cmd_faces(io_faces);
    if (c_genus->parsed()) return cmd_genus(io_genus);
    if (c_max->parsed()) return cmd_check_maximal(io_maximal);
    if (c_rec->parsed()) return cmd_reconstruct(io_reconstruct, emit_trace);
    if (c_oracle->parsed()) return cmd_oracle(io_oracle, threads);
    if (c_l1->parsed()) return cmd_lemma1(io_lemma1, cycle, side);
    if (c_fb->parsed()) return cmd_flower_build(io_fbuild);
    if (c_fr->parsed()) return cmd_flower_recognize(io_frec);
    if (c_enum->parsed()) return cmd_enumerate(io_enum, claim, range, threads, samples, seed);
    if (c_fx->parsed()) return cmd_fixtures(io_fixtures);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_exit_code(ErrorCode::ValidationError);
  }
  return kExitUsage;
}
