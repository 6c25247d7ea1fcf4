#pragma once

#include <optional>
#include <string>

#include "lhemb/enumeration.hpp"

namespace lhemb {

struct ParsedInput {
  Multigraph graph;
  std::optional<EmbeddingScheme> scheme;
};

/// Parses the JSON graph format, with an optional "embedding" object
/// carrying rotations and signature. Malformed JSON raises ParseError;
/// schema violations raise ValidationError naming the offending field.
ParsedInput parse_input(const std::string& json_text);
ParsedInput parse_input_file(const std::string& path);

/// Canonical serializations: fixed key order, no floats except report
/// seconds, stable across runs. parse(serialize(x)) is the identity and
/// serialize(parse(s)) = s for files this library wrote.
std::string graph_to_json(const Multigraph& g);
std::string scheme_to_json(const EmbeddingScheme& s);

std::string decomposition_to_json(const FlowerDecomposition& d);
FlowerDecomposition parse_decomposition(const std::string& json_text);

std::string trace_to_json(const ReconstructionTrace& t);
ReconstructionTrace parse_trace(const std::string& json_text);

std::string report_to_json(const VerificationReport& r);

/// Graphviz export: parallel edges and loops stay distinct (one edge
/// statement per edge id); rotations, when given, appear as comments.
std::string to_dot(const Multigraph& g, const EmbeddingScheme* s = nullptr);

}  // namespace lhemb
