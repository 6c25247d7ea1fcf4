#pragma once

#include <string>
#include <vector>

#include "lhemb/json_io.hpp"

namespace lhemb {

struct Fixture {
  std::string name;  // file name, e.g. "k4_projective.json"
  std::string content;
};

/// The bundled example files: small triangulations (sphere schemes via
/// reconstruction), the two counterexample schemes found by exhaustive
/// search, the double-octahedron gluing, and sample flowers. Deterministic;
/// computed once on first use.
const std::vector<Fixture>& bundled_fixtures();

/// Writes every bundled fixture into dir (created if missing).
void write_fixtures(const std::string& dir);

}  // namespace lhemb
