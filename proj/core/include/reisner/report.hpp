#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reisner/complex.hpp"

namespace reisner {

enum class Verdict { pass, fail, precondition_failure, recorded };

std::string verdict_str(Verdict v);

/// Structured verdict emitted by every verifier.  Rendering is canonical
/// (sorted keys, no timestamps), so identical command + seed reproduces
/// the report byte for byte.
struct Report {
  std::string command;
  std::string theorem = "none";
  std::map<std::string, std::string> inputs;  // role -> digest
  long long characteristic = 0;               // 0 = rationals
  std::vector<std::uint64_t> seeds;
  std::map<std::string, std::vector<long long>> vectors;
  Verdict verdict = Verdict::recorded;
  std::string summary;
};

std::string report_to_json(const Report& r, int indent = 2);
std::string report_to_text(const Report& r);

/// Content digest of a complex (facet count, vertex count, FNV-1a hash of
/// the canonical facet list).
std::string complex_digest(const SimplicialComplex& k);

}  // namespace reisner
