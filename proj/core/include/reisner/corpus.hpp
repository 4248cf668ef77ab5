#pragma once

#include <string>
#include <vector>

#include "reisner/complex.hpp"

namespace reisner {

/// A named, embedded test complex with documented construction and the
/// classification it is expected to satisfy.
struct CorpusEntry {
  std::string name;
  SimplicialComplex complex;
  std::string provenance;
  std::string classification;
};

/// The embedded corpus: simplices and their boundaries, cycles, the
/// 5-vertex Moebius band, the minimal 6-vertex projective plane, the
/// 7-vertex torus, a vertex star inside it, and a few complexes generated
/// by the surgery operations.
const std::vector<CorpusEntry>& corpus();

bool corpus_has(const std::string& name);
const CorpusEntry& corpus_entry(const std::string& name);
const SimplicialComplex& corpus_complex(const std::string& name);

}  // namespace reisner
