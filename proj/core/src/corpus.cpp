#include "reisner/corpus.hpp"

#include <stdexcept>

#include "reisner/surgery.hpp"

namespace reisner {

namespace {

SimplicialComplex cycle(int n) {
  std::vector<Face> facets;
  for (int i = 1; i <= n; ++i) {
    facets.push_back(make_face({i, i % n + 1}));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex mobius5() {
  return SimplicialComplex::from_facets(
      {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 1}, {5, 1, 2}});
}

SimplicialComplex rp2_6() {
  return SimplicialComplex::from_facets({{1, 2, 5},
                                         {1, 2, 6},
                                         {1, 3, 4},
                                         {1, 3, 6},
                                         {1, 4, 5},
                                         {2, 3, 4},
                                         {2, 3, 5},
                                         {2, 4, 6},
                                         {3, 5, 6},
                                         {4, 5, 6}});
}

SimplicialComplex torus7() {
  // Vertices Z_7 shifted to 1..7; triangles {i, i+1, i+3} and {i, i+2, i+3}.
  std::vector<Face> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back(make_face({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1}));
    facets.push_back(make_face({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1}));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

Face range_face(int lo, int hi) {
  Face f;
  for (int v = lo; v <= hi; ++v) f.push_back(v);
  return f;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  for (int k = 1; k <= 6; ++k) {
    out.push_back({"simplex-" + std::to_string(k),
                   SimplicialComplex::simplex(range_face(1, k + 1)),
                   "full simplex on " + std::to_string(k + 1) + " vertices",
                   "homology ball over every field"});
  }
  for (int k = 1; k <= 6; ++k) {
    out.push_back({"boundary-simplex-" + std::to_string(k),
                   SimplicialComplex::boundary_of_simplex(range_face(1, k + 1)),
                   "boundary of the " + std::to_string(k) + "-simplex",
                   "homology sphere over every field"});
  }
  for (int n = 3; n <= 12; ++n) {
    out.push_back({"cycle-" + std::to_string(n), cycle(n),
                   std::to_string(n) + "-gon (edges i,i+1 mod n)",
                   "homology 1-sphere over every field"});
  }
  out.push_back({"mobius5", mobius5(),
                 "5-vertex Moebius band, facets 123,234,345,451,512",
                 "manifold with boundary (5-cycle 1-3-5-2-4); orientable over GF(2) only"});
  out.push_back({"rp2-6", rp2_6(),
                 "minimal 6-vertex real projective plane (antipodal icosahedron quotient)",
                 "closed manifold; orientable over GF(2) only"});
  out.push_back({"torus7", torus7(),
                 "7-vertex torus, triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7",
                 "closed orientable manifold over every field"});
  out.push_back({"star-torus7", star(torus7(), Face{1}),
                 "closed star of vertex 1 in torus7 (cone over a 6-cycle)",
                 "homology ball over every field"});
  {
    // Deleting the open star of vertex 6 from rp2-6 leaves a Moebius band.
    std::vector<Face> facets;
    for (const auto& f : rp2_6().facets()) {
      if (!std::count(f.begin(), f.end(), Vertex{6})) facets.push_back(f);
    }
    out.push_back({"mobius5-in-rp26", SimplicialComplex::from_facets(std::move(facets)),
                   "rp2-6 minus the open star of vertex 6 (a Moebius band subcomplex)",
                   "manifold with boundary; orientable over GF(2) only"});
  }
  {
    const auto base = SimplicialComplex::boundary_of_simplex(range_face(1, 5));
    const auto flipped = bistellar_flip(base, FlipSite{range_face(1, 4), Face{6}});
    out.push_back({"sphere3-flip0", flipped,
                   "0-flip (stellar subdivision at a facet) of boundary-simplex-4",
                   "homology 3-sphere over every field, h = (1,2,2,2,1)"});
  }
  out.push_back({"bary-rp2-6", barycentric_subdivision(rp2_6()),
                 "barycentric subdivision of rp2-6",
                 "closed manifold; orientable over GF(2) only"});
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

bool corpus_has(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return true;
  }
  return false;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("unknown corpus complex: " + name);
}

const SimplicialComplex& corpus_complex(const std::string& name) {
  return corpus_entry(name).complex;
}

}  // namespace reisner
