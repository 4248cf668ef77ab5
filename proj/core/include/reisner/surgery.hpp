#pragma once

#include "reisner/complex.hpp"

namespace reisner {

/// A bistellar flip site: disjoint vertex sets A, B with |A| + |B| = d+1
/// and the induced subcomplex on A u B equal to bar(A) * d(bar(B)).  For
/// p = |B| = 1, A is a facet and B a single fresh label.
struct FlipSite {
  Face a;
  Face b;
  int p() const { return static_cast<int>(b.size()); }
};

/// Smallest unused positive integer label.
Vertex fresh_vertex(const SimplicialComplex& k);

bool flip_admissible(const SimplicialComplex& k, const FlipSite& site);

/// All sites with |B| = p (for p = 1, one per facet, with a synthesized
/// fresh vertex).  Requires 1 <= p <= dim(k)+1.
std::vector<FlipSite> find_flips(const SimplicialComplex& k, int p);

/// (K minus bar(A)*d(bar(B))) u (d(bar(A))*bar(B)); throws on an
/// inadmissible site.
SimplicialComplex bistellar_flip(const SimplicialComplex& k, const FlipSite& site);

/// sd_sigma(K) = (K minus st(sigma)) u (bar(a) * d(bar(sigma)) * lk(sigma))
/// with a fresh vertex a; sigma must be a nonempty face.
SimplicialComplex stellar_subdivision(const SimplicialComplex& k, const Face& sigma);

/// Order complex of the face poset: vertices are the nonempty faces,
/// facets are the complete flags.  Vertex labels encode the originating
/// face as a bitmask over the sorted vertex list (sequential labels when
/// the complex is too large for that).
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

}  // namespace reisner
