#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace reisner {

using Vertex = long long;

/// A face is a sorted, duplicate-free vertex list.  The empty face is {}.
using Face = std::vector<Vertex>;

Face make_face(std::vector<Vertex> verts);
bool face_subset(const Face& a, const Face& b);
Face face_union(const Face& a, const Face& b);
Face face_minus(const Face& a, const Face& b);
std::string face_str(const Face& f);

long long binom(long long n, long long k);

/// Face counts f_{-1}, f_0, ..., f_{dim}.  The void complex has every
/// entry zero (including f_{-1}); any other complex has f_{-1} = 1 and a
/// relative complex with nonempty Gamma has f_{-1} = 0.
class FVector {
public:
  FVector() = default;
  /// counts[k] is f_{k-1}.
  explicit FVector(std::vector<long long> counts) : counts_(std::move(counts)) {}

  long long at(int i) const;  // f_i for i in [-1, max_dim()]
  int max_dim() const { return static_cast<int>(counts_.size()) - 2; }
  const std::vector<long long>& counts() const { return counts_; }

  bool operator==(const FVector& o) const { return counts_ == o.counts_; }

private:
  std::vector<long long> counts_;
};

/// Entries h_0..h_d for an explicitly chosen ambient parameter d.
class HVector {
public:
  HVector() = default;
  explicit HVector(std::vector<long long> h) : h_(std::move(h)) {}

  long long at(int j) const;  // h_j, zero beyond d
  int d() const { return static_cast<int>(h_.size()) - 1; }
  const std::vector<long long>& entries() const { return h_; }

  bool operator==(const HVector& o) const { return h_ == o.h_; }

private:
  std::vector<long long> h_;
};

/// Finite simplicial complex given by its inclusion-maximal faces.  The
/// void complex (no faces at all) and the empty complex { {} } are
/// distinct; the latter has the empty face as its unique facet.
class SimplicialComplex {
public:
  SimplicialComplex() = default;  // void complex

  static SimplicialComplex void_complex() { return SimplicialComplex(); }
  static SimplicialComplex empty_complex();
  /// Builds from generating faces (dominated generators are dropped).  If
  /// `vertices` is given it must contain every generator vertex; isolated
  /// ambient vertices are otherwise inferred from the generators.
  static SimplicialComplex from_facets(std::vector<Face> facets,
                                       std::optional<std::vector<Vertex>> vertices = {});
  static SimplicialComplex simplex(Face verts);
  static SimplicialComplex boundary_of_simplex(const Face& verts);

  bool is_void() const { return faces_.empty(); }
  bool is_empty_complex() const { return faces_.size() == 1 && facets_.size() == 1 && facets_[0].empty(); }

  /// -2 for the void complex, -1 for the empty complex.
  int dim() const;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool has_face(const Face& f) const { return faces_.count(f) > 0; }
  std::vector<Face> faces(int i) const;
  const std::set<Face>& all_faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }

  FVector f_vector() const;
  bool is_pure() const;
  bool contains_subcomplex(const SimplicialComplex& other) const;

  bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

private:
  std::vector<Vertex> vertices_;  // sorted ambient vertex set
  std::vector<Face> facets_;      // sorted, inclusion-maximal
  std::set<Face> faces_;          // every face, including {} when nonvoid
};

/// A pair (Delta, Gamma) with Gamma a subcomplex of Delta; its face set is
/// Delta minus Gamma.  Gamma = void encodes the absolute complex Delta.
class RelativeComplex {
public:
  RelativeComplex(SimplicialComplex delta, SimplicialComplex gamma);
  static RelativeComplex absolute(SimplicialComplex delta);

  const SimplicialComplex& delta() const { return delta_; }
  const SimplicialComplex& gamma() const { return gamma_; }
  bool is_absolute() const { return gamma_.is_void(); }

  bool has_face(const Face& f) const { return delta_.has_face(f) && !gamma_.has_face(f); }
  std::vector<Face> faces(int i) const;
  std::vector<Face> all_faces() const;

  /// -2 when Delta minus Gamma is empty.
  int dim() const;
  FVector f_vector() const;
  bool is_pure() const;

private:
  SimplicialComplex delta_;
  SimplicialComplex gamma_;
};

SimplicialComplex link(const SimplicialComplex& k, const Face& tau);
SimplicialComplex star(const SimplicialComplex& k, const Face& tau);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex induced(const SimplicialComplex& k, const std::vector<Vertex>& w);

HVector h_vector(const FVector& f, int d);
HVector h_vector(const SimplicialComplex& k, int d);
HVector h_vector(const RelativeComplex& pair, int d);
/// Inverse transform; recovers f_{-1}..f_{d-1} from h_0..h_d.
FVector f_from_h(const HVector& h);

long long reduced_euler(const SimplicialComplex& k);

}  // namespace reisner
