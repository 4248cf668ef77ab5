#pragma once

#include "reisner/complex.hpp"
#include "reisner/field.hpp"
#include "reisner/matrix.hpp"

namespace reisner {

/// Dimensions of reduced (relative) homology over a fixed field, indexed
/// by i in [-1, dim].  beta(-1) is nonzero only for the empty complex.
class BettiVector {
public:
  BettiVector(FieldSpec field, int dim, std::vector<long long> values)
      : field_(field), dim_(dim), values_(std::move(values)) {}

  long long at(int i) const {
    const int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(values_.size())) return 0;
    return values_[idx];
  }
  int dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  std::vector<long long> as_list() const { return values_; }  // index k holds beta_{k-1}

  bool operator==(const BettiVector& o) const {
    return field_ == o.field_ && values_ == o.values_;
  }

private:
  FieldSpec field_;
  int dim_;
  std::vector<long long> values_;
};

/// Boundary matrix of the relative chain complex in dimension i, mapping
/// C_i to C_{i-1}; faces falling into Gamma are dropped.
Matrix boundary_matrix(const RelativeComplex& pair, int i, FieldSpec field);

BettiVector betti(const RelativeComplex& pair, FieldSpec field);
BettiVector betti(const SimplicialComplex& k, FieldSpec field);

bool is_connected(const SimplicialComplex& k, FieldSpec field);

enum class ManifoldKind { not_manifold, closed, with_boundary };

std::string manifold_kind_str(ManifoldKind k);

struct ManifoldVerdict {
  ManifoldKind kind = ManifoldKind::not_manifold;
  SimplicialComplex boundary;  // closed homology manifold when kind == with_boundary
  bool orientable = false;
  bool connected = false;
};

/// Checks the link of every nonempty face against sphere/ball homology,
/// assembles the boundary complex, and decides orientability from the top
/// homology of (Delta, boundary).
ManifoldVerdict classify_manifold(const SimplicialComplex& k, FieldSpec field);

/// Schenzel's criterion: pure, and every link of a nonempty relative face
/// has homology concentrated in degree dim(pair) - |tau|.
bool is_buchsbaum(const RelativeComplex& pair, FieldSpec field);
bool is_buchsbaum(const SimplicialComplex& k, FieldSpec field);

bool is_homology_sphere(const SimplicialComplex& k, FieldSpec field);
bool is_homology_ball(const SimplicialComplex& k, FieldSpec field);

}  // namespace reisner
