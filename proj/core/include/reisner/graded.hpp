#pragma once

#include <cstdint>
#include <map>

#include "reisner/complex.hpp"
#include "reisner/field.hpp"
#include "reisner/matrix.hpp"
#include "reisner/rng.hpp"

namespace reisner {

/// Ordered monomial basis of the degree-j piece of the Stanley-Reisner
/// module F[Delta,Gamma]: one exponent vector per monomial whose support
/// is a face of Delta and not a face of Gamma.  Exponents are aligned with
/// `ambient` (the sorted vertex set of Delta) and listed in lexicographic
/// order, so downstream matrices are reproducible.
class MonomialBasis {
public:
  MonomialBasis(int degree, std::vector<Vertex> ambient,
                std::vector<std::vector<int>> monomials);

  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Vertex>& ambient() const { return ambient_; }
  const std::vector<std::vector<int>>& monomials() const { return monomials_; }
  std::size_t index_of(const std::vector<int>& exponents) const;
  bool contains(const std::vector<int>& exponents) const;

private:
  int degree_;
  std::vector<Vertex> ambient_;
  std::vector<std::vector<int>> monomials_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// A linear form, self-describing: coefficient per listed vertex.
/// Vertices absent from the list have coefficient zero.
struct LinearForm {
  std::vector<Vertex> vertices;
  std::vector<Scalar> coeffs;

  Scalar coeff_of(Vertex v, FieldSpec field) const;
  LinearForm restricted_to(const std::vector<Vertex>& verts) const;
};

/// d validated linear parameters (plus the seed that produced them).
struct Lsop {
  std::vector<LinearForm> forms;
  FieldSpec field = FieldSpec::rationals();
  std::uint64_t seed = 0;
  int attempts = 0;
  bool validated = false;
};

/// Matrix of multiplication by a linear form between consecutive graded
/// pieces; column k expands form * (k-th source monomial) in the target
/// basis, with products whose support leaves Delta (or falls into Gamma)
/// mapped to zero.
struct GradedMap {
  MonomialBasis source;
  MonomialBasis target;
  Matrix matrix;  // target.size() x source.size()
};

MonomialBasis monomial_basis(const RelativeComplex& pair, int j);

GradedMap mult_matrix(const RelativeComplex& pair, const LinearForm& form, int j,
                      FieldSpec field);

/// Facet-rank criterion: for every facet tau of k the coefficient matrix
/// restricted to tau has rank |tau|.  Necessary and sufficient for `forms`
/// to be an l.s.o.p. for F[k]; an l.s.o.p. for F[Delta] serves every pair
/// (Delta, Gamma).  Expects dim(k)+1 forms; vacuously true on the void
/// complex.
bool is_lsop(const SimplicialComplex& k, const std::vector<LinearForm>& forms,
             FieldSpec field);

/// Same criterion on the maximal faces of Delta minus Gamma, with
/// dim(pair)+1 forms.
bool is_lsop(const RelativeComplex& pair, const std::vector<LinearForm>& forms,
             FieldSpec field);

/// Samples dense random coefficient forms until is_lsop passes; throws
/// GenericityError naming the field size when max_attempts is exhausted.
Lsop random_lsop(const SimplicialComplex& k, FieldSpec field, std::uint64_t seed,
                 int max_attempts = 100);

/// One random linear form over the given vertices.
LinearForm random_form(const std::vector<Vertex>& vertices, FieldSpec field, Rng& rng);

/// Hilbert function of the Artinian reduction M/(Theta)M for j = 0..d,
/// where d = dim(pair)+1: dim M_j minus the rank of the stacked
/// multiplication images from degree j-1.  The jmax overloads extend the
/// range (used to witness vanishing beyond d).
std::vector<long long> artinian_hilbert(const RelativeComplex& pair, const Lsop& theta);
std::vector<long long> artinian_hilbert(const RelativeComplex& pair, const Lsop& theta, int jmax);
std::vector<long long> artinian_hilbert(const SimplicialComplex& k, const Lsop& theta);
std::vector<long long> artinian_hilbert(const SimplicialComplex& k, const Lsop& theta, int jmax);

}  // namespace reisner
