#include "reisner/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace reisner {

namespace {

// Spreads `total` over the positions in `slots` (each getting >= 1) and
// emits the dense exponent vectors.
void compositions(const std::vector<std::size_t>& slots, std::size_t at, int remaining,
                  std::vector<int>& exp, std::vector<std::vector<int>>& out) {
  if (at + 1 == slots.size()) {
    exp[slots[at]] = remaining;
    out.push_back(exp);
    exp[slots[at]] = 0;
    return;
  }
  const int left = static_cast<int>(slots.size() - at - 1);
  for (int e = 1; e + left <= remaining; ++e) {
    exp[slots[at]] = e;
    compositions(slots, at + 1, remaining - e, exp, out);
  }
  exp[slots[at]] = 0;
}

std::vector<Face> maximal_relative_faces(const RelativeComplex& pair) {
  const auto rel = pair.all_faces();
  std::set<Face> rel_set(rel.begin(), rel.end());
  std::vector<Face> out;
  for (const auto& f : rel) {
    bool maximal = true;
    for (const auto& g : rel_set) {
      if (g.size() > f.size() && face_subset(f, g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

bool facet_rank_ok(const std::vector<Face>& maximal_faces,
                   const std::vector<LinearForm>& forms, FieldSpec field) {
  for (const auto& tau : maximal_faces) {
    if (tau.empty()) continue;
    Matrix restricted(field, forms.size(), tau.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
      for (std::size_t j = 0; j < tau.size(); ++j) {
        restricted.set(i, j, forms[i].coeff_of(tau[j], field));
      }
    }
    if (restricted.rank() != tau.size()) return false;
  }
  return true;
}

}  // namespace

MonomialBasis::MonomialBasis(int degree, std::vector<Vertex> ambient,
                             std::vector<std::vector<int>> monomials)
    : degree_(degree), ambient_(std::move(ambient)), monomials_(std::move(monomials)) {
  std::sort(monomials_.begin(), monomials_.end());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
}

std::size_t MonomialBasis::index_of(const std::vector<int>& exponents) const {
  const auto it = index_.find(exponents);
  if (it == index_.end()) throw std::out_of_range("MonomialBasis: monomial not in basis");
  return it->second;
}

bool MonomialBasis::contains(const std::vector<int>& exponents) const {
  return index_.count(exponents) > 0;
}

Scalar LinearForm::coeff_of(Vertex v, FieldSpec field) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == v) return coeffs[i];
  }
  return Scalar::zero(field);
}

LinearForm LinearForm::restricted_to(const std::vector<Vertex>& verts) const {
  LinearForm out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (std::count(verts.begin(), verts.end(), vertices[i])) {
      out.vertices.push_back(vertices[i]);
      out.coeffs.push_back(coeffs[i]);
    }
  }
  return out;
}

MonomialBasis monomial_basis(const RelativeComplex& pair, int j) {
  if (j < 0) throw std::invalid_argument("monomial_basis: degree must be nonnegative");
  const auto& ambient = pair.delta().vertices();
  std::map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < ambient.size(); ++i) pos[ambient[i]] = i;

  std::vector<std::vector<int>> monomials;
  if (j == 0) {
    if (pair.has_face(Face{})) monomials.push_back(std::vector<int>(ambient.size(), 0));
    return MonomialBasis(0, ambient, std::move(monomials));
  }
  std::vector<int> exp(ambient.size(), 0);
  for (const auto& tau : pair.all_faces()) {
    const int sz = static_cast<int>(tau.size());
    if (sz < 1 || sz > j) continue;
    std::vector<std::size_t> slots;
    for (const Vertex v : tau) slots.push_back(pos.at(v));
    compositions(slots, 0, j, exp, monomials);
  }
  return MonomialBasis(j, ambient, std::move(monomials));
}

GradedMap mult_matrix(const RelativeComplex& pair, const LinearForm& form, int j,
                      FieldSpec field) {
  MonomialBasis source = monomial_basis(pair, j);
  MonomialBasis target = monomial_basis(pair, j + 1);
  const auto& ambient = source.ambient();

  Matrix m(field, target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const auto& exp = source.monomials()[c];
    for (std::size_t vi = 0; vi < ambient.size(); ++vi) {
      const Scalar coeff = form.coeff_of(ambient[vi], field);
      if (coeff.is_zero()) continue;
      std::vector<int> prod = exp;
      ++prod[vi];
      // The product survives iff its support is still a face of the pair.
      if (!target.contains(prod)) continue;
      m.add_to(target.index_of(prod), c, coeff);
    }
  }
  return GradedMap{std::move(source), std::move(target), std::move(m)};
}

bool is_lsop(const SimplicialComplex& k, const std::vector<LinearForm>& forms,
             FieldSpec field) {
  if (k.is_void()) return true;
  const std::size_t d = static_cast<std::size_t>(k.dim() + 1);
  if (forms.size() != d) {
    throw std::invalid_argument("is_lsop: expected dim+1 = " + std::to_string(d) + " forms, got " +
                                std::to_string(forms.size()));
  }
  return facet_rank_ok(k.facets(), forms, field);
}

bool is_lsop(const RelativeComplex& pair, const std::vector<LinearForm>& forms,
             FieldSpec field) {
  const int dim = pair.dim();
  if (dim < -1) return true;
  const std::size_t d = static_cast<std::size_t>(dim + 1);
  if (forms.size() != d) {
    throw std::invalid_argument("is_lsop: expected dim+1 = " + std::to_string(d) + " forms, got " +
                                std::to_string(forms.size()));
  }
  return facet_rank_ok(maximal_relative_faces(pair), forms, field);
}

LinearForm random_form(const std::vector<Vertex>& vertices, FieldSpec field, Rng& rng) {
  LinearForm f;
  f.vertices = vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (field.is_rational()) {
      f.coeffs.push_back(Scalar(field, rng.in_range(-4096, 4096)));
    } else {
      f.coeffs.push_back(
          Scalar(field, static_cast<long long>(rng.below(
                            static_cast<std::uint64_t>(field.characteristic())))));
    }
  }
  return f;
}

Lsop random_lsop(const SimplicialComplex& k, FieldSpec field, std::uint64_t seed,
                 int max_attempts) {
  if (k.is_void() || k.dim() < 0) {
    throw std::invalid_argument("random_lsop: complex has no facets, d is undefined");
  }
  const std::size_t d = static_cast<std::size_t>(k.dim() + 1);
  Rng rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<LinearForm> forms;
    for (std::size_t i = 0; i < d; ++i) forms.push_back(random_form(k.vertices(), field, rng));
    if (is_lsop(k, forms, field)) {
      return Lsop{std::move(forms), field, seed, attempt, true};
    }
  }
  throw GenericityError("random_lsop: no l.s.o.p. found in " + std::to_string(max_attempts) +
                        " attempts over " + field.str() +
                        "; the field (size " +
                        (field.is_rational() ? std::string("infinite")
                                             : std::to_string(field.characteristic())) +
                        ") may be too small for generic choices");
}

std::vector<long long> artinian_hilbert(const RelativeComplex& pair, const Lsop& theta,
                                        int jmax) {
  if (!theta.validated) throw std::invalid_argument("artinian_hilbert: unvalidated l.s.o.p.");
  const int d = pair.dim() + 1;
  if (static_cast<int>(theta.forms.size()) != d) {
    throw std::invalid_argument("artinian_hilbert: form count does not match dim+1");
  }
  std::vector<long long> out;
  MonomialBasis below = monomial_basis(pair, 0);
  for (int j = 0; j <= jmax; ++j) {
    const MonomialBasis here = monomial_basis(pair, j);
    RowSpan image(theta.field, here.size());
    if (j > 0 && below.size() > 0) {
      for (const auto& form : theta.forms) {
        const GradedMap gm = mult_matrix(pair, form, j - 1, theta.field);
        image.insert_all_cols(gm.matrix);
      }
    }
    out.push_back(static_cast<long long>(here.size()) - static_cast<long long>(image.rank()));
    below = here;
  }
  return out;
}

std::vector<long long> artinian_hilbert(const RelativeComplex& pair, const Lsop& theta) {
  return artinian_hilbert(pair, theta, pair.dim() + 1);
}

std::vector<long long> artinian_hilbert(const SimplicialComplex& k, const Lsop& theta) {
  return artinian_hilbert(RelativeComplex::absolute(k), theta);
}

std::vector<long long> artinian_hilbert(const SimplicialComplex& k, const Lsop& theta, int jmax) {
  return artinian_hilbert(RelativeComplex::absolute(k), theta, jmax);
}

}  // namespace reisner
