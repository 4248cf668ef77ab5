#include "reisner/homology.hpp"

#include <map>

namespace reisner {

Matrix boundary_matrix(const RelativeComplex& pair, int i, FieldSpec field) {
  const auto sources = pair.faces(i);
  const auto targets = pair.faces(i - 1);
  std::map<Face, std::size_t> target_index;
  for (std::size_t t = 0; t < targets.size(); ++t) target_index[targets[t]] = t;

  Matrix m(field, targets.size(), sources.size());
  for (std::size_t c = 0; c < sources.size(); ++c) {
    const Face& f = sources[c];
    for (std::size_t j = 0; j < f.size(); ++j) {
      Face g = f;
      g.erase(g.begin() + static_cast<long>(j));
      const auto it = target_index.find(g);
      if (it == target_index.end()) continue;  // face of Gamma: zero in the relative complex
      m.add_to(it->second, c, Scalar(field, (j % 2 == 0) ? 1 : -1));
    }
  }
  return m;
}

BettiVector betti(const RelativeComplex& pair, FieldSpec field) {
  const int d = pair.dim();
  std::vector<long long> values(static_cast<std::size_t>(std::max(0, d + 2)), 0);
  if (d < -1) return BettiVector(field, d, std::move(values));

  // beta_i = dim C_i - rank del_i - rank del_{i+1}
  std::vector<std::size_t> chain_dim(static_cast<std::size_t>(d + 2), 0);
  std::vector<std::size_t> bd_rank(static_cast<std::size_t>(d + 3), 0);
  for (int i = -1; i <= d; ++i) {
    chain_dim[static_cast<std::size_t>(i + 1)] = pair.faces(i).size();
    bd_rank[static_cast<std::size_t>(i + 1)] = boundary_matrix(pair, i, field).rank();
  }
  bd_rank[static_cast<std::size_t>(d + 2)] = 0;
  for (int i = -1; i <= d; ++i) {
    values[static_cast<std::size_t>(i + 1)] =
        static_cast<long long>(chain_dim[static_cast<std::size_t>(i + 1)]) -
        static_cast<long long>(bd_rank[static_cast<std::size_t>(i + 1)]) -
        static_cast<long long>(bd_rank[static_cast<std::size_t>(i + 2)]);
  }
  return BettiVector(field, d, std::move(values));
}

BettiVector betti(const SimplicialComplex& k, FieldSpec field) {
  return betti(RelativeComplex::absolute(k), field);
}

bool is_connected(const SimplicialComplex& k, FieldSpec field) {
  return betti(k, field).at(0) == 0;
}

std::string manifold_kind_str(ManifoldKind k) {
  switch (k) {
    case ManifoldKind::not_manifold: return "not-manifold";
    case ManifoldKind::closed: return "closed-manifold";
    case ManifoldKind::with_boundary: return "manifold-with-boundary";
  }
  return "?";
}

namespace {

enum class LinkShape { sphere, ball, other };

LinkShape link_shape(const BettiVector& b, int expected_top) {
  bool sphere = true, ball = true;
  for (int i = -1; i <= std::max(b.dim(), expected_top); ++i) {
    const long long v = b.at(i);
    if (v != 0) ball = false;
    if (i == expected_top ? v != 1 : v != 0) sphere = false;
  }
  if (sphere) return LinkShape::sphere;
  if (ball) return LinkShape::ball;
  return LinkShape::other;
}

}  // namespace

ManifoldVerdict classify_manifold(const SimplicialComplex& k, FieldSpec field) {
  ManifoldVerdict v;
  if (k.is_void()) return v;
  v.connected = is_connected(k, field);
  if (!k.is_pure()) return v;
  const int dim = k.dim();

  std::vector<Face> boundary_faces;
  for (const auto& tau : k.all_faces()) {
    if (tau.empty()) continue;
    const auto lk = link(k, tau);
    const auto shape = link_shape(betti(lk, field), dim - static_cast<int>(tau.size()));
    if (shape == LinkShape::other) return v;
    if (shape == LinkShape::ball) boundary_faces.push_back(tau);
  }

  if (boundary_faces.empty()) {
    v.kind = ManifoldKind::closed;
    v.boundary = SimplicialComplex::empty_complex();
    v.orientable = betti(k, field).at(dim) == 1;
    return v;
  }

  const auto bd = SimplicialComplex::from_facets(boundary_faces);
  // The boundary faces must themselves be closed under inclusion and form
  // a closed homology manifold one dimension down.
  if (bd.face_count() != boundary_faces.size() + 1) return v;
  if (bd.dim() != dim - 1) return v;
  const auto bd_verdict = classify_manifold(bd, field);
  if (bd_verdict.kind != ManifoldKind::closed) return v;

  v.kind = ManifoldKind::with_boundary;
  v.boundary = bd;
  v.orientable = betti(RelativeComplex(k, bd), field).at(dim) == 1;
  return v;
}

bool is_buchsbaum(const RelativeComplex& pair, FieldSpec field) {
  const int d = pair.dim();
  if (d < 0) return true;
  if (!pair.is_pure()) return false;
  for (const auto& tau : pair.all_faces()) {
    if (tau.empty()) continue;
    const auto lk_pair =
        RelativeComplex(link(pair.delta(), tau), link(pair.gamma(), tau));
    const auto b = betti(lk_pair, field);
    const int top = d - static_cast<int>(tau.size());
    for (int i = -1; i <= b.dim(); ++i) {
      if (i != top && b.at(i) != 0) return false;
    }
  }
  return true;
}

bool is_buchsbaum(const SimplicialComplex& k, FieldSpec field) {
  return is_buchsbaum(RelativeComplex::absolute(k), field);
}

bool is_homology_sphere(const SimplicialComplex& k, FieldSpec field) {
  const auto v = classify_manifold(k, field);
  if (v.kind != ManifoldKind::closed) return false;
  return link_shape(betti(k, field), k.dim()) == LinkShape::sphere;
}

bool is_homology_ball(const SimplicialComplex& k, FieldSpec field) {
  const auto v = classify_manifold(k, field);
  if (v.kind != ManifoldKind::with_boundary) return false;
  if (link_shape(betti(k, field), k.dim()) != LinkShape::ball) return false;
  return is_homology_sphere(v.boundary, field);
}

}  // namespace reisner
