#include "reisner/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace reisner {

Face make_face(std::vector<Vertex> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_minus(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string face_str(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "}";
}

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

long long FVector::at(int i) const {
  const int idx = i + 1;
  if (idx < 0 || idx >= static_cast<int>(counts_.size())) return 0;
  return counts_[idx];
}

long long HVector::at(int j) const {
  if (j < 0 || j > d()) return 0;
  return h_[j];
}

SimplicialComplex SimplicialComplex::empty_complex() {
  SimplicialComplex k;
  k.facets_ = {Face{}};
  k.faces_ = {Face{}};
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets,
                                                 std::optional<std::vector<Vertex>> vertices) {
  SimplicialComplex k;
  for (auto& f : facets) f = make_face(std::move(f));
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // Drop dominated generators.
  for (const auto& f : facets) {
    bool dominated = false;
    for (const auto& g : facets) {
      if (f != g && face_subset(f, g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) k.facets_.push_back(f);
  }
  // Expand the full face set (every subset of a maximal face).
  for (const auto& f : k.facets_) {
    const std::size_t n = f.size();
    if (n > 30) throw std::invalid_argument("SimplicialComplex: facet too large");
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) sub.push_back(f[i]);
      }
      k.faces_.insert(std::move(sub));
    }
  }
  std::set<Vertex> verts;
  for (const auto& f : k.facets_) verts.insert(f.begin(), f.end());
  if (vertices) {
    for (const Vertex v : verts) {
      if (!std::count(vertices->begin(), vertices->end(), v)) {
        throw std::invalid_argument("SimplicialComplex: facet vertex outside declared vertex set");
      }
    }
    verts.insert(vertices->begin(), vertices->end());
    // Declared-but-unused vertices are kept as ambient labels only; they do
    // not become faces.
  }
  k.vertices_.assign(verts.begin(), verts.end());
  return k;
}

SimplicialComplex SimplicialComplex::simplex(Face verts) {
  return from_facets({make_face(std::move(verts))});
}

SimplicialComplex SimplicialComplex::boundary_of_simplex(const Face& verts) {
  const Face f = make_face(verts);
  std::vector<Face> facets;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Face g = f;
    g.erase(g.begin() + static_cast<long>(i));
    facets.push_back(std::move(g));
  }
  return from_facets(std::move(facets));
}

int SimplicialComplex::dim() const {
  if (is_void()) return -2;
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<Face> SimplicialComplex::faces(int i) const {
  std::vector<Face> out;
  for (const auto& f : faces_) {
    if (static_cast<int>(f.size()) == i + 1) out.push_back(f);
  }
  return out;
}

FVector SimplicialComplex::f_vector() const {
  std::vector<long long> counts(static_cast<std::size_t>(dim() + 2), 0);
  if (is_void()) return FVector(std::vector<long long>{0});
  for (const auto& f : faces_) ++counts[f.size()];
  return FVector(std::move(counts));
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_) {
    if (static_cast<int>(f.size()) != dim() + 1) return false;
  }
  return true;
}

bool SimplicialComplex::contains_subcomplex(const SimplicialComplex& other) const {
  for (const auto& f : other.facets_) {
    if (!has_face(f)) return false;
  }
  return true;
}

RelativeComplex::RelativeComplex(SimplicialComplex delta, SimplicialComplex gamma)
    : delta_(std::move(delta)), gamma_(std::move(gamma)) {
  if (!delta_.contains_subcomplex(gamma_)) {
    throw std::invalid_argument("RelativeComplex: Gamma is not a subcomplex of Delta");
  }
}

RelativeComplex RelativeComplex::absolute(SimplicialComplex delta) {
  return RelativeComplex(std::move(delta), SimplicialComplex::void_complex());
}

std::vector<Face> RelativeComplex::faces(int i) const {
  std::vector<Face> out;
  for (const auto& f : delta_.faces(i)) {
    if (!gamma_.has_face(f)) out.push_back(f);
  }
  return out;
}

std::vector<Face> RelativeComplex::all_faces() const {
  std::vector<Face> out;
  for (const auto& f : delta_.all_faces()) {
    if (!gamma_.has_face(f)) out.push_back(f);
  }
  return out;
}

int RelativeComplex::dim() const {
  int d = -2;
  for (const auto& f : delta_.all_faces()) {
    if (!gamma_.has_face(f)) d = std::max(d, static_cast<int>(f.size()) - 1);
  }
  return d;
}

FVector RelativeComplex::f_vector() const {
  const int d = dim();
  std::vector<long long> counts(static_cast<std::size_t>(std::max(0, d + 2)), 0);
  if (d < -1) return FVector(std::vector<long long>{0});
  for (const auto& f : all_faces()) ++counts[f.size()];
  return FVector(std::move(counts));
}

bool RelativeComplex::is_pure() const {
  const auto rel = all_faces();
  std::set<Face> rel_set(rel.begin(), rel.end());
  const int d = dim();
  for (const auto& f : rel) {
    // Maximal within Delta minus Gamma: no proper superset survives.
    bool maximal = true;
    for (const auto& g : rel_set) {
      if (g.size() > f.size() && face_subset(f, g)) {
        maximal = false;
        break;
      }
    }
    if (maximal && static_cast<int>(f.size()) != d + 1) return false;
  }
  return true;
}

SimplicialComplex link(const SimplicialComplex& k, const Face& tau) {
  if (!k.has_face(tau)) return SimplicialComplex::void_complex();
  std::vector<Face> gens;
  for (const auto& f : k.facets()) {
    if (face_subset(tau, f)) gens.push_back(face_minus(f, tau));
  }
  return SimplicialComplex::from_facets(std::move(gens));
}

SimplicialComplex star(const SimplicialComplex& k, const Face& tau) {
  std::vector<Face> gens;
  for (const auto& f : k.facets()) {
    if (face_subset(tau, f)) gens.push_back(f);
  }
  return SimplicialComplex::from_facets(std::move(gens));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (const Vertex v : a.vertices()) {
    if (std::count(b.vertices().begin(), b.vertices().end(), v)) {
      throw std::invalid_argument("join: vertex sets overlap at " + std::to_string(v));
    }
  }
  std::vector<Face> gens;
  for (const auto& fa : a.facets()) {
    for (const auto& fb : b.facets()) gens.push_back(face_union(fa, fb));
  }
  return SimplicialComplex::from_facets(std::move(gens));
}

SimplicialComplex induced(const SimplicialComplex& k, const std::vector<Vertex>& w) {
  const Face ws = make_face(w);
  std::vector<Face> gens;
  for (const auto& f : k.facets()) {
    Face g;
    std::set_intersection(f.begin(), f.end(), ws.begin(), ws.end(), std::back_inserter(g));
    gens.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(std::move(gens));
}

HVector h_vector(const FVector& f, int d) {
  if (d < f.max_dim() + 1) {
    throw std::invalid_argument("h_vector: ambient d must be at least dim + 1");
  }
  std::vector<long long> h(static_cast<std::size_t>(d + 1), 0);
  for (int j = 0; j <= d; ++j) {
    long long s = 0;
    for (int i = 0; i <= j; ++i) {
      const long long term = binom(d - i, d - j) * f.at(i - 1);
      s += ((j - i) % 2 == 0) ? term : -term;
    }
    h[j] = s;
  }
  return HVector(std::move(h));
}

HVector h_vector(const SimplicialComplex& k, int d) { return h_vector(k.f_vector(), d); }

HVector h_vector(const RelativeComplex& pair, int d) { return h_vector(pair.f_vector(), d); }

FVector f_from_h(const HVector& h) {
  const int d = h.d();
  std::vector<long long> counts(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i <= d; ++i) {
    long long s = 0;
    for (int j = 0; j <= d; ++j) s += binom(d - j, i - j) * h.at(j);
    counts[i] = s;  // f_{i-1}
  }
  return FVector(std::move(counts));
}

long long reduced_euler(const SimplicialComplex& k) {
  const FVector f = k.f_vector();
  long long chi = -f.at(-1);
  for (int i = 0; i <= k.dim(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f.at(i);
  return chi;
}

}  // namespace reisner
