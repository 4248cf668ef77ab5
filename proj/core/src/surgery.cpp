#include "reisner/surgery.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace reisner {

Vertex fresh_vertex(const SimplicialComplex& k) {
  Vertex v = 1;
  for (const Vertex u : k.vertices()) {
    if (u == v) ++v;
    if (u > v) break;
  }
  return v;
}

bool flip_admissible(const SimplicialComplex& k, const FlipSite& site) {
  const int d = k.dim() + 1;
  if (site.a.empty() || site.b.empty()) return false;
  if (static_cast<int>(site.a.size() + site.b.size()) != d + 1) return false;
  Face inter;
  std::set_intersection(site.a.begin(), site.a.end(), site.b.begin(), site.b.end(),
                        std::back_inserter(inter));
  if (!inter.empty()) return false;

  if (site.p() == 1) {
    // A 0-flip is a stellar subdivision at a facet with a fresh vertex.
    const bool fresh = !std::count(k.vertices().begin(), k.vertices().end(), site.b.front());
    const bool facet =
        std::count(k.facets().begin(), k.facets().end(), site.a) > 0;
    return fresh && facet;
  }
  const auto expected = join(SimplicialComplex::simplex(site.a),
                             SimplicialComplex::boundary_of_simplex(site.b));
  return induced(k, face_union(site.a, site.b)) == expected;
}

std::vector<FlipSite> find_flips(const SimplicialComplex& k, int p) {
  const int d = k.dim() + 1;
  if (p < 1 || p > d) throw std::invalid_argument("find_flips: p must satisfy 1 <= p <= d");
  std::vector<FlipSite> out;
  if (p == 1) {
    const Vertex b = fresh_vertex(k);
    for (const auto& f : k.facets()) out.push_back(FlipSite{f, Face{b}});
    return out;
  }
  // Enumerate A among faces of size d+1-p, then B among p-subsets of the
  // remaining vertices.
  const auto& verts = k.vertices();
  for (const auto& a : k.faces(d - p)) {
    std::vector<Vertex> rest;
    for (const Vertex v : verts) {
      if (!std::count(a.begin(), a.end(), v)) rest.push_back(v);
    }
    const long m = static_cast<long>(rest.size());
    if (m < p) continue;
    std::vector<long> idx(static_cast<std::size_t>(p));
    for (long i = 0; i < p; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      Face b;
      for (const long i : idx) b.push_back(rest[static_cast<std::size_t>(i)]);
      const FlipSite site{a, b};
      if (flip_admissible(k, site)) out.push_back(site);
      long t = p - 1;
      while (t >= 0 && idx[static_cast<std::size_t>(t)] == m - p + t) --t;
      if (t < 0) break;
      ++idx[static_cast<std::size_t>(t)];
      for (long q = t + 1; q < p; ++q) {
        idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
      }
    }
  }
  return out;
}

namespace {

SimplicialComplex rebuild_from_faces(const std::vector<Face>& faces, const char* what) {
  const auto k = SimplicialComplex::from_facets(faces);
  if (k.face_count() != faces.size()) {
    throw std::invalid_argument(std::string(what) + ": face set is not downward closed");
  }
  return k;
}

}  // namespace

SimplicialComplex bistellar_flip(const SimplicialComplex& k, const FlipSite& site) {
  if (!flip_admissible(k, site)) {
    throw std::invalid_argument("bistellar_flip: site (" + face_str(site.a) + "," +
                                face_str(site.b) + ") is not admissible");
  }
  const Face ab = face_union(site.a, site.b);
  std::vector<Face> faces;
  for (const auto& f : k.all_faces()) {
    if (face_subset(site.a, f) && face_subset(f, ab)) continue;
    faces.push_back(f);
  }
  const auto added = join(SimplicialComplex::boundary_of_simplex(site.a),
                          SimplicialComplex::simplex(site.b));
  for (const auto& f : added.all_faces()) {
    if (!(face_subset(site.a, f) && face_subset(f, ab))) faces.push_back(f);
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return rebuild_from_faces(faces, "bistellar_flip");
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k, const Face& sigma) {
  if (sigma.empty() || !k.has_face(sigma)) {
    throw std::invalid_argument("stellar_subdivision: sigma must be a nonempty face");
  }
  const Vertex a = fresh_vertex(k);
  std::vector<Face> faces;
  for (const auto& f : k.all_faces()) {
    if (!face_subset(sigma, f)) faces.push_back(f);
  }
  const auto cone = join(join(SimplicialComplex::simplex(Face{a}),
                              SimplicialComplex::boundary_of_simplex(sigma)),
                         link(k, sigma));
  for (const auto& f : cone.all_faces()) faces.push_back(f);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return rebuild_from_faces(faces, "stellar_subdivision");
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  if (k.is_void()) throw std::invalid_argument("barycentric_subdivision: void complex");
  const auto& verts = k.vertices();
  std::map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = i;

  // Vertex labels for the subdivision: bitmask of the originating face
  // over the sorted vertex list, or sequential labels when too wide.
  const bool bitmask_ok = verts.size() <= 62;
  std::map<Face, Vertex> label;
  Vertex next = 1;
  for (const auto& f : k.all_faces()) {
    if (f.empty()) continue;
    if (bitmask_ok) {
      long long mask = 0;
      for (const Vertex v : f) mask |= 1LL << pos.at(v);
      label[f] = mask;
    } else {
      label[f] = next++;
    }
  }

  // Facets are complete flags inside facets of k.
  std::vector<Face> flags;
  for (const auto& facet : k.facets()) {
    std::vector<Vertex> perm = facet;
    std::sort(perm.begin(), perm.end());
    do {
      Face flag;
      Face partial;
      for (const Vertex v : perm) {
        partial = face_union(partial, Face{v});
        flag.push_back(label.at(partial));
      }
      flags.push_back(make_face(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex::from_facets(std::move(flags));
}

}  // namespace reisner
