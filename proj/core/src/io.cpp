#include "reisner/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "reisner/corpus.hpp"
#include "reisner/homology.hpp"

namespace reisner {

namespace {

using nlohmann::json;

SimplicialComplex complex_from_value(const json& j) {
  if (j.is_string()) return load_complex(j.get<std::string>());
  if (!j.is_object() || !j.contains("facets")) {
    throw std::invalid_argument("complex JSON must be an object with a \"facets\" array");
  }
  std::vector<Face> facets;
  for (const auto& f : j.at("facets")) {
    Face face;
    for (const auto& v : f) face.push_back(v.get<Vertex>());
    facets.push_back(make_face(std::move(face)));
  }
  std::optional<std::vector<Vertex>> vertices;
  if (j.contains("vertices")) {
    std::vector<Vertex> vs;
    for (const auto& v : j.at("vertices")) vs.push_back(v.get<Vertex>());
    vertices = std::move(vs);
  }
  return SimplicialComplex::from_facets(std::move(facets), std::move(vertices));
}

}  // namespace

SimplicialComplex complex_from_json(const std::string& text) {
  return complex_from_value(json::parse(text));
}

std::string complex_to_json(const SimplicialComplex& k, const std::string& name, int indent) {
  json j;
  if (!name.empty()) j["name"] = name;
  j["vertices"] = k.vertices();
  j["facets"] = json::array();
  for (const auto& f : k.facets()) j["facets"].push_back(f);
  return j.dump(indent);
}

SimplicialComplex load_complex(const std::string& spec) {
  if (spec.rfind("corpus:", 0) == 0) return corpus_complex(spec.substr(7));
  if (corpus_has(spec)) return corpus_complex(spec);
  return complex_from_json(read_file(spec));
}

RelativeComplex pair_from_json(const std::string& text, FieldSpec field) {
  const json j = json::parse(text);
  if (!j.is_object() || !j.contains("delta")) {
    throw std::invalid_argument("pair JSON must be an object with a \"delta\" member");
  }
  SimplicialComplex delta = complex_from_value(j.at("delta"));
  SimplicialComplex gamma;  // void: absolute complex
  if (j.contains("gamma")) {
    const auto& g = j.at("gamma");
    if (g.is_string() && g.get<std::string>() == "boundary") {
      const auto v = classify_manifold(delta, field);
      if (v.kind == ManifoldKind::not_manifold) {
        throw std::invalid_argument("gamma: \"boundary\" requires delta to classify as a manifold");
      }
      gamma = v.boundary;
    } else {
      gamma = complex_from_value(g);
    }
  }
  return RelativeComplex(std::move(delta), std::move(gamma));
}

RelativeComplex load_pair(const std::string& path, FieldSpec field) {
  return pair_from_json(read_file(path), field);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace reisner
