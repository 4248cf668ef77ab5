#pragma once

#include <string>

#include "reisner/complex.hpp"
#include "reisner/field.hpp"

namespace reisner {

/// JSON schema: {"name": string, "vertices": [labels], "facets": [[labels]]}.
/// "vertices" and "name" are optional on input.
SimplicialComplex complex_from_json(const std::string& text);
std::string complex_to_json(const SimplicialComplex& k, const std::string& name = "",
                            int indent = 2);

/// Resolves "corpus:NAME" (or a bare corpus name) to an embedded complex,
/// anything else to a JSON file path.
SimplicialComplex load_complex(const std::string& spec);

/// Pair schema: {"delta": <complex|spec>, "gamma": <complex|spec|"boundary">};
/// "boundary" means the computed boundary complex of delta over `field`.
RelativeComplex pair_from_json(const std::string& text, FieldSpec field);
RelativeComplex load_pair(const std::string& path, FieldSpec field);

std::string read_file(const std::string& path);

}  // namespace reisner
