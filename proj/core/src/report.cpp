#include "reisner/report.hpp"

#include <json.hpp>

#include <sstream>

namespace reisner {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::precondition_failure: return "precondition-failure";
    case Verdict::recorded: return "recorded";
  }
  return "?";
}

std::string report_to_json(const Report& r, int indent) {
  nlohmann::json j;
  j["command"] = r.command;
  j["theorem"] = r.theorem;
  j["inputs"] = r.inputs;
  j["characteristic"] = r.characteristic;
  j["seeds"] = r.seeds;
  j["vectors"] = r.vectors;
  j["verdict"] = verdict_str(r.verdict);
  j["summary"] = r.summary;
  return j.dump(indent);
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "[" << verdict_str(r.verdict) << "] " << r.command;
  if (r.theorem != "none") os << " (" << r.theorem << ")";
  os << "\n  characteristic: "
     << (r.characteristic == 0 ? "0 (rationals)" : std::to_string(r.characteristic)) << "\n";
  if (!r.seeds.empty()) {
    os << "  seeds:";
    for (const auto s : r.seeds) os << " " << s;
    os << "\n";
  }
  for (const auto& [name, digest] : r.inputs) os << "  input " << name << ": " << digest << "\n";
  for (const auto& [name, vec] : r.vectors) {
    os << "  " << name << ": (";
    for (std::size_t i = 0; i < vec.size(); ++i) os << (i ? "," : "") << vec[i];
    os << ")\n";
  }
  os << "  " << r.summary;
  return os.str();
}

std::string complex_digest(const SimplicialComplex& k) {
  std::uint64_t h = 1469598103934665603ULL;
  const auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& f : k.facets()) {
    mix(0xfacefaceULL);
    for (const Vertex v : f) mix(static_cast<std::uint64_t>(v));
  }
  std::ostringstream os;
  os << "v" << k.vertices().size() << ".f" << k.facets().size() << "." << std::hex << h;
  return os.str();
}

}  // namespace reisner
