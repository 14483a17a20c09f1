#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "foldext/foldext.hpp"
#include "oracles.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) { return std::string(FOLDEXT_FIXTURE_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline foldext::Instance load(const std::string& name) {
  return foldext::parse_instance(read_text(fixture_path(name)));
}

inline foldext::AdmissiblePair load_cert(const foldext::Instance& inst, const std::string& name) {
  return foldext::parse_certificate(inst, read_text(fixture_path(name)));
}

/// Graph lists shipped next to the fixtures ("foldext-graph-list").
inline std::vector<foldext::CandidateGraph> load_graph_list(const foldext::Instance& inst, const std::string& name) {
  auto doc = nlohmann::json::parse(read_text(fixture_path(name)));
  std::vector<foldext::CandidateGraph> out;
  for (std::size_t i = 0; i < doc.at("graphs").size(); ++i)
    out.push_back(foldext::graph_from_json(inst, doc["graphs"][i], "/graphs/" + std::to_string(i)));
  return out;
}

inline oracle::Graph to_oracle(const foldext::CandidateGraph& g) {
  oracle::Graph out;
  for (const auto& e : g.edges()) out[{e.plusEnd, e.minusEnd}] = e.label.bits();
  return out;
}

inline std::set<oracle::Graph> to_oracle(const std::vector<foldext::CandidateGraph>& gs) {
  std::set<oracle::Graph> out;
  for (const auto& g : gs) out.insert(to_oracle(g));
  return out;
}

/// Instances inside the brute-force oracle's reach.
inline bool small_enough(const foldext::Instance& inst) {
  return inst.vertices().size() <= 6 && inst.folds().size() <= 4 && inst.regions().size() <= 6;
}

inline foldext::GeneratorParams seeded(std::uint64_t seed, bool doublePoints) {
  foldext::GeneratorParams p;
  p.seed = seed;
  p.allowDoublePoints = doublePoints;
  p.maxFolds = 3;
  p.maxNestingDepth = 3;
  p.iiFoldProbability = 0.3 + 0.1 * static_cast<double>(seed % 5);
  return p;
}

}  // namespace testsupport
