#pragma once

// Seeded random instances: forests of nested round sphere components (one
// fold circle and two sheets each), optionally with "lens" gadgets of two
// overlapping circles that create a pair of double points.  Output is valid
// by construction.  Only raw mt19937_64 output is used, so a seed yields the
// same instance on every platform.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "foldext/model.hpp"

namespace foldext {

struct GeneratorParams {
  std::uint64_t seed = 0;
  int maxNestingDepth = 2;
  int maxSiblingsPerLevel = 2;
  double iiFoldProbability = 0.5;
  bool allowDoublePoints = false;
  double doublePointProbability = 0.35;
  std::size_t maxFolds = 8;
};

namespace detail {

class InstanceBuilder {
 public:
  explicit InstanceBuilder(const GeneratorParams& p) : p_(p), rng_(p.seed) {}

  Instance build() {
    regions_.push_back({"r0", true, {}});
    const int roots = 1 + below(static_cast<std::uint64_t>(std::max(1, p_.maxSiblingsPerLevel)));
    for (int i = 0; i < roots; ++i) child("r0", {}, 1);
    return Instance(std::move(vertices_), std::move(folds_), std::move(regions_), std::move(arcs_),
                    std::move(dps_));
  }

 private:
  int below(std::uint64_t n) { return n == 0 ? 0 : static_cast<int>(rng_() % n); }
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1p-53; }

  void populate(const std::string& region, const std::vector<std::string>& gamma, int depth) {
    if (depth > p_.maxNestingDepth) return;
    const int k = below(static_cast<std::uint64_t>(p_.maxSiblingsPerLevel) + 1);
    for (int i = 0; i < k; ++i) child(region, gamma, depth);
  }

  /// A new sheet pair bounded by one fold circle; returns the fold id.
  std::string sphere(std::vector<std::string>& gammaOut) {
    auto f = "f" + std::to_string(++folds);
    auto s1 = "s" + std::to_string(++sheets);
    auto s2 = "s" + std::to_string(++sheets);
    bool firstPlus = below(2) == 0;
    const auto& plus = firstPlus ? s1 : s2;
    const auto& minus = firstPlus ? s2 : s1;
    vertices_.push_back({s1, firstPlus ? Sign::plus : Sign::minus});
    vertices_.push_back({s2, firstPlus ? Sign::minus : Sign::plus});
    auto label = unit() < p_.iiFoldProbability ? FoldLabel::II : FoldLabel::I;
    folds_.push_back({f, label, plus, minus});
    gammaOut.push_back(s1);
    gammaOut.push_back(s2);
    return f;
  }

  std::string region(std::vector<std::string> gamma) {
    auto id = "r" + std::to_string(++regionCount);
    regions_.push_back({id, false, std::move(gamma)});
    return id;
  }

  std::string arc(const std::string& inner, const std::string& outer, const std::string& fold, ArcKind kind) {
    auto id = "a" + std::to_string(++arcCount);
    arcs_.push_back({id, inner, outer, fold, kind});
    return id;
  }

  void child(const std::string& parent, const std::vector<std::string>& gamma, int depth) {
    if (p_.allowDoublePoints && folds + 2 <= p_.maxFolds && unit() < p_.doublePointProbability) {
      lens(parent, gamma);
      return;
    }
    if (folds + 1 > p_.maxFolds) return;
    auto g = gamma;
    auto f = sphere(g);
    auto inside = region(g);
    arc(inside, parent, f, ArcKind::fullCircle);
    populate(inside, g, depth + 1);
  }

  void lens(const std::string& parent, const std::vector<std::string>& gamma) {
    std::vector<std::string> ga = gamma, gb = gamma, sheetsA, sheetsB;
    auto fa = sphere(sheetsA);
    auto fb = sphere(sheetsB);
    ga.insert(ga.end(), sheetsA.begin(), sheetsA.end());
    gb.insert(gb.end(), sheetsB.begin(), sheetsB.end());
    auto gab = ga;
    gab.insert(gab.end(), sheetsB.begin(), sheetsB.end());
    auto ra = region(ga);
    auto rb = region(gb);
    auto rab = region(gab);
    auto a1 = arc(ra, parent, fa, ArcKind::interval);
    auto a2 = arc(rab, rb, fa, ArcKind::interval);
    auto a3 = arc(rb, parent, fb, ArcKind::interval);
    auto a4 = arc(rab, ra, fb, ArcKind::interval);
    dps_.push_back({"d" + std::to_string(++dpCount), {fa, fb}, {parent, ra, rab, rb}, {a1, a4, a2, a3}});
    dps_.push_back({"d" + std::to_string(++dpCount), {fa, fb}, {parent, rb, rab, ra}, {a3, a2, a4, a1}});
  }

  GeneratorParams p_;
  std::mt19937_64 rng_;
  std::size_t folds = 0, sheets = 0, regionCount = 0, arcCount = 0, dpCount = 0;
  std::vector<Vertex> vertices_;
  std::vector<FoldEdge> folds_;
  std::vector<Region> regions_;
  std::vector<AdjacencyArc> arcs_;
  std::vector<DoublePoint> dps_;
};

}  // namespace detail

inline Instance generate_instance(const GeneratorParams& params) {
  if (params.iiFoldProbability < 0.0 || params.iiFoldProbability > 1.0 || params.doublePointProbability < 0.0 ||
      params.doublePointProbability > 1.0)
    throw std::invalid_argument("generate_instance: probabilities must lie in [0, 1]");
  if (params.maxNestingDepth < 1 || params.maxSiblingsPerLevel < 1 || params.maxFolds < 1)
    throw std::invalid_argument("generate_instance: depth, siblings and fold cap must be positive");
  return detail::InstanceBuilder(params).build();
}

}  // namespace foldext
