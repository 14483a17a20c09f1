#pragma once

// Attachment schedule that realizes an admissible pair: regions are visited
// in region_order and every arc back to an earlier region is crossed by one
// part.  A P_I part carries an interval birth/death, a P_II part a merge or
// split, and a P_d part replaces the two P_II parts that close up a double
// point of two II folds when the four double-point equations hold.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foldext/admissible.hpp"

namespace foldext {

enum class PartKind : std::uint8_t { P_I, P_II, P_d };

inline std::string to_string(PartKind k) {
  switch (k) {
    case PartKind::P_I: return "P_I";
    case PartKind::P_II: return "P_II";
    case PartKind::P_d: return "P_d";
  }
  return "?";
}

struct AttachStep {
  std::size_t stepIndex = 0;          ///< position of the attached region in region order
  std::string region;                 ///< region being attached
  std::vector<std::string> arcs;      ///< crossed arcs (two for P_d)
  std::string doublePoint;            ///< set for P_d
  PartKind part = PartKind::P_I;
  std::vector<EdgeKey> bornEdges;     ///< P_I: the a-labeled interval
  std::vector<EdgeKey> mergedEdges;   ///< P_II/P_d: b-labeled intervals on smaller sides
  std::vector<EdgeKey> splitEdges;    ///< P_II/P_d: intervals they are replaced by
  std::map<std::string, EdgeKey> gluing;  ///< part side -> interval
  friend bool operator==(const AttachStep&, const AttachStep&) = default;
};

/// Which reading of the double-point equations held at a II/II double point.
struct OrientationNote {
  std::string doublePoint;
  bool counterclockwise = false;  ///< reversed clockwise tuple (used for fusion)
  bool clockwise = false;         ///< clockwise tuple as given
  bool agree() const { return counterclockwise == clockwise; }
  friend bool operator==(const OrientationNote&, const OrientationNote&) = default;
};

struct BuildPlan {
  std::vector<std::string> regionOrder;
  std::vector<AttachStep> steps;
  std::map<std::string, std::size_t> fiberCounts;
  std::vector<OrientationNote> orientationNotes;
  friend bool operator==(const BuildPlan&, const BuildPlan&) = default;
};

/// Vertex binding that satisfies the four double-point equations with regions
/// L1..L4 in the given cyclic order.
struct DoublePointBinding {
  std::size_t v, w, v1, w1, w2, w3;  // v, w, v', w', w'', w'''
  std::array<std::size_t, 4> regions;
};

namespace detail {

inline std::vector<EdgeKey> diff(const std::vector<EdgeKey>& x, const std::vector<EdgeKey>& y) {
  std::vector<EdgeKey> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

/// delta(small) = (delta(big) minus {r1, r2}) plus {add}, checked literally.
inline bool replaces(const std::vector<EdgeKey>& small, const std::vector<EdgeKey>& big, EdgeKey r1,
                     EdgeKey r2, EdgeKey add) {
  if (r1 == r2 || !holds(big, r1) || !holds(big, r2) || holds(big, add)) return false;
  return with(without(big, {r1, r2}), {add}) == small;
}

}  // namespace detail

/// Tests the four double-point equations for L = (l[0], l[1], l[2], l[3]).
inline std::optional<DoublePointBinding> match_double_point(const DeltaAssignment& delta,
                                                            std::array<std::size_t, 4> l) {
  const auto& d1 = delta[l[0]];
  const auto& d2 = delta[l[1]];
  const auto& d3 = delta[l[2]];
  const auto& d4 = delta[l[3]];
  auto only12 = detail::diff(d1, d2);
  auto only21 = detail::diff(d2, d1);
  auto only41 = detail::diff(d4, d1);
  if (only12.size() != 1 || only21.size() != 2 || only41.size() != 2) return std::nullopt;
  const EdgeKey vw = only12[0];
  DoublePointBinding b{};
  b.regions = l;
  b.v = vw.plus;
  b.w = vw.minus;
  // delta(L2) \ delta(L1) = {(v, v'), (w', w)}
  std::optional<EdgeKey> vv1, w1w;
  for (auto k : only21) {
    if (k.plus == b.v && k.minus != b.w) vv1 = k;
    if (k.minus == b.w && k.plus != b.v) w1w = k;
  }
  // delta(L4) \ delta(L1) = {(v, w''), (w''', w)}
  std::optional<EdgeKey> vw2, w3w;
  for (auto k : only41) {
    if (k.plus == b.v && k.minus != b.w) vw2 = k;
    if (k.minus == b.w && k.plus != b.v) w3w = k;
  }
  if (!vv1 || !w1w || !vw2 || !w3w) return std::nullopt;
  b.v1 = vv1->minus;
  b.w1 = w1w->plus;
  b.w2 = vw2->minus;
  b.w3 = w3w->plus;
  const EdgeKey w1w2{b.w1, b.w2};
  bool ok = detail::replaces(d1, d2, *vv1, *w1w, vw) &&          //
            detail::replaces(d1, d4, *vw2, *w3w, vw) &&          //
            detail::replaces(d2, d3, w1w2, *w3w, *w1w) &&        //
            detail::replaces(d4, d3, *vv1, w1w2, *vw2);
  if (!ok) return std::nullopt;
  return b;
}

namespace detail {

/// Rotates the tuple so that the region with the smallest gamma comes first.
inline std::array<std::size_t, 4> rotate_to_smallest(const Instance& inst, std::array<std::size_t, 4> t) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (inst.gamma(t[i]).size() < inst.gamma(t[best]).size()) best = i;
  std::rotate(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(best), t.end());
  return t;
}

}  // namespace detail

/// Builds the attachment schedule for a verified pair.  Throws
/// std::invalid_argument if the pair does not pass check_conditions.
inline BuildPlan emit_build_plan(const Instance& inst, const AdmissiblePair& pair) {
  if (auto rep = validate_instance(inst); !rep.ok()) throw InvalidInstance(std::move(rep));
  if (!check_conditions(inst, pair.graph, pair.delta).ok())
    throw std::invalid_argument("emit_build_plan: pair does not satisfy the admissibility conditions");

  const auto& R = inst.regions();
  const auto& delta = pair.delta;
  BuildPlan plan;
  const auto order = region_order(inst);
  std::vector<std::size_t> position(R.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = i;
    plan.regionOrder.push_back(R[order[i]].id);
  }
  for (std::size_t r = 0; r < R.size(); ++r) plan.fiberCounts[R[r].id] = delta[r].size();

  // Double points of two II folds whose equations hold: fuse the two arcs
  // through which the last of their four regions is attached.
  struct Fusion {
    std::size_t dp;
    std::size_t region;
    std::array<std::size_t, 2> arcs;
    DoublePointBinding binding;
  };
  std::vector<Fusion> fusions;
  std::vector<char> fusedArc(inst.arcs().size(), 0);
  for (std::size_t d = 0; d < inst.doublePoints().size(); ++d) {
    const auto& dp = inst.doublePoints()[d];
    if (inst.folds()[inst.fold_index(dp.folds[0])].label != FoldLabel::II ||
        inst.folds()[inst.fold_index(dp.folds[1])].label != FoldLabel::II)
      continue;
    std::array<std::size_t, 4> cw{};
    for (int i = 0; i < 4; ++i) cw[i] = inst.region_index(dp.regionsClockwise[i]);
    std::array<std::size_t, 4> ccw{cw[0], cw[3], cw[2], cw[1]};
    auto ccwMatch = match_double_point(delta, detail::rotate_to_smallest(inst, ccw));
    auto cwMatch = match_double_point(delta, detail::rotate_to_smallest(inst, cw));
    plan.orientationNotes.push_back({dp.id, ccwMatch.has_value(), cwMatch.has_value()});
    if (!ccwMatch) continue;

    std::size_t last = cw[0];
    for (auto r : cw)
      if (position[r] > position[last]) last = r;
    std::vector<std::size_t> closing;
    for (const auto& aid : dp.arcs) {
      auto a = inst.arc_index(aid);
      auto e = inst.arc_ends(a);
      if (e.inner == last || e.outer == last) closing.push_back(a);
    }
    if (closing.size() != 2 || fusedArc[closing[0]] || fusedArc[closing[1]]) continue;
    fusedArc[closing[0]] = fusedArc[closing[1]] = 1;
    std::sort(closing.begin(), closing.end());
    fusions.push_back({d, last, {closing[0], closing[1]}, *ccwMatch});
  }

  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto r = order[i];
    std::vector<std::size_t> back;
    for (auto a : inst.arcs_of_region(r)) {
      auto e = inst.arc_ends(a);
      auto other = e.inner == r ? e.outer : e.inner;
      if (position[other] < i) back.push_back(a);
    }
    std::sort(back.begin(), back.end());

    for (const auto& f : fusions) {
      if (f.region != r) continue;
      const auto& b = f.binding;
      AttachStep s;
      s.stepIndex = i;
      s.region = R[r].id;
      s.arcs = {inst.arcs()[f.arcs[0]].id, inst.arcs()[f.arcs[1]].id};
      s.doublePoint = inst.doublePoints()[f.dp].id;
      s.part = PartKind::P_d;
      const EdgeKey vw{b.v, b.w}, vv1{b.v, b.v1}, w1w{b.w1, b.w}, vw2{b.v, b.w2}, w3w{b.w3, b.w},
          w1w2{b.w1, b.w2};
      s.mergedEdges = {vw, w1w, vw2};
      s.splitEdges = {vv1, w1w2, w3w};
      std::sort(s.mergedEdges.begin(), s.mergedEdges.end());
      std::sort(s.splitEdges.begin(), s.splitEdges.end());
      s.gluing = {{"xi1", vw},     {"xi2_1", vv1}, {"xi2_2", w1w},
                  {"xi3_1", vw2},  {"xi3_2", w3w}, {"xi4", w1w2}};
      plan.steps.push_back(std::move(s));
    }

    for (auto a : back) {
      if (fusedArc[a]) continue;
      auto d = gamma_diff(inst, a);
      auto t = classify_transition(pair.graph, delta[d.larger], delta[d.smaller], d.plus, d.minus);
      AttachStep s;
      s.stepIndex = i;
      s.region = R[r].id;
      s.arcs = {inst.arcs()[a].id};
      if (t.kind == TransitionKind::a1) {
        s.part = PartKind::P_I;
        s.bornEdges = {t.born};
        s.gluing = {{"kappa", t.born}};
      } else {
        s.part = PartKind::P_II;
        s.mergedEdges = {t.merged};
        s.splitEdges = {t.splitPlus, t.splitMinus};
        std::sort(s.splitEdges.begin(), s.splitEdges.end());
        s.gluing = {{"mu1", t.merged}, {"mu2", t.splitPlus}, {"mu3", t.splitMinus}};
      }
      plan.steps.push_back(std::move(s));
    }
  }
  return plan;
}

struct PlanSummary {
  std::size_t pI = 0;
  std::size_t pII = 0;
  std::size_t pD = 0;
  std::size_t maxFiberCount = 0;
  friend bool operator==(const PlanSummary&, const PlanSummary&) = default;
};

inline PlanSummary plan_summary(const BuildPlan& plan) {
  PlanSummary s;
  for (const auto& st : plan.steps) {
    switch (st.part) {
      case PartKind::P_I: ++s.pI; break;
      case PartKind::P_II: ++s.pII; break;
      case PartKind::P_d: ++s.pD; break;
    }
  }
  for (const auto& [id, n] : plan.fiberCounts) s.maxFiberCount = std::max(s.maxFiberCount, n);
  return s;
}

}  // namespace foldext
