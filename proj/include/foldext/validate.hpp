#pragma once

// Structural and law checks for an Instance.

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "foldext/model.hpp"

namespace foldext {

enum class ViolationKind : std::uint8_t { structural, law };

struct Violation {
  ViolationKind kind = ViolationKind::law;
  std::string law;               ///< short code, e.g. "bipartite", "nesting"
  std::vector<std::string> ids;  ///< offending ids, most specific first
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation& x, const Violation& y) {
    return std::tie(x.ids, x.law, x.message, x.kind) <=> std::tie(y.ids, y.law, y.message, y.kind);
  }
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has_law(std::string_view law) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.law == law; });
  }
  bool has_structural() const {
    return std::any_of(violations.begin(), violations.end(),
                       [](const Violation& v) { return v.kind == ViolationKind::structural; });
  }
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Thrown by operations that require a validated instance.
class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(ValidationReport report)
      : std::invalid_argument("instance failed validation"), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Outcome of the double-point gamma law for one double point: for each of the
/// two rotation offsets, which of (b1)/(b2) held ("b1", "b2" or "" if none).
struct DoublePointLaw {
  std::string offset0;
  std::string offset1;
  bool ok() const { return !offset0.empty() && !offset1.empty(); }
};

namespace detail {

class ReportBuilder {
 public:
  void structural(std::string law, std::vector<std::string> ids, std::string msg) {
    out_.push_back({ViolationKind::structural, std::move(law), std::move(ids), std::move(msg)});
  }
  void law(std::string law, std::vector<std::string> ids, std::string msg) {
    out_.push_back({ViolationKind::law, std::move(law), std::move(ids), std::move(msg)});
  }
  ValidationReport finish() {
    std::sort(out_.begin(), out_.end());
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    return {std::move(out_)};
  }

 private:
  std::vector<Violation> out_;
};

template <class T>
void check_duplicate_ids(const std::vector<T>& items, std::string_view what, ReportBuilder& rb) {
  for (std::size_t i = 1; i < items.size(); ++i)
    if (items[i].id == items[i - 1].id && (i == 1 || items[i - 2].id != items[i].id))
      rb.structural("duplicate-id", {items[i].id}, "duplicate " + std::string(what) + " id");
}

inline std::vector<std::size_t> sym_diff(const std::vector<std::size_t>& x,
                                         const std::vector<std::size_t>& y) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

/// Evaluates (b1)/(b2) at double point d for both rotation offsets.  Region
/// references must resolve.
inline DoublePointLaw double_point_law(const Instance& inst, std::size_t d) {
  const auto& dp = inst.doublePoints()[d];
  std::array<const std::vector<std::size_t>*, 4> g{};
  for (int i = 0; i < 4; ++i) g[i] = &inst.gamma(inst.region_index(dp.regionsClockwise[i]));
  auto which = [&](int r1, int r2, int r3, int r4) -> std::string {
    auto d41 = set_minus(*g[r4], *g[r1]);
    auto d32 = set_minus(*g[r3], *g[r2]);
    if (d41.size() == 2 && d41 == d32 && is_subset(*g[r1], *g[r4]) && is_subset(*g[r2], *g[r3]))
      return "b1";
    auto d14 = set_minus(*g[r1], *g[r4]);
    auto d23 = set_minus(*g[r2], *g[r3]);
    if (d14.size() == 2 && d14 == d23 && is_subset(*g[r4], *g[r1]) && is_subset(*g[r3], *g[r2]))
      return "b2";
    return {};
  };
  return {which(0, 1, 2, 3), which(1, 2, 3, 0)};
}

/// Checks every structural rule and every law on the data.  The report is
/// sorted and deterministic; empty iff the instance is valid.
inline ValidationReport validate_instance(const Instance& inst) {
  detail::ReportBuilder rb;
  const auto& V = inst.vertices();
  const auto& F = inst.folds();
  const auto& R = inst.regions();
  const auto& A = inst.arcs();
  const auto& D = inst.doublePoints();

  detail::check_duplicate_ids(V, "vertex", rb);
  detail::check_duplicate_ids(F, "fold", rb);
  detail::check_duplicate_ids(R, "region", rb);
  detail::check_duplicate_ids(A, "arc", rb);
  detail::check_duplicate_ids(D, "double point", rb);

  // Folds: bipartite between signs, no loops.
  for (std::size_t f = 0; f < F.size(); ++f) {
    const auto& fe = F[f];
    auto e = inst.fold_ends(f);
    bool dangling = false;
    if (e.plus == npos) {
      rb.structural("dangling-reference", {fe.id, fe.plusEnd}, "fold plusEnd names no vertex");
      dangling = true;
    }
    if (e.minus == npos) {
      rb.structural("dangling-reference", {fe.id, fe.minusEnd}, "fold minusEnd names no vertex");
      dangling = true;
    }
    if (dangling) continue;
    if (e.plus == e.minus) {
      rb.law("fold-loop", {fe.id},
             "loop fold edge: both ends on one sheet, unsupported by the signed sheet labeling");
      continue;
    }
    if (inst.sign(e.plus) == inst.sign(e.minus))
      rb.law("bipartite", {fe.id}, "fold edge must join opposite signs");
    else if (inst.sign(e.plus) != Sign::plus)
      rb.law("bipartite", {fe.id}, "fold edge plusEnd has sign minus (ends swapped)");
  }

  // Regions: one unbounded region with empty gamma; sign parity of gamma.
  std::size_t unboundedCount = 0;
  for (std::size_t r = 0; r < R.size(); ++r) {
    const auto& reg = R[r];
    for (std::size_t i = 0; i < reg.gamma.size(); ++i) {
      if (inst.vertex_index(reg.gamma[i]) == npos)
        rb.structural("dangling-reference", {reg.id, reg.gamma[i]}, "gamma member names no vertex");
      if (i > 0 && reg.gamma[i] == reg.gamma[i - 1])
        rb.structural("duplicate-id", {reg.id, reg.gamma[i]}, "gamma lists a sheet twice");
    }
    if (reg.unbounded) {
      ++unboundedCount;
      if (!reg.gamma.empty()) rb.law("unbounded-region", {reg.id}, "unbounded region must have empty gamma");
    }
    std::size_t plus = 0, minus = 0;
    for (auto v : inst.gamma(r)) (inst.sign(v) == Sign::plus ? plus : minus)++;
    if (plus != minus)
      rb.law("gamma-parity", {reg.id}, "gamma must hold equally many plus and minus sheets (" +
                                           std::to_string(plus) + " vs " + std::to_string(minus) + ")");
  }
  if (unboundedCount != 1)
    rb.law("unbounded-region", {}, "exactly one region must be unbounded, found " +
                                       std::to_string(unboundedCount));

  // Arcs: nesting law with a two-sheet difference equal to the fold's ends.
  std::vector<std::size_t> foldArcCount(F.size(), 0);
  for (std::size_t a = 0; a < A.size(); ++a) {
    const auto& arc = A[a];
    auto e = inst.arc_ends(a);
    bool dangling = false;
    if (e.inner == npos) {
      rb.structural("dangling-reference", {arc.id, arc.inner}, "arc inner names no region");
      dangling = true;
    }
    if (e.outer == npos) {
      rb.structural("dangling-reference", {arc.id, arc.outer}, "arc outer names no region");
      dangling = true;
    }
    if (e.fold == npos) {
      rb.structural("dangling-reference", {arc.id, arc.fold}, "arc fold names no fold edge");
      dangling = true;
    } else {
      ++foldArcCount[e.fold];
    }
    if (dangling) continue;
    if (e.inner == e.outer) {
      rb.law("arc-distinct-regions", {arc.id}, "arc must join two distinct regions");
      continue;
    }
    const auto& gi = inst.gamma(e.inner);
    const auto& go = inst.gamma(e.outer);
    if (!is_subset(gi, go) && !is_subset(go, gi)) {
      rb.law("nesting", {arc.id}, "adjacent regions' sheet sets must be nested");
      continue;
    }
    auto diff = detail::sym_diff(gi, go);
    if (diff.size() != 2) {
      rb.law("difference-size", {arc.id}, "adjacent regions must differ by exactly two sheets, found " +
                                              std::to_string(diff.size()));
      continue;
    }
    if (inst.sign(diff[0]) == inst.sign(diff[1])) {
      rb.law("difference-signs", {arc.id}, "the two-sheet difference must be one plus and one minus sheet");
      continue;
    }
    auto fe = inst.fold_ends(e.fold);
    std::vector<std::size_t> ends{fe.plus, fe.minus};
    std::sort(ends.begin(), ends.end());
    if (ends != diff)
      rb.law("difference-fold", {arc.id, arc.fold},
             "the two-sheet difference must be the endpoint pair of the crossed fold");
  }

  // Fold coverage and arc kinds.
  for (std::size_t f = 0; f < F.size(); ++f) {
    if (foldArcCount[f] == 0) {
      rb.law("fold-coverage", {F[f].id}, "fold edge appears in no adjacency arc");
      continue;
    }
  }
  for (std::size_t a = 0; a < A.size(); ++a) {
    auto f = inst.arc_ends(a).fold;
    if (f == npos) continue;
    bool crossed = !inst.double_points_of_fold(f).empty();
    if (crossed && A[a].kind != ArcKind::interval)
      rb.law("arc-kind", {A[a].id, F[f].id}, "fold meets a double point, so its arcs must be intervals");
    if (!crossed && A[a].kind != ArcKind::fullCircle)
      rb.law("arc-kind", {A[a].id, F[f].id}, "fold meets no double point, so its arc must be a full circle");
  }

  // Double points.
  for (std::size_t d = 0; d < D.size(); ++d) {
    const auto& dp = D[d];
    bool dangling = false;
    for (const auto& f : dp.folds)
      if (inst.fold_index(f) == npos) {
        rb.structural("dangling-reference", {dp.id, f}, "double point fold names no fold edge");
        dangling = true;
      }
    for (const auto& r : dp.regionsClockwise)
      if (inst.region_index(r) == npos) {
        rb.structural("dangling-reference", {dp.id, r}, "double point region names no region");
        dangling = true;
      }
    for (const auto& a : dp.arcs)
      if (inst.arc_index(a) == npos) {
        rb.structural("dangling-reference", {dp.id, a}, "double point arc names no arc");
        dangling = true;
      }
    if (dangling) continue;
    if (dp.folds[0] == dp.folds[1]) {
      rb.law("double-point", {dp.id}, "double point must involve two distinct folds");
      continue;
    }
    std::set<std::string> distinctRegions(dp.regionsClockwise.begin(), dp.regionsClockwise.end());
    std::set<std::string> distinctArcs(dp.arcs.begin(), dp.arcs.end());
    if (distinctRegions.size() != 4 || distinctArcs.size() != 4) {
      rb.law("double-point", {dp.id}, "double point needs four distinct regions and four distinct arcs");
      continue;
    }
    // Each consecutive clockwise pair must be joined by one of the listed arcs;
    // opposite sides cross the same fold.
    std::array<std::size_t, 4> sideFold{npos, npos, npos, npos};
    bool sidesOk = true;
    for (int i = 0; i < 4; ++i) {
      auto r1 = inst.region_index(dp.regionsClockwise[i]);
      auto r2 = inst.region_index(dp.regionsClockwise[(i + 1) % 4]);
      for (const auto& aid : dp.arcs) {
        auto e = inst.arc_ends(inst.arc_index(aid));
        if ((e.inner == r1 && e.outer == r2) || (e.inner == r2 && e.outer == r1)) sideFold[i] = e.fold;
      }
      if (sideFold[i] == npos) {
        rb.law("double-point", {dp.id, dp.regionsClockwise[i], dp.regionsClockwise[(i + 1) % 4]},
               "no listed arc joins these clockwise-consecutive regions");
        sidesOk = false;
      }
    }
    for (const auto& aid : dp.arcs)
      if (A[inst.arc_index(aid)].kind != ArcKind::interval)
        rb.law("arc-kind", {aid, dp.id}, "arcs at a double point must be intervals");
    if (!sidesOk) continue;
    std::set<std::size_t> dpFolds{inst.fold_index(dp.folds[0]), inst.fold_index(dp.folds[1])};
    std::set<std::size_t> seenFolds(sideFold.begin(), sideFold.end());
    if (sideFold[0] != sideFold[2] || sideFold[1] != sideFold[3] || seenFolds != dpFolds) {
      rb.law("double-point", {dp.id}, "opposite sides must cross the same fold, and the two folds must be the listed ones");
      continue;
    }
    auto law = double_point_law(inst, d);
    if (law.offset0.empty())
      rb.law("double-point", {dp.id}, "neither (b1) nor (b2) holds starting from the first region");
    if (law.offset1.empty())
      rb.law("double-point", {dp.id}, "neither (b1) nor (b2) holds starting from the second region");
  }

  // Connectivity of the region adjacency graph.
  if (!R.empty()) {
    std::vector<char> seen(R.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      auto r = stack.back();
      stack.pop_back();
      for (auto a : inst.arcs_of_region(r)) {
        auto e = inst.arc_ends(a);
        for (auto o : {e.inner, e.outer})
          if (o != npos && !seen[o]) {
            seen[o] = 1;
            stack.push_back(o);
          }
      }
    }
    for (std::size_t r = 0; r < R.size(); ++r)
      if (!seen[r]) rb.law("connectivity", {R[r].id}, "region is not connected to the rest by arcs");
  }

  return rb.finish();
}

}  // namespace foldext
