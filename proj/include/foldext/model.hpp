#pragma once

// Combinatorial shadow of a horizontal stable fold map f: M -> R^2 together
// with the collar submersion type of each fold circle.
//
// Sheets (components of M minus the singular set) are signed vertices, fold
// circles are I/II-labeled edges joining the two sheets they bound, and the
// complement of the fold image is a set of regions, each carrying the set of
// sheets lying over it ("gamma").  Adjacency arcs and double points record how
// regions meet.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace foldext {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

enum class Sign : std::uint8_t { plus, minus };

constexpr Sign opposite(Sign s) noexcept {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}

enum class FoldLabel : std::uint8_t { I, II };

enum class ArcKind : std::uint8_t { fullCircle, interval };

struct Vertex {
  std::string id;
  Sign sign = Sign::plus;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct FoldEdge {
  std::string id;
  FoldLabel label = FoldLabel::I;
  std::string plusEnd;
  std::string minusEnd;
  friend bool operator==(const FoldEdge&, const FoldEdge&) = default;
};

struct Region {
  std::string id;
  bool unbounded = false;
  std::vector<std::string> gamma;
  friend bool operator==(const Region&, const Region&) = default;
};

/// Two regions separated by a single crossing of one fold curve.  Which side
/// carries more sheets is not stored; see gamma_diff().
struct AdjacencyArc {
  std::string id;
  std::string inner;
  std::string outer;
  std::string fold;
  ArcKind kind = ArcKind::fullCircle;
  friend bool operator==(const AdjacencyArc&, const AdjacencyArc&) = default;
};

struct DoublePoint {
  std::string id;
  std::array<std::string, 2> folds;
  std::array<std::string, 4> regionsClockwise;
  std::array<std::string, 4> arcs;
  friend bool operator==(const DoublePoint&, const DoublePoint&) = default;
};

struct FoldEnds {
  std::size_t plus = npos;
  std::size_t minus = npos;
  FoldLabel label = FoldLabel::I;
};

struct ArcEnds {
  std::size_t inner = npos;
  std::size_t outer = npos;
  std::size_t fold = npos;
};

namespace detail {

template <class T>
void sort_by_id(std::vector<T>& items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const T& x, const T& y) { return x.id < y.id; });
}

template <class T>
std::map<std::string, std::size_t, std::less<>> index_by_id(const std::vector<T>& items) {
  std::map<std::string, std::size_t, std::less<>> out;
  for (std::size_t i = 0; i < items.size(); ++i) out.emplace(items[i].id, i);
  return out;
}

inline std::size_t lookup(const std::map<std::string, std::size_t, std::less<>>& m,
                          std::string_view id) {
  auto it = m.find(id);
  return it == m.end() ? npos : it->second;
}

}  // namespace detail

/// Immutable instance.  Every list is held sorted by id (gamma lists too), so
/// vertex/region/fold indices follow lexicographic id order.  Index-based
/// accessors resolve references once at construction; unresolved references
/// come back as npos and are reported by validate_instance().
class Instance {
 public:
  Instance() = default;

  Instance(std::vector<Vertex> vertices, std::vector<FoldEdge> folds,
           std::vector<Region> regions, std::vector<AdjacencyArc> arcs,
           std::vector<DoublePoint> doublePoints)
      : vertices_(std::move(vertices)),
        folds_(std::move(folds)),
        regions_(std::move(regions)),
        arcs_(std::move(arcs)),
        doublePoints_(std::move(doublePoints)) {
    detail::sort_by_id(vertices_);
    detail::sort_by_id(folds_);
    detail::sort_by_id(regions_);
    detail::sort_by_id(arcs_);
    detail::sort_by_id(doublePoints_);
    for (auto& r : regions_) std::sort(r.gamma.begin(), r.gamma.end());
    resolve();
  }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<FoldEdge>& folds() const noexcept { return folds_; }
  const std::vector<Region>& regions() const noexcept { return regions_; }
  const std::vector<AdjacencyArc>& arcs() const noexcept { return arcs_; }
  const std::vector<DoublePoint>& doublePoints() const noexcept { return doublePoints_; }

  std::size_t vertex_index(std::string_view id) const { return detail::lookup(vertexIdx_, id); }
  std::size_t fold_index(std::string_view id) const { return detail::lookup(foldIdx_, id); }
  std::size_t region_index(std::string_view id) const { return detail::lookup(regionIdx_, id); }
  std::size_t arc_index(std::string_view id) const { return detail::lookup(arcIdx_, id); }

  Sign sign(std::size_t v) const { return vertices_.at(v).sign; }
  FoldEnds fold_ends(std::size_t f) const { return foldEnds_.at(f); }
  ArcEnds arc_ends(std::size_t a) const { return arcEnds_.at(a); }

  /// Sorted vertex indices over region r (unresolved members dropped).
  const std::vector<std::size_t>& gamma(std::size_t r) const { return gamma_.at(r); }

  /// Arc indices touching region r, ascending.
  const std::vector<std::size_t>& arcs_of_region(std::size_t r) const { return regionArcs_.at(r); }

  /// Double-point indices that reference fold f, ascending.
  const std::vector<std::size_t>& double_points_of_fold(std::size_t f) const {
    return foldDoublePoints_.at(f);
  }

  /// Index of the first region flagged unbounded, or npos.
  std::size_t unbounded_region() const noexcept {
    for (std::size_t r = 0; r < regions_.size(); ++r)
      if (regions_[r].unbounded) return r;
    return npos;
  }

  /// II-labeled folds in id order.
  std::vector<std::size_t> ii_folds() const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < folds_.size(); ++f)
      if (folds_[f].label == FoldLabel::II) out.push_back(f);
    return out;
  }

  friend bool operator==(const Instance& x, const Instance& y) {
    return x.vertices_ == y.vertices_ && x.folds_ == y.folds_ && x.regions_ == y.regions_ &&
           x.arcs_ == y.arcs_ && x.doublePoints_ == y.doublePoints_;
  }

 private:
  void resolve() {
    vertexIdx_ = detail::index_by_id(vertices_);
    foldIdx_ = detail::index_by_id(folds_);
    regionIdx_ = detail::index_by_id(regions_);
    arcIdx_ = detail::index_by_id(arcs_);

    foldEnds_.clear();
    for (const auto& f : folds_)
      foldEnds_.push_back({vertex_index(f.plusEnd), vertex_index(f.minusEnd), f.label});

    gamma_.clear();
    for (const auto& r : regions_) {
      std::vector<std::size_t> g;
      for (const auto& id : r.gamma)
        if (auto v = vertex_index(id); v != npos) g.push_back(v);
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
      gamma_.push_back(std::move(g));
    }

    arcEnds_.clear();
    regionArcs_.assign(regions_.size(), {});
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      ArcEnds e{region_index(arcs_[a].inner), region_index(arcs_[a].outer),
                fold_index(arcs_[a].fold)};
      arcEnds_.push_back(e);
      if (e.inner != npos) regionArcs_[e.inner].push_back(a);
      if (e.outer != npos && e.outer != e.inner) regionArcs_[e.outer].push_back(a);
    }

    foldDoublePoints_.assign(folds_.size(), {});
    for (std::size_t d = 0; d < doublePoints_.size(); ++d)
      for (const auto& fid : doublePoints_[d].folds)
        if (auto f = fold_index(fid); f != npos) {
          auto& list = foldDoublePoints_[f];
          if (list.empty() || list.back() != d) list.push_back(d);
        }
  }

  std::vector<Vertex> vertices_;
  std::vector<FoldEdge> folds_;
  std::vector<Region> regions_;
  std::vector<AdjacencyArc> arcs_;
  std::vector<DoublePoint> doublePoints_;

  std::map<std::string, std::size_t, std::less<>> vertexIdx_, foldIdx_, regionIdx_, arcIdx_;
  std::vector<FoldEnds> foldEnds_;
  std::vector<ArcEnds> arcEnds_;
  std::vector<std::vector<std::size_t>> gamma_;
  std::vector<std::vector<std::size_t>> regionArcs_;
  std::vector<std::vector<std::size_t>> foldDoublePoints_;
};

// ---------------------------------------------------------------------------
// Sheet-set arithmetic on sorted index vectors.

inline std::vector<std::size_t> set_minus(const std::vector<std::size_t>& x,
                                          const std::vector<std::size_t>& y) {
  std::vector<std::size_t> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

inline bool is_subset(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

// ---------------------------------------------------------------------------
// gamma_diff

struct GammaDiff {
  std::size_t larger = npos;   ///< region index with the strictly larger gamma
  std::size_t smaller = npos;
  std::size_t plus = npos;     ///< the plus sheet of the two-sheet difference
  std::size_t minus = npos;
};

/// Orientation of an arc, derived from gamma.  Requires a validated instance.
inline GammaDiff gamma_diff(const Instance& inst, std::size_t arc) {
  const ArcEnds e = inst.arc_ends(arc);
  const auto& gi = inst.gamma(e.inner);
  const auto& go = inst.gamma(e.outer);
  GammaDiff out;
  std::vector<std::size_t> diff;
  if (is_subset(go, gi) && gi.size() > go.size()) {
    out.larger = e.inner;
    out.smaller = e.outer;
    diff = set_minus(gi, go);
  } else if (is_subset(gi, go) && go.size() > gi.size()) {
    out.larger = e.outer;
    out.smaller = e.inner;
    diff = set_minus(go, gi);
  } else {
    throw std::invalid_argument("gamma_diff: arc '" + inst.arcs()[arc].id +
                                "' joins regions with non-nested sheet sets");
  }
  if (diff.size() != 2)
    throw std::invalid_argument("gamma_diff: arc '" + inst.arcs()[arc].id +
                                "' does not differ by exactly two sheets");
  for (auto v : diff) (inst.sign(v) == Sign::plus ? out.plus : out.minus) = v;
  if (out.plus == npos || out.minus == npos)
    throw std::invalid_argument("gamma_diff: arc '" + inst.arcs()[arc].id +
                                "' difference is not one plus and one minus sheet");
  return out;
}

inline GammaDiff gamma_diff(const Instance& inst, std::string_view arcId) {
  auto a = inst.arc_index(arcId);
  if (a == npos) throw std::invalid_argument("gamma_diff: unknown arc '" + std::string(arcId) + "'");
  return gamma_diff(inst, a);
}

// ---------------------------------------------------------------------------
// region_order

/// Breadth-first order over the region adjacency graph from the unbounded
/// region; neighbours are enqueued in ascending id order.
inline std::vector<std::size_t> region_order(const Instance& inst) {
  const std::size_t start = inst.unbounded_region();
  if (start == npos) throw std::invalid_argument("region_order: no unbounded region");
  const std::size_t n = inst.regions().size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> order;
  std::queue<std::size_t> q;
  q.push(start);
  seen[start] = 1;
  while (!q.empty()) {
    auto r = q.front();
    q.pop();
    order.push_back(r);
    std::vector<std::size_t> next;
    for (auto a : inst.arcs_of_region(r)) {
      auto e = inst.arc_ends(a);
      auto other = e.inner == r ? e.outer : e.inner;
      if (other != npos && !seen[other]) next.push_back(other);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (auto o : next) {
      seen[o] = 1;
      q.push(o);
    }
  }
  if (order.size() != n) throw std::invalid_argument("region_order: region adjacency graph is disconnected");
  return order;
}

inline std::vector<std::string> region_order_ids(const Instance& inst) {
  std::vector<std::string> out;
  for (auto r : region_order(inst)) out.push_back(inst.regions()[r].id);
  return out;
}

}  // namespace foldext
