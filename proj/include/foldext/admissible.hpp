#pragma once

// Admissible pairs (H, delta): per-region perfect matchings of gamma by edges
// of a generated graph H that change across every arc by one interval birth
// (an a-labeled edge) or one merge of two intervals into a b-labeled edge.

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "foldext/genset.hpp"
#include "foldext/model.hpp"
#include "foldext/validate.hpp"

namespace foldext {

/// delta(R) for every region, indexed like Instance::regions(); each entry is
/// a sorted list of endpoint pairs naming edges of the paired graph.
using DeltaAssignment = std::vector<std::vector<EdgeKey>>;

struct AdmissiblePair {
  CandidateGraph graph;
  DeltaAssignment delta;
  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

enum class TransitionKind : std::uint8_t { none, a1, a2 };

/// How delta changes across one arc, read from the larger side.  For a1 the
/// born edge is (p, m); for a2 the larger side holds (p, y) and (x, m) and the
/// smaller side holds the merged edge (x, y).
struct Transition {
  TransitionKind kind = TransitionKind::none;
  EdgeKey born;
  EdgeKey merged;
  EdgeKey splitPlus;   ///< (p, y)
  EdgeKey splitMinus;  ///< (x, m)
};

namespace detail {

inline std::vector<EdgeKey> without(std::vector<EdgeKey> s, std::initializer_list<EdgeKey> drop) {
  for (auto d : drop) {
    auto it = std::lower_bound(s.begin(), s.end(), d);
    if (it != s.end() && *it == d) s.erase(it);
  }
  return s;
}

inline std::vector<EdgeKey> with(std::vector<EdgeKey> s, std::initializer_list<EdgeKey> add) {
  for (auto a : add) {
    auto it = std::lower_bound(s.begin(), s.end(), a);
    if (it == s.end() || *it != a) s.insert(it, a);
  }
  return s;
}

inline bool holds(const std::vector<EdgeKey>& s, EdgeKey k) {
  return std::binary_search(s.begin(), s.end(), k);
}

}  // namespace detail

/// Classifies the change from the smaller side to the larger side, where the
/// larger side gains sheets {p, m}.  Returns kind none when neither (a1) nor
/// (a2) holds.  Split edges are matched by endpoints only.
inline Transition classify_transition(const CandidateGraph& h, const std::vector<EdgeKey>& larger,
                                      const std::vector<EdgeKey>& smaller, std::size_t p,
                                      std::size_t m) {
  Transition t;
  const EdgeKey pm{p, m};
  if (detail::holds(larger, pm)) {
    auto* e = h.find(pm);
    if (e && e->label.has_a() && detail::without(larger, {pm}) == smaller) {
      t.kind = TransitionKind::a1;
      t.born = pm;
    }
    return t;
  }
  for (const auto& sp : larger) {
    if (sp.plus != p || sp.minus == m) continue;
    for (const auto& sm : larger) {
      if (sm.minus != m || sm.plus == p) continue;
      EdgeKey merged{sm.plus, sp.minus};
      auto* e = h.find(merged);
      if (!e || !e->label.has_b()) continue;
      if (detail::with(detail::without(larger, {sp, sm}), {merged}) == smaller) {
        t.kind = TransitionKind::a2;
        t.merged = merged;
        t.splitPlus = sp;
        t.splitMinus = sm;
        return t;
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// check_conditions

struct ConditionResult {
  std::string condition;  ///< "1", "2", "3", "double-point-gamma", "double-point-coherence"
  std::string subject;    ///< region, arc or double point id
  bool pass = false;
  std::string detail;
  friend bool operator==(const ConditionResult&, const ConditionResult&) = default;
};

struct ConditionReport {
  std::vector<std::string> structuralErrors;
  std::vector<ConditionResult> results;

  bool ok() const {
    return structuralErrors.empty() &&
           std::all_of(results.begin(), results.end(), [](const ConditionResult& r) { return r.pass; });
  }
  bool condition_ok(std::string_view c) const {
    return std::all_of(results.begin(), results.end(),
                       [&](const ConditionResult& r) { return r.condition != c || r.pass; });
  }
  const ConditionResult* find(std::string_view c, std::string_view subject) const {
    for (const auto& r : results)
      if (r.condition == c && r.subject == subject) return &r;
    return nullptr;
  }
};

namespace detail {
inline std::string edge_str(const Instance& inst, EdgeKey k) {
  return "(" + inst.vertices()[k.plus].id + "," + inst.vertices()[k.minus].id + ")";
}
}  // namespace detail

/// Checks conditions (1)-(3) on a validated instance.  delta entries outside
/// H are structural errors; the condition results are then omitted.
inline ConditionReport check_conditions(const Instance& inst, const CandidateGraph& h,
                                        const DeltaAssignment& delta) {
  ConditionReport rep;
  const auto& R = inst.regions();
  if (delta.size() != R.size()) {
    rep.structuralErrors.push_back("delta covers " + std::to_string(delta.size()) + " regions, instance has " +
                                   std::to_string(R.size()));
    return rep;
  }
  if (h.vertex_count() != inst.vertices().size())
    rep.structuralErrors.push_back("graph vertex count does not match the instance");
  for (std::size_t r = 0; r < R.size(); ++r) {
    if (!std::is_sorted(delta[r].begin(), delta[r].end()) ||
        std::adjacent_find(delta[r].begin(), delta[r].end()) != delta[r].end())
      rep.structuralErrors.push_back("delta(" + R[r].id + ") is not a sorted set");
    for (auto k : delta[r])
      if (k.plus >= inst.vertices().size() || k.minus >= inst.vertices().size() || !h.find(k))
        rep.structuralErrors.push_back("delta(" + R[r].id + ") references an edge outside the graph");
  }
  if (!rep.structuralErrors.empty()) return rep;

  // (1) endpoints lie over R; (2) every sheet over R is matched exactly once.
  for (std::size_t r = 0; r < R.size(); ++r) {
    const auto& g = inst.gamma(r);
    std::string bad;
    for (auto k : delta[r])
      if (!std::binary_search(g.begin(), g.end(), k.plus) || !std::binary_search(g.begin(), g.end(), k.minus))
        bad += detail::edge_str(inst, k);
    rep.results.push_back({"1", R[r].id, bad.empty(), bad.empty() ? "" : "edges leave gamma: " + bad});

    std::string unmatched;
    for (auto v : g) {
      auto deg = std::count_if(delta[r].begin(), delta[r].end(),
                               [&](EdgeKey k) { return k.plus == v || k.minus == v; });
      if (deg != 1) unmatched += inst.vertices()[v].id + "x" + std::to_string(deg) + " ";
    }
    rep.results.push_back({"2", R[r].id, unmatched.empty(),
                           unmatched.empty() ? "" : "sheets not matched exactly once: " + unmatched});
  }

  // (3) one of (a1)/(a2) across every arc.
  std::vector<char> arcOk(inst.arcs().size(), 0);
  for (std::size_t a = 0; a < inst.arcs().size(); ++a) {
    auto d = gamma_diff(inst, a);
    auto t = classify_transition(h, delta[d.larger], delta[d.smaller], d.plus, d.minus);
    arcOk[a] = t.kind != TransitionKind::none;
    std::string detail;
    if (t.kind == TransitionKind::a1)
      detail = "a1 born " + detail::edge_str(inst, t.born);
    else if (t.kind == TransitionKind::a2)
      detail = "a2 merged " + detail::edge_str(inst, t.merged) + " from " +
               detail::edge_str(inst, t.splitPlus) + detail::edge_str(inst, t.splitMinus);
    else
      detail = "neither a1 nor a2 holds from " + R[d.smaller].id + " to " + R[d.larger].id;
    rep.results.push_back({"3", inst.arcs()[a].id, arcOk[a] != 0, detail});
  }

  // Around each double point: the gamma law, and coherence of delta along the
  // four incident arcs (both two-step paths to the far region agree).
  for (std::size_t dpi = 0; dpi < inst.doublePoints().size(); ++dpi) {
    const auto& dp = inst.doublePoints()[dpi];
    auto law = double_point_law(inst, dpi);
    rep.results.push_back({"double-point-gamma", dp.id, law.ok(),
                           "offset0=" + (law.offset0.empty() ? std::string("none") : law.offset0) +
                               " offset1=" + (law.offset1.empty() ? std::string("none") : law.offset1)});
    bool coherent = true;
    std::string failing;
    for (const auto& aid : dp.arcs)
      if (!arcOk[inst.arc_index(aid)]) {
        coherent = false;
        failing += aid + " ";
      }
    rep.results.push_back({"double-point-coherence", dp.id, coherent,
                           coherent ? "" : "transitions fail on arcs: " + failing});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// search_delta

struct DeltaSearchResult {
  std::optional<DeltaAssignment> delta;
  bool budgetExhausted = false;
  std::size_t branches = 0;
};

namespace detail {

/// Candidate delta values for `child` derived from delta(parent) across the
/// arc, in a fixed order: (a1) first, then (a2) options by ascending edge.
inline std::vector<std::vector<EdgeKey>> propagate(const Instance& inst, const CandidateGraph& h,
                                                   const GammaDiff& d, std::size_t parent,
                                                   const std::vector<EdgeKey>& dp) {
  std::vector<std::vector<EdgeKey>> out;
  const EdgeKey pm{d.plus, d.minus};
  if (d.smaller == parent) {
    // Growing: birth of (p, m), or split of a b-labeled interval (x, y).
    if (auto* e = h.find(pm); e && e->label.has_a()) out.push_back(with(dp, {pm}));
    for (auto xy : dp) {
      auto* merged = h.find(xy);
      if (!merged || !merged->label.has_b()) continue;
      EdgeKey sp{d.plus, xy.minus}, sm{xy.plus, d.minus};
      if (!h.find(sp) || !h.find(sm)) continue;
      out.push_back(with(without(dp, {xy}), {sp, sm}));
    }
  } else {
    // Shrinking: death of (p, m), or merge of (p, y) and (x, m) into (x, y).
    if (holds(dp, pm)) {
      if (auto* e = h.find(pm); e && e->label.has_a()) out.push_back(without(dp, {pm}));
      return out;
    }
    for (auto sp : dp) {
      if (sp.plus != d.plus) continue;
      for (auto sm : dp) {
        if (sm.minus != d.minus) continue;
        EdgeKey merged{sm.plus, sp.minus};
        auto* e = h.find(merged);
        if (!e || !e->label.has_b()) continue;
        out.push_back(with(without(dp, {sp, sm}), {merged}));
      }
    }
  }
  (void)inst;
  return out;
}

inline bool is_perfect_matching(const std::vector<std::size_t>& gamma, const std::vector<EdgeKey>& m) {
  if (m.size() * 2 != gamma.size()) return false;
  std::vector<std::size_t> ends;
  for (auto k : m) {
    ends.push_back(k.plus);
    ends.push_back(k.minus);
  }
  std::sort(ends.begin(), ends.end());
  return ends == gamma;
}

class DeltaSearch {
 public:
  DeltaSearch(const Instance& inst, const CandidateGraph& h, std::size_t maxBranches)
      : inst_(inst), h_(h), maxBranches_(maxBranches), order_(region_order(inst)) {
    const std::size_t n = inst.regions().size();
    position_.assign(n, npos);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
    parentArc_.assign(n, npos);
    backArcs_.assign(n, {});
    for (std::size_t i = 1; i < order_.size(); ++i) {
      auto r = order_[i];
      std::size_t best = npos;
      for (auto a : inst.arcs_of_region(r)) {
        auto e = inst.arc_ends(a);
        auto other = e.inner == r ? e.outer : e.inner;
        if (position_[other] >= i) continue;
        backArcs_[r].push_back(a);
        if (best == npos || position_[other] < position_[otherEnd(best, r)]) best = a;
      }
      parentArc_[r] = best;
    }
  }

  DeltaSearchResult run() {
    DeltaSearchResult res;
    delta_.assign(inst_.regions().size(), {});
    if (recurse(1)) res.delta = delta_;
    res.budgetExhausted = exhausted_;
    res.branches = branches_;
    return res;
  }

 private:
  std::size_t otherEnd(std::size_t arc, std::size_t r) const {
    auto e = inst_.arc_ends(arc);
    return e.inner == r ? e.outer : e.inner;
  }

  bool recurse(std::size_t i) {
    if (i == order_.size()) return true;
    const auto r = order_[i];
    const auto arc = parentArc_[r];
    const auto parent = otherEnd(arc, r);
    const auto d = gamma_diff(inst_, arc);
    for (auto& cand : propagate(inst_, h_, d, parent, delta_[parent])) {
      if (branches_ >= maxBranches_) {
        exhausted_ = true;
        return false;
      }
      ++branches_;
      if (!is_perfect_matching(inst_.gamma(r), cand)) continue;
      delta_[r] = std::move(cand);
      if (consistent(r) && recurse(i + 1)) return true;
      if (exhausted_) return false;
    }
    delta_[r].clear();
    return false;
  }

  // Every arc back to an already assigned region must be an (a1)/(a2) step;
  // this is where the two paths around a double point are reconciled.
  bool consistent(std::size_t r) const {
    for (auto a : backArcs_[r]) {
      auto d = gamma_diff(inst_, a);
      if (classify_transition(h_, delta_[d.larger], delta_[d.smaller], d.plus, d.minus).kind ==
          TransitionKind::none)
        return false;
    }
    return true;
  }

  const Instance& inst_;
  const CandidateGraph& h_;
  std::size_t maxBranches_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> parentArc_;
  std::vector<std::vector<std::size_t>> backArcs_;
  DeltaAssignment delta_;
  std::size_t branches_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Propagates delta outward from the unbounded region along region_order,
/// branching over (a1)/(a2) at each new region and backtracking on conflict.
/// Returns the first assignment in branch order.
inline DeltaSearchResult search_delta(const Instance& inst, const CandidateGraph& h,
                                      std::size_t maxBranches = 1000000) {
  if (maxBranches == 0) throw std::invalid_argument("search_delta: budget must be positive");
  return detail::DeltaSearch(inst, h, maxBranches).run();
}

// ---------------------------------------------------------------------------
// decide_extension

struct DecideBudget {
  EnumerationBudget enumeration;
  std::size_t maxBranchesPerGraph = 1000000;
  unsigned threads = 1;
};

enum class Outcome : std::uint8_t { extendable, notExtendable, unknown };

struct VerdictStats {
  std::size_t graphsEnumerated = 0;
  std::size_t candidatesSearched = 0;
  std::size_t deltaBranches = 0;
  bool enumerationComplete = true;
};

struct Verdict {
  Outcome outcome = Outcome::unknown;
  std::optional<AdmissiblePair> certificate;
  VerdictStats stats;
};

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::extendable: return "extendable";
    case Outcome::notExtendable: return "notExtendable";
    case Outcome::unknown: return "unknown";
  }
  return "unknown";
}

/// Enumerates the generated set and searches each graph (canonical order) for
/// a delta.  The certificate is the first hit in that order regardless of how
/// many threads searched, and stats count only the candidates up to it.
inline Verdict decide_extension(const Instance& inst, const DecideBudget& budget = {}) {
  if (auto rep = validate_instance(inst); !rep.ok()) throw InvalidInstance(std::move(rep));
  auto enumBudget = budget.enumeration;
  enumBudget.threads = budget.threads;
  auto gen = enumerate_generated_set(inst, enumBudget);

  Verdict v;
  v.stats.graphsEnumerated = gen.graphs.size();
  v.stats.enumerationComplete = gen.complete;
  const std::size_t n = gen.graphs.size();
  const std::size_t workers = std::max<std::size_t>(1, budget.threads);

  bool anyExhausted = false;
  for (std::size_t begin = 0; begin < n; begin += workers) {
    const std::size_t end = std::min(n, begin + workers);
    std::vector<DeltaSearchResult> results(end - begin);
    if (workers == 1) {
      results[0] = search_delta(inst, gen.graphs[begin], budget.maxBranchesPerGraph);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t i = begin; i < end; ++i)
        pool.emplace_back([&, i] { results[i - begin] = search_delta(inst, gen.graphs[i], budget.maxBranchesPerGraph); });
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = begin; i < end; ++i) {
      auto& r = results[i - begin];
      ++v.stats.candidatesSearched;
      v.stats.deltaBranches += r.branches;
      anyExhausted = anyExhausted || r.budgetExhausted;
      if (r.delta) {
        v.outcome = Outcome::extendable;
        v.certificate = AdmissiblePair{gen.graphs[i], std::move(*r.delta)};
        return v;
      }
    }
  }
  v.outcome = (gen.complete && !anyExhausted) ? Outcome::notExtendable : Outcome::unknown;
  return v;
}

// ---------------------------------------------------------------------------
// Certificate verification

struct CertificateReport {
  bool graphWellFormed = false;
  bool graphInGeneratedSet = false;
  bool generatedSetComplete = true;  ///< membership is conclusive only when complete
  ConditionReport conditions;

  bool ok() const { return graphWellFormed && graphInGeneratedSet && conditions.ok(); }
};

/// Re-derives membership of the graph in the generated set and re-checks the
/// admissibility conditions, independently of how the pair was found.
inline CertificateReport verify_certificate(const Instance& inst, const AdmissiblePair& pair,
                                            const EnumerationBudget& budget = {}) {
  if (auto rep = validate_instance(inst); !rep.ok()) throw InvalidInstance(std::move(rep));
  CertificateReport out;
  out.graphWellFormed = is_well_formed(inst, pair.graph);
  auto gen = enumerate_generated_set(inst, budget);
  out.generatedSetComplete = gen.complete;
  out.graphInGeneratedSet = std::find(gen.graphs.begin(), gen.graphs.end(), pair.graph) != gen.graphs.end();
  out.conditions = check_conditions(inst, pair.graph, pair.delta);
  return out;
}

}  // namespace foldext
