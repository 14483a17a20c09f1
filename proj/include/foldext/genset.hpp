#pragma once

// Labeled bipartite candidate graphs, the two rewriting operations driven by
// II-labeled folds, and exhaustive enumeration of the generated set.

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "foldext/model.hpp"

namespace foldext {

/// Nonempty subset of {a, b}.
class LabelSet {
 public:
  static constexpr std::uint8_t kA = 1;
  static constexpr std::uint8_t kB = 2;

  constexpr LabelSet() = default;
  constexpr explicit LabelSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr LabelSet a() { return LabelSet{kA}; }
  static constexpr LabelSet b() { return LabelSet{kB}; }
  static constexpr LabelSet ab() { return LabelSet{kA | kB}; }

  constexpr bool has_a() const { return bits_ & kA; }
  constexpr bool has_b() const { return bits_ & kB; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr LabelSet operator|(LabelSet o) const { return LabelSet(bits_ | o.bits_); }

  std::string str() const { return std::string(has_a() ? "a" : "") + (has_b() ? "b" : ""); }

  friend constexpr bool operator==(LabelSet, LabelSet) = default;
  friend constexpr auto operator<=>(LabelSet, LabelSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Endpoint pair (plus sheet, minus sheet) by vertex index.
struct EdgeKey {
  std::size_t plus = npos;
  std::size_t minus = npos;
  friend constexpr bool operator==(const EdgeKey&, const EdgeKey&) = default;
  friend constexpr auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct LabeledEdge {
  std::size_t plusEnd = npos;
  std::size_t minusEnd = npos;
  LabelSet label;

  EdgeKey key() const { return {plusEnd, minusEnd}; }
  friend constexpr bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
  friend constexpr auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Simple bipartite graph over the instance's sheets.  Edges are kept sorted
/// by endpoints; parallel edges are merged by label union.
class CandidateGraph {
 public:
  CandidateGraph() = default;
  explicit CandidateGraph(std::size_t vertexCount) : n_(vertexCount) {}
  CandidateGraph(std::size_t vertexCount, std::vector<LabeledEdge> edges) : n_(vertexCount) {
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) {
      if (!edges_.empty() && edges_.back().key() == e.key())
        edges_.back().label = edges_.back().label | e.label;
      else
        edges_.push_back(e);
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<LabeledEdge>& edges() const noexcept { return edges_; }
  bool empty() const noexcept { return edges_.empty(); }

  const LabeledEdge* find(EdgeKey k) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), k,
                               [](const LabeledEdge& e, EdgeKey key) { return e.key() < key; });
    return it != edges_.end() && it->key() == k ? &*it : nullptr;
  }
  bool contains(const LabeledEdge& e) const {
    auto* f = find(e.key());
    return f && f->label == e.label;
  }

  /// Adds k with label l, or unions l into the existing edge's label.
  CandidateGraph with_label(EdgeKey k, LabelSet l) const {
    CandidateGraph out = *this;
    auto it = std::lower_bound(out.edges_.begin(), out.edges_.end(), k,
                               [](const LabeledEdge& e, EdgeKey key) { return e.key() < key; });
    if (it != out.edges_.end() && it->key() == k)
      it->label = it->label | l;
    else
      out.edges_.insert(it, LabeledEdge{k.plus, k.minus, l});
    return out;
  }

  friend bool operator==(const CandidateGraph&, const CandidateGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<LabeledEdge> edges_;
};

/// Byte-comparable key: 9 bytes per edge, (plus, minus) big-endian then the
/// label bits (a = 1, b = 2).  Since vertex indices follow id order, key
/// order is lexicographic order of the sorted edge lists by id.
inline std::string canonical_form(const CandidateGraph& g) {
  std::string key;
  key.reserve(g.edges().size() * 9);
  auto put32 = [&](std::size_t x) {
    for (int s = 24; s >= 0; s -= 8) key.push_back(static_cast<char>((x >> s) & 0xFF));
  };
  for (const auto& e : g.edges()) {
    put32(e.plusEnd);
    put32(e.minusEnd);
    key.push_back(static_cast<char>(e.label.bits()));
  }
  return key;
}

/// Edge invariants relative to an instance: endpoint signs and nonempty labels.
inline bool is_well_formed(const Instance& inst, const CandidateGraph& g) {
  if (g.vertex_count() != inst.vertices().size()) return false;
  for (const auto& e : g.edges()) {
    if (e.plusEnd >= g.vertex_count() || e.minusEnd >= g.vertex_count()) return false;
    if (inst.sign(e.plusEnd) != Sign::plus || inst.sign(e.minusEnd) != Sign::minus) return false;
    if (e.label.empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Operations

/// The II edge's first element (v, v') leaves the fold's plus sheet v; the
/// second (w', w) enters its minus sheet w.
struct Op1Choice {
  LabeledEdge first;
  LabeledEdge second;
  friend bool operator==(const Op1Choice&, const Op1Choice&) = default;
};

struct Op2Choice {
  LabeledEdge edge;
  friend bool operator==(const Op2Choice&, const Op2Choice&) = default;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
inline void require_ii(const FoldEnds& e, const char* where) {
  if (e.label != FoldLabel::II)
    throw PreconditionError(std::string(where) + ": fold edge must carry label II");
}
}  // namespace detail

inline std::vector<Op1Choice> delta_op1(const CandidateGraph& g, const FoldEnds& e) {
  detail::require_ii(e, "delta_op1");
  std::vector<Op1Choice> out;
  for (const auto& first : g.edges()) {
    if (first.plusEnd != e.plus || first.minusEnd == e.minus) continue;
    for (const auto& second : g.edges()) {
      if (second.minusEnd != e.minus || second.plusEnd == e.plus) continue;
      out.push_back({first, second});
    }
  }
  return out;
}

inline std::vector<Op2Choice> delta_op2(const CandidateGraph& g, const FoldEnds& e) {
  detail::require_ii(e, "delta_op2");
  std::vector<Op2Choice> out;
  for (const auto& edge : g.edges())
    if (edge.plusEnd != e.plus && edge.minusEnd != e.minus) out.push_back({edge});
  return out;
}

/// Adds the b-labeled edge (w', v') joining the far ends of the chosen pair.
inline CandidateGraph apply_op1(const CandidateGraph& g, const FoldEnds& e, const Op1Choice& c) {
  detail::require_ii(e, "apply_op1");
  if (!g.contains(c.first) || !g.contains(c.second) || c.first.plusEnd != e.plus ||
      c.second.minusEnd != e.minus || c.first.minusEnd == e.minus || c.second.plusEnd == e.plus)
    throw PreconditionError("apply_op1: choice is not an element of the operation-1 choice set");
  return g.with_label({c.second.plusEnd, c.first.minusEnd}, LabelSet::b());
}

/// Adds (or b-extends) (v, v') and (w', w) around the chosen edge (w', v').
inline CandidateGraph apply_op2(const CandidateGraph& g, const FoldEnds& e, const Op2Choice& c) {
  detail::require_ii(e, "apply_op2");
  if (!g.contains(c.edge) || c.edge.plusEnd == e.plus || c.edge.minusEnd == e.minus)
    throw PreconditionError("apply_op2: choice is not an element of the operation-2 choice set");
  return g.with_label({e.plus, c.edge.minusEnd}, LabelSet::b())
      .with_label({c.edge.plusEnd, e.minus}, LabelSet::b());
}

/// One a-labeled edge per I fold.
inline CandidateGraph initial_graph(const Instance& inst) {
  std::vector<LabeledEdge> edges;
  for (std::size_t f = 0; f < inst.folds().size(); ++f) {
    auto e = inst.fold_ends(f);
    if (e.label == FoldLabel::I) edges.push_back({e.plus, e.minus, LabelSet::a()});
  }
  return CandidateGraph(inst.vertices().size(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationBudget {
  std::size_t maxGraphs = 100000;
  std::size_t maxBranches = 10000000;
  bool includeDegenerate = false;
  unsigned threads = 1;
};

struct GeneratedSet {
  std::vector<CandidateGraph> graphs;  ///< sorted by canonical_form
  bool complete = true;                ///< false when a budget cut the search short
  std::size_t branches = 0;            ///< operations applied
};

namespace detail {

struct StateKey {
  std::string graph;
  std::uint64_t processed;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    return std::hash<std::string>{}(k.graph) ^ (std::hash<std::uint64_t>{}(k.processed) * 0x9E3779B97F4A7C15ULL);
  }
};

/// Insert-if-absent set shared by enumeration workers.
class SharedVisited {
 public:
  bool insert(StateKey k) {
    auto& shard = shards_[StateKeyHash{}(k) % kShards];
    std::lock_guard lock(shard.mu);
    return shard.set.insert(std::move(k)).second;
  }

 private:
  static constexpr std::size_t kShards = 32;
  struct Shard {
    std::mutex mu;
    std::unordered_set<StateKey, StateKeyHash> set;
  };
  std::array<Shard, kShards> shards_;
};

class Enumerator {
 public:
  Enumerator(const Instance& inst, const EnumerationBudget& budget)
      : inst_(inst), budget_(budget), iiFolds_(inst.ii_folds()) {
    if (iiFolds_.size() > 64) throw std::invalid_argument("enumerate_generated_set: more than 64 II folds");
    full_ = iiFolds_.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << iiFolds_.size()) - 1);
  }

  struct Child {
    CandidateGraph graph;
    std::uint64_t processed;
  };

  /// All successor states of (g, processed) in schedule order: unprocessed II
  /// fold ascending, operation 1 before 2, choices in choice-set order.
  std::vector<Child> children(const CandidateGraph& g, std::uint64_t processed) {
    std::vector<Child> out;
    for (std::size_t k = 0; k < iiFolds_.size(); ++k) {
      if (processed & (std::uint64_t{1} << k)) continue;
      auto e = inst_.fold_ends(iiFolds_[k]);
      auto next = processed | (std::uint64_t{1} << k);
      auto c1 = delta_op1(g, e);
      if (c1.empty()) degenerate_ = true;
      for (const auto& c : c1) out.push_back({apply_op1(g, e, c), next});
      auto c2 = delta_op2(g, e);
      if (c2.empty()) degenerate_ = true;
      for (const auto& c : c2) out.push_back({apply_op2(g, e, c), next});
    }
    return out;
  }

  void explore(const CandidateGraph& g, std::uint64_t processed) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (!visited_.insert({canonical_form(g), processed})) return;
    if (processed == full_) {
      record(g);
      return;
    }
    for (auto& child : children(g, processed)) {
      if (branches_.fetch_add(1, std::memory_order_relaxed) >= budget_.maxBranches) {
        truncate();
        return;
      }
      explore(child.graph, child.processed);
      if (stop_.load(std::memory_order_relaxed)) return;
    }
  }

  GeneratedSet run() {
    auto g0 = initial_graph(inst_);
    if (budget_.threads <= 1 || full_ == 0) {
      explore(g0, 0);
    } else {
      // Fan out over the root's children; workers share the visited set.
      visited_.insert({canonical_form(g0), 0});
      auto roots = children(g0, 0);
      branches_ += roots.size();
      if (branches_ > budget_.maxBranches) truncate();
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < budget_.threads; ++t)
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < roots.size();)
            explore(roots[i].graph, roots[i].processed);
        });
      for (auto& th : pool) th.join();
    }
    if (budget_.includeDegenerate && degenerate_) record(CandidateGraph(inst_.vertices().size()));

    GeneratedSet out;
    out.complete = !truncated_;
    out.branches = std::min<std::size_t>(branches_.load(), budget_.maxBranches);
    for (auto& [key, g] : results_) out.graphs.push_back(std::move(g));
    return out;
  }

 private:
  void record(const CandidateGraph& g) {
    std::lock_guard lock(resultsMu_);
    auto key = canonical_form(g);
    if (results_.count(key)) return;
    if (results_.size() >= budget_.maxGraphs) {
      truncated_ = true;
      stop_ = true;
      return;
    }
    results_.emplace(std::move(key), g);
  }
  void truncate() {
    std::lock_guard lock(resultsMu_);
    truncated_ = true;
    stop_ = true;
  }

  const Instance& inst_;
  EnumerationBudget budget_;
  std::vector<std::size_t> iiFolds_;
  std::uint64_t full_ = 0;
  SharedVisited visited_;
  std::atomic<std::size_t> branches_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool> degenerate_{false};
  std::mutex resultsMu_;
  bool truncated_ = false;
  std::map<std::string, CandidateGraph> results_;
};

}  // namespace detail

/// Depth-first exploration of every schedule (order of II folds, operation
/// kind per fold, element of the choice set), deduplicating intermediate
/// states by (canonical graph, processed folds).  Branches whose choice set is
/// empty are dropped; with includeDegenerate the edgeless graph stands in for
/// all of them.  Output is sorted by canonical_form.
inline GeneratedSet enumerate_generated_set(const Instance& inst, const EnumerationBudget& budget = {}) {
  if (budget.maxGraphs == 0 || budget.maxBranches == 0)
    throw std::invalid_argument("enumerate_generated_set: budgets must be positive");
  detail::Enumerator en(inst, budget);
  return en.run();
}

}  // namespace foldext
