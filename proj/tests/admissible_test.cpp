#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

namespace {

using namespace foldext;
using testsupport::load;
using testsupport::load_cert;

CandidateGraph sphere_graph(LabelSet l) { return CandidateGraph(2, {{0, 1, l}}); }

DeltaAssignment sphere_delta(bool filled) {
  DeltaAssignment d(2);
  if (filled) d[1] = {{0, 1}};
  return d;
}

TEST(Conditions, SphereCertificatePasses) {
  auto inst = load("sphere.json");
  auto rep = check_conditions(inst, sphere_graph(LabelSet::a()), sphere_delta(true));
  EXPECT_TRUE(rep.ok());
  ASSERT_NE(rep.find("3", "a1"), nullptr);
  EXPECT_TRUE(rep.find("3", "a1")->pass);
}

TEST(Conditions, UnmatchedSheetFailsCondition2) {
  auto inst = load("sphere.json");
  auto rep = check_conditions(inst, sphere_graph(LabelSet::a()), sphere_delta(false));
  EXPECT_FALSE(rep.condition_ok("2"));
  ASSERT_NE(rep.find("2", "R2"), nullptr);
  EXPECT_FALSE(rep.find("2", "R2")->pass);
}

TEST(Conditions, BLabelFailsCondition3) {
  auto inst = load("sphere.json");
  auto rep = check_conditions(inst, sphere_graph(LabelSet::b()), sphere_delta(true));
  EXPECT_TRUE(rep.condition_ok("1"));
  EXPECT_TRUE(rep.condition_ok("2"));
  EXPECT_FALSE(rep.condition_ok("3"));
}

TEST(Conditions, EdgeOutsideGraphIsStructural) {
  auto inst = load("sphere.json");
  auto rep = check_conditions(inst, CandidateGraph(2), sphere_delta(true));
  EXPECT_FALSE(rep.structuralErrors.empty());
}

TEST(Conditions, EdgeOffTheRegionFailsCondition1) {
  auto inst = load("dimpled_sphere.json");
  auto pair = load_cert(inst, "dimpled_sphere.cert.json");
  auto s2 = inst.vertex_index("s2"), s1 = inst.vertex_index("s1");
  auto& d3 = pair.delta[inst.region_index("r3")];
  d3.push_back({s2, s1});
  std::sort(d3.begin(), d3.end());
  auto rep = check_conditions(inst, pair.graph, pair.delta);
  ASSERT_NE(rep.find("1", "r3"), nullptr);
  EXPECT_FALSE(rep.find("1", "r3")->pass);
}

TEST(Conditions, MergeNeedsBLabel) {
  auto inst = load("dimpled_sphere.json");
  auto pair = load_cert(inst, "dimpled_sphere.cert.json");
  auto g = CandidateGraph(inst.vertices().size(), {});
  for (auto e : pair.graph.edges()) {
    if (e.label.has_b()) e.label = LabelSet::a();
    g = g.with_label(e.key(), e.label);
  }
  auto rep = check_conditions(inst, g, pair.delta);
  ASSERT_NE(rep.find("3", "a3"), nullptr);
  EXPECT_FALSE(rep.find("3", "a3")->pass);
}

TEST(Transition, ClassifiesBirthAndMerge) {
  auto inst = load("dimpled_sphere.json");
  auto pair = load_cert(inst, "dimpled_sphere.cert.json");
  auto d = gamma_diff(inst, "a2");
  auto t = classify_transition(pair.graph, pair.delta[d.larger], pair.delta[d.smaller], d.plus, d.minus);
  EXPECT_EQ(t.kind, TransitionKind::a1);
  d = gamma_diff(inst, "a3");
  t = classify_transition(pair.graph, pair.delta[d.larger], pair.delta[d.smaller], d.plus, d.minus);
  EXPECT_EQ(t.kind, TransitionKind::a2);
  EXPECT_EQ(t.merged, (EdgeKey{inst.vertex_index("s4"), inst.vertex_index("s1")}));
}

TEST(SearchDelta, SphereIsForced) {
  auto inst = load("sphere.json");
  auto r = search_delta(inst, sphere_graph(LabelSet::a()));
  ASSERT_TRUE(r.delta);
  EXPECT_EQ(*r.delta, sphere_delta(true));
}

TEST(SearchDelta, SphereWithBLabelHasNone) {
  auto r = search_delta(load("sphere.json"), sphere_graph(LabelSet::b()));
  EXPECT_FALSE(r.delta);
  EXPECT_FALSE(r.budgetExhausted);
}

TEST(SearchDelta, DimpledSphereFindsTheChain) {
  auto inst = load("dimpled_sphere.json");
  auto expected = load_cert(inst, "dimpled_sphere.cert.json");
  auto r = search_delta(inst, expected.graph);
  ASSERT_TRUE(r.delta);
  EXPECT_EQ(*r.delta, expected.delta);
}

TEST(SearchDelta, TinyBudgetReportsExhaustion) {
  auto inst = load("two_dimples.json");
  auto gs = enumerate_generated_set(inst);
  bool sawExhausted = false;
  for (const auto& g : gs.graphs) sawExhausted |= search_delta(inst, g, 1).budgetExhausted;
  EXPECT_TRUE(sawExhausted);
}

TEST(Decide, SphereExtendable) {
  auto v = decide_extension(load("sphere.json"));
  ASSERT_EQ(v.outcome, Outcome::extendable);
  EXPECT_EQ(v.certificate->delta, sphere_delta(true));
}

TEST(Decide, UnknownUnderTruncatedEnumeration) {
  auto inst = load("sphere_lens.json");
  DecideBudget b;
  b.enumeration.maxGraphs = 1;
  EXPECT_EQ(decide_extension(inst, b).outcome, Outcome::unknown);
}

TEST(Decide, InvalidInstanceThrows) {
  auto inst = load("sphere.json");
  auto V = inst.vertices();
  V[0].sign = Sign::minus;
  Instance bad(V, inst.folds(), inst.regions(), inst.arcs(), {});
  EXPECT_THROW(decide_extension(bad), InvalidInstance);
}

TEST(Decide, HandWrittenPairOfSecondExampleVerifiesEvenIfNotReturned) {
  auto inst = load("two_dimples.json");
  auto v = decide_extension(inst);
  ASSERT_EQ(v.outcome, Outcome::extendable);
  auto rep = verify_certificate(inst, load_cert(inst, "two_dimples.cert.json"));
  EXPECT_TRUE(rep.ok());
}

TEST(Decide, AgreesWithBruteForceOnFixtures) {
  for (const auto* name : {"sphere.json", "dimpled_sphere.json", "two_dimples.json", "sphere_lens.json"}) {
    auto inst = load(name);
    bool brute = oracle::admissible_exists(inst, oracle::generated_set(inst));
    EXPECT_EQ(decide_extension(inst).outcome == Outcome::extendable, brute) << name;
  }
}

TEST(Decide, ShellAroundInnerSphereMatchesOracle) {
  // outer shell with a concentric inner sphere bounding a cavity
  Instance inst({{"v", Sign::plus}, {"w", Sign::minus}, {"x", Sign::plus}, {"y", Sign::minus}},
                {{"e1", FoldLabel::I, "v", "w"}, {"e2", FoldLabel::II, "x", "y"}},
                {{"R0", true, {}}, {"R1", false, {"v", "w"}}, {"R2", false, {"v", "w", "x", "y"}}},
                {{"a1", "R1", "R0", "e1", ArcKind::fullCircle}, {"a2", "R2", "R1", "e2", ArcKind::fullCircle}}, {});
  auto v = decide_extension(inst);
  EXPECT_EQ(v.outcome == Outcome::extendable, oracle::admissible_exists(inst, oracle::generated_set(inst)));
}

// Renames every id so that sort order, and with it every index, is reversed.
struct Renaming {
  std::map<std::string, std::string> vertex, fold, region, arc;
};

Instance relabel(const Instance& inst, Renaming& m) {
  auto rev = [](auto& items, std::map<std::string, std::string>& out, const char* prefix) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto id = prefix + std::to_string(900 - i);
      out[items[i].id] = id;
      items[i].id = id;
    }
  };
  auto V = inst.vertices();
  auto F = inst.folds();
  auto R = inst.regions();
  auto A = inst.arcs();
  auto D = inst.doublePoints();
  rev(V, m.vertex, "s");
  rev(F, m.fold, "f");
  rev(R, m.region, "r");
  rev(A, m.arc, "a");
  for (auto& x : F) x.plusEnd = m.vertex.at(x.plusEnd), x.minusEnd = m.vertex.at(x.minusEnd);
  for (auto& x : R)
    for (auto& g : x.gamma) g = m.vertex.at(g);
  for (auto& x : A) x.inner = m.region.at(x.inner), x.outer = m.region.at(x.outer), x.fold = m.fold.at(x.fold);
  for (auto& x : D) {
    for (auto& f : x.folds) f = m.fold.at(f);
    for (auto& r : x.regionsClockwise) r = m.region.at(r);
    for (auto& a : x.arcs) a = m.arc.at(a);
  }
  return Instance(V, F, R, A, D);
}

TEST(Decide, RelabelingInvariance) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto inst = generate_instance(testsupport::seeded(seed, seed % 3 == 0));
    Renaming m;
    auto renamed = relabel(inst, m);
    ASSERT_TRUE(validate_instance(renamed).ok());
    auto v1 = decide_extension(inst);
    auto v2 = decide_extension(renamed);
    EXPECT_EQ(v1.outcome, v2.outcome) << "seed " << seed;
    if (!v1.certificate) continue;
    // carry the first certificate over and re-check it on the renamed instance
    const auto& c = *v1.certificate;
    CandidateGraph g(renamed.vertices().size());
    auto vi = [&](std::size_t i) { return renamed.vertex_index(m.vertex.at(inst.vertices()[i].id)); };
    for (const auto& e : c.graph.edges()) g = g.with_label({vi(e.plusEnd), vi(e.minusEnd)}, e.label);
    DeltaAssignment d(renamed.regions().size());
    for (std::size_t r = 0; r < c.delta.size(); ++r) {
      auto& out = d[renamed.region_index(m.region.at(inst.regions()[r].id))];
      for (auto k : c.delta[r]) out.push_back({vi(k.plus), vi(k.minus)});
      std::sort(out.begin(), out.end());
    }
    EXPECT_TRUE(check_conditions(renamed, g, d).ok()) << "seed " << seed;
  }
}

TEST(Decide, SoundnessOnGeneratedInstances) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto inst = generate_instance(testsupport::seeded(seed, true));
    for (const auto& g : enumerate_generated_set(inst).graphs) {
      auto r = search_delta(inst, g);
      if (r.delta) {
        EXPECT_TRUE(check_conditions(inst, g, *r.delta).ok()) << "seed " << seed;
      }
    }
  }
}

}  // namespace
