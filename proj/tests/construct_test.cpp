#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace foldext;
using testsupport::load;
using testsupport::load_cert;

BuildPlan plan_for(const std::string& inst, const std::string& cert) {
  auto i = load(inst);
  return emit_build_plan(i, load_cert(i, cert));
}

TEST(Plan, SphereIsOneBirth) {
  auto inst = load("sphere.json");
  auto v = decide_extension(inst);
  auto plan = emit_build_plan(inst, *v.certificate);
  ASSERT_EQ(plan.steps.size(), 1u);
  EXPECT_EQ(plan.steps[0].part, PartKind::P_I);
  EXPECT_EQ(plan.steps[0].region, "R2");
  EXPECT_EQ(plan.fiberCounts, (std::map<std::string, std::size_t>{{"R1", 0}, {"R2", 1}}));
  EXPECT_EQ(plan_summary(plan), (PlanSummary{1, 0, 0, 1}));
}

TEST(Plan, DimpledSphereBirthsThenMerge) {
  auto plan = plan_for("dimpled_sphere.json", "dimpled_sphere.cert.json");
  ASSERT_EQ(plan.steps.size(), 3u);
  EXPECT_EQ(plan.steps[0].part, PartKind::P_I);
  EXPECT_EQ(plan.steps[1].part, PartKind::P_I);
  EXPECT_EQ(plan.steps[2].part, PartKind::P_II);
  EXPECT_EQ(plan.steps[2].gluing.size(), 3u);
}

TEST(Plan, TwoDimplesCountsSumToCrossings) {
  auto inst = load("two_dimples.json");
  auto plan = plan_for("two_dimples.json", "two_dimples.cert.json");
  auto s = plan_summary(plan);
  EXPECT_EQ(s.pI + s.pII + 2 * s.pD, inst.arcs().size());
  EXPECT_EQ(s.pI, 3u);
  EXPECT_EQ(s.pII, 2u);
  EXPECT_EQ(s.maxFiberCount, 2u);
}

TEST(Plan, LensFusesIntoOneDoublePointPart) {
  auto inst = load("sphere_lens.json");
  auto pair = load_cert(inst, "sphere_lens.cert.json");
  auto plan = emit_build_plan(inst, pair);
  auto s = plan_summary(plan);
  EXPECT_EQ(s.pD, 1u);
  EXPECT_EQ(s.pI + s.pII + 2 * s.pD, inst.arcs().size());
  const AttachStep* fused = nullptr;
  for (const auto& st : plan.steps)
    if (st.part == PartKind::P_d) fused = &st;
  ASSERT_NE(fused, nullptr);
  EXPECT_EQ(fused->region, "RAB");
  EXPECT_EQ(fused->doublePoint, "d2");
  for (const auto& st : plan.steps) {
    if (st.region == fused->region) {
      EXPECT_NE(st.part, PartKind::P_II);
    }
  }
  EXPECT_EQ(fused->gluing.size(), 6u);
}

TEST(Plan, FusedEquationsHoldLiterally) {
  auto inst = load("sphere_lens.json");
  auto pair = load_cert(inst, "sphere_lens.cert.json");
  auto idx = [&](const char* r) { return inst.region_index(r); };
  auto b = match_double_point(pair.delta, {idx("R2"), idx("RA"), idx("RAB"), idx("RB")});
  ASSERT_TRUE(b);
  EXPECT_EQ(inst.vertices()[b->v].id, "v");
  EXPECT_EQ(inst.vertices()[b->w].id, "w");
  EXPECT_EQ(inst.vertices()[b->v1].id, "x2");
  EXPECT_EQ(inst.vertices()[b->w1].id, "x1");
  EXPECT_EQ(inst.vertices()[b->w2].id, "y2");
  EXPECT_EQ(inst.vertices()[b->w3].id, "y1");
  // the mirrored reading does not satisfy the equations for this certificate
  EXPECT_FALSE(match_double_point(pair.delta, {idx("R2"), idx("RB"), idx("RAB"), idx("RA")}));
}

TEST(Plan, OrientationNotesFlagDisagreement) {
  auto plan = plan_for("sphere_lens.json", "sphere_lens.cert.json");
  ASSERT_EQ(plan.orientationNotes.size(), 2u);
  for (const auto& n : plan.orientationNotes) EXPECT_FALSE(n.agree());
}

TEST(Plan, NoFusionWithoutEquations) {
  // same regions but delta on RAB built by a different merge order
  auto inst = load("sphere_lens.json");
  auto pair = load_cert(inst, "sphere_lens.cert.json");
  auto dp = pair.delta;
  dp[inst.region_index("RA")].clear();
  EXPECT_FALSE(match_double_point(dp, {inst.region_index("R2"), inst.region_index("RA"),
                                       inst.region_index("RAB"), inst.region_index("RB")}));
}

TEST(Plan, RejectsNonVerifyingPair) {
  auto inst = load("sphere.json");
  AdmissiblePair bad{CandidateGraph(2, {{0, 1, LabelSet::b()}}), DeltaAssignment{{}, {{0, 1}}}};
  EXPECT_THROW(emit_build_plan(inst, bad), std::invalid_argument);
}

TEST(Plan, FiberCountsStepByOneAcrossEveryArc) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = generate_instance(testsupport::seeded(seed, true));
    auto v = decide_extension(inst);
    if (!v.certificate) continue;
    auto plan = emit_build_plan(inst, *v.certificate);
    EXPECT_EQ(plan.fiberCounts.at(inst.regions()[inst.unbounded_region()].id), 0u);
    for (std::size_t a = 0; a < inst.arcs().size(); ++a) {
      auto d = gamma_diff(inst, a);
      EXPECT_EQ(plan.fiberCounts.at(inst.regions()[d.larger].id),
                plan.fiberCounts.at(inst.regions()[d.smaller].id) + 1)
          << "seed " << seed;
    }
    auto s = plan_summary(plan);
    EXPECT_EQ(s.pI + s.pII + 2 * s.pD, inst.arcs().size()) << "seed " << seed;
  }
}

TEST(Plan, Deterministic) {
  auto a = plan_for("two_dimples.json", "two_dimples.cert.json");
  auto b = plan_for("two_dimples.json", "two_dimples.cert.json");
  EXPECT_EQ(a, b);
}

}  // namespace
