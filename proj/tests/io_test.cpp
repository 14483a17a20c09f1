#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace foldext;
using testsupport::fixture_path;
using testsupport::load;
using testsupport::load_cert;
using testsupport::read_text;

const char* kFixtures[] = {"sphere.json", "dimpled_sphere.json", "two_dimples.json", "sphere_lens.json"};

std::string error_of(const std::string& text, ParseOptions opts = {}) {
  try {
    parse_instance(text, opts);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(Parse, SphereFixture) {
  auto inst = load("sphere.json");
  EXPECT_EQ(inst.vertices().size(), 2u);
  EXPECT_EQ(inst.folds()[0].label, FoldLabel::I);
  EXPECT_EQ(inst.regions()[inst.unbounded_region()].id, "R1");
}

TEST(Parse, DuplicateIdNamed) {
  auto doc = nlohmann::json::parse(read_text(fixture_path("sphere.json")));
  doc["vertices"].push_back({{"id", "v"}, {"sign", "-"}});
  auto err = error_of(doc.dump());
  EXPECT_NE(err.find("\"v\""), std::string::npos) << err;
}

TEST(Parse, EmptyDocument) {
  EXPECT_FALSE(error_of("").empty());
  EXPECT_FALSE(error_of("{}").empty());
}

TEST(Parse, SyntaxErrorCarriesLine) {
  auto err = error_of("{\n  \"format\": \"foldext-instance\",\n  oops\n}");
  EXPECT_NE(err.find("line 3"), std::string::npos) << err;
}

TEST(Parse, VersionMismatch) {
  auto doc = nlohmann::json::parse(read_text(fixture_path("sphere.json")));
  doc["version"] = 99;
  EXPECT_NE(error_of(doc.dump()).find("version"), std::string::npos);
}

TEST(Parse, UnknownFieldStrictVsLenient) {
  auto doc = nlohmann::json::parse(read_text(fixture_path("sphere.json")));
  doc["folds"][0]["colour"] = "red";
  auto err = error_of(doc.dump());
  EXPECT_NE(err.find("/folds/0"), std::string::npos) << err;
  std::vector<std::string> warnings;
  auto inst = parse_instance(doc.dump(), {true, &warnings});
  EXPECT_EQ(inst, load("sphere.json"));
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("colour"), std::string::npos);
}

TEST(Parse, BadEnumValues) {
  auto doc = nlohmann::json::parse(read_text(fixture_path("sphere.json")));
  doc["vertices"][0]["sign"] = "0";
  EXPECT_NE(error_of(doc.dump()).find("/vertices/0/sign"), std::string::npos);
}

TEST(RoundTrip, Instances) {
  for (const auto* name : kFixtures) {
    auto inst = load(name);
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst) << name;
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = generate_instance(testsupport::seeded(seed, true));
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst) << seed;
  }
}

TEST(RoundTrip, Certificates) {
  for (const auto& [i, c] : {std::pair{"dimpled_sphere.json", "dimpled_sphere.cert.json"},
                             std::pair{"two_dimples.json", "two_dimples.cert.json"},
                             std::pair{"sphere_lens.json", "sphere_lens.cert.json"}}) {
    auto inst = load(i);
    auto pair = load_cert(inst, c);
    auto back = parse_certificate(inst, serialize_certificate(inst, pair));
    EXPECT_EQ(back.graph, pair.graph);
    EXPECT_EQ(back.delta, pair.delta);
  }
}

TEST(RoundTrip, Plans) {
  for (const auto& [i, c] : {std::pair{"two_dimples.json", "two_dimples.cert.json"},
                             std::pair{"sphere_lens.json", "sphere_lens.cert.json"}}) {
    auto inst = load(i);
    auto plan = emit_build_plan(inst, load_cert(inst, c));
    EXPECT_EQ(plan_from_json(inst, nlohmann::json::parse(serialize_plan(inst, plan))), plan);
  }
}

TEST(Certificate, MissingRegionRejected) {
  auto inst = load("sphere.json");
  auto text = R"({"format":"foldext-certificate","version":1,"graph":[{"plus":"v","minus":"w","label":"a"}],
                 "delta":{"R2":[["v","w"]]}})";
  EXPECT_THROW(parse_certificate(inst, text), ParseError);
}

TEST(Certificate, UnknownVertexRejected) {
  auto inst = load("sphere.json");
  auto text = R"({"format":"foldext-certificate","version":1,"graph":[{"plus":"v","minus":"q","label":"a"}],
                 "delta":{"R1":[],"R2":[]}})";
  EXPECT_THROW(parse_certificate(inst, text), ParseError);
}

TEST(Dot, WeightedGraphOfSphere) {
  auto dot = export_dot(load("sphere.json"));
  EXPECT_EQ(dot, export_dot(load("sphere.json")));
  EXPECT_NE(dot.find("\"v\""), std::string::npos);
  EXPECT_NE(dot.find("\"w\""), std::string::npos);
  EXPECT_NE(dot.find("I"), std::string::npos);
}

TEST(Dot, EmptyCandidateGraphHasNodesOnly) {
  auto inst = load("sphere.json");
  auto dot = export_dot(inst, CandidateGraph(2));
  EXPECT_EQ(dot.find("--"), std::string::npos);
  EXPECT_NE(dot.find("\"v\""), std::string::npos);
}

TEST(Dot, TenDistinctRenderingsForSecondExample) {
  auto inst = load("two_dimples.json");
  std::set<std::string> dots;
  for (const auto& g : enumerate_generated_set(inst).graphs) dots.insert(export_dot(inst, g));
  EXPECT_EQ(dots.size(), 10u);
}

TEST(Generator, SameSeedSameInstance) {
  GeneratorParams p;
  p.seed = 42;
  p.allowDoublePoints = true;
  EXPECT_EQ(serialize_instance(generate_instance(p)), serialize_instance(generate_instance(p)));
}

TEST(Generator, SmallestOutputIsTheSphere) {
  // one circle, type I: same shape as the sphere fixture
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GeneratorParams p;
    p.seed = seed;
    p.maxFolds = 1;
    p.iiFoldProbability = 0.0;
    auto inst = generate_instance(p);
    ASSERT_EQ(inst.folds().size(), 1u);
    EXPECT_EQ(inst.regions().size(), 2u);
    EXPECT_EQ(inst.folds()[0].label, FoldLabel::I);
  }
}

TEST(Generator, FiveHundredSeedsValidate) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GeneratorParams p;
    p.seed = seed;
    p.allowDoublePoints = seed % 2 == 0;
    p.maxFolds = 6;
    auto rep = validate_instance(generate_instance(p));
    EXPECT_TRUE(rep.ok()) << "seed " << seed << ": " << (rep.ok() ? "" : rep.violations[0].message);
  }
}

TEST(Generator, RejectsBadParams) {
  GeneratorParams p;
  p.iiFoldProbability = 1.5;
  EXPECT_THROW(generate_instance(p), std::invalid_argument);
  p = {};
  p.maxNestingDepth = 0;
  EXPECT_THROW(generate_instance(p), std::invalid_argument);
}

}  // namespace
