// foldext: command-line front end.
//
// Exit codes: 0 success / extendable, 1 notExtendable (or certificate
// rejected), 2 unknown / budget exhausted, 3 invalid input, 4 internal error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "foldext/foldext.hpp"

namespace {

namespace fs = std::filesystem;
using foldext::Instance;

enum Exit : int { kOk = 0, kNegative = 1, kUnknown = 2, kInvalid = 3, kInternal = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Instance load_instance(const std::string& path, bool lenient) {
  std::vector<std::string> warnings;
  auto inst = foldext::parse_instance(read_file(path), {lenient, &warnings});
  for (const auto& w : warnings) std::cerr << path << ": warning: " << w << "\n";
  return inst;
}

Instance load_valid_instance(const std::string& path, bool lenient) {
  auto inst = load_instance(path, lenient);
  auto rep = foldext::validate_instance(inst);
  if (!rep.ok()) {
    for (const auto& v : rep.violations) {
      std::cerr << path << ": " << v.law;
      for (const auto& id : v.ids) std::cerr << " " << id;
      std::cerr << ": " << v.message << "\n";
    }
    throw InputError("instance failed validation");
  }
  return inst;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decides non-singular extendability of horizontal fold maps from combinatorial data"};
  app.require_subcommand(1);

  std::string file, certFile, out, dotDir;
  bool lenient = false;
  bool includeDegenerate = false;
  std::size_t maxGraphs = 100000, maxBranches = 10000000, maxDeltaBranches = 1000000;
  unsigned threads = 1;
  foldext::GeneratorParams gen;

  auto* validate = app.add_subcommand("validate", "Check an instance against every structural law");
  validate->add_option("file", file, "instance document")->required();
  validate->add_flag("--lenient", lenient, "warn on unknown fields instead of failing");

  auto* genSet = app.add_subcommand("gen-set", "Enumerate the generated set of candidate graphs");
  genSet->add_option("file", file, "instance document")->required();
  genSet->add_option("--max-graphs", maxGraphs, "stop after this many distinct graphs");
  genSet->add_option("--max-branches", maxBranches, "stop after this many applied operations");
  genSet->add_flag("--include-degenerate", includeDegenerate, "record the edgeless graph for empty choice sets");
  genSet->add_option("--dot", dotDir, "also write one DOT file per graph into this directory");
  genSet->add_option("--threads", threads, "worker threads");
  genSet->add_flag("--lenient", lenient, "warn on unknown fields instead of failing");

  auto* decide = app.add_subcommand("decide", "Search for an admissible pair");
  decide->add_option("file", file, "instance document")->required();
  decide->add_option("--max-graphs", maxGraphs, "generated-set graph budget");
  decide->add_option("--max-branches", maxDeltaBranches, "delta-search branch budget per graph");
  decide->add_option("--max-enum-branches", maxBranches, "generated-set operation budget");
  decide->add_option("--cert", certFile, "write the certificate here when extendable");
  decide->add_option("--threads", threads, "worker threads");
  decide->add_flag("--lenient", lenient, "warn on unknown fields instead of failing");

  auto* checkCert = app.add_subcommand("check-cert", "Verify a certificate against an instance");
  checkCert->add_option("file", file, "instance document")->required();
  checkCert->add_option("--cert", certFile, "certificate document")->required();
  checkCert->add_option("--max-graphs", maxGraphs, "generated-set graph budget");
  checkCert->add_option("--max-branches", maxBranches, "generated-set operation budget");
  checkCert->add_flag("--lenient", lenient, "warn on unknown fields instead of failing");

  auto* plan = app.add_subcommand("plan", "Emit the attachment schedule for a certificate");
  plan->add_option("file", file, "instance document")->required();
  plan->add_option("--cert", certFile, "certificate document")->required();
  plan->add_option("--out", out, "write the plan here");
  plan->add_flag("--lenient", lenient, "warn on unknown fields instead of failing");

  auto* generate = app.add_subcommand("generate", "Emit a random valid instance");
  generate->add_option("--seed", gen.seed, "random seed")->required();
  generate->add_option("--depth", gen.maxNestingDepth, "maximum nesting depth of fold circles");
  generate->add_option("--siblings", gen.maxSiblingsPerLevel, "maximum circles per region");
  generate->add_option("--ii-probability", gen.iiFoldProbability, "probability that a fold is II");
  generate->add_flag("--double-points", gen.allowDoublePoints, "allow overlapping circle pairs");
  generate->add_option("--double-point-probability", gen.doublePointProbability, "chance of a lens per child");
  generate->add_option("--max-folds", gen.maxFolds, "cap on fold circles");
  generate->add_option("--out", out, "write the instance here");

  auto* exportDot = app.add_subcommand("export-dot", "Render the signed weighted graph as DOT");
  exportDot->add_option("file", file, "instance document")->required();
  exportDot->add_flag("--lenient", lenient, "warn on unknown fields instead of failing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    foldext::EnumerationBudget budget{maxGraphs, maxBranches, includeDegenerate, threads};

    if (*validate) {
      auto inst = load_instance(file, lenient);
      auto rep = foldext::validate_instance(inst);
      std::cout << dump(foldext::validation_to_json(rep));
      return rep.ok() ? kOk : kInvalid;
    }
    if (*genSet) {
      auto inst = load_valid_instance(file, lenient);
      auto gs = foldext::enumerate_generated_set(inst, budget);
      if (!dotDir.empty()) {
        fs::create_directories(dotDir);
        for (std::size_t i = 0; i < gs.graphs.size(); ++i) {
          std::ostringstream name;
          name << "graph_" << std::setw(4) << std::setfill('0') << i << ".dot";
          write_output(foldext::export_dot(inst, gs.graphs[i]), (fs::path(dotDir) / name.str()).string());
        }
      }
      std::cout << dump(foldext::generated_set_to_json(inst, gs));
      return gs.complete ? kOk : kUnknown;
    }
    if (*decide) {
      auto inst = load_valid_instance(file, lenient);
      foldext::DecideBudget db{budget, maxDeltaBranches, threads};
      auto verdict = foldext::decide_extension(inst, db);
      if (!certFile.empty() && verdict.certificate)
        write_output(foldext::serialize_certificate(inst, *verdict.certificate), certFile);
      std::cout << dump(foldext::verdict_to_json(inst, verdict));
      switch (verdict.outcome) {
        case foldext::Outcome::extendable: return kOk;
        case foldext::Outcome::notExtendable: return kNegative;
        case foldext::Outcome::unknown: return kUnknown;
      }
    }
    if (*checkCert) {
      auto inst = load_valid_instance(file, lenient);
      auto pair = foldext::parse_certificate(inst, read_file(certFile), {lenient, nullptr});
      auto rep = foldext::verify_certificate(inst, pair, budget);
      std::cout << dump(foldext::certificate_report_to_json(rep));
      if (rep.ok()) return kOk;
      if (!rep.graphInGeneratedSet && !rep.generatedSetComplete && rep.conditions.ok()) return kUnknown;
      return kNegative;
    }
    if (*plan) {
      auto inst = load_valid_instance(file, lenient);
      auto pair = foldext::parse_certificate(inst, read_file(certFile), {lenient, nullptr});
      auto report = foldext::check_conditions(inst, pair.graph, pair.delta);
      if (!report.ok()) {
        std::cerr << dump(foldext::conditions_to_json(report));
        throw InputError("certificate does not satisfy the admissibility conditions");
      }
      write_output(foldext::serialize_plan(inst, foldext::emit_build_plan(inst, pair)), out);
      return kOk;
    }
    if (*generate) {
      write_output(foldext::serialize_instance(foldext::generate_instance(gen)), out);
      return kOk;
    }
    if (*exportDot) {
      auto inst = load_valid_instance(file, lenient);
      std::cout << foldext::export_dot(inst);
      return kOk;
    }
  } catch (const foldext::ParseError& e) {
    std::cerr << file << ": parse error at " << e.what() << "\n";
    return kInvalid;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
