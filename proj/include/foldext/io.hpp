#pragma once

// Versioned JSON documents for instances, certificates, plans, verdicts and
// generated sets, plus Graphviz DOT export.  Parsing is strict by default:
// unknown fields are errors unless `lenient` is set, in which case they are
// collected as warnings.

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "foldext/admissible.hpp"
#include "foldext/construct.hpp"
#include "foldext/genset.hpp"
#include "foldext/model.hpp"

namespace foldext {

inline constexpr int kFormatVersion = 1;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string locus, const std::string& message)
      : std::runtime_error(locus + ": " + message), locus_(std::move(locus)) {}
  const std::string& locus() const noexcept { return locus_; }

 private:
  std::string locus_;
};

struct ParseOptions {
  bool lenient = false;
  std::vector<std::string>* warnings = nullptr;
};

namespace detail {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(ParseOptions opts) : opts_(opts) {}

  json parse_text(std::string_view text) const {
    try {
      return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col),
                       "malformed document");
    }
  }

  const json& object(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) const {
    if (!j.is_object()) throw ParseError(at(path), "expected an object");
    for (const auto& [k, _] : j.items()) {
      bool known = false;
      for (auto a : allowed) known = known || a == k;
      if (known) continue;
      if (!opts_.lenient) throw ParseError(at(path + "/" + k), "unknown field");
      if (opts_.warnings) opts_.warnings->push_back(at(path + "/" + k) + ": unknown field ignored");
    }
    return j;
  }

  const json& field(const json& j, const std::string& path, const char* name) const {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(at(path + "/" + name), "missing required field");
    return *it;
  }

  std::string string(const json& j, const std::string& path, const char* name) const {
    const auto& v = field(j, path, name);
    if (!v.is_string()) throw ParseError(at(path + "/" + name), "expected a string");
    return v.get<std::string>();
  }

  bool boolean(const json& j, const std::string& path, const char* name, bool dflt) const {
    auto it = j.find(name);
    if (it == j.end()) return dflt;
    if (!it->is_boolean()) throw ParseError(at(path + "/" + name), "expected a boolean");
    return it->get<bool>();
  }

  const json& array(const json& j, const std::string& path, const char* name, bool required = true) const {
    static const json empty = json::array();
    auto it = j.find(name);
    if (it == j.end()) {
      if (required) throw ParseError(at(path + "/" + name), "missing required field");
      return empty;
    }
    if (!it->is_array()) throw ParseError(at(path + "/" + name), "expected an array");
    return *it;
  }

  std::vector<std::string> strings(const json& arr, const std::string& path) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_string()) throw ParseError(at(path + "/" + std::to_string(i)), "expected a string");
      out.push_back(arr[i].get<std::string>());
    }
    return out;
  }

  void header(const json& j, std::string_view format) const {
    if (!j.is_object()) throw ParseError(at(""), "expected an object");
    auto f = j.find("format");
    if (f == j.end() || !f->is_string() || f->get<std::string>() != format)
      throw ParseError(at("/format"), "expected format \"" + std::string(format) + "\"");
    auto v = j.find("version");
    if (v == j.end() || !v->is_number_integer())
      throw ParseError(at("/version"), "missing or non-integer version");
    if (v->get<int>() != kFormatVersion)
      throw ParseError(at("/version"), "unsupported version " + std::to_string(v->get<int>()));
  }

  static std::string at(const std::string& path) { return path.empty() ? "/" : path; }

 private:
  ParseOptions opts_;
};

inline Sign parse_sign(const std::string& s, const std::string& path) {
  if (s == "+") return Sign::plus;
  if (s == "-") return Sign::minus;
  throw ParseError(path, "sign must be \"+\" or \"-\"");
}

inline FoldLabel parse_fold_label(const std::string& s, const std::string& path) {
  if (s == "I") return FoldLabel::I;
  if (s == "II") return FoldLabel::II;
  throw ParseError(path, "fold label must be \"I\" or \"II\"");
}

inline ArcKind parse_arc_kind(const std::string& s, const std::string& path) {
  if (s == "fullCircle") return ArcKind::fullCircle;
  if (s == "interval") return ArcKind::interval;
  throw ParseError(path, "arc kind must be \"fullCircle\" or \"interval\"");
}

inline LabelSet parse_label_set(const std::string& s, const std::string& path) {
  if (s == "a") return LabelSet::a();
  if (s == "b") return LabelSet::b();
  if (s == "ab") return LabelSet::ab();
  throw ParseError(path, "edge label must be \"a\", \"b\" or \"ab\"");
}

inline std::string sign_str(Sign s) { return s == Sign::plus ? "+" : "-"; }
inline std::string label_str(FoldLabel l) { return l == FoldLabel::I ? "I" : "II"; }
inline std::string kind_str(ArcKind k) { return k == ArcKind::fullCircle ? "fullCircle" : "interval"; }

template <class T>
void reject_duplicates(const std::vector<T>& items, const char* list) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!seen.insert(items[i].id).second)
      throw ParseError("/" + std::string(list) + "/" + std::to_string(i) + "/id",
                       "duplicate id \"" + items[i].id + "\"");
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Instance documents

inline Instance instance_from_json(const nlohmann::json& doc, ParseOptions opts = {}) {
  detail::Reader rd(opts);
  rd.header(doc, "foldext-instance");
  rd.object(doc, "", {"format", "version", "note", "transcribed", "vertices", "folds", "regions", "arcs",
                      "doublePoints"});

  std::vector<Vertex> vertices;
  const auto& jv = rd.array(doc, "", "vertices");
  for (std::size_t i = 0; i < jv.size(); ++i) {
    auto p = "/vertices/" + std::to_string(i);
    rd.object(jv[i], p, {"id", "sign"});
    vertices.push_back({rd.string(jv[i], p, "id"), detail::parse_sign(rd.string(jv[i], p, "sign"), p + "/sign")});
  }
  std::vector<FoldEdge> folds;
  const auto& jf = rd.array(doc, "", "folds");
  for (std::size_t i = 0; i < jf.size(); ++i) {
    auto p = "/folds/" + std::to_string(i);
    rd.object(jf[i], p, {"id", "label", "plusEnd", "minusEnd"});
    folds.push_back({rd.string(jf[i], p, "id"),
                     detail::parse_fold_label(rd.string(jf[i], p, "label"), p + "/label"),
                     rd.string(jf[i], p, "plusEnd"), rd.string(jf[i], p, "minusEnd")});
  }
  std::vector<Region> regions;
  const auto& jr = rd.array(doc, "", "regions");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    auto p = "/regions/" + std::to_string(i);
    rd.object(jr[i], p, {"id", "unbounded", "gamma"});
    regions.push_back({rd.string(jr[i], p, "id"), rd.boolean(jr[i], p, "unbounded", false),
                       rd.strings(rd.array(jr[i], p, "gamma"), p + "/gamma")});
  }
  std::vector<AdjacencyArc> arcs;
  const auto& ja = rd.array(doc, "", "arcs");
  for (std::size_t i = 0; i < ja.size(); ++i) {
    auto p = "/arcs/" + std::to_string(i);
    rd.object(ja[i], p, {"id", "inner", "outer", "fold", "kind"});
    arcs.push_back({rd.string(ja[i], p, "id"), rd.string(ja[i], p, "inner"), rd.string(ja[i], p, "outer"),
                    rd.string(ja[i], p, "fold"), detail::parse_arc_kind(rd.string(ja[i], p, "kind"), p + "/kind")});
  }
  std::vector<DoublePoint> dps;
  const auto& jd = rd.array(doc, "", "doublePoints", false);
  for (std::size_t i = 0; i < jd.size(); ++i) {
    auto p = "/doublePoints/" + std::to_string(i);
    rd.object(jd[i], p, {"id", "folds", "regionsClockwise", "arcs"});
    DoublePoint dp;
    dp.id = rd.string(jd[i], p, "id");
    auto f = rd.strings(rd.array(jd[i], p, "folds"), p + "/folds");
    auto r = rd.strings(rd.array(jd[i], p, "regionsClockwise"), p + "/regionsClockwise");
    auto a = rd.strings(rd.array(jd[i], p, "arcs"), p + "/arcs");
    if (f.size() != 2) throw ParseError(p + "/folds", "expected exactly 2 fold ids");
    if (r.size() != 4) throw ParseError(p + "/regionsClockwise", "expected exactly 4 region ids");
    if (a.size() != 4) throw ParseError(p + "/arcs", "expected exactly 4 arc ids");
    std::copy(f.begin(), f.end(), dp.folds.begin());
    std::copy(r.begin(), r.end(), dp.regionsClockwise.begin());
    std::copy(a.begin(), a.end(), dp.arcs.begin());
    dps.push_back(std::move(dp));
  }
  detail::reject_duplicates(vertices, "vertices");
  detail::reject_duplicates(folds, "folds");
  detail::reject_duplicates(regions, "regions");
  detail::reject_duplicates(arcs, "arcs");
  detail::reject_duplicates(dps, "doublePoints");
  return Instance(std::move(vertices), std::move(folds), std::move(regions), std::move(arcs), std::move(dps));
}

inline Instance parse_instance(std::string_view text, ParseOptions opts = {}) {
  detail::Reader rd(opts);
  return instance_from_json(rd.parse_text(text), opts);
}

inline nlohmann::json instance_to_json(const Instance& inst) {
  using nlohmann::json;
  json doc = {{"format", "foldext-instance"}, {"version", kFormatVersion}};
  json v = json::array(), f = json::array(), r = json::array(), a = json::array(), d = json::array();
  for (const auto& x : inst.vertices()) v.push_back({{"id", x.id}, {"sign", detail::sign_str(x.sign)}});
  for (const auto& x : inst.folds())
    f.push_back({{"id", x.id}, {"label", detail::label_str(x.label)}, {"plusEnd", x.plusEnd}, {"minusEnd", x.minusEnd}});
  for (const auto& x : inst.regions()) r.push_back({{"id", x.id}, {"unbounded", x.unbounded}, {"gamma", x.gamma}});
  for (const auto& x : inst.arcs())
    a.push_back({{"id", x.id}, {"inner", x.inner}, {"outer", x.outer}, {"fold", x.fold}, {"kind", detail::kind_str(x.kind)}});
  for (const auto& x : inst.doublePoints())
    d.push_back({{"id", x.id}, {"folds", x.folds}, {"regionsClockwise", x.regionsClockwise}, {"arcs", x.arcs}});
  doc["vertices"] = v;
  doc["folds"] = f;
  doc["regions"] = r;
  doc["arcs"] = a;
  doc["doublePoints"] = d;
  return doc;
}

inline std::string serialize_instance(const Instance& inst) { return detail::dump(instance_to_json(inst)); }

// ---------------------------------------------------------------------------
// Candidate graphs and certificates

inline nlohmann::json edge_to_json(const Instance& inst, EdgeKey k) {
  return nlohmann::json::array({inst.vertices()[k.plus].id, inst.vertices()[k.minus].id});
}

inline nlohmann::json graph_to_json(const Instance& inst, const CandidateGraph& g) {
  auto out = nlohmann::json::array();
  for (const auto& e : g.edges())
    out.push_back({{"plus", inst.vertices()[e.plusEnd].id},
                   {"minus", inst.vertices()[e.minusEnd].id},
                   {"label", e.label.str()}});
  return out;
}

namespace detail {

inline EdgeKey edge_from_json(const Instance& inst, const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw ParseError(path, "expected [plusId, minusId]");
  auto p = inst.vertex_index(j[0].get<std::string>());
  auto m = inst.vertex_index(j[1].get<std::string>());
  if (p == npos) throw ParseError(path + "/0", "unknown vertex \"" + j[0].get<std::string>() + "\"");
  if (m == npos) throw ParseError(path + "/1", "unknown vertex \"" + j[1].get<std::string>() + "\"");
  return {p, m};
}

}  // namespace detail

inline CandidateGraph graph_from_json(const Instance& inst, const nlohmann::json& arr, const std::string& path,
                                      ParseOptions opts = {}) {
  detail::Reader rd(opts);
  if (!arr.is_array()) throw ParseError(path, "expected an array of edges");
  std::vector<LabeledEdge> edges;
  std::set<EdgeKey> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto p = path + "/" + std::to_string(i);
    rd.object(arr[i], p, {"plus", "minus", "label"});
    auto pid = rd.string(arr[i], p, "plus");
    auto mid = rd.string(arr[i], p, "minus");
    auto pv = inst.vertex_index(pid);
    auto mv = inst.vertex_index(mid);
    if (pv == npos) throw ParseError(p + "/plus", "unknown vertex \"" + pid + "\"");
    if (mv == npos) throw ParseError(p + "/minus", "unknown vertex \"" + mid + "\"");
    if (!seen.insert({pv, mv}).second) throw ParseError(p, "parallel edge; graphs must be simple");
    edges.push_back({pv, mv, detail::parse_label_set(rd.string(arr[i], p, "label"), p + "/label")});
  }
  return CandidateGraph(inst.vertices().size(), std::move(edges));
}

inline nlohmann::json delta_to_json(const Instance& inst, const DeltaAssignment& delta) {
  auto out = nlohmann::json::object();
  for (std::size_t r = 0; r < delta.size(); ++r) {
    auto list = nlohmann::json::array();
    for (auto k : delta[r]) list.push_back(edge_to_json(inst, k));
    out[inst.regions()[r].id] = list;
  }
  return out;
}

inline nlohmann::json certificate_to_json(const Instance& inst, const AdmissiblePair& pair) {
  return {{"format", "foldext-certificate"},
          {"version", kFormatVersion},
          {"graph", graph_to_json(inst, pair.graph)},
          {"delta", delta_to_json(inst, pair.delta)}};
}

inline std::string serialize_certificate(const Instance& inst, const AdmissiblePair& pair) {
  return detail::dump(certificate_to_json(inst, pair));
}

/// Regions missing from "delta" are an error; each list is sorted on read.
inline AdmissiblePair certificate_from_json(const Instance& inst, const nlohmann::json& doc, ParseOptions opts = {}) {
  detail::Reader rd(opts);
  rd.header(doc, "foldext-certificate");
  rd.object(doc, "", {"format", "version", "note", "graph", "delta"});
  AdmissiblePair pair;
  pair.graph = graph_from_json(inst, rd.field(doc, "", "graph"), "/graph", opts);
  const auto& jd = rd.field(doc, "", "delta");
  if (!jd.is_object()) throw ParseError("/delta", "expected an object keyed by region id");
  pair.delta.assign(inst.regions().size(), {});
  std::vector<char> present(inst.regions().size(), 0);
  for (const auto& [rid, list] : jd.items()) {
    auto p = "/delta/" + rid;
    auto r = inst.region_index(rid);
    if (r == npos) throw ParseError(p, "unknown region \"" + rid + "\"");
    if (!list.is_array()) throw ParseError(p, "expected an array of edges");
    present[r] = 1;
    for (std::size_t i = 0; i < list.size(); ++i)
      pair.delta[r].push_back(detail::edge_from_json(inst, list[i], p + "/" + std::to_string(i)));
    std::sort(pair.delta[r].begin(), pair.delta[r].end());
    if (std::adjacent_find(pair.delta[r].begin(), pair.delta[r].end()) != pair.delta[r].end())
      throw ParseError(p, "edge listed twice");
  }
  for (std::size_t r = 0; r < present.size(); ++r)
    if (!present[r]) throw ParseError("/delta", "missing region \"" + inst.regions()[r].id + "\"");
  return pair;
}

inline AdmissiblePair parse_certificate(const Instance& inst, std::string_view text, ParseOptions opts = {}) {
  detail::Reader rd(opts);
  return certificate_from_json(inst, rd.parse_text(text), opts);
}

// ---------------------------------------------------------------------------
// Reports

inline nlohmann::json validation_to_json(const ValidationReport& rep) {
  auto list = nlohmann::json::array();
  for (const auto& v : rep.violations)
    list.push_back({{"kind", v.kind == ViolationKind::structural ? "structural" : "law"},
                    {"law", v.law},
                    {"ids", v.ids},
                    {"message", v.message}});
  return {{"valid", rep.ok()}, {"violations", list}};
}

inline nlohmann::json conditions_to_json(const ConditionReport& rep) {
  auto list = nlohmann::json::array();
  for (const auto& r : rep.results)
    list.push_back({{"condition", r.condition}, {"subject", r.subject}, {"pass", r.pass}, {"detail", r.detail}});
  return {{"pass", rep.ok()}, {"structuralErrors", rep.structuralErrors}, {"results", list}};
}

inline nlohmann::json certificate_report_to_json(const CertificateReport& rep) {
  return {{"pass", rep.ok()},
          {"graphWellFormed", rep.graphWellFormed},
          {"graphInGeneratedSet", rep.graphInGeneratedSet},
          {"generatedSetComplete", rep.generatedSetComplete},
          {"conditions", conditions_to_json(rep.conditions)}};
}

inline nlohmann::json generated_set_to_json(const Instance& inst, const GeneratedSet& gs) {
  auto graphs = nlohmann::json::array();
  for (const auto& g : gs.graphs) graphs.push_back(graph_to_json(inst, g));
  return {{"format", "foldext-generated-set"},
          {"version", kFormatVersion},
          {"complete", gs.complete},
          {"count", gs.graphs.size()},
          {"graphs", graphs}};
}

inline nlohmann::json verdict_to_json(const Instance& inst, const Verdict& v) {
  nlohmann::json out = {{"format", "foldext-verdict"},
                        {"version", kFormatVersion},
                        {"outcome", to_string(v.outcome)},
                        {"stats",
                         {{"graphsEnumerated", v.stats.graphsEnumerated},
                          {"enumerationComplete", v.stats.enumerationComplete},
                          {"candidatesSearched", v.stats.candidatesSearched},
                          {"deltaBranches", v.stats.deltaBranches}}}};
  if (v.certificate) out["certificate"] = certificate_to_json(inst, *v.certificate);
  return out;
}

inline nlohmann::json plan_to_json(const Instance& inst, const BuildPlan& plan) {
  using nlohmann::json;
  auto edges = [&](const std::vector<EdgeKey>& ks) {
    auto a = json::array();
    for (auto k : ks) a.push_back(edge_to_json(inst, k));
    return a;
  };
  auto steps = json::array();
  for (const auto& s : plan.steps) {
    json st = {{"stepIndex", s.stepIndex}, {"region", s.region}, {"arcs", s.arcs}, {"part", to_string(s.part)}};
    if (!s.doublePoint.empty()) st["doublePoint"] = s.doublePoint;
    if (!s.bornEdges.empty()) st["bornEdges"] = edges(s.bornEdges);
    if (!s.mergedEdges.empty()) st["mergedEdges"] = edges(s.mergedEdges);
    if (!s.splitEdges.empty()) st["splitEdges"] = edges(s.splitEdges);
    auto glue = json::object();
    for (const auto& [side, k] : s.gluing) glue[side] = edge_to_json(inst, k);
    st["gluing"] = glue;
    steps.push_back(st);
  }
  auto notes = json::array();
  for (const auto& n : plan.orientationNotes)
    notes.push_back({{"doublePoint", n.doublePoint},
                     {"counterclockwise", n.counterclockwise},
                     {"clockwise", n.clockwise},
                     {"readingsAgree", n.agree()}});
  auto summary = plan_summary(plan);
  return {{"format", "foldext-plan"},
          {"version", kFormatVersion},
          {"regionOrder", plan.regionOrder},
          {"fiberCounts", plan.fiberCounts},
          {"steps", steps},
          {"orientationNotes", notes},
          {"summary",
           {{"P_I", summary.pI}, {"P_II", summary.pII}, {"P_d", summary.pD}, {"maxFiberCount", summary.maxFiberCount}}}};
}

inline std::string serialize_plan(const Instance& inst, const BuildPlan& plan) {
  return detail::dump(plan_to_json(inst, plan));
}

/// Inverse of plan_to_json (the derived "summary" block is ignored).
inline BuildPlan plan_from_json(const Instance& inst, const nlohmann::json& doc, ParseOptions opts = {}) {
  detail::Reader rd(opts);
  rd.header(doc, "foldext-plan");
  rd.object(doc, "", {"format", "version", "regionOrder", "fiberCounts", "steps", "orientationNotes", "summary"});
  BuildPlan plan;
  plan.regionOrder = rd.strings(rd.array(doc, "", "regionOrder"), "/regionOrder");
  const auto& fc = rd.field(doc, "", "fiberCounts");
  if (!fc.is_object()) throw ParseError("/fiberCounts", "expected an object");
  for (const auto& [k, n] : fc.items()) {
    if (!n.is_number_unsigned()) throw ParseError("/fiberCounts/" + k, "expected a count");
    plan.fiberCounts[k] = n.get<std::size_t>();
  }
  auto edges = [&](const nlohmann::json& st, const std::string& p, const char* name) {
    std::vector<EdgeKey> out;
    const auto& arr = rd.array(st, p, name, false);
    for (std::size_t i = 0; i < arr.size(); ++i)
      out.push_back(detail::edge_from_json(inst, arr[i], p + "/" + name + "/" + std::to_string(i)));
    return out;
  };
  const auto& js = rd.array(doc, "", "steps");
  for (std::size_t i = 0; i < js.size(); ++i) {
    auto p = "/steps/" + std::to_string(i);
    const auto& st = js[i];
    rd.object(st, p, {"stepIndex", "region", "arcs", "part", "doublePoint", "bornEdges", "mergedEdges",
                      "splitEdges", "gluing"});
    AttachStep s;
    const auto& idx = rd.field(st, p, "stepIndex");
    if (!idx.is_number_unsigned()) throw ParseError(p + "/stepIndex", "expected an index");
    s.stepIndex = idx.get<std::size_t>();
    s.region = rd.string(st, p, "region");
    s.arcs = rd.strings(rd.array(st, p, "arcs"), p + "/arcs");
    auto part = rd.string(st, p, "part");
    if (part == "P_I") s.part = PartKind::P_I;
    else if (part == "P_II") s.part = PartKind::P_II;
    else if (part == "P_d") s.part = PartKind::P_d;
    else throw ParseError(p + "/part", "unknown part kind");
    if (st.contains("doublePoint")) s.doublePoint = rd.string(st, p, "doublePoint");
    s.bornEdges = edges(st, p, "bornEdges");
    s.mergedEdges = edges(st, p, "mergedEdges");
    s.splitEdges = edges(st, p, "splitEdges");
    const auto& glue = rd.field(st, p, "gluing");
    if (!glue.is_object()) throw ParseError(p + "/gluing", "expected an object");
    for (const auto& [side, e] : glue.items())
      s.gluing[side] = detail::edge_from_json(inst, e, p + "/gluing/" + side);
    plan.steps.push_back(std::move(s));
  }
  const auto& jn = rd.array(doc, "", "orientationNotes", false);
  for (std::size_t i = 0; i < jn.size(); ++i) {
    auto p = "/orientationNotes/" + std::to_string(i);
    rd.object(jn[i], p, {"doublePoint", "counterclockwise", "clockwise", "readingsAgree"});
    plan.orientationNotes.push_back({rd.string(jn[i], p, "doublePoint"), rd.boolean(jn[i], p, "counterclockwise", false),
                                     rd.boolean(jn[i], p, "clockwise", false)});
  }
  return plan;
}

// ---------------------------------------------------------------------------
// DOT

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}
}  // namespace detail

/// The signed weighted graph: sheets as nodes, folds as I/II edges.
inline std::string export_dot(const Instance& inst) {
  std::ostringstream os;
  os << "graph weighted {\n";
  for (const auto& v : inst.vertices())
    os << "  " << detail::dot_quote(v.id) << " [label=" << detail::dot_quote(v.id + " (" + detail::sign_str(v.sign) + ")")
       << "];\n";
  for (const auto& f : inst.folds())
    os << "  " << detail::dot_quote(f.plusEnd) << " -- " << detail::dot_quote(f.minusEnd)
       << " [label=" << detail::dot_quote(detail::label_str(f.label)) << ", id=" << detail::dot_quote(f.id) << "];\n";
  os << "}\n";
  return os.str();
}

/// A candidate graph over the instance's sheets with a/b edge labels.
inline std::string export_dot(const Instance& inst, const CandidateGraph& g) {
  std::ostringstream os;
  os << "graph candidate {\n";
  for (const auto& v : inst.vertices())
    os << "  " << detail::dot_quote(v.id) << " [label=" << detail::dot_quote(v.id + " (" + detail::sign_str(v.sign) + ")")
       << "];\n";
  for (const auto& e : g.edges())
    os << "  " << detail::dot_quote(inst.vertices()[e.plusEnd].id) << " -- "
       << detail::dot_quote(inst.vertices()[e.minusEnd].id) << " [label=" << detail::dot_quote(e.label.str()) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace foldext
