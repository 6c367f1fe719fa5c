#pragma once

// JSON reports and the matrix file format. Object keys are emitted sorted, so
// identical inputs give byte-identical reports.

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hcube/constructions.hpp"
#include "hcube/cube.hpp"
#include "hcube/error.hpp"
#include "hcube/matrix.hpp"
#include "hcube/partition.hpp"
#include "hcube/quotient.hpp"
#include "hcube/search.hpp"
#include "hcube/verify.hpp"

namespace hcube {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

[[nodiscard]] inline Json report_header(const std::string& command) {
  return Json{{"schema", kReportSchema}, {"command", command}};
}

[[nodiscard]] inline Json graph_json(const CubeGraph& g) {
  return Json{{"n", g.n()}, {"kind", kind_name(g.kind())}, {"name", g.description()}};
}

// --- matrix files: {"n": 12, "kind": "halved-even", "k": 2, "S": [[4,62],[2,64]]}

struct MatrixFile {
  CubeGraph graph = CubeGraph::halved(2);
  QuotientMatrix matrix;
};

[[nodiscard]] inline std::string format_matrix_file(const CubeGraph& g, const QuotientMatrix& s) {
  std::ostringstream os;
  os << "{\"n\": " << g.n() << ", \"kind\": \"" << kind_name(g.kind()) << "\", \"k\": " << s.k()
     << ", \"S\": " << s.to_string() << "}\n";
  return os.str();
}

[[nodiscard]] inline MatrixFile parse_matrix_file(const std::string& text) {
  const auto j = Json::parse(text, nullptr, false);
  require(!j.is_discarded() && j.is_object(), ErrorCode::Parse, "matrix file is not a JSON object");
  for (const char* key : {"n", "kind", "S"})
    require(j.contains(key), ErrorCode::Parse, std::string("matrix file lacks \"") + key + "\"");
  require(j["n"].is_number_integer(), ErrorCode::Parse, "\"n\" must be an integer");
  require(j["kind"].is_string(), ErrorCode::Parse, "\"kind\" must be a string");
  MatrixFile out;
  out.graph = CubeGraph(parse_kind(j["kind"].get<std::string>()), j["n"].get<int>());
  out.matrix = QuotientMatrix::from_json(j["S"]);
  if (j.contains("k"))
    require(j["k"].is_number_integer() && j["k"].get<int>() == out.matrix.k(), ErrorCode::Parse,
            "\"k\" disagrees with the matrix size");
  return out;
}

[[nodiscard]] inline MatrixFile read_matrix_file(std::istream& is) {
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_matrix_file(buf.str());
}

// --- quotient-algebra reports

[[nodiscard]] inline Json conditions_json(const ConditionReport& r) {
  Json j{{"cond1_integrality", r.cond1_integrality},
         {"cond2_proportion", r.cond2_proportion},
         {"cond3_eigenvalue", r.cond3_eigenvalue},
         {"passed", r.passed()}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.eigenvalue) j["eigenvalue"] = Json{{"index", r.eigenvalue->index}, {"value", r.eigenvalue->value}};
  if (r.cell_sizes) j["cell_sizes"] = Json::array({r.cell_sizes->first, r.cell_sizes->second});
  return j;
}

[[nodiscard]] inline Json recursion_json(const WeightDistributionTable& t) {
  Json layers = Json::array();
  for (std::size_t m = 0; m < t.layers.size(); ++m)
    layers.push_back(Json{{"distance", 2 * m},
                          {"S", t.layers[m].to_json()},
                          {"integral", static_cast<bool>(t.integral[m])},
                          {"nonnegative", static_cast<bool>(t.nonnegative[m])}});
  Json j{{"n", t.n}, {"matrix", t.base.to_json()}, {"layers", layers}, {"cond4_recursion", t.passes()}};
  if (const auto bad = t.first_offending_distance()) j["first_offending_distance"] = *bad;
  return j;
}

[[nodiscard]] inline Json admissibility_json(const AdmissibilityReport& r) {
  Json j{{"graph", graph_json(r.graph)},
         {"matrix", r.matrix.to_json()},
         {"conditions", conditions_json(r.conditions)},
         {"cond4_recursion", r.cond4_recursion},
         {"admissible", r.overall()}};
  if (r.table) j["recursion"] = recursion_json(*r.table);
  return j;
}

// --- verification and constructions

[[nodiscard]] inline Json witness_json(const Witness& w, int n) {
  return Json{{"vertex", format_word(w.vertex, n)},
              {"cell", w.cell},
              {"target_cell", w.target},
              {"observed", w.observed},
              {"expected", w.expected}};
}

[[nodiscard]] inline Json verification_json(const Partition& p, const VerificationOutcome& v) {
  Json sizes = Json::array();
  for (auto s : p.cell_sizes()) sizes.push_back(s);
  Json j{{"graph", graph_json(p.graph())}, {"k", p.k()}, {"cell_sizes", sizes}, {"equitable", v.equitable}};
  if (v.equitable) j["matrix"] = v.matrix.to_json();
  if (v.witness) j["witness"] = witness_json(*v.witness, p.graph().n());
  if (p.claimed()) {
    j["claimed"] = p.claimed()->to_json();
    j["claimed_confirmed"] = v.confirms();
  }
  return j;
}

[[nodiscard]] inline Json construction_json(const std::string& method, const Construction& c, Json parameters) {
  Json sizes = Json::array();
  for (auto s : c.partition.cell_sizes()) sizes.push_back(s);
  Json j{{"method", method},
         {"graph", graph_json(c.partition.graph())},
         {"k", c.partition.k()},
         {"cell_sizes", sizes},
         {"claimed", c.claimed.to_json()},
         {"parameters", std::move(parameters)}};
  j["verified"] = c.verified ? c.verified->to_json() : Json(nullptr);
  return j;
}

// --- search

[[nodiscard]] inline Json search_stats_json(const SearchStats& s, bool with_time) {
  Json j{{"nodes", s.nodes},
         {"count_conflicts", s.count_conflicts},
         {"cardinality_conflicts", s.cardinality_conflicts},
         {"orbit_fixings", s.orbit_fixings},
         {"subproblems", s.subproblems}};
  if (with_time) j["wall_seconds"] = s.wall_seconds;
  return j;
}

/// Wall time is left out unless asked for, so reports stay reproducible.
[[nodiscard]] inline Json search_json(const SearchProblem& p, const SearchOutcome& o, bool with_time = false) {
  Json j{{"graph", graph_json(p.graph)},
         {"matrix", p.target.to_json()},
         {"status", status_name(o.status)},
         {"symmetry_breaking", o.symmetry_breaking},
         {"prefilter", p.options.prefilter},
         {"stats", search_stats_json(o.stats, with_time)}};
  if (!o.reason.empty()) j["reason"] = o.reason;
  if (o.cell_sizes) j["cell_sizes"] = Json::array({o.cell_sizes->first, o.cell_sizes->second});
  if (p.options.find_all) j["solution_count"] = o.solution_count;
  if (p.options.node_limit) j["node_limit"] = p.options.node_limit;
  if (p.options.root) j["root"] = format_word(*p.options.root, p.graph.n());
  return j;
}

[[nodiscard]] inline char status_mark(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return '+';
    case SearchStatus::ExhaustedNone:
    case SearchStatus::PreFilteredNonexistent: return '-';
    case SearchStatus::Aborted: return '?';
  }
  return '?';
}

[[nodiscard]] inline Json classification_json(int n, GraphKind kind, const std::vector<ClassificationEntry>& entries) {
  Json rows = Json::array();
  for (const auto& e : entries) {
    Json row{{"index", e.index},
             {"eigenvalue", e.eigenvalue},
             {"matrix", e.matrix.to_json()},
             {"status", status_name(e.outcome.status)},
             {"mark", std::string(1, status_mark(e.outcome.status))},
             {"nodes", e.outcome.stats.nodes}};
    if (!e.outcome.reason.empty()) row["reason"] = e.outcome.reason;
    rows.push_back(std::move(row));
  }
  return Json{{"graph", graph_json(CubeGraph(kind, n))}, {"entries", rows}};
}

/// One line per eigenvalue: "theta_i(n)=v: [[a,b],[c,d]] +, ..." with + found,
/// - nonexistent, ? undecided.
[[nodiscard]] inline std::string classification_text(int n, const std::vector<ClassificationEntry>& entries) {
  std::ostringstream os;
  int current = -1;
  for (const auto& e : entries) {
    if (e.index != current) {
      if (current >= 0) os << '\n';
      current = e.index;
      os << "theta_" << e.index << '(' << n << ")=" << e.eigenvalue << ':';
    } else {
      os << ',';
    }
    os << ' ' << e.matrix.to_string() << ' ' << status_mark(e.outcome.status);
  }
  if (current >= 0) os << '\n';
  return os.str();
}

}  // namespace hcube
