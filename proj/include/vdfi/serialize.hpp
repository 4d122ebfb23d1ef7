#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "degree_function.hpp"
#include "extremal.hpp"
#include "indices.hpp"
#include "verifier.hpp"

namespace vdfi {

using Json = nlohmann::ordered_json;

/// Integral values within 2^53 are written as integers, everything else as
/// the shortest round-trip decimal.
inline Json json_number(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 9007199254740992.0) {
    return Json(static_cast<std::int64_t>(x));
  }
  return Json(x);
}

inline Json to_json(const DegreeVector& dv) { return Json{{"n1", dv.n1}, {"n2", dv.n2}, {"n3", dv.n3}, {"n4", dv.n4}}; }

inline Json to_json(const IndexValue& v) {
  Json j{{"value", json_number(v.value)}};
  if (v.exact) j["exact"] = v.exact->str();
  return j;
}

inline Json to_json(const CaseClassification& c) {
  Json j{{"xi1", json_number(c.xi1)}, {"xi2", json_number(c.xi2)}, {"verdict", verdict_name(c.verdict)}};
  if (c.exact) {
    j["exact_xi1"] = c.exact->first.str();
    j["exact_xi2"] = c.exact->second.str();
  }
  return j;
}

inline Json to_json(const BoundReport& r) {
  Json j{{"n", r.n},
         {"m", r.m},
         {"residue", r.residue},
         {"base", json_number(r.base)},
         {"correction", json_number(r.correction)},
         {"total", json_number(r.total)},
         {"direction", direction_name(r.direction)},
         {"equality_degree_set", r.equality_degree_set},
         {"verdict", verdict_name(r.classification.verdict)}};
  if (r.exact_total) j["exact_total"] = r.exact_total->str();
  return j;
}

inline Json graph_json(const ChemGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.graph().edges()) edges.push_back(Json::array({u, v}));
  return Json{{"graph6", to_graph6(g)}, {"n", g.n()}, {"m", g.m()}, {"edges", edges}};
}

inline Json to_json(const ExtremalSolution& s) {
  Json j{{"n", s.n}, {"m", s.m}, {"feasible", s.feasible}};
  j["counts"] = s.counts ? to_json(*s.counts) : Json(nullptr);
  j["witness"] = s.witness ? graph_json(*s.witness) : Json(nullptr);
  j["reason"] = s.reason ? Json(infeasibility_name(*s.reason)) : Json(nullptr);
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json j{{"n", r.n},
         {"m", r.m},
         {"f", r.function},
         {"graph_count", r.graph_count},
         {"extremal_value", json_number(r.extremal_value)},
         {"bound_total", json_number(r.bound.total)},
         {"direction", direction_name(r.bound.direction)},
         {"attained", r.attained},
         {"attaining_degree_sets", r.attaining_degree_sets},
         {"attaining_graphs", r.attaining_graphs},
         {"violations", r.violations}};
  return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "family,parameter,n,m,residue,verdict,bound,extremal,attained,violations,note\n";
  for (const auto& r : rows) {
    os << r.family << ',' << format_number(r.parameter) << ',' << r.n << ',' << r.m << ',' << r.residue << ','
       << r.verdict << ',' << (r.bound ? format_number(*r.bound) : "") << ','
       << (r.extremal ? format_number(*r.extremal) : "") << ','
       << (r.attained ? (*r.attained ? "true" : "false") : "") << ',' << r.violations << ','
       << detail::csv_field(r.note) << '\n';
  }
}

}  // namespace vdfi
