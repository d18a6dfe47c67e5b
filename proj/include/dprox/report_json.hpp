// Copyright 2026 The dprox Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and CSV renderings of the report types. JSON is the canonical
// format; rationals are {"num": .., "den": ..} with a separate six-digit
// decimal string. CSV is a flat projection of MetricsReport.

#ifndef DPROX_REPORT_JSON_HPP
#define DPROX_REPORT_JSON_HPP

#include <json.hpp>

#include <sstream>
#include <string>

#include "dprox/bipartite.hpp"
#include "dprox/distance.hpp"
#include "dprox/search.hpp"
#include "dprox/verifiers.hpp"

namespace dprox {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}};
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const MetricsReport& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["is_strong"] = r.is_strong;
  j["is_regular"] = r.is_regular;
  j["is_tournament"] = r.is_tournament;
  j["is_symmetric"] = r.is_symmetric;
  j["pi"] = r.pi ? rational_json(*r.pi) : Json(nullptr);
  j["pi_decimal"] = r.pi ? Json(to_decimal(*r.pi)) : Json(nullptr);
  j["rho"] = r.rho ? rational_json(*r.rho) : Json(nullptr);
  j["rho_decimal"] = r.rho ? Json(to_decimal(*r.rho)) : Json(nullptr);
  j["pi_equals_rho"] = r.pi_equals_rho();
  j["prox_witness"] = optional_json(r.prox_witness);
  j["rem_witness"] = optional_json(r.rem_witness);
  j["radius"] = optional_json(r.radius);
  j["diameter"] = optional_json(r.diameter);
  j["max_out"] = r.degrees.max_out;
  j["min_out"] = r.degrees.min_out;
  j["max_in"] = r.degrees.max_in;
  j["min_in"] = r.degrees.min_in;
  j["max_semi"] = r.degrees.max_semi;
  j["min_semi"] = r.degrees.min_semi;
  j["out_degrees"] = r.degrees.out_degrees;
  j["in_degrees"] = r.degrees.in_degrees;
  j["sigma"] = r.sigma;
  j["ecc"] = r.ecc;
  j["unreachable_pair"] =
      r.unreachable ? Json::array({r.unreachable->first, r.unreachable->second}) : Json(nullptr);
  return j;
}

inline std::string csv_header() {
  return "digraph6,n,m,is_strong,is_regular,is_tournament,pi_num,pi_den,rho_num,rho_den,"
         "radius,diameter,min_semi,max_semi";
}

/// Lossy one-line projection; empty cells for undefined values.
inline std::string csv_row(const std::string& digraph6, const MetricsReport& r) {
  std::ostringstream out;
  auto opt = [&](const auto& v) {
    if (v) out << *v;
  };
  out << digraph6 << ',' << r.n << ',' << r.m << ',' << r.is_strong << ',' << r.is_regular << ','
      << r.is_tournament << ',';
  if (r.pi) out << r.pi->numerator() << ',' << r.pi->denominator() << ',';
  else out << ",,";
  if (r.rho) out << r.rho->numerator() << ',' << r.rho->denominator() << ',';
  else out << ",,";
  opt(r.radius);
  out << ',';
  opt(r.diameter);
  out << ',' << r.degrees.min_semi << ',' << r.degrees.max_semi;
  return out.str();
}

inline Json to_json(const BipartiteReport& r) {
  Json j;
  Json parts = Json::array();
  for (const auto& p : r.structure.parts) parts.push_back(p);
  j["parts"] = parts;
  j["strong"] = r.strong;
  j["good"] = r.good;
  j["bad_witness"] =
      r.bad_witness ? Json::array({r.bad_witness->first, r.bad_witness->second}) : Json(nullptr);
  Json rows = Json::array();
  for (const auto& row : r.per_vertex) {
    rows.push_back(Json{{"vertex", row.vertex},
                        {"part", row.part == 0 ? "A" : "B"},
                        {"out_degree", row.out_degree},
                        {"mu", row.mu},
                        {"sigma", optional_json(row.sigma)}});
  }
  j["per_vertex"] = rows;
  j["constant_a"] = optional_json(r.constant_a);
  j["constant_b"] = optional_json(r.constant_b);
  j["constant_c"] = optional_json(r.constant_c);
  j["criterion_predicts_equality"] = r.criterion_predicts_equality;
  j["pi_equals_rho"] = r.pi_equals_rho;
  j["pairwise_relations_hold"] = r.pairwise_relations_hold;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["theorem"] = theorem_token(r.theorem);
  j["bound_holds"] = r.bound_holds;
  j["equality_observed"] = r.equality_observed();
  j["equality_predicted"] = r.equality_predicted();
  j["consistent"] = r.consistent();
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    cases.push_back(Json{{"label", c.label},
                         {"kind", c.implication_only ? "implies" : "iff"},
                         {"observed", c.observed},
                         {"predicted", c.predicted},
                         {"consistent", c.consistent()}});
  }
  j["cases"] = cases;
  j["witnesses"] = r.witnesses;
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = details;
  j["digraph6"] = r.digraph6;
  if (!r.consistent()) j["sigma"] = r.sigma;
  return j;
}

inline Json to_json(const SearchResult& r, bool with_timing = true) {
  Json j;
  j["matches"] = r.matches.size();
  j["labeled_matches"] = r.labeled_matches;
  j["scanned"] = r.scanned;
  j["seed"] = optional_json(r.seed);
  if (with_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

inline Json to_json(const ExhaustiveResult& r, bool with_timing = true) {
  Json j;
  j["theorem"] = theorem_token(r.theorem);
  j["scanned"] = r.scanned;
  j["checked"] = r.checked;
  j["inconsistent"] = r.inconsistent;
  j["passed"] = r.passed();
  Json cases = Json::object();
  for (const auto& [label, counts] : r.case_counts)
    cases[label] = Json{{"observed", counts.first}, {"predicted", counts.second}};
  j["cases"] = cases;
  Json bad = Json::array();
  for (const auto& c : r.counterexamples) bad.push_back(to_json(c));
  j["counterexamples"] = bad;
  if (with_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

}  // namespace dprox

#endif  // DPROX_REPORT_JSON_HPP
