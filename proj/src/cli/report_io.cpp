// Copyright 2026 The abelshift Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace abelshift::cli {
namespace {

json nullable(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

json agreement(const RunReport& rep) {
  if (std::isnan(rep.formula_prob)) return nullptr;
  return std::abs(rep.formula_prob - rep.sim_prob) <= kAgreeTolerance;
}

std::string coords_text(const GroupElement& e) {
  std::string s;
  for (std::size_t j = 0; j < e.coords.size(); ++j) s += (j ? ";" : "") + std::to_string(e.coords[j]);
  return s;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool below_threshold(const RunReport& rep, double threshold) { return rep.sim_prob < threshold; }

json run_json(const RunReport& rep, const GroupSpec& group, double threshold) {
  json extras = json::object();
  for (const auto& [k, v] : rep.extras) extras[k] = nullable(v);
  return {{"algorithm", rep.algorithm},
          {"formula_prob", nullable(rep.formula_prob)},
          {"sim_prob", rep.sim_prob},
          {"agree", agreement(rep)},
          {"argmax", group.element_at(rep.argmax).coords},
          {"recovered", rep.recovered ? json(rep.recovered->coords) : json(nullptr)},
          {"fail_certain", rep.fail_certain},
          {"below_threshold", below_threshold(rep, threshold)},
          {"queries", {{"g", rep.queries.g_calls}, {"fhat", rep.queries.fhat_calls}}},
          {"postselect_probs", rep.postselect_probs},
          {"distribution", rep.sim_distribution},
          {"extras", extras}};
}

json report_json(const InstanceFile& file, const json& notes, const std::vector<RunReport>& runs,
                 double threshold) {
  const GroupSpec G(file.group);
  json rows = json::array();
  for (const auto& r : runs) rows.push_back(run_json(r, G, threshold));
  return {{"instance", to_json(file)}, {"notes", notes}, {"threshold", threshold}, {"runs", rows}};
}

std::string report_csv(const std::vector<RunReport>& runs, const GroupSpec& group, double threshold) {
  std::ostringstream out;
  out << "algorithm,formula_prob,sim_prob,agree,argmax,recovered,fail_certain,below_threshold,g_calls,fhat_calls\n";
  for (const auto& r : runs) {
    const json a = agreement(r);
    out << r.algorithm << ',' << format_double(r.formula_prob) << ',' << format_double(r.sim_prob) << ','
        << (a.is_null() ? "" : (a.get<bool>() ? "true" : "false")) << ','
        << coords_text(group.element_at(r.argmax)) << ',' << (r.recovered ? coords_text(*r.recovered) : "")
        << ',' << (r.fail_certain ? "true" : "false") << ',' << (below_threshold(r, threshold) ? "true" : "false")
        << ',' << r.queries.g_calls << ',' << r.queries.fhat_calls << '\n';
  }
  return out.str();
}

}  // namespace abelshift::cli
