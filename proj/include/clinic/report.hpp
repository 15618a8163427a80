// Copyright 2026 The Clinic Authors.
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

#ifndef CLINIC_REPORT_HPP_
#define CLINIC_REPORT_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clinic/config.hpp"
#include "clinic/detectors.hpp"
#include "clinic/diagnoser.hpp"
#include "clinic/document.hpp"
#include "clinic/lexicon.hpp"

namespace clinic {

struct TreatmentHint {
  RuleId rule = RuleId::kS101;
  std::string text;
  // Short label of the remedy family, e.g. "too-long sentences".
  std::string topic;
};

// Throws std::out_of_range for an unknown rule id.
const TreatmentHint& treatment_for(RuleId rule);
const TreatmentHint& treatment_for(std::string_view rule_id);

struct Report {
  std::string document;
  AnalysisConfig config;
  Diagnostics diagnostics;
  std::vector<MaladyFinding> maladies;

  // Diagnostic count per rule id; rules without findings are absent.
  std::map<RuleId, std::size_t> summary() const;
  bool has_findings() const { return !diagnostics.empty() || !maladies.empty(); }

  friend bool operator==(const Report&, const Report&) = default;
};

// Parses, runs every enabled detector and the diagnoser.
Report analyze(const Document& doc, std::string document_name,
               const AnalysisConfig& cfg,
               const Lexicon& lex = Lexicon::Default());

std::string render_human(const Report& report);
std::string render_machine(const Report& report);

class ReportFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inverse of render_machine(). Throws ReportFormatError.
Report parse_machine(std::string_view json);

}  // namespace clinic

#endif  // CLINIC_REPORT_HPP_
