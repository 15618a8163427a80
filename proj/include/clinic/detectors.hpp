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

#ifndef CLINIC_DETECTORS_HPP_
#define CLINIC_DETECTORS_HPP_

#include <string>
#include <vector>

#include "clinic/config.hpp"
#include "clinic/document.hpp"
#include "clinic/lexicon.hpp"

namespace clinic {

enum class Severity { kInfo, kWarning };

const char* severity_name(Severity severity);
Severity severity_for(RuleId rule);

// One located symptom. measured and threshold share a unit (words,
// sentences, occurrences per page, ...).
struct Diagnostic {
  RuleId rule = RuleId::kS101;
  Severity severity = Severity::kInfo;
  Span span;
  std::string message;
  double measured = 0;
  double threshold = 0;
  std::vector<Span> evidence;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

// Each detector is a pure function of its inputs and returns diagnostics in
// document order.
Diagnostics detect_long_sentence(const Document& doc, const AnalysisConfig& cfg);
Diagnostics detect_hidden_verb(const Document& doc, const AnalysisConfig& cfg,
                               const Lexicon& lex = Lexicon::Default());
Diagnostics detect_broken_core(const Document& doc, const AnalysisConfig& cfg,
                               const Lexicon& lex = Lexicon::Default());
Diagnostics detect_missing_link(const Document& doc, const AnalysisConfig& cfg,
                                const Lexicon& lex = Lexicon::Default());
Diagnostics detect_long_paragraph(const Document& doc, const AnalysisConfig& cfg);
Diagnostics detect_leading_detail(const Document& doc, const AnalysisConfig& cfg,
                                  const Lexicon& lex = Lexicon::Default());
Diagnostics detect_storyline_break(const Document& doc, const AnalysisConfig& cfg,
                                   const Lexicon& lex = Lexicon::Default());
Diagnostics detect_overlong_document(const Document& doc,
                                     const AnalysisConfig& cfg);
Diagnostics detect_footnote_overload(const Document& doc,
                                     const AnalysisConfig& cfg);
Diagnostics detect_intensity_overuse(const Document& doc,
                                     const AnalysisConfig& cfg,
                                     const Lexicon& lex = Lexicon::Default());
Diagnostics detect_superlative_density(const Document& doc,
                                       const AnalysisConfig& cfg,
                                       const Lexicon& lex = Lexicon::Default());

// Every enabled detector, merged and sorted by span start then rule id.
Diagnostics run_all(const Document& doc, const AnalysisConfig& cfg,
                    const Lexicon& lex = Lexicon::Default());

// round(page estimate * footnote_ratio).
long fair_footnote_count(const Document& doc, const AnalysisConfig& cfg);

}  // namespace clinic

#endif  // CLINIC_DETECTORS_HPP_
