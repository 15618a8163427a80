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

#ifndef CLINIC_DIAGNOSER_HPP_
#define CLINIC_DIAGNOSER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clinic/config.hpp"
#include "clinic/detectors.hpp"
#include "clinic/document.hpp"
#include "clinic/lexicon.hpp"

namespace clinic {

// Underlying problems inferred from co-occurring symptoms. The order here is
// the reporting order.
enum class MaladyKind { kFaultyRap, kPoorChunking, kMissingRapRelevance, kRhetoricRisk };

const char* malady_name(MaladyKind kind);
std::optional<MaladyKind> parse_malady(std::string_view name);

struct EvidenceRef {
  RuleId rule = RuleId::kS101;
  Span span;
  friend bool operator==(const EvidenceRef&, const EvidenceRef&) = default;
};

struct MaladyFinding {
  MaladyKind kind = MaladyKind::kFaultyRap;
  std::vector<EvidenceRef> evidence;
  // Number of distinct rule kinds among the evidence.
  int strength = 0;
  std::string narrative;

  std::vector<RuleId> evidence_rules() const;
  friend bool operator==(const MaladyFinding&, const MaladyFinding&) = default;
};

struct KeywordProfile {
  // At most keyword_count content stems, most frequent first.
  std::vector<std::string> keywords;
  // section_overlap[i] = section_relevance(doc.sections()[i], ...).
  std::vector<int> section_overlap;
};

// Top content stems of the title plus the first two paragraphs. Ties are
// broken alphabetically.
KeywordProfile extract_keywords(const Document& doc, const AnalysisConfig& cfg,
                                const Lexicon& lex = Lexicon::Default());

// Number of profile keywords present in the section's first paragraph.
int section_relevance(const Section& section, const KeywordProfile& profile,
                      const AnalysisConfig& cfg);

// Rules that can serve as evidence for a malady.
std::vector<RuleId> malady_rules(MaladyKind kind);

// Applies the fixed malady rules to diagnostics produced by run_all on the
// same document. Findings come back ordered by MaladyKind.
std::vector<MaladyFinding> infer_maladies(const Diagnostics& diagnostics,
                                          const Document& doc,
                                          const KeywordProfile& profile,
                                          const AnalysisConfig& cfg);

}  // namespace clinic

#endif  // CLINIC_DIAGNOSER_HPP_
