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

#include "clinic/diagnoser.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace clinic {

const char* malady_name(MaladyKind kind) {
  switch (kind) {
    case MaladyKind::kFaultyRap: return "FaultyRAP";
    case MaladyKind::kPoorChunking: return "PoorChunking";
    case MaladyKind::kMissingRapRelevance: return "MissingRapRelevance";
    case MaladyKind::kRhetoricRisk: return "RhetoricRisk";
  }
  return "?";
}

std::optional<MaladyKind> parse_malady(std::string_view name) {
  for (MaladyKind k : {MaladyKind::kFaultyRap, MaladyKind::kPoorChunking,
                       MaladyKind::kMissingRapRelevance, MaladyKind::kRhetoricRisk}) {
    if (name == malady_name(k)) return k;
  }
  return std::nullopt;
}

std::vector<RuleId> MaladyFinding::evidence_rules() const {
  std::set<RuleId> rules;
  for (const EvidenceRef& e : evidence) rules.insert(e.rule);
  return {rules.begin(), rules.end()};
}

std::vector<RuleId> malady_rules(MaladyKind kind) {
  switch (kind) {
    case MaladyKind::kFaultyRap:
      return {RuleId::kS401, RuleId::kS501, RuleId::kS601, RuleId::kS701};
    case MaladyKind::kPoorChunking:
      return {RuleId::kS301, RuleId::kS302};
    case MaladyKind::kMissingRapRelevance:
      return {RuleId::kS201, RuleId::kS302, RuleId::kS401};
    case MaladyKind::kRhetoricRisk:
      return {RuleId::kS702};
  }
  return {};
}

namespace {

// Distinct symptom kinds that make a faulty overall argument likely.
constexpr std::size_t kFaultyRapMinKinds = 3;
// Paragraphs with chunking symptoms before chunking counts as a pattern.
constexpr std::size_t kPoorChunkingMinParagraphs = 3;

const char* narrative_for(MaladyKind kind) {
  switch (kind) {
    case MaladyKind::kFaultyRap:
      return "Several document-level symptoms appear together. This often points "
             "to an overall argument (research question, answer, positioning) "
             "that is unclear. Write those three down in one sentence each, then "
             "re-plan the manuscript from them.";
    case MaladyKind::kPoorChunking:
      return "Many paragraphs run long or open on a detail. Group details under "
             "one stated idea per paragraph and put that idea first.";
    case MaladyKind::kMissingRapRelevance:
      return "Some sections open without the manuscript's key terms, and their "
             "openings show linking problems. Tell the reader at the start of "
             "each such section what it contributes to the overall argument.";
    case MaladyKind::kRhetoricRisk:
      return "Superlatives are dense. Check that the text answers the questions "
             "a sceptical reader would ask instead of relying on emphasis.";
  }
  return "";
}

bool in_rules(RuleId rule, const std::vector<RuleId>& rules) {
  return std::find(rules.begin(), rules.end(), rule) != rules.end();
}

std::optional<Span> section_span(const Section& section) {
  if (section.paragraphs.empty()) return std::nullopt;
  Span s = section.paragraphs.front().span;
  s.end_byte = section.paragraphs.back().span.end_byte;
  return s;
}

MaladyFinding make_finding(MaladyKind kind, const std::vector<const Diagnostic*>& evidence) {
  MaladyFinding f;
  f.kind = kind;
  for (const Diagnostic* d : evidence) f.evidence.push_back({d->rule, d->span});
  f.strength = static_cast<int>(f.evidence_rules().size());
  f.narrative = narrative_for(kind);
  return f;
}

}  // namespace

KeywordProfile extract_keywords(const Document& doc, const AnalysisConfig& cfg,
                                const Lexicon& lex) {
  std::map<std::string, int> counts;
  auto count_tokens = [&](const std::vector<Token>& tokens) {
    for (const Token& t : tokens) {
      if (lex.is_content_word(t)) ++counts[t.stem];
    }
  };
  for (const Section& section : doc.sections()) {
    if (!section.heading_text.empty()) {
      count_tokens(tokenize(section.heading_text));
      break;
    }
  }
  auto paragraphs = doc.paragraphs();
  for (std::size_t i = 0; i < paragraphs.size() && i < 2; ++i) {
    for (const Sentence& s : paragraphs[i]->sentences) count_tokens(s.tokens);
  }

  std::vector<std::pair<std::string, int>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  KeywordProfile profile;
  for (const auto& [stem, n] : ranked) {
    if (profile.keywords.size() >= static_cast<std::size_t>(cfg.keyword_count)) break;
    profile.keywords.push_back(stem);
  }
  for (const Section& section : doc.sections()) {
    profile.section_overlap.push_back(section_relevance(section, profile, cfg));
  }
  return profile;
}

int section_relevance(const Section& section, const KeywordProfile& profile,
                      const AnalysisConfig&) {
  if (section.paragraphs.empty() || profile.keywords.empty()) return 0;
  std::set<std::string> stems;
  for (const Sentence& s : section.paragraphs.front().sentences) {
    for (const Token& t : s.tokens) {
      if (t.kind == TokenKind::kWord) stems.insert(t.stem);
    }
  }
  return static_cast<int>(std::count_if(
      profile.keywords.begin(), profile.keywords.end(),
      [&](const std::string& k) { return stems.count(k) > 0; }));
}

std::vector<MaladyFinding> infer_maladies(const Diagnostics& diagnostics,
                                          const Document& doc,
                                          const KeywordProfile& profile,
                                          const AnalysisConfig& cfg) {
  std::vector<MaladyFinding> findings;
  if (diagnostics.empty()) return findings;

  // Faulty overall argument: document-level symptoms plus storyline breaks
  // in the opening section.
  std::optional<Span> opening;
  for (const Section& section : doc.sections()) {
    if ((opening = section_span(section))) break;
  }
  {
    std::vector<const Diagnostic*> evidence;
    const auto rules = malady_rules(MaladyKind::kFaultyRap);
    for (const Diagnostic& d : diagnostics) {
      if (!in_rules(d.rule, rules)) continue;
      if (d.rule == RuleId::kS401 && !(opening && opening->contains(d.span))) continue;
      evidence.push_back(&d);
    }
    MaladyFinding f = make_finding(MaladyKind::kFaultyRap, evidence);
    if (static_cast<std::size_t>(f.strength) >= kFaultyRapMinKinds) {
      findings.push_back(std::move(f));
    }
  }

  {
    std::vector<const Diagnostic*> evidence;
    std::set<std::size_t> paragraphs;
    for (const Diagnostic& d : diagnostics) {
      if (d.rule == RuleId::kS301 || d.rule == RuleId::kS302) {
        evidence.push_back(&d);
        paragraphs.insert(d.span.start_byte);
      }
    }
    if (paragraphs.size() >= kPoorChunkingMinParagraphs) {
      findings.push_back(make_finding(MaladyKind::kPoorChunking, evidence));
    }
  }

  if (!profile.keywords.empty()) {
    std::vector<Span> candidates;
    for (const Section& section : doc.sections()) {
      auto span = section_span(section);
      if (span && section_relevance(section, profile, cfg) < cfg.min_keyword_overlap) {
        candidates.push_back(*span);
      }
    }
    std::vector<const Diagnostic*> evidence;
    const auto rules = malady_rules(MaladyKind::kMissingRapRelevance);
    for (const Diagnostic& d : diagnostics) {
      if (!in_rules(d.rule, rules)) continue;
      if (std::any_of(candidates.begin(), candidates.end(),
                      [&](const Span& s) { return s.contains(d.span); })) {
        evidence.push_back(&d);
      }
    }
    if (!evidence.empty()) {
      findings.push_back(make_finding(MaladyKind::kMissingRapRelevance, evidence));
    }
  }

  {
    std::vector<const Diagnostic*> evidence;
    for (const Diagnostic& d : diagnostics) {
      if (d.rule == RuleId::kS702) evidence.push_back(&d);
    }
    if (!evidence.empty()) {
      findings.push_back(make_finding(MaladyKind::kRhetoricRisk, evidence));
    }
  }
  return findings;
}

}  // namespace clinic
