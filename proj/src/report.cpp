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

#include "clinic/report.hpp"

#include <array>
#include <set>
#include <sstream>

#include "format.hpp"
#include "json.hpp"

namespace clinic {

using internal::format_number;
using Json = nlohmann::ordered_json;

namespace {

const std::array<TreatmentHint, kRuleCount>& hints() {
  static const std::array<TreatmentHint, kRuleCount> table = {{
      {RuleId::kS101,
       "Distill it: swap multi-word phrases for single words, turn action nouns "
       "into verbs, or split it into two sentences.",
       "too-long sentences"},
      {RuleId::kS102,
       "Make the action noun the verb of the sentence and drop the form of 'to be'.",
       "hidden verbs"},
      {RuleId::kS103,
       "Move subject, verb and object to the front and let the qualifications follow.",
       "sentence core"},
      {RuleId::kS201,
       "State how this sentence follows from the last one: add a connector, "
       "repeat the shared term, or reorder.",
       "dialogic links"},
      {RuleId::kS301,
       "Name the single point of the paragraph, open with it, and cut or move "
       "sentences that do not support it.",
       "too-long paragraphs"},
      {RuleId::kS302,
       "Open with the claim these numbers support; put the figures after it.",
       "chunking"},
      {RuleId::kS401,
       "Carry a key term from one paragraph opening to the next so a skim of "
       "first sentences still tells the story.",
       "visible storyline"},
      {RuleId::kS501,
       "Check for a section that can be removed whole; if there is none, "
       "summarise the argument briefly and re-plan the manuscript around it.",
       "too-long manuscript"},
      {RuleId::kS601,
       "Review each note: fold anything the argument needs into the body and "
       "delete the rest.",
       "footnotes"},
      {RuleId::kS701,
       "Say concretely what the contribution is rather than labelling it with "
       "emphasis words.",
       "overall argument"},
      {RuleId::kS702,
       "Replace praise words with the direct answer the reader is looking for here.",
       "rhetoric versus logic"},
  }};
  return table;
}

Json span_json(const Span& s) {
  return Json{{"start_byte", s.start_byte},
              {"end_byte", s.end_byte},
              {"line", s.line},
              {"column", s.column}};
}

Json config_json(const AnalysisConfig& c) {
  Json j = Json::object();
  j["max_sentence_words"] = c.max_sentence_words;
  j["max_paragraph_sentences"] = c.max_paragraph_sentences;
  j["words_per_page"] = c.words_per_page;
  j["footnote_ratio"] = c.footnote_ratio;
  j["intensity_per_page"] = c.intensity_per_page;
  j["superlative_per_page"] = c.superlative_per_page;
  j["min_insertion_words"] = c.min_insertion_words;
  j["max_core_prefix_tokens"] = c.max_core_prefix_tokens;
  j["max_delay_words"] = c.max_delay_words;
  j["max_pages"] = c.max_pages ? Json(*c.max_pages) : Json(nullptr);
  j["link_window_tokens"] = c.link_window_tokens;
  j["keyword_count"] = c.keyword_count;
  j["min_keyword_overlap"] = c.min_keyword_overlap;
  Json rules = Json::array();
  for (RuleId r : kAllRules) {
    if (c.enabled(r)) rules.push_back(rule_name(r));
  }
  j["rules"] = rules;
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ReportFormatError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  const Json& v = field(j, key);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ReportFormatError(std::string("field '") + key + "' has the wrong type");
  }
}

Span parse_span(const Json& j) {
  return Span{get<std::size_t>(j, "start_byte"), get<std::size_t>(j, "end_byte"),
              get<int>(j, "line"), get<int>(j, "column")};
}

RuleId parse_rule_field(const Json& j, const char* key) {
  auto rule = parse_rule(get<std::string>(j, key));
  if (!rule) throw ReportFormatError("unknown rule id in '" + std::string(key) + "'");
  return *rule;
}

AnalysisConfig parse_config_json(const Json& j) {
  AnalysisConfig c;
  c.max_sentence_words = get<int>(j, "max_sentence_words");
  c.max_paragraph_sentences = get<int>(j, "max_paragraph_sentences");
  c.words_per_page = get<int>(j, "words_per_page");
  c.footnote_ratio = get<double>(j, "footnote_ratio");
  c.intensity_per_page = get<double>(j, "intensity_per_page");
  c.superlative_per_page = get<double>(j, "superlative_per_page");
  c.min_insertion_words = get<int>(j, "min_insertion_words");
  c.max_core_prefix_tokens = get<int>(j, "max_core_prefix_tokens");
  c.max_delay_words = get<int>(j, "max_delay_words");
  const Json& max_pages = field(j, "max_pages");
  if (!max_pages.is_null()) c.max_pages = get<double>(j, "max_pages");
  c.link_window_tokens = get<int>(j, "link_window_tokens");
  c.keyword_count = get<int>(j, "keyword_count");
  c.min_keyword_overlap = get<int>(j, "min_keyword_overlap");
  if (j.contains("rules")) {
    c.enabled_rules.reset();
    for (const Json& r : j.at("rules")) {
      auto rule = r.is_string() ? parse_rule(r.get<std::string>()) : std::nullopt;
      if (!rule) throw ReportFormatError("unknown rule id in config.rules");
      c.enabled_rules.set(static_cast<std::size_t>(*rule));
    }
  }
  return c;
}

}  // namespace

const TreatmentHint& treatment_for(RuleId rule) {
  return hints().at(static_cast<std::size_t>(rule));
}

const TreatmentHint& treatment_for(std::string_view rule_id) {
  auto rule = parse_rule(rule_id);
  if (!rule) throw std::out_of_range("unknown rule id '" + std::string(rule_id) + "'");
  return treatment_for(*rule);
}

std::map<RuleId, std::size_t> Report::summary() const {
  std::map<RuleId, std::size_t> counts;
  for (const Diagnostic& d : diagnostics) ++counts[d.rule];
  return counts;
}

Report analyze(const Document& doc, std::string document_name,
               const AnalysisConfig& cfg, const Lexicon& lex) {
  Report report;
  report.document = std::move(document_name);
  report.config = cfg;
  report.diagnostics = run_all(doc, cfg, lex);
  KeywordProfile profile = extract_keywords(doc, cfg, lex);
  report.maladies = infer_maladies(report.diagnostics, doc, profile, cfg);
  return report;
}

std::string render_human(const Report& report) {
  const std::string path = report.document.empty() ? "<input>" : report.document;
  std::ostringstream out;
  out << "clinic report: " << path << "\n";
  if (!report.has_findings()) {
    out << "no findings\n";
    return out.str();
  }
  std::set<RuleId> seen;
  for (const Diagnostic& d : report.diagnostics) {
    const TreatmentHint& hint = treatment_for(d.rule);
    out << path << ':' << d.span.line << ':' << d.span.column << ' '
        << rule_name(d.rule) << ' ' << d.message << " ("
        << format_number(d.measured) << '/' << format_number(d.threshold)
        << ") [" << severity_name(d.severity) << "; treatment: " << hint.topic
        << "]\n";
    seen.insert(d.rule);
  }
  if (!report.maladies.empty()) {
    out << "\nunderlying maladies:\n";
    for (const MaladyFinding& m : report.maladies) {
      out << "  " << malady_name(m.kind) << " (strength " << m.strength << ")\n";
      out << "    evidence:";
      for (RuleId r : m.evidence_rules()) out << ' ' << rule_name(r);
      out << "\n    " << m.narrative << "\n";
    }
  }
  if (!seen.empty()) {
    out << "\ntreatments:\n";
    for (RuleId r : seen) {
      const TreatmentHint& hint = treatment_for(r);
      out << "  " << rule_name(r) << " (" << hint.topic << "): " << hint.text << "\n";
    }
  }
  out << "\nsummary:";
  for (const auto& [rule, n] : report.summary()) out << ' ' << rule_name(rule) << '=' << n;
  out << " maladies=" << report.maladies.size() << "\n";
  return out.str();
}

std::string render_machine(const Report& report) {
  Json j = Json::object();
  j["document"] = report.document;
  j["config"] = config_json(report.config);
  Json diagnostics = Json::array();
  for (const Diagnostic& d : report.diagnostics) {
    Json e = Json::array();
    for (const Span& s : d.evidence) e.push_back(span_json(s));
    diagnostics.push_back(Json{{"rule_id", rule_name(d.rule)},
                               {"severity", severity_name(d.severity)},
                               {"start_byte", d.span.start_byte},
                               {"end_byte", d.span.end_byte},
                               {"line", d.span.line},
                               {"column", d.span.column},
                               {"measured", d.measured},
                               {"threshold", d.threshold},
                               {"message", d.message},
                               {"evidence", e}});
  }
  j["diagnostics"] = diagnostics;
  Json maladies = Json::array();
  for (const MaladyFinding& m : report.maladies) {
    Json ids = Json::array();
    for (RuleId r : m.evidence_rules()) ids.push_back(rule_name(r));
    Json evidence = Json::array();
    for (const EvidenceRef& e : m.evidence) {
      Json ref = span_json(e.span);
      ref["rule_id"] = rule_name(e.rule);
      evidence.push_back(ref);
    }
    maladies.push_back(Json{{"kind", malady_name(m.kind)},
                            {"strength", m.strength},
                            {"evidence_rule_ids", ids},
                            {"narrative", m.narrative},
                            {"evidence", evidence}});
  }
  j["maladies"] = maladies;
  return j.dump();
}

Report parse_machine(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ReportFormatError(std::string("invalid JSON: ") + e.what());
  }
  Report report;
  report.document = get<std::string>(j, "document");
  report.config = parse_config_json(field(j, "config"));
  for (const Json& d : field(j, "diagnostics")) {
    Diagnostic diag;
    diag.rule = parse_rule_field(d, "rule_id");
    std::string severity = get<std::string>(d, "severity");
    if (severity != "info" && severity != "warning") {
      throw ReportFormatError("unknown severity '" + severity + "'");
    }
    diag.severity = severity == "warning" ? Severity::kWarning : Severity::kInfo;
    diag.span = parse_span(d);
    diag.measured = get<double>(d, "measured");
    diag.threshold = get<double>(d, "threshold");
    diag.message = get<std::string>(d, "message");
    for (const Json& e : field(d, "evidence")) diag.evidence.push_back(parse_span(e));
    report.diagnostics.push_back(std::move(diag));
  }
  for (const Json& m : field(j, "maladies")) {
    MaladyFinding f;
    auto kind = parse_malady(get<std::string>(m, "kind"));
    if (!kind) throw ReportFormatError("unknown malady kind");
    f.kind = *kind;
    f.strength = get<int>(m, "strength");
    f.narrative = get<std::string>(m, "narrative");
    if (m.contains("evidence")) {
      for (const Json& e : m.at("evidence")) {
        f.evidence.push_back({parse_rule_field(e, "rule_id"), parse_span(e)});
      }
    }
    report.maladies.push_back(std::move(f));
  }
  return report;
}

}  // namespace clinic
