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

#include "clinic/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <optional>
#include <set>

#include "format.hpp"

namespace clinic {

using internal::format_number;

const char* severity_name(Severity severity) {
  return severity == Severity::kWarning ? "warning" : "info";
}

Severity severity_for(RuleId rule) {
  switch (rule) {
    case RuleId::kS101:
    case RuleId::kS201:
    case RuleId::kS301:
    case RuleId::kS601:
      return Severity::kWarning;
    default:
      return Severity::kInfo;
  }
}

namespace {

// Paragraphs shorter than this never count as opening on a detail.
constexpr std::size_t kLeadingDetailMinSentences = 4;

Diagnostic make(RuleId rule, const Span& span, std::string message,
                double measured, double threshold,
                std::vector<Span> evidence = {}) {
  return Diagnostic{rule,     severity_for(rule), span, std::move(message),
                    measured, threshold,          std::move(evidence)};
}

std::vector<const Token*> word_tokens(const Sentence& sentence) {
  std::vector<const Token*> out;
  for (const Token& t : sentence.tokens) {
    if (t.counts_as_word()) out.push_back(&t);
  }
  return out;
}

std::string lower_phrase(const std::vector<const Token*>& words,
                         std::size_t begin, std::size_t n) {
  std::string phrase;
  for (std::size_t k = begin; k < begin + n; ++k) {
    if (k > begin) phrase += ' ';
    phrase += to_lower(words[k]->text);
  }
  return phrase;
}

// A connector word or phrase begins among the first `window` words.
bool has_connector_in_window(const Sentence& sentence, int window,
                             const Lexicon& lex) {
  auto words = word_tokens(sentence);
  std::size_t limit = std::min<std::size_t>(words.size(), static_cast<std::size_t>(window));
  for (std::size_t i = 0; i < limit; ++i) {
    if (words[i]->kind != TokenKind::kWord) continue;
    if (lex.connector_class(*words[i]) != ConnectorClass::kNone) return true;
    for (std::size_t n = 2; n <= lex.max_phrase_words() && i + n <= words.size(); ++n) {
      if (lex.is_connector_phrase(lower_phrase(words, i, n))) return true;
    }
  }
  return false;
}

bool has_demonstrative(const Sentence& sentence, const Lexicon& lex) {
  return std::any_of(sentence.tokens.begin(), sentence.tokens.end(),
                     [&](const Token& t) {
                       return t.kind == TokenKind::kWord &&
                              lex.is_demonstrative(t.text);
                     });
}

std::set<std::string> content_stems(const Sentence& sentence, const Lexicon& lex) {
  std::set<std::string> out;
  for (const Token& t : sentence.tokens) {
    if (lex.is_content_word(t)) out.insert(t.stem);
  }
  return out;
}

std::size_t shared_count(const std::set<std::string>& a,
                         const std::set<std::string>& b) {
  std::size_t n = 0;
  for (const std::string& s : a) n += b.count(s);
  return n;
}

bool is_ing_form(const Token& t) {
  static const std::set<std::string> kNotVerbs = {
      "during", "nothing", "something", "anything", "everything", "morning",
      "evening", "string", "spring", "bring", "ceiling", "thing"};
  if (t.kind != TokenKind::kWord || t.text.size() < 5) return false;
  std::string w = to_lower(t.text);
  return w.ends_with("ing") && !kNotVerbs.count(w);
}

// Comma-delimited pieces of a sentence.
struct Segment {
  std::vector<const Token*> words;
  bool closed_by_comma = false;
};

std::vector<Segment> comma_segments(const Sentence& sentence) {
  std::vector<Segment> segments(1);
  for (const Token& t : sentence.tokens) {
    if (t.kind == TokenKind::kPunctuation && t.text == ",") {
      segments.back().closed_by_comma = true;
      segments.emplace_back();
    } else if (t.counts_as_word()) {
      segments.back().words.push_back(&t);
    }
  }
  return segments;
}

bool starts_with_subordinator(const std::vector<const Token*>& words,
                              std::size_t at, const Lexicon& lex) {
  if (at >= words.size()) return false;
  if (lex.connector_class(*words[at]) == ConnectorClass::kSubordinating) return true;
  for (std::size_t n = 2; n <= lex.max_phrase_words() && at + n <= words.size(); ++n) {
    if (lex.is_subordinator_phrase(lower_phrase(words, at, n))) return true;
  }
  return false;
}

bool starts_with_connector(const std::vector<const Token*>& words,
                           const Lexicon& lex) {
  if (words.empty()) return false;
  if (lex.connector_class(*words[0]) != ConnectorClass::kNone) return true;
  for (std::size_t n = 2; n <= lex.max_phrase_words() && n <= words.size(); ++n) {
    if (lex.is_connector_phrase(lower_phrase(words, 0, n))) return true;
  }
  return false;
}

// A leading segment that postpones the core: it opens with a subordinator or
// an -ing form, optionally after a coordinating conjunction.
bool is_delaying_segment(const Segment& segment, const Lexicon& lex) {
  const auto& w = segment.words;
  if (w.empty()) return false;
  std::size_t at = 0;
  if (lex.connector_class(*w[0]) == ConnectorClass::kCoordinating) at = 1;
  if (at >= w.size()) return false;
  return starts_with_subordinator(w, at, lex) || is_ing_form(*w[at]);
}

Span span_of_words(const std::vector<const Token*>& words) {
  Span s = words.front()->span;
  s.end_byte = words.back()->span.end_byte;
  return s;
}

std::optional<Span> body_span(const Document& doc) {
  auto paragraphs = doc.paragraphs();
  if (paragraphs.empty()) return std::nullopt;
  Span s = paragraphs.front()->span;
  s.end_byte = paragraphs.back()->span.end_byte;
  return s;
}

// Rates per page use at least one page so a single occurrence in a short
// abstract is not extrapolated.
double rate_denominator(const Document& doc, const AnalysisConfig& cfg) {
  return std::max(1.0, estimate_pages(doc, static_cast<std::size_t>(cfg.words_per_page)));
}

}  // namespace

Diagnostics detect_long_sentence(const Document& doc, const AnalysisConfig& cfg) {
  Diagnostics out;
  for (const Paragraph* p : doc.paragraphs()) {
    for (const Sentence& s : p->sentences) {
      std::size_t words = count_words(s);
      if (words > static_cast<std::size_t>(cfg.max_sentence_words)) {
        out.push_back(make(RuleId::kS101, s.span,
                           "sentence has " + std::to_string(words) +
                               " words; aim for at most " +
                               std::to_string(cfg.max_sentence_words),
                           static_cast<double>(words), cfg.max_sentence_words));
      }
    }
  }
  return out;
}

Diagnostics detect_hidden_verb(const Document& doc, const AnalysisConfig&,
                               const Lexicon& lex) {
  constexpr double kMinNominalSignals = 2;
  Diagnostics out;
  for (const Paragraph* p : doc.paragraphs()) {
    for (const Sentence& s : p->sentences) {
      const auto& t = s.tokens;
      bool be_form = false;
      int nominalizations = 0;
      int gerund_phrases = 0;
      std::vector<Span> evidence;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (lex.is_be_form(t[i])) be_form = true;
        if (lex.is_nominalization(t[i])) {
          ++nominalizations;
          evidence.push_back(t[i].span);
        }
        // "the increasing of"
        if (i + 2 < t.size() && t[i].kind == TokenKind::kWord &&
            to_lower(t[i].text) == "the" && is_ing_form(t[i + 1]) &&
            t[i + 2].kind == TokenKind::kWord && to_lower(t[i + 2].text) == "of") {
          ++gerund_phrases;
          Span phrase = t[i].span;
          phrase.end_byte = t[i + 2].span.end_byte;
          evidence.push_back(phrase);
        }
      }
      if (!be_form || (nominalizations < kMinNominalSignals && gerund_phrases == 0)) {
        continue;
      }
      std::sort(evidence.begin(), evidence.end(), [](const Span& a, const Span& b) {
        return a.start_byte < b.start_byte;
      });
      std::string message = "weak 'to be' verb with ";
      if (gerund_phrases > 0) {
        message += "a 'the ...ing of' phrase hiding the action";
      } else {
        message += std::to_string(nominalizations) + " nominalizations hiding the action";
      }
      out.push_back(make(RuleId::kS102, s.span, std::move(message),
                         nominalizations + gerund_phrases, kMinNominalSignals,
                         std::move(evidence)));
    }
  }
  return out;
}

Diagnostics detect_broken_core(const Document& doc, const AnalysisConfig& cfg,
                               const Lexicon& lex) {
  Diagnostics out;
  for (const Paragraph* p : doc.paragraphs()) {
    for (const Sentence& s : p->sentences) {
      auto segments = comma_segments(s);

      // Interrupted core: short subject-like prefix, then a long insertion
      // closed by a second comma.
      if (segments.size() >= 3) {
        const Segment& prefix = segments[0];
        const Segment& insertion = segments[1];
        std::size_t prefix_words = prefix.words.size();
        if (prefix_words >= 1 &&
            prefix_words <= static_cast<std::size_t>(cfg.max_core_prefix_tokens) &&
            !starts_with_connector(prefix.words, lex) &&
            !is_ing_form(*prefix.words[0]) && insertion.closed_by_comma &&
            insertion.words.size() >= static_cast<std::size_t>(cfg.min_insertion_words)) {
          out.push_back(make(
              RuleId::kS103, s.span,
              "interrupted core: a " + std::to_string(insertion.words.size()) +
                  "-word insertion splits the subject from its verb",
              static_cast<double>(insertion.words.size()), cfg.min_insertion_words,
              {span_of_words(insertion.words)}));
          continue;
        }
      }

      // Delayed core: leading dependent clauses before the main clause.
      std::size_t delay = 0;
      std::vector<const Token*> delayed;
      for (const Segment& seg : segments) {
        if (!seg.closed_by_comma || !is_delaying_segment(seg, lex)) break;
        delay += seg.words.size();
        delayed.insert(delayed.end(), seg.words.begin(), seg.words.end());
      }
      if (delay > 0 && delay >= static_cast<std::size_t>(cfg.max_delay_words)) {
        out.push_back(make(RuleId::kS103, s.span,
                           "delayed core: " + std::to_string(delay) +
                               " words of leading clauses before the main clause",
                           static_cast<double>(delay), cfg.max_delay_words,
                           {span_of_words(delayed)}));
      }
    }
  }
  return out;
}

Diagnostics detect_missing_link(const Document& doc, const AnalysisConfig& cfg,
                                const Lexicon& lex) {
  Diagnostics out;
  for (const Paragraph* p : doc.paragraphs()) {
    for (std::size_t i = 1; i < p->sentences.size(); ++i) {
      const Sentence& prev = p->sentences[i - 1];
      const Sentence& cur = p->sentences[i];
      if (has_connector_in_window(cur, cfg.link_window_tokens, lex)) continue;
      if (has_demonstrative(cur, lex)) continue;
      if (shared_count(content_stems(prev, lex), content_stems(cur, lex)) > 0) continue;
      out.push_back(make(RuleId::kS201, cur.span,
                         "no link to the previous sentence: no connector, "
                         "repeated key term or demonstrative",
                         0, 1, {prev.span, cur.span}));
    }
  }
  return out;
}

Diagnostics detect_long_paragraph(const Document& doc, const AnalysisConfig& cfg) {
  Diagnostics out;
  for (const Paragraph* p : doc.paragraphs()) {
    std::size_t n = p->sentences.size();
    if (n > static_cast<std::size_t>(cfg.max_paragraph_sentences)) {
      out.push_back(make(RuleId::kS301, p->span,
                         "paragraph has " + std::to_string(n) +
                             " sentences; aim for at most " +
                             std::to_string(cfg.max_paragraph_sentences),
                         static_cast<double>(n), cfg.max_paragraph_sentences));
    }
  }
  return out;
}

Diagnostics detect_leading_detail(const Document& doc, const AnalysisConfig& cfg,
                                  const Lexicon& lex) {
  Diagnostics out;
  for (const Paragraph* p : doc.paragraphs()) {
    if (p->sentences.size() < kLeadingDetailMinSentences) continue;
    const Sentence& lead = p->first_sentence();
    auto numbers = std::count_if(lead.tokens.begin(), lead.tokens.end(),
                                 [](const Token& t) { return t.kind == TokenKind::kNumber; });
    if (numbers == 0 || has_demonstrative(lead, lex) ||
        has_connector_in_window(lead, cfg.link_window_tokens, lex)) {
      continue;
    }
    out.push_back(make(RuleId::kS302, p->span,
                       "paragraph opens on a numeric detail instead of its main point",
                       static_cast<double>(numbers), 0, {lead.span}));
  }
  return out;
}

Diagnostics detect_storyline_break(const Document& doc, const AnalysisConfig&,
                                   const Lexicon& lex) {
  Diagnostics out;
  for (const Section& section : doc.sections()) {
    const auto& paragraphs = section.paragraphs;
    for (std::size_t i = 1; i < paragraphs.size(); ++i) {
      const Sentence& prev = paragraphs[i - 1].first_sentence();
      const Sentence& cur = paragraphs[i].first_sentence();
      if (shared_count(content_stems(prev, lex), content_stems(cur, lex)) > 0) continue;
      out.push_back(make(RuleId::kS401, cur.span,
                         "storyline break: this paragraph's first sentence "
                         "repeats no key term from the previous one",
                         0, 1, {prev.span, cur.span}));
    }
  }
  return out;
}

Diagnostics detect_overlong_document(const Document& doc, const AnalysisConfig& cfg) {
  Diagnostics out;
  if (!cfg.max_pages) return out;
  double pages = estimate_pages(doc, static_cast<std::size_t>(cfg.words_per_page));
  auto span = body_span(doc);
  if (span && pages > *cfg.max_pages) {
    out.push_back(make(RuleId::kS501, *span,
                       "document runs to about " + format_number(pages) +
                           " pages; the configured norm is " +
                           format_number(*cfg.max_pages),
                       pages, *cfg.max_pages));
  }
  return out;
}

long fair_footnote_count(const Document& doc, const AnalysisConfig& cfg) {
  double pages = estimate_pages(doc, static_cast<std::size_t>(cfg.words_per_page));
  return std::lround(pages * cfg.footnote_ratio);
}

Diagnostics detect_footnote_overload(const Document& doc, const AnalysisConfig& cfg) {
  Diagnostics out;
  const auto& notes = doc.footnotes();
  long fair = fair_footnote_count(doc, cfg);
  if (notes.empty() || static_cast<long>(notes.size()) <= fair) return out;
  std::vector<Span> evidence;
  for (const Footnote& f : notes) evidence.push_back(f.marker_span);
  // Anchor at the first footnote beyond the fair count.
  out.push_back(make(RuleId::kS601, notes[static_cast<std::size_t>(fair)].marker_span,
                     std::to_string(notes.size()) + " footnotes; about " +
                         std::to_string(fair) + " would suit this length",
                     static_cast<double>(notes.size()), static_cast<double>(fair),
                     std::move(evidence)));
  return out;
}

Diagnostics detect_intensity_overuse(const Document& doc, const AnalysisConfig& cfg,
                                     const Lexicon& lex) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<Span>> families;
  for (const Paragraph* p : doc.paragraphs()) {
    for (const Sentence& s : p->sentences) {
      for (const Token& t : s.tokens) {
        if (t.kind != TokenKind::kWord || !lex.is_intensity_word(t.text)) continue;
        std::string family = intensity_family(t.text);
        auto& spans = families[family];
        if (spans.empty()) order.push_back(family);
        spans.push_back(t.span);
      }
    }
  }
  Diagnostics out;
  double pages = rate_denominator(doc, cfg);
  for (const std::string& family : order) {
    auto& spans = families[family];
    double rate = static_cast<double>(spans.size()) / pages;
    if (rate <= cfg.intensity_per_page) continue;
    Span anchor = spans.front();
    std::string message = "'" + family + "' family used " + std::to_string(spans.size()) +
                          " times (" + format_number(rate) + " per page)";
    out.push_back(make(RuleId::kS701, anchor, std::move(message), rate,
                       cfg.intensity_per_page, std::move(spans)));
  }
  return out;
}

Diagnostics detect_superlative_density(const Document& doc, const AnalysisConfig& cfg,
                                       const Lexicon& lex) {
  std::vector<Span> hits;
  for (const Paragraph* p : doc.paragraphs()) {
    for (const Sentence& s : p->sentences) {
      const auto& t = s.tokens;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].kind != TokenKind::kWord) continue;
        if (lex.is_superlative(t[i].text)) {
          hits.push_back(t[i].span);
        } else if (to_lower(t[i].text) == "most" && i + 1 < t.size() &&
                   lex.is_content_word(t[i + 1])) {
          // "most" + adjective-like word: "the most elegant".
          Span phrase = t[i].span;
          phrase.end_byte = t[i + 1].span.end_byte;
          hits.push_back(phrase);
          ++i;
        }
      }
    }
  }
  Diagnostics out;
  if (hits.empty()) return out;
  double rate = static_cast<double>(hits.size()) / rate_denominator(doc, cfg);
  if (rate > cfg.superlative_per_page) {
    Span anchor = hits.front();
    std::string message = std::to_string(hits.size()) + " superlatives (" +
                          format_number(rate) + " per page)";
    out.push_back(make(RuleId::kS702, anchor, std::move(message), rate,
                       cfg.superlative_per_page, std::move(hits)));
  }
  return out;
}

Diagnostics run_all(const Document& doc, const AnalysisConfig& cfg,
                    const Lexicon& lex) {
  Diagnostics all;
  auto run = [&](RuleId rule, auto&& detector) {
    if (!cfg.enabled(rule)) return;
    Diagnostics found = detector();
    all.insert(all.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  };
  run(RuleId::kS101, [&] { return detect_long_sentence(doc, cfg); });
  run(RuleId::kS102, [&] { return detect_hidden_verb(doc, cfg, lex); });
  run(RuleId::kS103, [&] { return detect_broken_core(doc, cfg, lex); });
  run(RuleId::kS201, [&] { return detect_missing_link(doc, cfg, lex); });
  run(RuleId::kS301, [&] { return detect_long_paragraph(doc, cfg); });
  run(RuleId::kS302, [&] { return detect_leading_detail(doc, cfg, lex); });
  run(RuleId::kS401, [&] { return detect_storyline_break(doc, cfg, lex); });
  run(RuleId::kS501, [&] { return detect_overlong_document(doc, cfg); });
  run(RuleId::kS601, [&] { return detect_footnote_overload(doc, cfg); });
  run(RuleId::kS701, [&] { return detect_intensity_overuse(doc, cfg, lex); });
  run(RuleId::kS702, [&] { return detect_superlative_density(doc, cfg, lex); });
  std::stable_sort(all.begin(), all.end(), [](const Diagnostic& a, const Diagnostic& b) {
    if (a.span.start_byte != b.span.start_byte) return a.span.start_byte < b.span.start_byte;
    return a.rule < b.rule;
  });
  return all;
}

}  // namespace clinic
