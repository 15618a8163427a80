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


// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "clinic/report.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace clinic;

namespace {

struct Criterion {
  const char* name;
  std::function<std::string()> check;  // empty string = pass
};

std::size_t count_rule(const Diagnostics& d, RuleId rule) {
  return static_cast<std::size_t>(
      std::count_if(d.begin(), d.end(), [&](const Diagnostic& x) { return x.rule == rule; }));
}

Document plain(const std::string& text) { return parse_document(text, InputFormat::kPlain); }

std::string word_counts() {
  for (const auto& [expected, text] : testing::read_table("word_counts.txt")) {
    std::size_t got = count_words(plain(text));
    if (got != std::stoul(expected)) {
      return "expected " + expected + " words, got " + std::to_string(got) + ": " +
             text.substr(0, 40);
    }
  }
  return {};
}

std::string long_sentences() {
  AnalysisConfig cfg;
  auto rows = testing::read_table("word_counts.txt");
  std::vector<std::string> flagged;
  for (std::size_t i = 0; i < 10; ++i) {
    if (!detect_long_sentence(plain(rows[i].second), cfg).empty()) flagged.push_back(rows[i].first);
  }
  std::vector<std::string> expected = {"28", "33", "31"};
  if (flagged != expected) {
    std::string got;
    for (const auto& f : flagged) got += f + " ";
    return "flagged word counts: " + got;
  }
  return {};
}

std::string hidden_verbs() {
  AnalysisConfig cfg;
  auto rows = testing::read_table("word_counts.txt");
  bool ok = detect_hidden_verb(plain(rows[4].second), cfg).size() == 1 &&
            detect_hidden_verb(plain(rows[5].second), cfg).empty() &&
            detect_hidden_verb(plain(rows[6].second), cfg).size() == 1 &&
            detect_hidden_verb(plain(rows[7].second), cfg).empty();
  return ok ? "" : "hidden-verb flags differ from the expected pairs";
}

std::string sentence_core() {
  AnalysisConfig cfg;
  for (const auto& [kind, text] : testing::read_table("core_examples.txt")) {
    Diagnostics d = detect_broken_core(plain(text), cfg);
    std::string got = d.empty() ? "none" : d[0].message.substr(0, d[0].message.find(' '));
    if (d.size() > 1 || got != kind) return "expected " + kind + ", got " + got + ": " + text;
  }
  return {};
}

std::string dialogic_links() {
  AnalysisConfig cfg;
  std::size_t original =
      detect_missing_link(parse_document(testing::read_fixture("strosis_original.md")), cfg).size();
  std::size_t revised =
      detect_missing_link(parse_document(testing::read_fixture("strosis_revised.md")), cfg).size();
  if (original < 2 || revised != 0) {
    return "original " + std::to_string(original) + ", revised " + std::to_string(revised);
  }
  return {};
}

std::string storyline() {
  AnalysisConfig cfg;
  std::size_t one =
      detect_storyline_break(parse_document(testing::read_fixture("excerpt_no_storyline.md")), cfg)
          .size();
  std::size_t two =
      detect_storyline_break(parse_document(testing::read_fixture("excerpt_storyline.md")), cfg)
          .size();
  if (one < 1 || two != 0) {
    return "excerpt 1: " + std::to_string(one) + ", excerpt 2: " + std::to_string(two);
  }
  return {};
}

std::string footnotes() {
  AnalysisConfig cfg;
  auto flagged = [&](std::size_t sentences, std::size_t notes) {
    Document doc = parse_document(testing::synthetic_manuscript(sentences, notes, 0));
    return !detect_footnote_overload(doc, cfg).empty();
  };
  Document probe = parse_document(testing::synthetic_manuscript(1200, 11, 0));
  if (probe.total_words() != 12000) return "30-page fixture has wrong length";
  if (fair_footnote_count(probe, cfg) != 10) return "fair count for 30 pages is not 10";
  if (!flagged(1200, 11)) return "11 notes in 30 pages not flagged";
  if (flagged(1200, 10)) return "10 notes in 30 pages flagged";
  if (flagged(4000, 33)) return "33 notes in 100 pages flagged";
  return {};
}

std::string intensity() {
  AnalysisConfig cfg;
  auto flagged = [&](std::size_t n) {
    Document doc = parse_document(testing::synthetic_manuscript(1200, 0, n));
    return !detect_intensity_overuse(doc, cfg).empty();
  };
  if (!flagged(31)) return "31 occurrences not flagged";
  if (flagged(30)) return "30 occurrences flagged";
  return {};
}

std::string faulty_rap() {
  std::string text = testing::synthetic_manuscript(
      1200, 11, 31,
      "# Introduction\n\nGlaciers retreat quickly near the poles.\n\n"
      "Bakers knead dough before dawn.\n\n# Body\n\n");
  Report r = analyze(parse_document(text), "composite.md", {});
  std::vector<const MaladyFinding*> rap;
  for (const MaladyFinding& f : r.maladies) {
    if (f.kind == MaladyKind::kFaultyRap) rap.push_back(&f);
  }
  if (rap.size() != 1) return std::to_string(rap.size()) + " FaultyRAP findings";
  if (rap[0]->strength != 3) return "strength " + std::to_string(rap[0]->strength);
  std::vector<RuleId> expected = {RuleId::kS401, RuleId::kS601, RuleId::kS701};
  if (rap[0]->evidence_rules() != expected) return "evidence rules differ";
  return {};
}

std::string properties() {
  struct Prop {
    const char* name;
    std::string result;
  };
  std::vector<Prop> props = {
      {"determinism", testing::prop_determinism(1, 50)},
      {"span soundness", testing::prop_span_soundness(2, 100)},
      {"threshold monotonicity", testing::prop_threshold_monotonicity(3, 10)},
      {"round trip", testing::prop_round_trip(4, 100)},
      {"additivity", testing::prop_additivity(5, 100)},
  };
  for (const Prop& p : props) {
    if (!p.result.empty()) return std::string(p.name) + ": " + p.result;
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 tokenizer word counts", word_counts},
      {"2 S101 long sentences", long_sentences},
      {"3 S102 hidden verbs", hidden_verbs},
      {"4 S103 sentence core", sentence_core},
      {"5 S201 dialogic links", dialogic_links},
      {"6 S401 storyline", storyline},
      {"7 S601 footnotes", footnotes},
      {"8 S701 intensity words", intensity},
      {"9 M1 FaultyRAP composite", faulty_rap},
      {"10 property suite", properties},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
      std::printf("PASS %s\n", c.name);
    } else {
      std::printf("FAIL %s: %s\n", c.name, problem.c_str());
      ++failed;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
