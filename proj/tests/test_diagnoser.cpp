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


#include <algorithm>
#include <string>

#include "clinic/diagnoser.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace clinic;

namespace {

std::vector<MaladyFinding> diagnose(const Document& doc, const AnalysisConfig& cfg = {}) {
  Diagnostics d = run_all(doc, cfg);
  return infer_maladies(d, doc, extract_keywords(doc, cfg), cfg);
}

// Intro section with a storyline break, then enough body for S601 and S701.
std::string composite() {
  return testing::synthetic_manuscript(
      1200, 11, 31,
      "# Introduction\n\nGlaciers retreat quickly near the poles.\n\n"
      "Bakers knead dough before dawn.\n\n# Body\n\n");
}

bool contains_all(const Diagnostics& d, const MaladyFinding& f) {
  return std::all_of(f.evidence.begin(), f.evidence.end(), [&](const EvidenceRef& e) {
    return std::any_of(d.begin(), d.end(), [&](const Diagnostic& x) {
      return x.rule == e.rule && x.span == e.span;
    });
  });
}

}  // namespace

TEST_SUITE("malady-diagnoser") {

TEST_CASE("faulty overall argument from three document-level symptoms") {
  Document doc = parse_document(composite());
  auto findings = diagnose(doc);
  auto rap = std::count_if(findings.begin(), findings.end(),
                           [](const MaladyFinding& f) { return f.kind == MaladyKind::kFaultyRap; });
  REQUIRE(rap == 1);
  const MaladyFinding& f = findings.front();
  CHECK(f.kind == MaladyKind::kFaultyRap);
  CHECK(f.strength == 3);
  CHECK(f.evidence_rules() ==
        std::vector<RuleId>{RuleId::kS401, RuleId::kS601, RuleId::kS701});
  CHECK_FALSE(f.narrative.empty());
}

TEST_CASE("S401 outside the first section does not count towards FaultyRAP") {
  std::string text = testing::synthetic_manuscript(
      1200, 11, 31,
      "# Introduction\n\nThe sampled regions show stable yields.\n\n# Later\n\n"
      "Glaciers retreat quickly near the poles.\n\nBakers knead dough before dawn.\n\n");
  Document doc = parse_document(text);
  auto findings = diagnose(doc);
  for (const MaladyFinding& f : findings) CHECK(f.kind != MaladyKind::kFaultyRap);
}

TEST_CASE("no symptoms, no maladies") {
  AnalysisConfig cfg;
  Document doc = parse_document(testing::read_fixture("clean.md"));
  CHECK(infer_maladies({}, doc, extract_keywords(doc, cfg), cfg).empty());
  CHECK(diagnose(doc).empty());
}

TEST_CASE("four long paragraphs give exactly PoorChunking") {
  std::string text;
  for (int p = 0; p < 4; ++p) {
    for (int s = 0; s < 7; ++s) text += (s ? " " : "") + std::string("The model fits the data.");
    text += "\n\n";
  }
  Document doc = parse_document(text);
  Diagnostics d = run_all(doc, {});
  REQUIRE(d.size() == 4);
  for (const Diagnostic& x : d) CHECK(x.rule == RuleId::kS301);
  auto findings = diagnose(doc);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].kind == MaladyKind::kPoorChunking);
  CHECK(findings[0].strength == 1);
  CHECK(findings[0].evidence.size() == 4);
}

TEST_CASE("two long paragraphs are not a pattern") {
  std::string text;
  for (int p = 0; p < 2; ++p) {
    for (int s = 0; s < 7; ++s) text += (s ? " " : "") + std::string("The model fits the data.");
    text += "\n\n";
  }
  CHECK(diagnose(parse_document(text)).empty());
}

TEST_CASE("superlatives give RhetoricRisk") {
  Document doc = parse_document(testing::read_fixture("superlatives.md"));
  auto findings = diagnose(doc);
  REQUIRE_FALSE(findings.empty());
  CHECK(findings.back().kind == MaladyKind::kRhetoricRisk);
  CHECK(findings.back().evidence_rules() == std::vector<RuleId>{RuleId::kS702});
}

TEST_CASE("keywords") {
  AnalysisConfig cfg;
  Document doc = parse_document(testing::read_fixture("teachers.md"));
  KeywordProfile profile = extract_keywords(doc, cfg);
  for (const char* k : {"teacher", "incentive", "tutor"}) {
    CAPTURE(k);
    CHECK(std::find(profile.keywords.begin(), profile.keywords.end(), k) !=
          profile.keywords.end());
  }
  CHECK(profile.keywords.front() == "teacher");
  CHECK(profile.keywords.size() <= 15u);
  CHECK(profile.section_overlap.size() == doc.sections().size());

  CHECK(extract_keywords(parse_document(""), cfg).keywords.empty());
  CHECK(extract_keywords(parse_document("It is what it is. And so on.\n\nWe were there."), cfg)
            .keywords.empty());
  cfg.keyword_count = 2;
  CHECK(extract_keywords(doc, cfg).keywords.size() == 2);
}

TEST_CASE("section relevance") {
  AnalysisConfig cfg;
  Document doc = parse_document(
      "# Teachers and incentives\n\nTeachers respond to incentives from tutoring.\n\n"
      "Schools pay teachers modest salaries.\n\n## Data\n\nTeachers face incentives when tutoring is allowed.\n\n"
      "## Weather\n\nRain fell in the valley.\n");
  KeywordProfile profile = extract_keywords(doc, cfg);
  CHECK(section_relevance(doc.sections()[1], profile, cfg) == 3);
  CHECK(section_relevance(doc.sections()[2], profile, cfg) == 0);
  CHECK(section_relevance(doc.sections()[2], KeywordProfile{}, cfg) == 0);
}

TEST_CASE("MissingRapRelevance needs evidence inside an unrelated section") {
  AnalysisConfig cfg;
  std::string text =
      "# Teachers and incentives\n\nTeachers respond to incentives from tutoring.\n\n"
      "Schools pay teachers modest salaries.\n\n## Weather\n\nRain fell in the valley. Ducks swim north.\n";
  Document doc = parse_document(text);
  auto findings = diagnose(doc, cfg);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].kind == MaladyKind::kMissingRapRelevance);
  CHECK(findings[0].evidence_rules() == std::vector<RuleId>{RuleId::kS201});
}

TEST_CASE("evidence closure, monotonicity and determinism on generated documents") {
  AnalysisConfig cfg;
  testing::CorpusGenerator gen(11);
  for (int i = 0; i < 40; ++i) {
    Document doc = parse_document(gen.document().render());
    Diagnostics d = run_all(doc, cfg);
    KeywordProfile profile = extract_keywords(doc, cfg);
    auto findings = infer_maladies(d, doc, profile, cfg);
    CHECK(findings == infer_maladies(d, doc, profile, cfg));
    for (const MaladyFinding& f : findings) {
      CHECK(contains_all(d, f));
      CHECK(f.strength == static_cast<int>(f.evidence_rules().size()));
    }
    // Any prefix of the diagnostics infers a subset of kinds.
    for (std::size_t cut = 0; cut <= d.size(); cut += std::max<std::size_t>(1, d.size() / 4)) {
      Diagnostics part(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(cut));
      auto fewer = infer_maladies(part, doc, profile, cfg);
      for (const MaladyFinding& f : fewer) {
        CHECK(std::any_of(findings.begin(), findings.end(),
                          [&](const MaladyFinding& g) { return g.kind == f.kind; }));
      }
    }
  }
}

TEST_CASE("names") {
  CHECK(std::string(malady_name(MaladyKind::kFaultyRap)) == "FaultyRAP");
  CHECK(parse_malady("RhetoricRisk") == MaladyKind::kRhetoricRisk);
  CHECK_FALSE(parse_malady("Unknown").has_value());
}

}  // TEST_SUITE
