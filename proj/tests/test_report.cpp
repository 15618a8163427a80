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


#include <string>

#include "clinic/report.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace clinic;

namespace {

Report report_for(const std::string& fixture, const AnalysisConfig& cfg = {}) {
  return analyze(parse_document(testing::read_fixture(fixture)), fixture, cfg);
}

std::size_t lines_starting(const std::string& text, const std::string& prefix) {
  std::size_t n = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    if (text.compare(pos, prefix.size(), prefix) == 0) ++n;
    pos = end + 1;
  }
  return n;
}

}  // namespace

TEST_SUITE("reporting") {

TEST_CASE("treatment hints") {
  for (RuleId r : kAllRules) {
    const TreatmentHint& h = treatment_for(r);
    CHECK(h.rule == r);
    CHECK_FALSE(h.text.empty());
    CHECK_FALSE(h.topic.empty());
  }
  CHECK(treatment_for("S101").text.find("Distill") != std::string::npos);
  CHECK(treatment_for("S601").rule == RuleId::kS601);
  CHECK_THROWS_AS(treatment_for("S999"), std::out_of_range);
}

TEST_CASE("human rendering") {
  Report empty = analyze(parse_document(""), "empty.md", {});
  CHECK(render_human(empty) == "clinic report: empty.md\nno findings\n");

  Report one = report_for("long_sentence.md");
  REQUIRE(one.diagnostics.size() == 1);
  std::string text = render_human(one);
  CHECK(lines_starting(text, "long_sentence.md:") == 1);
  CHECK(text.find("long_sentence.md:1:1 S101 ") != std::string::npos);
  CHECK(text.find("(28/25)") != std::string::npos);
  CHECK(text.find("treatment: too-long sentences") != std::string::npos);
  CHECK(text.find("S101=1") != std::string::npos);

  std::string composite = testing::synthetic_manuscript(
      1200, 11, 31,
      "# Introduction\n\nGlaciers retreat quickly near the poles.\n\n"
      "Bakers knead dough before dawn.\n\n# Body\n\n");
  Report m1 = analyze(parse_document(composite), "m1.md", {});
  std::string rendered = render_human(m1);
  CHECK(rendered.find("FaultyRAP (strength 3)") != std::string::npos);
  CHECK(rendered.find("evidence: S401 S601 S701") != std::string::npos);
}

TEST_CASE("rendered order follows diagnostics") {
  Report r = report_for("excerpt_no_storyline.md");
  std::string text = render_human(r);
  std::size_t last = 0;
  for (const Diagnostic& d : r.diagnostics) {
    std::string needle = std::string("excerpt_no_storyline.md:") + std::to_string(d.span.line) +
                         ":" + std::to_string(d.span.column) + " " + rule_name(d.rule);
    std::size_t at = text.find(needle, last);
    REQUIRE(at != std::string::npos);
    last = at + 1;
  }
}

TEST_CASE("machine rendering schema") {
  Report empty = analyze(parse_document(""), "empty.md", {});
  auto j = nlohmann::json::parse(render_machine(empty));
  CHECK(j["document"] == "empty.md");
  CHECK(j["diagnostics"].empty());
  CHECK(j["maladies"].empty());
  CHECK(j["config"]["max_sentence_words"] == 25);
  CHECK(j["config"]["max_pages"].is_null());

  Report r = report_for("strosis_original.md");
  j = nlohmann::json::parse(render_machine(r));
  REQUIRE(j["diagnostics"].size() == r.diagnostics.size());
  const auto& d = j["diagnostics"][0];
  for (const char* key : {"rule_id", "severity", "start_byte", "end_byte", "line", "column",
                          "measured", "threshold", "message", "evidence"}) {
    CAPTURE(key);
    CHECK(d.contains(key));
  }
  CHECK(d["start_byte"] == r.diagnostics[0].span.start_byte);
  CHECK(d["evidence"][0].contains("start_byte"));
  CHECK(d["evidence"][0].contains("line"));

  Report sup = report_for("superlatives.md");
  j = nlohmann::json::parse(render_machine(sup));
  const auto& m = j["maladies"].back();
  for (const char* key : {"kind", "strength", "evidence_rule_ids", "narrative"}) {
    CHECK(m.contains(key));
  }
  CHECK(m["kind"] == "RhetoricRisk");
}

TEST_CASE("machine round trip") {
  AnalysisConfig cfg;
  cfg.max_pages = 12.5;
  cfg.enabled_rules = parse_rule_list("-S103");
  for (const char* f : {"strosis_original.md", "excerpt_no_storyline.md", "superlatives.md",
                        "chunking_version_a.md", "teachers.md", "clean.md"}) {
    CAPTURE(f);
    Report r = report_for(f, cfg);
    CHECK(parse_machine(render_machine(r)) == r);
  }
}

TEST_CASE("parse_machine rejects bad input") {
  CHECK_THROWS_AS(parse_machine("not json"), ReportFormatError);
  CHECK_THROWS_AS(parse_machine("{}"), ReportFormatError);
  std::string good = render_machine(report_for("strosis_original.md"));
  std::string bad = good;
  bad.replace(bad.find("\"S201\""), 6, "\"S999\"");
  CHECK_THROWS_AS(parse_machine(bad), ReportFormatError);
}

TEST_CASE("summary counts match diagnostics") {
  Report r = report_for("excerpt_no_storyline.md");
  std::size_t total = 0;
  for (const auto& [rule, n] : r.summary()) {
    std::size_t actual = 0;
    for (const Diagnostic& d : r.diagnostics) actual += d.rule == rule ? 1 : 0;
    CHECK(n == actual);
    total += n;
  }
  CHECK(total == r.diagnostics.size());
}

}  // TEST_SUITE
