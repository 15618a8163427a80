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


// Fixture loading and a seeded random corpus shared by the unit tests and
// the acceptance binary.

#ifndef CLINIC_TESTS_SUPPORT_HPP_
#define CLINIC_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifndef CLINIC_FIXTURE_DIR
#error "CLINIC_FIXTURE_DIR must be defined"
#endif

namespace clinic::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(CLINIC_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Lines of the form "label|text"; '#' lines and blank lines are skipped.
inline std::vector<std::pair<std::string, std::string>> read_table(const std::string& name) {
  std::istringstream in(read_fixture(name));
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t bar = line.find('|');
    if (bar == std::string::npos) throw std::runtime_error("bad row in " + name);
    rows.emplace_back(line.substr(0, bar), line.substr(bar + 1));
  }
  return rows;
}

// A generated markdown document kept as its parts, so paragraphs can be
// dropped and the text rebuilt.
struct GeneratedDoc {
  std::vector<std::pair<int, std::vector<std::string>>> sections;  // heading level 0 = none
  std::vector<std::string> headings;
  std::vector<std::string> footnote_defs;

  std::string render() const {
    std::string out;
    for (std::size_t s = 0; s < sections.size(); ++s) {
      if (sections[s].first > 0) {
        out += std::string(static_cast<std::size_t>(sections[s].first), '#') + " " +
               headings[s] + "\n\n";
      }
      for (const std::string& p : sections[s].second) out += p + "\n\n";
    }
    for (const std::string& f : footnote_defs) out += f + "\n\n";
    return out;
  }
};

class CorpusGenerator {
 public:
  explicit CorpusGenerator(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  std::string word() {
    static const std::vector<std::string> words = {
        "model",   "data",     "method",    "methods",    "result",   "teachers",
        "o-rings", "t-rail",   "telerium",  "liminum",    "spores",   "rate",
        "is",      "was",      "were",      "the",        "a",        "of",
        "and",     "but",      "because",   "moreover",   "this",     "such",
        "important", "best",   "most",      "efficient",  "consolidation",
        "restriction", "discussion", "it's", "authors'",  "naïve",    "coefficient",
        "increasing", "shows",  "fluctuates", "between",  "percent",  "we",
        "study",   "Liu",      "e.g.",      "i.e.",       "et",       "al.",
        "0.35",    "1,000",    "12",        "2016",       "café",     "résumé"};
    return pick(words);
  }

  // One sentence ending with a terminator. Inner punctuation varies.
  std::string sentence(bool footnotes_allowed) {
    static const std::vector<std::string> openers = {
        "The", "We", "Such", "Moreover,", "In", "This", "Strosis", "Method", "G", "Results"};
    static const std::vector<std::string> enders = {".", ".", ".", "?", "!", "…"};
    std::string s = pick(openers);
    int n = uniform(1, 40);
    for (int i = 0; i < n; ++i) {
      int r = uniform(0, 19);
      if (r == 0) s += ",";
      else if (r == 1) s += ";";
      else if (r == 2) s += " (" + word() + ")";
      else if (r == 3) s += " \"" + word() + "\"";
      else if (r == 4 && i > 0) s += " -";
      s += " " + word();
    }
    s += pick(enders);
    if (footnotes_allowed && uniform(0, 9) == 0) {
      std::string id = "n" + std::to_string(next_footnote_++);
      s += "[^" + id + "]";
      pending_.push_back("[^" + id + "]: Note " + word() + " " + word() + ".");
    }
    return s;
  }

  std::string paragraph(bool footnotes_allowed) {
    std::string p;
    int n = uniform(1, 9);
    for (int i = 0; i < n; ++i) {
      if (i > 0) p += uniform(0, 5) == 0 ? "\n" : " ";
      p += sentence(footnotes_allowed);
    }
    return p;
  }

  GeneratedDoc document(bool footnotes_allowed = true) {
    pending_.clear();
    GeneratedDoc doc;
    int sections = uniform(1, 4);
    for (int s = 0; s < sections; ++s) {
      int level = (s == 0 && uniform(0, 1) == 0) ? 0 : uniform(1, 3);
      std::vector<std::string> paragraphs;
      int n = uniform(s == 0 ? 0 : 1, 6);
      for (int i = 0; i < n; ++i) paragraphs.push_back(paragraph(footnotes_allowed));
      doc.sections.emplace_back(level, std::move(paragraphs));
      doc.headings.push_back("Section " + word() + " " + word());
    }
    doc.footnote_defs = pending_;
    return doc;
  }

 private:
  std::mt19937 rng_;
  int next_footnote_ = 1;
  std::vector<std::string> pending_;
};

// Paragraphs of five ten-word sentences. The first `intensity` sentences use
// "important"; the first `footnotes` paragraphs carry one marker each.
// Total body words = sentences * 10.
inline std::string synthetic_manuscript(std::size_t sentences, std::size_t footnotes,
                                        std::size_t intensity,
                                        const std::string& prefix = "") {
  std::string out = prefix;
  std::string defs;
  std::size_t paragraph = 0;
  for (std::size_t i = 0; i < sentences; ++i) {
    bool first = i % 5 == 0;
    if (i > 0) out += first ? "\n\n" : " ";
    out += i < intensity
               ? "The important regions show stable yields across every recorded season."
               : "The sampled regions show stable yields across every recorded season.";
    if (first) {
      if (paragraph < footnotes) {
        std::string id = std::to_string(paragraph + 1);
        out += "[^" + id + "]";
        defs += "[^" + id + "]: Source table " + id + ".\n\n";
      }
      ++paragraph;
    }
  }
  if (paragraph < footnotes) throw std::invalid_argument("too many footnotes for length");
  return out + "\n\n" + defs;
}

}  // namespace clinic::testing

#endif  // CLINIC_TESTS_SUPPORT_HPP_
