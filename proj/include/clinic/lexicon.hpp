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

#ifndef CLINIC_LEXICON_HPP_
#define CLINIC_LEXICON_HPP_

#include <istream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clinic/document.hpp"

namespace clinic {

enum class ConnectorClass { kNone, kCoordinating, kSubordinating, kConjunctiveAdverb };

const char* connector_class_name(ConnectorClass c);

// The word classes a lexicon file may extend. Header names in the file are
// the strings returned by word_class_name().
enum class WordClass {
  kBeForm,
  kCoordinating,
  kSubordinating,
  kConjunctiveAdverb,
  kDemonstrative,
  kNominalizationSuffix,
  kIntensity,
  kSuperlative,
  kStopword,
  kAbbreviation,
};

const char* word_class_name(WordClass c);
std::optional<WordClass> parse_word_class(std::string_view name);

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Word classes consulted by the detectors. All entries are lowercase and all
// lookups are case-insensitive. Connector classes are kept disjoint.
class Lexicon {
 public:
  // The shipped English lexicon.
  Lexicon();

  static const Lexicon& Default();

  ConnectorClass connector_class(std::string_view word) const;
  ConnectorClass connector_class(const Token& token) const;
  bool is_be_form(std::string_view word) const;
  bool is_be_form(const Token& token) const;
  // Length >= 7 and ends in a nominalization suffix.
  bool is_nominalization(std::string_view word) const;
  bool is_nominalization(const Token& token) const;
  bool is_demonstrative(std::string_view word) const;
  bool is_stopword(std::string_view word) const;
  bool is_intensity_word(std::string_view word) const;
  bool is_superlative(std::string_view word) const;
  // Multi-word entries ("even though", "in contrast") live in the same sets
  // as single words; these test a lowercased, space-joined phrase.
  bool is_subordinator_phrase(std::string_view phrase) const;
  bool is_connector_phrase(std::string_view phrase) const;

  // Non-stopword word token with at least two characters.
  bool is_content_word(const Token& token) const;

  const std::set<std::string>& abbreviations() const { return abbreviations_; }
  // Longest number of words in any connector or subordinator phrase.
  std::size_t max_phrase_words() const { return max_phrase_words_; }

  // Adds one entry. Throws LexiconError if a connector word would end up in
  // two connector classes.
  void add(WordClass word_class, std::string_view entry);

  // Reads the extension format: '[class_name]' headers followed by one
  // entry per line. '#' starts a comment. Throws LexiconError.
  void extend(std::istream& in);
  void extend_from_file(const std::string& path);

 private:
  std::set<std::string>& set_for(WordClass c);

  std::set<std::string> be_forms_;
  std::set<std::string> coordinating_;
  std::set<std::string> subordinating_;
  std::set<std::string> conjunctive_adverbs_;
  std::set<std::string> demonstratives_;
  std::vector<std::string> nominalization_suffixes_;
  std::set<std::string> intensity_;
  std::set<std::string> superlatives_;
  std::set<std::string> stopwords_;
  std::set<std::string> abbreviations_;
  std::size_t max_phrase_words_ = 1;
};

// ASCII lowercasing; non-ASCII bytes pass through unchanged.
std::string to_lower(std::string_view text);

// Suffix-stripping stemmer: lowercases and removes -s, -es, -ies, -ed and
// -ing while keeping at least three characters. Idempotent.
std::string stem(std::string_view word);

// Pools adverb and adjective forms of an intensity word under one key:
// "importantly" and "important" both map to "important".
std::string intensity_family(std::string_view word);

}  // namespace clinic

#endif  // CLINIC_LEXICON_HPP_
