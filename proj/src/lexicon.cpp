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

#include "clinic/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>

namespace clinic {
namespace {

constexpr std::initializer_list<const char*> kBeForms = {
    "is", "are", "was", "were", "be", "been", "being", "am"};

constexpr std::initializer_list<const char*> kCoordinating = {
    "for", "and", "nor", "but", "or", "yet", "so"};

constexpr std::initializer_list<const char*> kSubordinating = {
    "after", "although", "as", "because", "before", "if", "once", "since",
    "though", "unless", "until", "when", "whenever", "where", "whereas",
    "wherever", "whether", "while", "whilst", "even though", "even if",
    "as if", "as though", "so that", "in order that", "now that",
    "provided that", "given that", "as long as", "as soon as"};

constexpr std::initializer_list<const char*> kConjunctiveAdverbs = {
    "accordingly", "additionally", "also", "besides", "consequently",
    "conversely", "finally", "furthermore", "hence", "however", "indeed",
    "instead", "likewise", "meanwhile", "moreover", "nevertheless",
    "nonetheless", "otherwise", "similarly", "still", "subsequently", "then",
    "therefore", "thus", "first", "second", "third", "next", "specifically",
    "relatedly", "in contrast", "for example", "for instance", "as a result",
    "in addition", "in particular", "on the other hand", "that is",
    "in other words", "by contrast", "in turn"};

constexpr std::initializer_list<const char*> kDemonstratives = {
    "this", "these", "such", "that", "those"};

constexpr std::initializer_list<const char*> kNominalizationSuffixes = {
    "ization", "tion", "sion", "ment", "ence", "ance", "ity"};

constexpr std::initializer_list<const char*> kIntensity = {
    "important", "importantly", "significantly", "interestingly", "crucially",
    "notably"};

constexpr std::initializer_list<const char*> kSuperlatives = {
    "best", "greatest", "noblest", "highest", "finest", "largest",
    "strongest", "deepest", "brightest", "foremost", "utmost", "supreme",
    "unprecedented", "unparalleled", "unrivaled", "unrivalled", "unmatched",
    "unsurpassed", "groundbreaking", "revolutionary", "extraordinary",
    "outstanding", "exceptional", "tremendous"};

constexpr std::initializer_list<const char*> kStopwords = {
    "a", "about", "above", "after", "again", "against", "all", "almost",
    "along", "already", "also", "although", "always", "am", "among", "an",
    "and", "another", "any", "are", "around", "as", "at", "be", "because",
    "been", "before", "being", "below", "between", "both", "but", "by", "can",
    "could", "did", "do", "does", "doing", "done", "down", "during", "each",
    "either", "else", "enough", "even", "ever", "every", "few", "for", "from",
    "further", "had", "has", "have", "having", "he", "her", "here", "hers",
    "herself", "him", "himself", "his", "how", "however", "i", "if", "in",
    "into", "is", "it", "its", "itself", "just", "least", "less", "like",
    "many", "may", "me", "might", "more", "most", "much", "must", "my",
    "myself", "neither", "no", "nor", "not", "now", "of", "off", "often",
    "on", "once", "one", "only", "or", "other", "others", "our", "ours",
    "ourselves", "out", "over", "own", "per", "perhaps", "quite", "rather",
    "same", "several", "shall", "she", "should", "since", "so", "some",
    "such", "than", "that", "the", "their", "theirs", "them", "themselves",
    "then", "there", "these", "they", "this", "those", "though", "through",
    "thus", "to", "too", "toward", "towards", "under", "until", "up", "upon",
    "us", "very", "via", "was", "we", "well", "were", "what", "whatever",
    "when", "where", "whether", "which", "while", "who", "whom", "whose",
    "why", "will", "with", "within", "without", "would", "yet", "you", "your",
    "yours", "yourself", "yourselves"};

constexpr std::initializer_list<const char*> kAbbreviations = {
    "e.g.", "i.e.", "et al.", "etc.", "cf.", "vs.", "dr.", "mr.", "mrs.",
    "ms.", "prof.", "fig.", "figs.", "eq.", "eqs.", "sec.", "ch.", "vol.",
    "pp.", "approx.", "no.", "st.", "jr.", "resp."};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Collapses internal whitespace so phrase entries compare reliably.
std::string normalize_entry(std::string_view entry) {
  std::string lowered = to_lower(trim(entry));
  std::string out;
  bool space = false;
  for (char c : lowered) {
    if (c == ' ' || c == '\t') {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

std::size_t word_count(std::string_view phrase) {
  return static_cast<std::size_t>(std::count(phrase.begin(), phrase.end(), ' ')) + 1;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// One suffix-stripping step; returns the input when nothing applies.
std::string stem_step(const std::string& w) {
  constexpr std::size_t kMinStem = 3;
  auto strip = [&](std::size_t n) { return w.substr(0, w.size() - n); };

  if (ends_with(w, "sses")) return strip(2);
  if (ends_with(w, "ies") && w.size() - 3 >= kMinStem) return strip(3) + "y";
  if (ends_with(w, "ied") && w.size() - 3 >= kMinStem) return strip(3) + "y";
  for (const char* es : {"xes", "ches", "shes", "zzes"}) {
    if (ends_with(w, es) && w.size() - 2 >= kMinStem) return strip(2);
  }
  if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is") && w.size() - 1 >= kMinStem) {
    return strip(1);
  }

  std::string base;
  if (ends_with(w, "ing") && w.size() - 3 >= kMinStem) {
    base = strip(3);
  } else if (ends_with(w, "ed") && !ends_with(w, "eed") &&
             w.size() - 2 >= kMinStem) {
    base = strip(2);
  } else {
    return w;
  }
  // A stem needs a vowel ("string" is not "str" + "ing").
  if (std::none_of(base.begin(), base.end(), [](char c) {
        return is_vowel(c) || c == 'y';
      })) {
    return w;
  }
  std::size_t n = base.size();
  char last = base[n - 1];
  if (n >= 2 && last == base[n - 2] && !is_vowel(last) && last != 'l' &&
      last != 's' && last != 'z') {
    return base.substr(0, n - 1);  // "sitting" -> "sit"
  }
  for (const char* tail : {"at", "bl", "iz", "dg", "as", "us", "ur", "os",
                           "uc", "iv", "rg", "ag", "ys", "ud", "ik", "ok"}) {
    if (ends_with(base, tail)) return base + "e";  // "increased" -> "increase"
  }
  return base;
}

}  // namespace

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string stem(std::string_view word) {
  std::string current = to_lower(word);
  // Iterating to a fixed point makes the result idempotent by construction.
  for (int guard = 0; guard < 16; ++guard) {
    std::string next = stem_step(current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::string intensity_family(std::string_view word) {
  std::string w = to_lower(word);
  if (ends_with(w, "bly") && w.size() > 5) return w.substr(0, w.size() - 1) + "e";
  if (ends_with(w, "ly") && w.size() > 5) return w.substr(0, w.size() - 2);
  return w;
}

const char* connector_class_name(ConnectorClass c) {
  switch (c) {
    case ConnectorClass::kNone: return "none";
    case ConnectorClass::kCoordinating: return "coordinating";
    case ConnectorClass::kSubordinating: return "subordinating";
    case ConnectorClass::kConjunctiveAdverb: return "conjunctive_adverb";
  }
  return "none";
}

const char* word_class_name(WordClass c) {
  switch (c) {
    case WordClass::kBeForm: return "be_forms";
    case WordClass::kCoordinating: return "coordinating_conjunctions";
    case WordClass::kSubordinating: return "subordinating_conjunctions";
    case WordClass::kConjunctiveAdverb: return "conjunctive_adverbs";
    case WordClass::kDemonstrative: return "demonstratives";
    case WordClass::kNominalizationSuffix: return "nominalization_suffixes";
    case WordClass::kIntensity: return "intensity_words";
    case WordClass::kSuperlative: return "superlatives";
    case WordClass::kStopword: return "stopwords";
    case WordClass::kAbbreviation: return "abbreviations";
  }
  return "?";
}

std::optional<WordClass> parse_word_class(std::string_view name) {
  for (WordClass c :
       {WordClass::kBeForm, WordClass::kCoordinating, WordClass::kSubordinating,
        WordClass::kConjunctiveAdverb, WordClass::kDemonstrative,
        WordClass::kNominalizationSuffix, WordClass::kIntensity,
        WordClass::kSuperlative, WordClass::kStopword,
        WordClass::kAbbreviation}) {
    if (name == word_class_name(c)) return c;
  }
  return std::nullopt;
}

Lexicon::Lexicon() {
  auto fill = [this](WordClass c, std::initializer_list<const char*> words) {
    for (const char* w : words) add(c, w);
  };
  fill(WordClass::kBeForm, kBeForms);
  fill(WordClass::kCoordinating, kCoordinating);
  fill(WordClass::kSubordinating, kSubordinating);
  fill(WordClass::kConjunctiveAdverb, kConjunctiveAdverbs);
  fill(WordClass::kDemonstrative, kDemonstratives);
  fill(WordClass::kNominalizationSuffix, kNominalizationSuffixes);
  fill(WordClass::kIntensity, kIntensity);
  fill(WordClass::kSuperlative, kSuperlatives);
  fill(WordClass::kStopword, kStopwords);
  fill(WordClass::kAbbreviation, kAbbreviations);
}

const Lexicon& Lexicon::Default() {
  static const Lexicon lexicon;
  return lexicon;
}

std::set<std::string>& Lexicon::set_for(WordClass c) {
  switch (c) {
    case WordClass::kBeForm: return be_forms_;
    case WordClass::kCoordinating: return coordinating_;
    case WordClass::kSubordinating: return subordinating_;
    case WordClass::kConjunctiveAdverb: return conjunctive_adverbs_;
    case WordClass::kDemonstrative: return demonstratives_;
    case WordClass::kIntensity: return intensity_;
    case WordClass::kSuperlative: return superlatives_;
    case WordClass::kStopword: return stopwords_;
    case WordClass::kAbbreviation: return abbreviations_;
    case WordClass::kNominalizationSuffix: break;
  }
  throw LexiconError("word class has no word set");
}

void Lexicon::add(WordClass word_class, std::string_view entry) {
  std::string word = normalize_entry(entry);
  if (word.empty()) return;
  if (word_class == WordClass::kNominalizationSuffix) {
    if (std::find(nominalization_suffixes_.begin(),
                  nominalization_suffixes_.end(),
                  word) == nominalization_suffixes_.end()) {
      nominalization_suffixes_.push_back(word);
    }
    return;
  }
  const bool connector = word_class == WordClass::kCoordinating ||
                         word_class == WordClass::kSubordinating ||
                         word_class == WordClass::kConjunctiveAdverb;
  if (connector) {
    for (WordClass other : {WordClass::kCoordinating, WordClass::kSubordinating,
                            WordClass::kConjunctiveAdverb}) {
      if (other != word_class && set_for(other).count(word)) {
        throw LexiconError("'" + word + "' is already a " +
                           word_class_name(other) + " entry");
      }
    }
    max_phrase_words_ = std::max(max_phrase_words_, word_count(word));
  }
  set_for(word_class).insert(std::move(word));
}

void Lexicon::extend(std::istream& in) {
  std::optional<WordClass> current;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string entry = trim(line);
    if (entry.empty()) continue;
    if (entry.front() == '[' && entry.back() == ']') {
      std::string name = trim(std::string_view(entry).substr(1, entry.size() - 2));
      current = parse_word_class(name);
      if (!current) {
        throw LexiconError("line " + std::to_string(line_no) +
                           ": unknown word class '" + name + "'");
      }
      continue;
    }
    if (!current) {
      throw LexiconError("line " + std::to_string(line_no) +
                         ": entry before any [class] header");
    }
    try {
      add(*current, entry);
    } catch (const LexiconError& e) {
      throw LexiconError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void Lexicon::extend_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open lexicon file '" + path + "'");
  extend(in);
}

ConnectorClass Lexicon::connector_class(std::string_view word) const {
  std::string w = to_lower(word);
  if (coordinating_.count(w)) return ConnectorClass::kCoordinating;
  if (subordinating_.count(w)) return ConnectorClass::kSubordinating;
  if (conjunctive_adverbs_.count(w)) return ConnectorClass::kConjunctiveAdverb;
  return ConnectorClass::kNone;
}

ConnectorClass Lexicon::connector_class(const Token& token) const {
  if (token.kind != TokenKind::kWord) return ConnectorClass::kNone;
  return connector_class(token.text);
}

bool Lexicon::is_be_form(std::string_view word) const {
  return be_forms_.count(to_lower(word)) > 0;
}

bool Lexicon::is_be_form(const Token& token) const {
  return token.kind == TokenKind::kWord && is_be_form(token.text);
}

bool Lexicon::is_nominalization(std::string_view word) const {
  if (word.size() < 7) return false;
  std::string w = to_lower(word);
  return std::any_of(nominalization_suffixes_.begin(),
                     nominalization_suffixes_.end(),
                     [&](const std::string& suffix) { return ends_with(w, suffix); });
}

bool Lexicon::is_nominalization(const Token& token) const {
  return token.kind == TokenKind::kWord && is_nominalization(token.text);
}

bool Lexicon::is_demonstrative(std::string_view word) const {
  return demonstratives_.count(to_lower(word)) > 0;
}

bool Lexicon::is_stopword(std::string_view word) const {
  return stopwords_.count(to_lower(word)) > 0;
}

bool Lexicon::is_intensity_word(std::string_view word) const {
  return intensity_.count(to_lower(word)) > 0;
}

bool Lexicon::is_superlative(std::string_view word) const {
  return superlatives_.count(to_lower(word)) > 0;
}

bool Lexicon::is_subordinator_phrase(std::string_view phrase) const {
  return subordinating_.count(normalize_entry(phrase)) > 0;
}

bool Lexicon::is_connector_phrase(std::string_view phrase) const {
  std::string p = normalize_entry(phrase);
  return coordinating_.count(p) || subordinating_.count(p) ||
         conjunctive_adverbs_.count(p);
}

bool Lexicon::is_content_word(const Token& token) const {
  return token.kind == TokenKind::kWord && token.text.size() >= 2 &&
         !is_stopword(token.text);
}

}  // namespace clinic
