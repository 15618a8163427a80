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

#ifndef CLINIC_DOCUMENT_HPP_
#define CLINIC_DOCUMENT_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clinic {

class Lexicon;

// Half-open byte range into the source text. Line and column are 1-based and
// refer to start_byte; the column counts codepoints, not bytes.
struct Span {
  std::size_t start_byte = 0;
  std::size_t end_byte = 0;
  int line = 1;
  int column = 1;

  std::size_t size() const { return end_byte - start_byte; }
  bool contains(const Span& other) const {
    return start_byte <= other.start_byte && other.end_byte <= end_byte;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class TokenKind { kWord, kNumber, kPunctuation, kFootnoteMarker };

const char* token_kind_name(TokenKind kind);

struct Token {
  std::string text;
  TokenKind kind = TokenKind::kPunctuation;
  Span span;
  // Lowercased, suffix-stripped form. Empty for anything but kWord.
  std::string stem;

  // Words and numbers both count towards word totals.
  bool counts_as_word() const {
    return kind == TokenKind::kWord || kind == TokenKind::kNumber;
  }
  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  Span span;
  std::vector<Token> tokens;
  std::size_t index_in_paragraph = 0;
  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Paragraph {
  Span span;
  std::vector<Sentence> sentences;
  std::size_t index_in_section = 0;

  const Sentence& first_sentence() const { return sentences.front(); }
  friend bool operator==(const Paragraph&, const Paragraph&) = default;
};

struct Section {
  // Empty for the implicit root section.
  std::string heading_text;
  int level = 0;
  std::vector<Paragraph> paragraphs;
  friend bool operator==(const Section&, const Section&) = default;
};

struct Footnote {
  std::string id;
  Span marker_span;
  Span body_span;
  friend bool operator==(const Footnote&, const Footnote&) = default;
};

enum class InputFormat { kPlain, kMarkdown };

// Raised for structural defects in the input, such as a footnote marker
// without a definition.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string footnote_id, Span span)
      : std::runtime_error(message),
        footnote_id_(std::move(footnote_id)),
        span_(span) {}

  const std::string& footnote_id() const { return footnote_id_; }
  const Span& span() const { return span_; }

 private:
  std::string footnote_id_;
  Span span_;
};

// Immutable parsed manuscript. Only parse_document() builds one.
class Document {
 public:
  Document() = default;

  const std::string& source() const { return source_; }
  InputFormat format() const { return format_; }
  const std::vector<Section>& sections() const { return sections_; }
  const std::vector<Footnote>& footnotes() const { return footnotes_; }
  // Word and number tokens over body paragraphs; footnote bodies excluded.
  std::size_t total_words() const { return total_words_; }

  // Paragraphs of every section, in document order.
  std::vector<const Paragraph*> paragraphs() const;
  std::string_view text(const Span& span) const;

  friend bool operator==(const Document&, const Document&) = default;

 private:
  friend Document parse_document(std::string source, InputFormat format,
                                 const Lexicon& lexicon);

  std::string source_;
  InputFormat format_ = InputFormat::kMarkdown;
  std::vector<Section> sections_;
  std::vector<Footnote> footnotes_;
  std::size_t total_words_ = 0;
};

// Throws ParseError on unmatched footnote markers or definitions.
Document parse_document(std::string source, InputFormat format,
                        const Lexicon& lexicon);
Document parse_document(std::string source,
                        InputFormat format = InputFormat::kMarkdown);

// Words are maximal runs of letters and digits joined by internal hyphens or
// apostrophes, so "o-rings" is one token. Digit-only runs (with internal
// '.' or ',' between digits) are numbers. Everything else that is not
// whitespace becomes a single-codepoint punctuation token. With
// footnote_markers set, "[^id]" is recognised as one marker token.
std::vector<Token> tokenize(std::string_view text,
                            bool footnote_markers = false);

std::vector<Sentence> segment_sentences(std::string_view paragraph_text,
                                        const Lexicon& lexicon);

std::size_t count_words(const Sentence& sentence);
std::size_t count_words(const Paragraph& paragraph);
std::size_t count_words(const Document& document);

// total_words / words_per_page. Throws std::invalid_argument when
// words_per_page is zero.
double estimate_pages(const Document& document, std::size_t words_per_page);

const std::vector<Footnote>& extract_footnotes(const Document& document);

namespace internal {

// Maps byte offsets of a source text to line/column positions.
class LineIndex {
 public:
  explicit LineIndex(std::string_view source);
  Span make_span(std::size_t start, std::size_t end) const;

 private:
  std::string_view source_;
  std::vector<std::size_t> line_starts_;
};

// Tokenizes source[begin, end) producing spans relative to the whole source.
std::vector<Token> tokenize_range(std::string_view source, std::size_t begin,
                                  std::size_t end, bool footnote_markers,
                                  const LineIndex& index);

// Groups an already tokenized paragraph into sentences.
std::vector<Sentence> segment_tokens(std::string_view source,
                                     std::vector<Token> tokens,
                                     const Lexicon& lexicon,
                                     const LineIndex& index);

}  // namespace internal

}  // namespace clinic

#endif  // CLINIC_DOCUMENT_HPP_
