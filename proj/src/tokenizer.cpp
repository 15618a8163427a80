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

#include "clinic/document.hpp"
#include "clinic/lexicon.hpp"
#include "text_util.hpp"

namespace clinic {

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kNumber: return "number";
    case TokenKind::kPunctuation: return "punctuation";
    case TokenKind::kFootnoteMarker: return "footnote_marker";
  }
  return "?";
}

namespace internal {

LineIndex::LineIndex(std::string_view source) : source_(source) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] == '\n') line_starts_.push_back(i + 1);
  }
}

Span LineIndex::make_span(std::size_t start, std::size_t end) const {
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), start);
  std::size_t line_idx = static_cast<std::size_t>(it - line_starts_.begin()) - 1;
  std::size_t line_start = line_starts_[line_idx];
  int column = 1;
  for (std::size_t i = line_start; i < start; ++i) {
    // Continuation bytes do not start a codepoint.
    if ((static_cast<unsigned char>(source_[i]) & 0xC0) != 0x80) ++column;
  }
  return Span{start, end, static_cast<int>(line_idx) + 1, column};
}

namespace {

// Length of "[^id]" at pos, or 0 when there is no marker there.
std::size_t footnote_marker_length(std::string_view s, std::size_t pos,
                                   std::size_t end) {
  if (pos + 4 > end || s[pos] != '[' || s[pos + 1] != '^') return 0;
  std::size_t i = pos + 2;
  while (i < end && is_footnote_id_char(s[i])) ++i;
  if (i == pos + 2 || i >= end || s[i] != ']') return 0;
  return i + 1 - pos;
}

}  // namespace

std::vector<Token> tokenize_range(std::string_view s, std::size_t begin,
                                  std::size_t end, bool footnote_markers,
                                  const LineIndex& index) {
  std::vector<Token> tokens;
  std::size_t pos = begin;
  while (pos < end) {
    Utf8Char c = decode_utf8(s, pos, end);
    if (is_space(c.cp)) {
      pos += c.len;
      continue;
    }
    if (footnote_markers) {
      if (std::size_t n = footnote_marker_length(s, pos, end); n > 0) {
        tokens.push_back(Token{std::string(s.substr(pos, n)),
                               TokenKind::kFootnoteMarker,
                               index.make_span(pos, pos + n), {}});
        pos += n;
        continue;
      }
    }

    bool leading_decimal = false;
    if (c.cp == '.' && pos + 1 < end && is_digit(s[pos + 1])) {
      Utf8Char prev = pos > begin ? decode_utf8_before(s, pos, begin)
                                  : Utf8Char{' ', 1};
      leading_decimal = !is_alnum(prev.cp);
    }

    if (is_alnum(c.cp) || leading_decimal) {
      std::size_t start = pos;
      bool has_letter = is_letter(c.cp);
      pos += c.len;
      while (pos < end) {
        Utf8Char next = decode_utf8(s, pos, end);
        if (is_alnum(next.cp)) {
          has_letter = has_letter || is_letter(next.cp);
          pos += next.len;
          continue;
        }
        if (pos + next.len >= end) break;
        Utf8Char after = decode_utf8(s, pos + next.len, end);
        if (!is_alnum(after.cp)) break;
        if (is_internal_joiner(next.cp)) {
          pos += next.len;
          continue;
        }
        // Decimal point or digit grouping inside a number: "0.35", "1,000".
        if ((next.cp == '.' || next.cp == ',') && !has_letter &&
            is_digit(static_cast<char32_t>(s[pos - 1])) && is_digit(after.cp)) {
          pos += next.len;
          continue;
        }
        break;
      }
      Token token{std::string(s.substr(start, pos - start)),
                  has_letter ? TokenKind::kWord : TokenKind::kNumber,
                  index.make_span(start, pos), {}};
      if (has_letter) token.stem = stem(token.text);
      tokens.push_back(std::move(token));
      continue;
    }

    tokens.push_back(Token{std::string(s.substr(pos, c.len)),
                           TokenKind::kPunctuation,
                           index.make_span(pos, pos + c.len), {}});
    pos += c.len;
  }
  return tokens;
}

}  // namespace internal

std::vector<Token> tokenize(std::string_view text, bool footnote_markers) {
  internal::LineIndex index(text);
  return internal::tokenize_range(text, 0, text.size(), footnote_markers,
                                  index);
}

}  // namespace clinic
