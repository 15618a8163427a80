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

#include "clinic/document.hpp"

#include <map>
#include <optional>

#include "clinic/lexicon.hpp"
#include "text_util.hpp"

namespace clinic {

std::vector<const Paragraph*> Document::paragraphs() const {
  std::vector<const Paragraph*> out;
  for (const Section& section : sections_) {
    for (const Paragraph& p : section.paragraphs) out.push_back(&p);
  }
  return out;
}

std::string_view Document::text(const Span& span) const {
  return std::string_view(source_).substr(span.start_byte, span.size());
}

namespace internal {
namespace {

// True when the period ending at `end` closes a known abbreviation such as
// "e.g." or "et al.".
bool ends_with_abbreviation(std::string_view source, std::size_t end,
                            const Lexicon& lexicon) {
  for (const std::string& abbr : lexicon.abbreviations()) {
    if (abbr.size() > end) continue;
    std::size_t start = end - abbr.size();
    if (to_lower(source.substr(start, abbr.size())) != abbr) continue;
    if (start == 0) return true;
    char before = source[start - 1];
    if (before == ' ' || before == '\t' || before == '\n' || before == '\r' ||
        before == '(' || before == '[' || before == '"' || before == '\'') {
      return true;
    }
    Utf8Char prev = decode_utf8_before(source, start, 0);
    if (is_space(prev.cp) || prev.cp == 0x201C || prev.cp == 0x2018) return true;
  }
  return false;
}

bool starts_new_sentence(const std::vector<Token>& tokens, std::size_t i) {
  if (i < tokens.size() && is_opening_punct(tokens[i].text) &&
      i + 1 < tokens.size() &&
      tokens[i + 1].span.start_byte == tokens[i].span.end_byte) {
    ++i;
  }
  if (i >= tokens.size()) return false;
  const std::string& t = tokens[i].text;
  Utf8Char c = decode_utf8(t, 0, t.size());
  return is_upper_start(c.cp) || tokens[i].kind == TokenKind::kFootnoteMarker;
}

}  // namespace

std::vector<Sentence> segment_tokens(std::string_view source,
                                     std::vector<Token> tokens,
                                     const Lexicon& lexicon,
                                     const LineIndex& index) {
  std::vector<Sentence> sentences;
  std::size_t first = 0;
  auto emit = [&](std::size_t last) {
    Sentence s;
    s.tokens.assign(std::make_move_iterator(tokens.begin() + first),
                    std::make_move_iterator(tokens.begin() + last + 1));
    s.span = index.make_span(s.tokens.front().span.start_byte,
                             s.tokens.back().span.end_byte);
    s.index_in_paragraph = sentences.size();
    sentences.push_back(std::move(s));
    first = last + 1;
  };

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::kPunctuation ||
        !is_sentence_terminator(tokens[i].text)) {
      continue;
    }
    // Absorb "?!", "..." and closing quotes or brackets glued to the
    // terminator.
    std::size_t last = i;
    while (last + 1 < tokens.size() &&
           tokens[last + 1].span.start_byte == tokens[last].span.end_byte &&
           tokens[last + 1].kind != TokenKind::kWord &&
           tokens[last + 1].kind != TokenKind::kNumber &&
           (is_sentence_terminator(tokens[last + 1].text) ||
            is_closing_punct(tokens[last + 1].text) ||
            tokens[last + 1].kind == TokenKind::kFootnoteMarker)) {
      ++last;
    }
    if (last + 1 == tokens.size()) break;
    const Token& next = tokens[last + 1];
    bool boundary = next.span.start_byte > tokens[last].span.end_byte &&
                    starts_new_sentence(tokens, last + 1);
    if (boundary && tokens[i].text == "." &&
        ends_with_abbreviation(source, tokens[i].span.end_byte, lexicon)) {
      boundary = false;
    }
    if (boundary) emit(last);
    i = last;
  }
  if (first < tokens.size()) emit(tokens.size() - 1);
  return sentences;
}

}  // namespace internal

std::vector<Sentence> segment_sentences(std::string_view paragraph_text,
                                        const Lexicon& lexicon) {
  internal::LineIndex index(paragraph_text);
  auto tokens = internal::tokenize_range(paragraph_text, 0,
                                         paragraph_text.size(), false, index);
  return internal::segment_tokens(paragraph_text, std::move(tokens), lexicon,
                                  index);
}

namespace {

struct Line {
  std::size_t begin;  // first byte
  std::size_t end;    // one past the last byte, excluding '\n'
};

std::vector<Line> split_lines(std::string_view s) {
  std::vector<Line> lines;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '\n') {
      std::size_t end = i;
      if (end > begin && s[end - 1] == '\r') --end;
      lines.push_back({begin, end});
      begin = i + 1;
    }
  }
  return lines;
}

std::size_t skip_spaces(std::string_view s, std::size_t pos, std::size_t end) {
  while (pos < end) {
    auto c = internal::decode_utf8(s, pos, end);
    if (!internal::is_space(c.cp)) break;
    pos += c.len;
  }
  return pos;
}

std::size_t trim_end(std::string_view s, std::size_t begin, std::size_t end) {
  while (end > begin) {
    auto c = internal::decode_utf8_before(s, end, begin);
    if (!internal::is_space(c.cp)) break;
    end -= c.len;
  }
  return end;
}

bool is_blank(std::string_view s, const Line& line) {
  return skip_spaces(s, line.begin, line.end) == line.end;
}

struct Heading {
  int level;
  std::string text;
};

// ATX heading: up to three spaces, one to six '#', then a space or EOL.
std::optional<Heading> parse_heading(std::string_view s, const Line& line) {
  std::size_t pos = line.begin;
  int indent = 0;
  while (pos < line.end && s[pos] == ' ' && indent < 3) {
    ++pos;
    ++indent;
  }
  int level = 0;
  while (pos < line.end && s[pos] == '#') {
    ++pos;
    ++level;
  }
  if (level == 0 || level > 6) return std::nullopt;
  if (pos < line.end && s[pos] != ' ' && s[pos] != '\t') return std::nullopt;
  std::size_t begin = skip_spaces(s, pos, line.end);
  std::size_t end = trim_end(s, begin, line.end);
  // Optional closing sequence of '#'.
  std::size_t closing = end;
  while (closing > begin && s[closing - 1] == '#') --closing;
  if (closing < end && (closing == begin || s[closing - 1] == ' ')) {
    end = trim_end(s, begin, closing);
  }
  return Heading{level, std::string(s.substr(begin, end - begin))};
}

struct FootnoteDef {
  std::string id;
  std::size_t label_begin;
  std::size_t label_end;
  std::size_t body_begin;
};

// "[^id]: body" at the start of a line (up to three spaces of indent).
std::optional<FootnoteDef> parse_footnote_def(std::string_view s,
                                              const Line& line) {
  std::size_t pos = line.begin;
  int indent = 0;
  while (pos < line.end && s[pos] == ' ' && indent < 3) {
    ++pos;
    ++indent;
  }
  if (pos + 2 > line.end || s[pos] != '[' || s[pos + 1] != '^') {
    return std::nullopt;
  }
  std::size_t i = pos + 2;
  while (i < line.end && internal::is_footnote_id_char(s[i])) ++i;
  if (i == pos + 2 || i + 1 >= line.end || s[i] != ']' || s[i + 1] != ':') {
    return std::nullopt;
  }
  return FootnoteDef{std::string(s.substr(pos + 2, i - pos - 2)), pos, i + 2,
                     i + 2};
}

}  // namespace

Document parse_document(std::string source, InputFormat format,
                        const Lexicon& lexicon) {
  Document doc;
  doc.source_ = std::move(source);
  doc.format_ = format;
  const std::string_view s = doc.source_;
  const bool markdown = format == InputFormat::kMarkdown;
  internal::LineIndex index(s);

  std::vector<Line> lines = split_lines(s);
  std::vector<Section> sections(1);  // implicit root
  bool saw_heading = false;

  struct Body {
    FootnoteDef def;
    std::size_t end;
  };
  std::vector<Body> bodies;
  std::vector<Token> markers;

  auto add_paragraph = [&](std::size_t begin, std::size_t end) {
    std::vector<Token> tokens =
        internal::tokenize_range(s, begin, end, markdown, index);
    if (tokens.empty()) return;
    for (const Token& t : tokens) {
      if (t.kind == TokenKind::kFootnoteMarker) markers.push_back(t);
    }
    Paragraph p;
    p.span = index.make_span(tokens.front().span.start_byte,
                             tokens.back().span.end_byte);
    p.sentences = internal::segment_tokens(s, std::move(tokens), lexicon, index);
    Section& section = sections.back();
    p.index_in_section = section.paragraphs.size();
    section.paragraphs.push_back(std::move(p));
  };

  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& line = lines[i];
    if (is_blank(s, line)) {
      ++i;
      continue;
    }
    if (markdown) {
      if (auto heading = parse_heading(s, line)) {
        Section section;
        section.heading_text = std::move(heading->text);
        section.level = heading->level;
        sections.push_back(std::move(section));
        saw_heading = true;
        ++i;
        continue;
      }
      if (auto def = parse_footnote_def(s, line)) {
        std::size_t end = line.end;
        ++i;
        while (i < lines.size() && !is_blank(s, lines[i]) &&
               !parse_heading(s, lines[i]) && !parse_footnote_def(s, lines[i])) {
          end = lines[i].end;
          ++i;
        }
        bodies.push_back({std::move(*def), end});
        continue;
      }
    }
    // Paragraph: consecutive non-blank lines that are not structural.
    std::size_t begin = line.begin;
    std::size_t end = line.end;
    ++i;
    while (i < lines.size() && !is_blank(s, lines[i]) &&
           !(markdown && (parse_heading(s, lines[i]) ||
                          parse_footnote_def(s, lines[i])))) {
      end = lines[i].end;
      ++i;
    }
    add_paragraph(begin, end);
  }

  if (saw_heading && sections.front().paragraphs.empty()) {
    sections.erase(sections.begin());
  }
  doc.sections_ = std::move(sections);

  // Pair markers with definitions, in order of first marker appearance.
  std::map<std::string, const Body*> by_id;
  for (const Body& body : bodies) {
    if (by_id.count(body.def.id)) {
      throw ParseError("footnote '" + body.def.id + "' is defined twice",
                       body.def.id,
                       index.make_span(body.def.label_begin, body.def.label_end));
    }
    by_id[body.def.id] = &body;
  }
  std::map<std::string, bool> referenced;
  for (const Token& marker : markers) {
    std::string id = marker.text.substr(2, marker.text.size() - 3);
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw ParseError("footnote marker '" + id + "' has no definition", id,
                       marker.span);
    }
    if (referenced[id]) continue;
    referenced[id] = true;
    const Body& body = *it->second;
    std::size_t body_begin = skip_spaces(s, body.def.body_begin, body.end);
    std::size_t body_end = trim_end(s, body_begin, body.end);
    if (body_begin == body_end) {
      throw ParseError("footnote '" + id + "' has an empty definition", id,
                       index.make_span(body.def.label_begin, body.def.label_end));
    }
    doc.footnotes_.push_back(
        Footnote{id, marker.span, index.make_span(body_begin, body_end)});
  }
  for (const Body& body : bodies) {
    if (!referenced.count(body.def.id)) {
      throw ParseError("footnote '" + body.def.id + "' is never referenced",
                       body.def.id,
                       index.make_span(body.def.label_begin, body.def.label_end));
    }
  }

  doc.total_words_ = count_words(doc);
  return doc;
}

Document parse_document(std::string source, InputFormat format) {
  return parse_document(std::move(source), format, Lexicon::Default());
}

std::size_t count_words(const Sentence& sentence) {
  std::size_t n = 0;
  for (const Token& t : sentence.tokens) n += t.counts_as_word() ? 1 : 0;
  return n;
}

std::size_t count_words(const Paragraph& paragraph) {
  std::size_t n = 0;
  for (const Sentence& s : paragraph.sentences) n += count_words(s);
  return n;
}

std::size_t count_words(const Document& document) {
  std::size_t n = 0;
  for (const Section& section : document.sections()) {
    for (const Paragraph& p : section.paragraphs) n += count_words(p);
  }
  return n;
}

double estimate_pages(const Document& document, std::size_t words_per_page) {
  if (words_per_page == 0) {
    throw std::invalid_argument("words_per_page must be at least 1");
  }
  return static_cast<double>(document.total_words()) /
         static_cast<double>(words_per_page);
}

const std::vector<Footnote>& extract_footnotes(const Document& document) {
  return document.footnotes();
}

}  // namespace clinic
