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

// Character classification over UTF-8 text. Internal to libclinic.

#ifndef CLINIC_SRC_TEXT_UTIL_HPP_
#define CLINIC_SRC_TEXT_UTIL_HPP_

#include <cstddef>
#include <string_view>

namespace clinic::internal {

struct Utf8Char {
  char32_t cp;
  std::size_t len;
};

// Malformed sequences decode as U+FFFD with length 1.
inline Utf8Char decode_utf8(std::string_view s, std::size_t pos,
                            std::size_t end) {
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  unsigned char b0 = byte(pos);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (pos + len > end) return {0xFFFD, 1};
  for (std::size_t i = 1; i < len; ++i) {
    unsigned char b = byte(pos + i);
    if ((b & 0xC0) != 0x80) return {0xFFFD, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

// The codepoint ending just before pos (never reading before begin).
inline Utf8Char decode_utf8_before(std::string_view s, std::size_t pos,
                                   std::size_t begin) {
  std::size_t start = pos - 1;
  while (start > begin && pos - start < 4 &&
         (static_cast<unsigned char>(s[start]) & 0xC0) == 0x80) {
    --start;
  }
  Utf8Char c = decode_utf8(s, start, pos);
  if (start + c.len != pos) return {0xFFFD, 1};
  return c;
}

inline bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0xA0 || (cp >= 0x2000 && cp <= 0x200B) ||
         cp == 0x202F || cp == 0x205F || cp == 0x3000 || cp == 0xFEFF;
}

inline bool is_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

inline bool is_letter(char32_t cp) {
  if (cp < 0x80) return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  if (cp < 0xC0 || cp == 0xD7 || cp == 0xF7 || cp == 0xFFFD) return false;
  // General punctuation, super/subscripts, symbols, arrows, math, boxes.
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
  if (cp >= 0xFF00 && cp <= 0xFF20) return false;
  if (cp >= 0x1F000) return false;
  return true;
}

inline bool is_alnum(char32_t cp) { return is_digit(cp) || is_letter(cp); }

inline bool is_upper_start(char32_t cp) {
  // Non-ASCII letters are accepted: case is not tracked outside ASCII.
  return (cp >= 'A' && cp <= 'Z') || is_digit(cp) || (cp >= 0xC0 && is_letter(cp));
}

// Hyphens and apostrophes that glue "o-rings" or "don't" into one word.
inline bool is_internal_joiner(char32_t cp) {
  return cp == '-' || cp == '\'' || cp == 0x2019 || cp == 0x2010 ||
         cp == 0x2011;
}

inline bool is_footnote_id_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-';
}

inline bool is_sentence_terminator(std::string_view t) {
  return t == "." || t == "!" || t == "?" || t == "\xE2\x80\xA6";  // U+2026
}

inline bool is_closing_punct(std::string_view t) {
  return t == ")" || t == "]" || t == "\"" || t == "'" ||
         t == "\xE2\x80\x9D" || t == "\xE2\x80\x99" || t == "\xC2\xBB";
}

inline bool is_opening_punct(std::string_view t) {
  return t == "(" || t == "[" || t == "\"" || t == "'" ||
         t == "\xE2\x80\x9C" || t == "\xE2\x80\x98" || t == "\xC2\xAB";
}

}  // namespace clinic::internal

#endif  // CLINIC_SRC_TEXT_UTIL_HPP_
