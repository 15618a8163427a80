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

#include "clinic/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <variant>

namespace clinic {

const char* rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::kS101: return "S101";
    case RuleId::kS102: return "S102";
    case RuleId::kS103: return "S103";
    case RuleId::kS201: return "S201";
    case RuleId::kS301: return "S301";
    case RuleId::kS302: return "S302";
    case RuleId::kS401: return "S401";
    case RuleId::kS501: return "S501";
    case RuleId::kS601: return "S601";
    case RuleId::kS701: return "S701";
    case RuleId::kS702: return "S702";
  }
  return "?";
}

std::optional<RuleId> parse_rule(std::string_view name) {
  for (RuleId rule : kAllRules) {
    if (name == rule_name(rule)) return rule;
  }
  return std::nullopt;
}

namespace {

using IntField = int AnalysisConfig::*;
using RealField = double AnalysisConfig::*;
using OptionalRealField = std::optional<double> AnalysisConfig::*;

struct FieldDef {
  const char* key;
  std::variant<IntField, RealField, OptionalRealField> field;
};

const std::vector<FieldDef>& field_defs() {
  static const std::vector<FieldDef> defs = {
      {"max_sentence_words", &AnalysisConfig::max_sentence_words},
      {"max_paragraph_sentences", &AnalysisConfig::max_paragraph_sentences},
      {"words_per_page", &AnalysisConfig::words_per_page},
      {"footnote_ratio", &AnalysisConfig::footnote_ratio},
      {"intensity_per_page", &AnalysisConfig::intensity_per_page},
      {"superlative_per_page", &AnalysisConfig::superlative_per_page},
      {"min_insertion_words", &AnalysisConfig::min_insertion_words},
      {"max_core_prefix_tokens", &AnalysisConfig::max_core_prefix_tokens},
      {"max_delay_words", &AnalysisConfig::max_delay_words},
      {"max_pages", &AnalysisConfig::max_pages},
      {"link_window_tokens", &AnalysisConfig::link_window_tokens},
      {"keyword_count", &AnalysisConfig::keyword_count},
      {"min_keyword_overlap", &AnalysisConfig::min_keyword_overlap},
  };
  return defs;
}

std::string_view trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_real(std::string_view text) {
  auto parse_one = [](std::string_view t) -> std::optional<double> {
    t = trim(t);
    if (t.empty()) return std::nullopt;
    std::string copy(t);
    char* end = nullptr;
    double v = std::strtod(copy.c_str(), &end);
    if (end != copy.c_str() + copy.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  };
  if (std::size_t slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_one(text.substr(0, slash));
    auto den = parse_one(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return *num / *den;
  }
  return parse_one(text);
}

std::optional<int> parse_int(std::string_view text) {
  text = trim(text);
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const FieldDef& def : field_defs()) out.emplace_back(def.key);
    return out;
  }();
  return keys;
}

void apply_setting(AnalysisConfig& config, std::string_view key,
                   std::string_view value) {
  for (const FieldDef& def : field_defs()) {
    if (key != def.key) continue;
    std::string k(key);
    if (auto* f = std::get_if<IntField>(&def.field)) {
      auto v = parse_int(value);
      if (!v) throw ConfigError(k + ": expected an integer, got '" + std::string(value) + "'", k);
      if (*v <= 0) throw ConfigError(k + ": must be greater than 0", k);
      config.*(*f) = *v;
    } else {
      auto v = parse_real(value);
      if (!v) throw ConfigError(k + ": expected a number, got '" + std::string(value) + "'", k);
      if (*v <= 0) throw ConfigError(k + ": must be greater than 0", k);
      if (auto* r = std::get_if<RealField>(&def.field)) {
        config.*(*r) = *v;
      } else {
        config.*std::get<OptionalRealField>(def.field) = *v;
      }
    }
    return;
  }
  std::string k(key);
  throw ConfigError("unknown configuration key '" + k + "'", k);
}

AnalysisConfig parse_config(std::istream& in, AnalysisConfig base) {
  AnalysisConfig config = std::move(base);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::string_view entry = trim(line);
    if (entry.empty()) continue;
    std::size_t eq = entry.find('=');
    if (eq == std::string_view::npos) {
      std::string k(entry);
      throw ConfigError("line " + std::to_string(line_no) +
                            ": expected key=value, got '" + k + "'",
                        k);
    }
    apply_setting(config, trim(entry.substr(0, eq)), trim(entry.substr(eq + 1)));
  }
  return config;
}

AnalysisConfig load_config(const std::string& path, AnalysisConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'", "");
  return parse_config(in, std::move(base));
}

std::bitset<kRuleCount> parse_rule_list(std::string_view list) {
  std::vector<std::pair<bool, RuleId>> entries;
  bool any_plain = false;
  while (!list.empty()) {
    std::size_t comma = list.find(',');
    std::string_view item = trim(list.substr(0, comma));
    list = comma == std::string_view::npos ? std::string_view() : list.substr(comma + 1);
    if (item.empty()) continue;
    bool disable = item.front() == '-';
    if (disable || item.front() == '+') item.remove_prefix(1);
    auto rule = parse_rule(item);
    if (!rule) {
      std::string id(item);
      throw ConfigError("unknown rule id '" + id + "'", id);
    }
    any_plain = any_plain || !disable;
    entries.emplace_back(!disable, *rule);
  }
  std::bitset<kRuleCount> enabled;
  if (!any_plain) enabled.set();
  for (auto [enable, rule] : entries) {
    enabled.set(static_cast<std::size_t>(rule), enable);
  }
  return enabled;
}

}  // namespace clinic
