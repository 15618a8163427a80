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

#ifndef CLINIC_CONFIG_HPP_
#define CLINIC_CONFIG_HPP_

#include <array>
#include <bitset>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clinic {

enum class RuleId {
  kS101,  // long sentence
  kS102,  // hidden verb
  kS103,  // broken or delayed sentence core
  kS201,  // missing link between sentences
  kS301,  // long paragraph
  kS302,  // paragraph opens on a detail
  kS401,  // storyline break between first sentences
  kS501,  // document longer than the configured norm
  kS601,  // too many footnotes
  kS701,  // intensity word overuse
  kS702,  // superlative density
};

inline constexpr std::size_t kRuleCount = 11;

inline constexpr std::array<RuleId, kRuleCount> kAllRules = {
    RuleId::kS101, RuleId::kS102, RuleId::kS103, RuleId::kS201,
    RuleId::kS301, RuleId::kS302, RuleId::kS401, RuleId::kS501,
    RuleId::kS601, RuleId::kS701, RuleId::kS702};

const char* rule_name(RuleId rule);
std::optional<RuleId> parse_rule(std::string_view name);

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, std::string key)
      : std::runtime_error(message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct AnalysisConfig {
  int max_sentence_words = 25;
  int max_paragraph_sentences = 6;
  int words_per_page = 400;
  double footnote_ratio = 1.0 / 3.0;
  double intensity_per_page = 1.0;
  double superlative_per_page = 3.0;
  int min_insertion_words = 8;
  int max_core_prefix_tokens = 4;
  int max_delay_words = 12;
  std::optional<double> max_pages;
  int link_window_tokens = 3;
  int keyword_count = 15;
  int min_keyword_overlap = 2;

  // Not a threshold: which detectors run. All enabled by default.
  std::bitset<kRuleCount> enabled_rules = std::bitset<kRuleCount>().set();

  bool enabled(RuleId rule) const {
    return enabled_rules.test(static_cast<std::size_t>(rule));
  }

  friend bool operator==(const AnalysisConfig&, const AnalysisConfig&) = default;
};

// Names of every threshold field, in declaration order. These are the only
// keys accepted by apply_setting() and load_config().
const std::vector<std::string>& config_keys();

// Sets one field from its textual value. Integer fields need a positive
// integer; real fields accept decimals or a fraction such as "1/3".
// Throws ConfigError naming the key.
void apply_setting(AnalysisConfig& config, std::string_view key,
                   std::string_view value);

// Flat key=value lines, '#' comments. Keys not present keep their value in
// `base` (the defaults unless given).
AnalysisConfig parse_config(std::istream& in, AnalysisConfig base = {});
AnalysisConfig load_config(const std::string& path, AnalysisConfig base = {});

// "S101,S102" enables only the listed rules; "-S201" disables a rule from
// the set (all rules when no plain id is given). Throws ConfigError on an
// unknown id.
std::bitset<kRuleCount> parse_rule_list(std::string_view list);

}  // namespace clinic

#endif  // CLINIC_CONFIG_HPP_
