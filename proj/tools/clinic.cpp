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


// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <future>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clinic/clinic.h"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitError = 2;

struct ConfigDeleter {
  void operator()(clinic_config* c) const { clinic_config_destroy(c); }
};
struct ReportDeleter {
  void operator()(clinic_report* r) const { clinic_report_destroy(r); }
};
using ConfigPtr = std::unique_ptr<clinic_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<clinic_report, ReportDeleter>;

struct Outcome {
  bool ok = false;
  bool findings = false;
  std::string text;
  std::string error;
};

std::string error_text(clinic_status status) {
  std::string msg = clinic_status_string(status);
  std::string detail = clinic_last_error();
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

Outcome analyze_one(const clinic_config* config, const std::string& path,
                    clinic_format format, clinic_output output) {
  Outcome outcome;
  clinic_report* raw = nullptr;
  clinic_status status;
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)),
                     std::istreambuf_iterator<char>());
    status = clinic_analyze_text(config, text.data(), text.size(), "<stdin>", format, &raw);
  } else {
    status = clinic_analyze_file(config, path.c_str(), format, &raw);
  }
  ReportPtr report(raw);
  if (status != CLINIC_OK) {
    outcome.error = path + ": " + error_text(status);
    return outcome;
  }
  char* rendered = nullptr;
  status = clinic_report_render(report.get(), output, &rendered);
  if (status != CLINIC_OK) {
    outcome.error = path + ": " + error_text(status);
    return outcome;
  }
  outcome.text = rendered;
  clinic_free(rendered);
  outcome.ok = true;
  outcome.findings = clinic_report_diagnostic_count(report.get()) > 0 ||
                     clinic_report_malady_count(report.get()) > 0;
  return outcome;
}

bool configure(clinic_config* config, const std::string& key, const std::string& value) {
  clinic_status status = clinic_config_set(config, key.c_str(), value.c_str());
  if (status == CLINIC_OK) return true;
  std::cerr << "clinic: --" << key << ": " << error_text(status) << "\n";
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clinic: diagnose writing problems in research manuscripts"};
  app.set_version_flag("--version", std::string(clinic_version()));
  app.require_subcommand(1);

  CLI::App* analyze = app.add_subcommand("analyze", "Analyse one or more documents");
  std::vector<std::string> paths;
  std::string format = "markdown";
  std::string output = "human";
  std::string config_path;
  std::string rules;
  std::string lexicon_path;
  analyze->add_option("paths", paths, "Documents to analyse ('-' reads stdin)")->required();
  analyze->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"plain", "markdown"}))
      ->capture_default_str();
  analyze->add_option("--output", output, "Report format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  analyze->add_option("--config", config_path, "key=value threshold file");
  analyze->add_option("--rules", rules, "Rule selection, e.g. S101,S102 or -S201");
  analyze->add_option("--lexicon", lexicon_path, "Lexicon extension file");

  // Flag name = threshold key with '-' for '_'.
  const std::vector<std::string> threshold_keys = {
      "max_sentence_words",   "max_paragraph_sentences", "words_per_page",
      "max_pages",            "footnote_ratio",          "intensity_per_page",
      "superlative_per_page", "min_insertion_words",     "max_core_prefix_tokens",
      "max_delay_words",      "link_window_tokens",      "keyword_count",
      "min_keyword_overlap"};
  std::map<std::string, std::string> overrides;
  std::vector<std::pair<std::string, CLI::Option*>> threshold_options;
  for (const std::string& key : threshold_keys) {
    std::string flag = "--" + key;
    for (char& c : flag) c = c == '_' ? '-' : c;
    threshold_options.emplace_back(
        key, analyze->add_option(flag, overrides[key], "Override " + key));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  clinic_config* raw_config = nullptr;
  if (clinic_config_create(&raw_config) != CLINIC_OK) {
    std::cerr << "clinic: " << clinic_last_error() << "\n";
    return kExitError;
  }
  ConfigPtr config(raw_config);

  if (!config_path.empty()) {
    clinic_status status = clinic_config_load_file(config.get(), config_path.c_str());
    if (status != CLINIC_OK) {
      std::cerr << "clinic: " << config_path << ": " << error_text(status) << "\n";
      return kExitError;
    }
  }
  for (const auto& [key, option] : threshold_options) {
    if (option->count() > 0 && !configure(config.get(), key, overrides[key])) return kExitError;
  }
  if (!rules.empty()) {
    clinic_status status = clinic_config_set_rules(config.get(), rules.c_str());
    if (status != CLINIC_OK) {
      std::cerr << "clinic: --rules: " << error_text(status) << "\n";
      return kExitError;
    }
  }
  if (!lexicon_path.empty()) {
    clinic_status status = clinic_config_load_lexicon(config.get(), lexicon_path.c_str());
    if (status != CLINIC_OK) {
      std::cerr << "clinic: " << lexicon_path << ": " << error_text(status) << "\n";
      return kExitError;
    }
  }

  const clinic_format fmt = format == "plain" ? CLINIC_FORMAT_PLAIN : CLINIC_FORMAT_MARKDOWN;
  const clinic_output out = output == "machine" ? CLINIC_OUTPUT_MACHINE : CLINIC_OUTPUT_HUMAN;

  // stdin can only be read once and not concurrently with itself.
  std::vector<std::future<Outcome>> jobs;
  for (const std::string& path : paths) {
    auto policy = path == "-" ? std::launch::deferred : std::launch::async;
    jobs.push_back(std::async(policy, analyze_one, config.get(), path, fmt, out));
  }

  bool any_error = false;
  bool any_findings = false;
  for (auto& job : jobs) {
    Outcome outcome = job.get();
    if (!outcome.ok) {
      std::cerr << "clinic: " << outcome.error << "\n";
      any_error = true;
      continue;
    }
    std::cout << outcome.text;
    if (out == CLINIC_OUTPUT_MACHINE) std::cout << "\n";
    any_findings = any_findings || outcome.findings;
  }
  if (any_error) return kExitError;
  return any_findings ? kExitFindings : kExitClean;
}
