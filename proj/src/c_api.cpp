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


#include "clinic/clinic.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "clinic/report.hpp"
#include "format.hpp"

struct clinic_config {
  clinic::AnalysisConfig cfg;
  clinic::Lexicon lex = clinic::Lexicon::Default();
};

struct clinic_report {
  clinic::Report report;
};

namespace {

thread_local std::string g_last_error;

clinic_status fail(clinic_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
clinic_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CLINIC_OK;
  } catch (const clinic::ParseError& e) {
    return fail(CLINIC_ERR_PARSE, e.what());
  } catch (const clinic::ConfigError& e) {
    return fail(CLINIC_ERR_CONFIG, e.what());
  } catch (const clinic::LexiconError& e) {
    return fail(CLINIC_ERR_LEXICON, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CLINIC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CLINIC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CLINIC_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

clinic::InputFormat to_format(clinic_format f) {
  return f == CLINIC_FORMAT_PLAIN ? clinic::InputFormat::kPlain
                                  : clinic::InputFormat::kMarkdown;
}

bool valid_format(clinic_format f) {
  return f == CLINIC_FORMAT_PLAIN || f == CLINIC_FORMAT_MARKDOWN;
}

std::string config_value(const clinic::AnalysisConfig& c, const std::string& key) {
  using clinic::internal::format_number;
  if (key == "max_sentence_words") return std::to_string(c.max_sentence_words);
  if (key == "max_paragraph_sentences") return std::to_string(c.max_paragraph_sentences);
  if (key == "words_per_page") return std::to_string(c.words_per_page);
  if (key == "min_insertion_words") return std::to_string(c.min_insertion_words);
  if (key == "max_core_prefix_tokens") return std::to_string(c.max_core_prefix_tokens);
  if (key == "max_delay_words") return std::to_string(c.max_delay_words);
  if (key == "link_window_tokens") return std::to_string(c.link_window_tokens);
  if (key == "keyword_count") return std::to_string(c.keyword_count);
  if (key == "min_keyword_overlap") return std::to_string(c.min_keyword_overlap);
  std::ostringstream out;
  out.precision(17);
  if (key == "footnote_ratio") out << c.footnote_ratio;
  else if (key == "intensity_per_page") out << c.intensity_per_page;
  else if (key == "superlative_per_page") out << c.superlative_per_page;
  else if (key == "max_pages") {
    if (!c.max_pages) return "none";
    out << *c.max_pages;
  } else {
    throw clinic::ConfigError("unknown configuration key '" + key + "'", key);
  }
  return out.str();
}

}  // namespace

extern "C" {

const char* clinic_version(void) { return "0.1.0"; }

const char* clinic_status_string(clinic_status status) {
  switch (status) {
    case CLINIC_OK: return "ok";
    case CLINIC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CLINIC_ERR_IO: return "i/o error";
    case CLINIC_ERR_PARSE: return "parse error";
    case CLINIC_ERR_CONFIG: return "configuration error";
    case CLINIC_ERR_LEXICON: return "lexicon error";
    case CLINIC_ERR_INTERNAL: return "internal error";
    case CLINIC_STATUS_FORCE_INT: break;
  }
  return "unknown status";
}

const char* clinic_last_error(void) { return g_last_error.c_str(); }

clinic_status clinic_config_create(clinic_config** out) {
  if (!out) return fail(CLINIC_ERR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = new clinic_config(); });
}

void clinic_config_destroy(clinic_config* config) { delete config; }

clinic_status clinic_config_set(clinic_config* config, const char* key,
                                const char* value) {
  if (!config || !key || !value) {
    return fail(CLINIC_ERR_INVALID_ARGUMENT, "config, key and value are required");
  }
  return guarded([&] {
    clinic::AnalysisConfig next = config->cfg;
    clinic::apply_setting(next, key, value);
    config->cfg = next;
  });
}

clinic_status clinic_config_get(const clinic_config* config, const char* key,
                                char** out) {
  if (!config || !key || !out) {
    return fail(CLINIC_ERR_INVALID_ARGUMENT, "config, key and out are required");
  }
  return guarded([&] { *out = dup_string(config_value(config->cfg, key)); });
}

clinic_status clinic_config_load_file(clinic_config* config, const char* path) {
  if (!config || !path) return fail(CLINIC_ERR_INVALID_ARGUMENT, "config and path are required");
  std::ifstream in(path);
  if (!in) return fail(CLINIC_ERR_IO, std::string("cannot open '") + path + "'");
  return guarded([&] { config->cfg = clinic::parse_config(in, config->cfg); });
}

clinic_status clinic_config_set_rules(clinic_config* config, const char* rule_list) {
  if (!config || !rule_list) {
    return fail(CLINIC_ERR_INVALID_ARGUMENT, "config and rule_list are required");
  }
  return guarded([&] { config->cfg.enabled_rules = clinic::parse_rule_list(rule_list); });
}

clinic_status clinic_config_load_lexicon(clinic_config* config, const char* path) {
  if (!config || !path) return fail(CLINIC_ERR_INVALID_ARGUMENT, "config and path are required");
  std::ifstream in(path);
  if (!in) return fail(CLINIC_ERR_IO, std::string("cannot open '") + path + "'");
  return guarded([&] {
    clinic::Lexicon next = config->lex;
    next.extend(in);
    config->lex = std::move(next);
  });
}

clinic_status clinic_analyze_text(const clinic_config* config, const char* text,
                                  size_t length, const char* document_name,
                                  clinic_format format, clinic_report** out) {
  if (!config || !out || (!text && length > 0)) {
    return fail(CLINIC_ERR_INVALID_ARGUMENT, "config, text and out are required");
  }
  if (!valid_format(format)) return fail(CLINIC_ERR_INVALID_ARGUMENT, "unknown format");
  *out = nullptr;
  return guarded([&] {
    std::string source = text ? std::string(text, length) : std::string();
    clinic::Document doc = clinic::parse_document(std::move(source), to_format(format), config->lex);
    auto report = std::make_unique<clinic_report>();
    report->report = clinic::analyze(doc, document_name ? document_name : "",
                                     config->cfg, config->lex);
    *out = report.release();
  });
}

clinic_status clinic_analyze_file(const clinic_config* config, const char* path,
                                  clinic_format format, clinic_report** out) {
  if (!config || !path || !out) {
    return fail(CLINIC_ERR_INVALID_ARGUMENT, "config, path and out are required");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(CLINIC_ERR_IO, std::string("cannot open '") + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return fail(CLINIC_ERR_IO, std::string("cannot read '") + path + "'");
  std::string text = buf.str();
  return clinic_analyze_text(config, text.data(), text.size(), path, format, out);
}

void clinic_report_destroy(clinic_report* report) { delete report; }

size_t clinic_report_diagnostic_count(const clinic_report* report) {
  return report ? report->report.diagnostics.size() : 0;
}

size_t clinic_report_malady_count(const clinic_report* report) {
  return report ? report->report.maladies.size() : 0;
}

const char* clinic_report_diagnostic_rule(const clinic_report* report, size_t index) {
  if (!report || index >= report->report.diagnostics.size()) return nullptr;
  return clinic::rule_name(report->report.diagnostics[index].rule);
}

const char* clinic_report_malady_kind(const clinic_report* report, size_t index) {
  if (!report || index >= report->report.maladies.size()) return nullptr;
  return clinic::malady_name(report->report.maladies[index].kind);
}

clinic_status clinic_report_render(const clinic_report* report, clinic_output output,
                                   char** out) {
  if (!report || !out) return fail(CLINIC_ERR_INVALID_ARGUMENT, "report and out are required");
  if (output != CLINIC_OUTPUT_HUMAN && output != CLINIC_OUTPUT_MACHINE) {
    return fail(CLINIC_ERR_INVALID_ARGUMENT, "unknown output kind");
  }
  return guarded([&] {
    *out = dup_string(output == CLINIC_OUTPUT_MACHINE ? clinic::render_machine(report->report)
                                                      : clinic::render_human(report->report));
  });
}

void clinic_free(void* ptr) { std::free(ptr); }

}  // extern "C"
