/*
 * Copyright 2026 The Clinic Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libclinic, a diagnostic linter for research manuscripts.
 *
 * Objects are opaque handles created by *_create / clinic_analyze_* and
 * released with the matching *_destroy. Every fallible call returns a
 * clinic_status; on failure a description is available from
 * clinic_last_error() until the next call on the same thread.
 *
 * Handles are not synchronised. A config may be shared read-only by several
 * threads analysing documents concurrently.
 */

#ifndef CLINIC_CLINIC_H_
#define CLINIC_CLINIC_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CLINIC_BUILDING_LIBRARY)
#    define CLINIC_API __declspec(dllexport)
#  else
#    define CLINIC_API __declspec(dllimport)
#  endif
#else
#  define CLINIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct clinic_config clinic_config;
typedef struct clinic_report clinic_report;

typedef enum clinic_status {
  CLINIC_OK = 0,
  CLINIC_ERR_INVALID_ARGUMENT = 1,
  CLINIC_ERR_IO = 2,
  CLINIC_ERR_PARSE = 3,
  CLINIC_ERR_CONFIG = 4,
  CLINIC_ERR_LEXICON = 5,
  CLINIC_ERR_INTERNAL = 6,
  CLINIC_STATUS_FORCE_INT = 0x7fffffff
} clinic_status;

typedef enum clinic_format {
  CLINIC_FORMAT_PLAIN = 0,
  CLINIC_FORMAT_MARKDOWN = 1,
  /* Keeps the enum int-sized; not a valid format. */
  CLINIC_FORMAT_FORCE_INT = 0x7fffffff
} clinic_format;

typedef enum clinic_output {
  CLINIC_OUTPUT_HUMAN = 0,
  CLINIC_OUTPUT_MACHINE = 1,
  CLINIC_OUTPUT_FORCE_INT = 0x7fffffff
} clinic_output;

CLINIC_API const char* clinic_version(void);
CLINIC_API const char* clinic_status_string(clinic_status status);
/* Message of the last failed call on this thread; never NULL. */
CLINIC_API const char* clinic_last_error(void);

/* Configuration: thresholds, enabled rules and lexicon extensions. */
CLINIC_API clinic_status clinic_config_create(clinic_config** out);
CLINIC_API void clinic_config_destroy(clinic_config* config);
/* key is a threshold name such as "max_sentence_words". */
CLINIC_API clinic_status clinic_config_set(clinic_config* config,
                                           const char* key, const char* value);
/* Writes the current value as text; *out must be freed with clinic_free. */
CLINIC_API clinic_status clinic_config_get(const clinic_config* config,
                                           const char* key, char** out);
/* Flat key=value file. Values override the current ones. */
CLINIC_API clinic_status clinic_config_load_file(clinic_config* config,
                                                 const char* path);
/* Comma list: "S101,S102" selects rules, "-S201" removes one. */
CLINIC_API clinic_status clinic_config_set_rules(clinic_config* config,
                                                 const char* rule_list);
CLINIC_API clinic_status clinic_config_load_lexicon(clinic_config* config,
                                                    const char* path);

/* Analysis. document_name is echoed in the report and may be NULL. */
CLINIC_API clinic_status clinic_analyze_text(const clinic_config* config,
                                             const char* text, size_t length,
                                             const char* document_name,
                                             clinic_format format,
                                             clinic_report** out);
CLINIC_API clinic_status clinic_analyze_file(const clinic_config* config,
                                             const char* path,
                                             clinic_format format,
                                             clinic_report** out);
CLINIC_API void clinic_report_destroy(clinic_report* report);

CLINIC_API size_t clinic_report_diagnostic_count(const clinic_report* report);
CLINIC_API size_t clinic_report_malady_count(const clinic_report* report);
/* Rule id ("S101") of the i-th diagnostic, or NULL when out of range. */
CLINIC_API const char* clinic_report_diagnostic_rule(const clinic_report* report,
                                                     size_t index);
/* Kind ("FaultyRAP") of the i-th malady finding, or NULL. */
CLINIC_API const char* clinic_report_malady_kind(const clinic_report* report,
                                                 size_t index);
/* Renders the report; *out must be freed with clinic_free. */
CLINIC_API clinic_status clinic_report_render(const clinic_report* report,
                                              clinic_output output, char** out);

CLINIC_API void clinic_free(void* ptr);

#ifdef __cplusplus
}
#endif

#endif /* CLINIC_CLINIC_H_ */
