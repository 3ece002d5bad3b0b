/*
 * Copyright 2026 The inform Authors.
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

#ifndef INFORM_INFORM_H
#define INFORM_INFORM_H

/*
 * C interface to the contextual informativeness toolkit.
 *
 * Conventions:
 *  - Every fallible call returns inform_status; on failure
 *    inform_last_error() holds a message for the calling thread until its
 *    next failing call.
 *  - Handles are opaque, created by *_load / *_build / *_score calls and
 *    released with the matching *_free (NULL is accepted).
 *  - `char**` outputs are heap strings owned by the caller; release them
 *    with inform_string_free.
 *  - `const char*` fields inside record structs point into the handle they
 *    came from and stay valid until that handle is freed.
 *  - Handles are immutable after creation and may be shared across threads,
 *    except inform_mock_server.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define INFORM_API
#elif defined(INFORM_BUILDING_LIBRARY)
#define INFORM_API __attribute__((visibility("default")))
#else
#define INFORM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum inform_status {
    INFORM_OK = 0,
    INFORM_ERR_INVALID_ARGUMENT = 1,
    INFORM_ERR_IO = 2,
    INFORM_ERR_PARSE = 3,
    INFORM_ERR_DATA = 4,
    INFORM_ERR_UNDEFINED_CORRELATION = 5,
    INFORM_ERR_TRANSPORT = 6,
    INFORM_ERR_PROTOCOL = 7,
    INFORM_ERR_EMPTY_PREDICTIONS = 8,
    INFORM_ERR_INTERNAL = 9
} inform_status;

typedef enum inform_method {
    INFORM_METHOD_CONTEXT_SIM = 0,
    INFORM_METHOD_WINDOW = 1,
    INFORM_METHOD_RELATED = 2,
    INFORM_METHOD_MLM = 3,
    INFORM_METHOD_GENERATIVE = 4
} inform_method;

typedef enum inform_csv_layout { INFORM_CSV_GOLD = 0, INFORM_CSV_PREDICTION = 1 } inform_csv_layout;

typedef enum inform_diagnostic_kind {
    INFORM_DIAG_INFO = 0,
    INFORM_DIAG_WARNING = 1,
    INFORM_DIAG_EXCLUDED = 2,
    INFORM_DIAG_FAILED = 3
} inform_diagnostic_kind;

typedef struct inform_analyzer inform_analyzer;
typedef struct inform_embeddings inform_embeddings;
typedef struct inform_corpus inform_corpus;
typedef struct inform_annotations inform_annotations;
typedef struct inform_scores inform_scores;
typedef struct inform_report inform_report;
typedef struct inform_mock_server inform_mock_server;

/* ---- general ---- */

INFORM_API const char* inform_version(void);
INFORM_API const char* inform_status_string(inform_status status);
INFORM_API const char* inform_last_error(void);
INFORM_API void inform_string_free(char* s);
/* Canonical name ("context-sim", "window", "related", "mlm", "generative"). */
INFORM_API const char* inform_method_name(inform_method method);
INFORM_API inform_status inform_method_parse(const char* name, inform_method* out);
INFORM_API const char* inform_diagnostic_kind_name(inform_diagnostic_kind kind);

/* Lowercase hex SHA-256. */
INFORM_API inform_status inform_sha256_file(const char* path, char** out_hex);
INFORM_API inform_status inform_sha256_bytes(const void* data, size_t size, char** out_hex);

/* ---- text analysis ---- */

/* NULL paths select the shipped lemma table / stopword list. */
INFORM_API inform_status inform_analyzer_load(const char* lemma_file, const char* stopword_file,
                                              inform_analyzer** out);
INFORM_API void inform_analyzer_free(inform_analyzer* analyzer);
/* Paths the analyzer was loaded from. */
INFORM_API const char* inform_analyzer_lemma_file(const inform_analyzer* analyzer);
INFORM_API const char* inform_analyzer_stopword_file(const inform_analyzer* analyzer);
INFORM_API inform_status inform_lemmatize(const inform_analyzer* analyzer, const char* word, char** out);

/* ---- embeddings ---- */

typedef struct inform_embedding_options {
    int64_t limit;            /* <= 0: no limit */
    int strip_prefix;         /* nonzero: strip `prefix` from labels */
    const char* prefix;       /* NULL: "/c/en/" */
} inform_embedding_options;

typedef struct inform_load_report {
    size_t rows_kept;
    size_t malformed_rows;
    size_t wrong_dim_rows;
    size_t zero_rows;
    size_t duplicate_rows;
    int gzip;
    int had_header;
} inform_load_report;

INFORM_API inform_embedding_options inform_embedding_options_default(void);
/* `options` may be NULL. */
INFORM_API inform_status inform_embeddings_load(const char* path, const inform_embedding_options* options,
                                                inform_embeddings** out);
INFORM_API void inform_embeddings_free(inform_embeddings* embeddings);
INFORM_API size_t inform_embeddings_dim(const inform_embeddings* embeddings);
INFORM_API size_t inform_embeddings_size(const inform_embeddings* embeddings);
INFORM_API inform_status inform_embeddings_load_report(const inform_embeddings* embeddings,
                                                       inform_load_report* out);
/* *found is 0 when either word does not resolve; *out is then untouched. */
INFORM_API inform_status inform_word_similarity(const inform_embeddings* embeddings, const inform_analyzer* analyzer,
                                                const char* w1, const char* w2, int lemma_fallback, double* out,
                                                int* found);

/* ---- corpus and annotations ---- */

INFORM_API inform_status inform_corpus_load(const char* path, const inform_analyzer* analyzer, inform_corpus** out);
INFORM_API void inform_corpus_free(inform_corpus* corpus);
INFORM_API size_t inform_corpus_story_count(const inform_corpus* corpus);
INFORM_API size_t inform_corpus_target_count(const inform_corpus* corpus);
/* Story id by position, or NULL when out of range. */
INFORM_API const char* inform_corpus_story_id(const inform_corpus* corpus, size_t story);
/* Number of targets of story `story`, 0 when out of range. */
INFORM_API int inform_corpus_story_targets(const inform_corpus* corpus, size_t story);
/* Target word `target_index` (1-based) of the story, or NULL. */
INFORM_API const char* inform_corpus_target_word(const inform_corpus* corpus, size_t story, int target_index);
/* Surface forms of one target as they occur in the story text. */
INFORM_API size_t inform_corpus_occurrence_count(const inform_corpus* corpus, size_t story, int target_index);
INFORM_API const char* inform_corpus_occurrence(const inform_corpus* corpus, size_t story, int target_index,
                                                size_t occurrence);
INFORM_API inform_status inform_mask_story(const inform_corpus* corpus, const char* story_id, int target_index,
                                           const char* mask_placeholder, const char* hidden_placeholder,
                                           char** out);
INFORM_API inform_status inform_cloze_prompt(const inform_corpus* corpus, const char* story_id, int target_index,
                                             char** out);

INFORM_API inform_status inform_annotations_load(const char* path, const inform_corpus* corpus,
                                                 inform_annotations** out);
INFORM_API void inform_annotations_free(inform_annotations* annotations);
INFORM_API size_t inform_annotations_count(const inform_annotations* annotations);
INFORM_API size_t inform_annotations_warning_count(const inform_annotations* annotations);

/* ---- scoring ---- */

typedef struct inform_score_record {
    const char* story_id;
    int target_index;
    const char* target_word;
    double value;
    const char* guess; /* NULL when the method records none */
    int n_contributing;
} inform_score_record;

typedef struct inform_diagnostic {
    inform_diagnostic_kind kind;
    const char* story_id; /* "" when not tied to a story */
    int target_index;     /* 0 when not tied to a target */
    const char* message;
} inform_diagnostic;

typedef struct inform_gold_summary {
    int targets_scored;
    int targets_dropped;
    double mean_annotators;
} inform_gold_summary;

typedef struct inform_baseline_config {
    int window_size;          /* default 5 */
    double related_threshold; /* default 0.3 */
    int lemma_fallback;       /* default 1 */
} inform_baseline_config;

typedef struct inform_lm_config {
    int top_k;                      /* default 50 */
    const char* mask_placeholder;   /* default "<mask>" */
    const char* hidden_placeholder; /* NULL: "<unk>" for mlm, "____" for generative */
    const char* backend_url;        /* required */
    int timeout_ms;                 /* default 30000 */
    int max_parallel;               /* default 4 */
    int max_tokens;                 /* default 16 */
    int retry_attempts;             /* default 3 */
    int retry_backoff_ms;           /* default 100, doubled per retry */
    int lemma_fallback;             /* default 1 */
} inform_lm_config;

INFORM_API inform_baseline_config inform_baseline_config_default(void);
INFORM_API inform_lm_config inform_lm_config_default(void);

INFORM_API inform_status inform_gold_build(const inform_corpus* corpus, const inform_annotations* annotations,
                                           const inform_embeddings* embeddings, const inform_analyzer* analyzer,
                                           int lemma_fallback, inform_scores** out);
/* Zeroed summary for score sets that were not built by inform_gold_build. */
INFORM_API inform_status inform_gold_summary_get(const inform_scores* scores, inform_gold_summary* out);

/* `method` must be one of the three baselines; `config` may be NULL. */
INFORM_API inform_status inform_score_baseline(const inform_corpus* corpus, const inform_embeddings* embeddings,
                                               const inform_analyzer* analyzer, inform_method method,
                                               const inform_baseline_config* config, inform_scores** out);
/* `method` must be INFORM_METHOD_MLM or INFORM_METHOD_GENERATIVE. Backend
 * failures do not fail the call; they show up as FAILED diagnostics. */
INFORM_API inform_status inform_score_lm(const inform_corpus* corpus, const inform_embeddings* embeddings,
                                         const inform_analyzer* analyzer, inform_method method,
                                         const inform_lm_config* config, inform_scores** out);

INFORM_API void inform_scores_free(inform_scores* scores);
INFORM_API size_t inform_scores_count(const inform_scores* scores);
INFORM_API inform_status inform_scores_get(const inform_scores* scores, size_t i, inform_score_record* out);
INFORM_API size_t inform_scores_diagnostic_count(const inform_scores* scores);
/* Count of diagnostics of one kind. */
INFORM_API size_t inform_scores_diagnostic_count_kind(const inform_scores* scores, inform_diagnostic_kind kind);
INFORM_API inform_status inform_scores_diagnostic_get(const inform_scores* scores, size_t i, inform_diagnostic* out);
/* Writes through a temporary file renamed into place. */
INFORM_API inform_status inform_scores_write_csv(const inform_scores* scores, const char* path,
                                                 inform_csv_layout layout);
INFORM_API inform_status inform_scores_read_csv(const char* path, inform_scores** out);

/* ---- evaluation ---- */

typedef struct inform_metrics {
    size_t n;
    double spearman_rho;
    double spearman_p;
    double pearson_r;
    double pearson_p;
    double rmse;
    size_t dropped_predicted;
    size_t dropped_gold;
    int count_valued;
} inform_metrics;

INFORM_API inform_status inform_evaluate(const inform_scores* predicted, const inform_scores* gold,
                                         const char* method_name, const char* config_digest, int count_valued,
                                         inform_report** out);
INFORM_API void inform_report_free(inform_report* report);
INFORM_API inform_status inform_report_get(const inform_report* report, inform_metrics* out);
INFORM_API inform_status inform_report_json(const inform_report* report, char** out);
INFORM_API inform_status inform_report_text(const inform_report* report, char** out);
/* One markdown row: Spearman, rho significance, Pearson, r significance, RMSE. */
INFORM_API inform_status inform_report_table_row(const inform_report* report, char** out);
INFORM_API const char* inform_report_table_header(void);

INFORM_API inform_status inform_spearman(const double* x, const double* y, size_t n, double* rho, double* p);
INFORM_API inform_status inform_pearson(const double* x, const double* y, size_t n, double* r, double* p);
INFORM_API inform_status inform_student_t_p(double t, int df, double* p);

/* ---- embedding benchmark ---- */

typedef struct inform_bench_result {
    size_t n;
    size_t dropped;
    double pearson_r;
    double pearson_p;
    double spearman_rho;
    double spearman_p;
} inform_bench_result;

INFORM_API inform_status inform_bench_run(const inform_embeddings* embeddings, const inform_analyzer* analyzer,
                                          const char* dataset_path, int lemma_fallback, inform_bench_result* out);

/* ---- backends ---- */

/* GET /v1/health; *out_model receives the reported model name. */
INFORM_API inform_status inform_backend_health(const char* backend_url, int timeout_ms, char** out_model);

/* Serves the backend protocol from fixtures on a background thread.
 * `fixtures_path` may be NULL when `echo` is nonzero. `port` 0 picks a free
 * port. */
INFORM_API inform_status inform_mock_server_start(const inform_corpus* corpus, const char* fixtures_path, int echo,
                                                  const char* host, int port, inform_mock_server** out);
INFORM_API int inform_mock_server_port(const inform_mock_server* server);
/* Texts of every infill and generate request received so far. */
INFORM_API size_t inform_mock_server_request_count(const inform_mock_server* server);
INFORM_API inform_status inform_mock_server_request(const inform_mock_server* server, size_t i, char** out);
/* Stops serving and releases the handle. */
INFORM_API void inform_mock_server_free(inform_mock_server* server);

#ifdef __cplusplus
}
#endif

#endif /* INFORM_INFORM_H */
