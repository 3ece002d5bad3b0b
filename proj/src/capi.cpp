// Copyright 2026 The inform Authors.
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

#include "inform/inform.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <unistd.h>

#include "inform/baselines.hpp"
#include "inform/bench.hpp"
#include "inform/corpus.hpp"
#include "inform/digest.hpp"
#include "inform/embeddings.hpp"
#include "inform/errors.hpp"
#include "inform/gold.hpp"
#include "inform/lm.hpp"
#include "inform/metrics.hpp"
#include "inform/mock_backend.hpp"
#include "inform/scores.hpp"
#include "inform/text.hpp"

struct inform_analyzer {
    inform::TextAnalyzer analyzer;
    std::string lemma_file;
    std::string stopword_file;
};

struct inform_embeddings {
    inform::EmbeddingTable table;
};

struct inform_corpus {
    inform::Corpus corpus;
    // Surface text of every occurrence, [story][target - 1][occurrence].
    std::vector<std::vector<std::vector<std::string>>> surfaces;
};

struct inform_annotations {
    std::vector<inform::Annotation> rows;
    inform::Diagnostics diagnostics;
};

struct inform_scores {
    inform::ScoreSet set;
    inform::GoldSummary gold;
};

struct inform_report {
    inform::MetricsReport report;
};

struct inform_mock_server {
    std::unique_ptr<inform::MockBackendServer> server;
};

namespace {

thread_local std::string g_last_error;

inform_status fail(inform_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Runs `body`, mapping library exceptions onto status codes.
template <class F>
inform_status guarded(F&& body) {
    try {
        body();
        return INFORM_OK;
    } catch (const inform::InvalidArgument& e) {
        return fail(INFORM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const inform::IoError& e) {
        return fail(INFORM_ERR_IO, e.what());
    } catch (const inform::ParseError& e) {
        return fail(INFORM_ERR_PARSE, e.what());
    } catch (const inform::DataError& e) {
        return fail(INFORM_ERR_DATA, e.what());
    } catch (const inform::UndefinedCorrelation& e) {
        return fail(INFORM_ERR_UNDEFINED_CORRELATION, e.what());
    } catch (const inform::TransportError& e) {
        return fail(INFORM_ERR_TRANSPORT, e.what());
    } catch (const inform::ProtocolError& e) {
        return fail(INFORM_ERR_PROTOCOL, e.what());
    } catch (const inform::EmptyPredictions& e) {
        return fail(INFORM_ERR_EMPTY_PREDICTIONS, e.what());
    } catch (const std::bad_alloc&) {
        return fail(INFORM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(INFORM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(INFORM_ERR_INTERNAL, "unknown error");
    }
}

void require(const void* p, const char* what) {
    if (!p) throw inform::InvalidArgument(std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const inform::Story* story_at(const inform_corpus* c, size_t i) {
    if (!c || i >= c->corpus.size()) return nullptr;
    return &c->corpus[i];
}

const inform::Story& story_by_id(const inform_corpus* c, const char* id) {
    require(c, "corpus");
    require(id, "story_id");
    for (const auto& s : c->corpus) {
        if (s.story_id == id) return s;
    }
    throw inform::InvalidArgument(std::string("unknown story '") + id + "'");
}

inform::BaselineMethod baseline_method(inform_method m) {
    switch (m) {
        case INFORM_METHOD_CONTEXT_SIM: return inform::BaselineMethod::context_similarity;
        case INFORM_METHOD_WINDOW: return inform::BaselineMethod::context_window;
        case INFORM_METHOD_RELATED: return inform::BaselineMethod::related_words;
        default: throw inform::InvalidArgument("not a baseline method");
    }
}

std::vector<inform::InformativenessScore> scores_of(const inform_scores* s, const char* what) {
    require(s, what);
    return s->set.scores;
}

}  // namespace

extern "C" {

const char* inform_version(void) { return INFORM_VERSION; }

const char* inform_status_string(inform_status status) {
    switch (status) {
        case INFORM_OK: return "ok";
        case INFORM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case INFORM_ERR_IO: return "i/o error";
        case INFORM_ERR_PARSE: return "parse error";
        case INFORM_ERR_DATA: return "data error";
        case INFORM_ERR_UNDEFINED_CORRELATION: return "undefined correlation";
        case INFORM_ERR_TRANSPORT: return "transport error";
        case INFORM_ERR_PROTOCOL: return "protocol error";
        case INFORM_ERR_EMPTY_PREDICTIONS: return "empty predictions";
        case INFORM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* inform_last_error(void) { return g_last_error.c_str(); }

void inform_string_free(char* s) { std::free(s); }

const char* inform_method_name(inform_method method) {
    switch (method) {
        case INFORM_METHOD_CONTEXT_SIM: return "context-sim";
        case INFORM_METHOD_WINDOW: return "window";
        case INFORM_METHOD_RELATED: return "related";
        case INFORM_METHOD_MLM: return "mlm";
        case INFORM_METHOD_GENERATIVE: return "generative";
    }
    return nullptr;
}

inform_status inform_method_parse(const char* name, inform_method* out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        for (int m = INFORM_METHOD_CONTEXT_SIM; m <= INFORM_METHOD_GENERATIVE; ++m) {
            if (std::strcmp(name, inform_method_name(static_cast<inform_method>(m))) == 0) {
                *out = static_cast<inform_method>(m);
                return;
            }
        }
        throw inform::InvalidArgument(std::string("unknown method '") + name + "'");
    });
}

const char* inform_diagnostic_kind_name(inform_diagnostic_kind kind) {
    switch (kind) {
        case INFORM_DIAG_INFO: return "info";
        case INFORM_DIAG_WARNING: return "warning";
        case INFORM_DIAG_EXCLUDED: return "excluded";
        case INFORM_DIAG_FAILED: return "failed";
    }
    return nullptr;
}

inform_status inform_sha256_file(const char* path, char** out_hex) {
    return guarded([&] {
        require(path, "path");
        require(out_hex, "out_hex");
        *out_hex = dup_string(inform::sha256_file(path));
    });
}

inform_status inform_sha256_bytes(const void* data, size_t size, char** out_hex) {
    return guarded([&] {
        if (size) require(data, "data");
        require(out_hex, "out_hex");
        *out_hex = dup_string(inform::sha256_hex({static_cast<const char*>(data), size}));
    });
}

inform_status inform_analyzer_load(const char* lemma_file, const char* stopword_file, inform_analyzer** out) {
    return guarded([&] {
        require(out, "out");
        const auto dir = inform::default_data_dir();
        const std::filesystem::path lf = lemma_file ? std::filesystem::path(lemma_file) : dir / "lemmas_en.tsv";
        const std::filesystem::path sf = stopword_file ? std::filesystem::path(stopword_file) : dir / "stopwords_en.txt";
        auto a = std::make_unique<inform_analyzer>(
            inform_analyzer{inform::TextAnalyzer::load(lf, sf), lf.string(), sf.string()});
        *out = a.release();
    });
}

void inform_analyzer_free(inform_analyzer* analyzer) { delete analyzer; }

const char* inform_analyzer_lemma_file(const inform_analyzer* analyzer) {
    return analyzer ? analyzer->lemma_file.c_str() : nullptr;
}

const char* inform_analyzer_stopword_file(const inform_analyzer* analyzer) {
    return analyzer ? analyzer->stopword_file.c_str() : nullptr;
}

inform_status inform_lemmatize(const inform_analyzer* analyzer, const char* word, char** out) {
    return guarded([&] {
        require(analyzer, "analyzer");
        require(word, "word");
        require(out, "out");
        *out = dup_string(analyzer->analyzer.lemmatize(word));
    });
}

inform_embedding_options inform_embedding_options_default(void) { return {0, 1, nullptr}; }

inform_status inform_embeddings_load(const char* path, const inform_embedding_options* options,
                                     inform_embeddings** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        inform::LoadOptions opts;
        if (options) {
            if (options->limit > 0) opts.limit = static_cast<std::size_t>(options->limit);
            opts.strip_prefix = options->strip_prefix != 0;
            if (options->prefix) opts.prefix = options->prefix;
        }
        auto e = std::make_unique<inform_embeddings>(inform_embeddings{inform::load_embeddings(path, opts)});
        *out = e.release();
    });
}

void inform_embeddings_free(inform_embeddings* embeddings) { delete embeddings; }

size_t inform_embeddings_dim(const inform_embeddings* embeddings) { return embeddings ? embeddings->table.dim() : 0; }

size_t inform_embeddings_size(const inform_embeddings* embeddings) {
    return embeddings ? embeddings->table.size() : 0;
}

inform_status inform_embeddings_load_report(const inform_embeddings* embeddings, inform_load_report* out) {
    return guarded([&] {
        require(embeddings, "embeddings");
        require(out, "out");
        const auto& r = embeddings->table.load_report();
        *out = {r.rows_kept, r.malformed_rows, r.wrong_dim_rows, r.zero_rows, r.duplicate_rows, r.gzip ? 1 : 0,
                r.had_header ? 1 : 0};
    });
}

inform_status inform_word_similarity(const inform_embeddings* embeddings, const inform_analyzer* analyzer,
                                     const char* w1, const char* w2, int lemma_fallback, double* out, int* found) {
    return guarded([&] {
        require(embeddings, "embeddings");
        require(analyzer, "analyzer");
        require(w1, "w1");
        require(w2, "w2");
        require(out, "out");
        require(found, "found");
        const inform::Resolver resolver(embeddings->table, analyzer->analyzer.lemmatizer(),
                                        {lemma_fallback != 0});
        auto sim = resolver.similarity(w1, w2);
        *found = sim ? 1 : 0;
        if (sim) *out = *sim;
    });
}

inform_status inform_corpus_load(const char* path, const inform_analyzer* analyzer, inform_corpus** out) {
    return guarded([&] {
        require(path, "path");
        require(analyzer, "analyzer");
        require(out, "out");
        auto c = std::make_unique<inform_corpus>();
        c->corpus = inform::load_corpus(path, analyzer->analyzer);
        for (const auto& s : c->corpus) {
            auto& per_story = c->surfaces.emplace_back();
            for (const auto& t : s.targets) {
                auto& per_target = per_story.emplace_back();
                for (const auto& span : t.occurrences) {
                    per_target.push_back(s.text.substr(span.begin, span.end - span.begin));
                }
            }
        }
        *out = c.release();
    });
}

void inform_corpus_free(inform_corpus* corpus) { delete corpus; }

size_t inform_corpus_story_count(const inform_corpus* corpus) { return corpus ? corpus->corpus.size() : 0; }

size_t inform_corpus_target_count(const inform_corpus* corpus) {
    size_t n = 0;
    if (corpus) {
        for (const auto& s : corpus->corpus) n += s.targets.size();
    }
    return n;
}

const char* inform_corpus_story_id(const inform_corpus* corpus, size_t story) {
    const auto* s = story_at(corpus, story);
    return s ? s->story_id.c_str() : nullptr;
}

int inform_corpus_story_targets(const inform_corpus* corpus, size_t story) {
    const auto* s = story_at(corpus, story);
    return s ? s->target_count() : 0;
}

const char* inform_corpus_target_word(const inform_corpus* corpus, size_t story, int target_index) {
    const auto* s = story_at(corpus, story);
    if (!s || target_index < 1 || target_index > s->target_count()) return nullptr;
    return s->targets[static_cast<size_t>(target_index - 1)].word.c_str();
}

size_t inform_corpus_occurrence_count(const inform_corpus* corpus, size_t story, int target_index) {
    const auto* s = story_at(corpus, story);
    if (!s || target_index < 1 || target_index > s->target_count()) return 0;
    return corpus->surfaces[story][static_cast<size_t>(target_index - 1)].size();
}

const char* inform_corpus_occurrence(const inform_corpus* corpus, size_t story, int target_index,
                                     size_t occurrence) {
    if (occurrence >= inform_corpus_occurrence_count(corpus, story, target_index)) return nullptr;
    return corpus->surfaces[story][static_cast<size_t>(target_index - 1)][occurrence].c_str();
}

inform_status inform_mask_story(const inform_corpus* corpus, const char* story_id, int target_index,
                                const char* mask_placeholder, const char* hidden_placeholder, char** out) {
    return guarded([&] {
        require(mask_placeholder, "mask_placeholder");
        require(hidden_placeholder, "hidden_placeholder");
        require(out, "out");
        const auto& story = story_by_id(corpus, story_id);
        *out = dup_string(inform::mask_story(story, target_index, mask_placeholder, hidden_placeholder).text);
    });
}

inform_status inform_cloze_prompt(const inform_corpus* corpus, const char* story_id, int target_index, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(inform::build_cloze_prompt(story_by_id(corpus, story_id), target_index));
    });
}

inform_status inform_annotations_load(const char* path, const inform_corpus* corpus, inform_annotations** out) {
    return guarded([&] {
        require(path, "path");
        require(corpus, "corpus");
        require(out, "out");
        auto a = std::make_unique<inform_annotations>();
        a->rows = inform::load_annotations(path, corpus->corpus, a->diagnostics);
        *out = a.release();
    });
}

void inform_annotations_free(inform_annotations* annotations) { delete annotations; }

size_t inform_annotations_count(const inform_annotations* annotations) {
    return annotations ? annotations->rows.size() : 0;
}

size_t inform_annotations_warning_count(const inform_annotations* annotations) {
    return annotations ? annotations->diagnostics.count(inform::DiagnosticKind::warning) : 0;
}

inform_baseline_config inform_baseline_config_default(void) {
    const inform::BaselineConfig d;
    return {d.window_size, d.related_threshold, 1};
}

inform_lm_config inform_lm_config_default(void) {
    const inform::ScorerConfig d;
    inform_lm_config c{};
    c.top_k = d.top_k;
    c.mask_placeholder = "<mask>";
    c.hidden_placeholder = nullptr;
    c.backend_url = nullptr;
    c.timeout_ms = static_cast<int>(d.request_timeout.count());
    c.max_parallel = d.max_parallel_requests;
    c.max_tokens = d.max_tokens;
    c.retry_attempts = d.retry.attempts;
    c.retry_backoff_ms = static_cast<int>(d.retry.initial_backoff.count());
    c.lemma_fallback = 1;
    return c;
}

inform_status inform_gold_build(const inform_corpus* corpus, const inform_annotations* annotations,
                                const inform_embeddings* embeddings, const inform_analyzer* analyzer,
                                int lemma_fallback, inform_scores** out) {
    return guarded([&] {
        require(corpus, "corpus");
        require(annotations, "annotations");
        require(embeddings, "embeddings");
        require(analyzer, "analyzer");
        require(out, "out");
        const inform::Resolver resolver(embeddings->table, analyzer->analyzer.lemmatizer(), {lemma_fallback != 0});
        auto g = inform::build_gold_standard(corpus->corpus, annotations->rows, resolver);
        auto s = std::make_unique<inform_scores>();
        s->set.diagnostics = annotations->diagnostics;
        s->set.diagnostics.append(g.result.diagnostics);
        s->set.scores = std::move(g.result.scores);
        s->gold = g.summary;
        *out = s.release();
    });
}

inform_status inform_gold_summary_get(const inform_scores* scores, inform_gold_summary* out) {
    return guarded([&] {
        require(scores, "scores");
        require(out, "out");
        *out = {scores->gold.targets_scored, scores->gold.targets_dropped, scores->gold.mean_annotators};
    });
}

inform_status inform_score_baseline(const inform_corpus* corpus, const inform_embeddings* embeddings,
                                    const inform_analyzer* analyzer, inform_method method,
                                    const inform_baseline_config* config, inform_scores** out) {
    return guarded([&] {
        require(corpus, "corpus");
        require(embeddings, "embeddings");
        require(analyzer, "analyzer");
        require(out, "out");
        const auto c = config ? *config : inform_baseline_config_default();
        inform::BaselineConfig bc;
        bc.window_size = c.window_size;
        bc.related_threshold = c.related_threshold;
        const inform::Resolver resolver(embeddings->table, analyzer->analyzer.lemmatizer(), {c.lemma_fallback != 0});
        auto s = std::make_unique<inform_scores>();
        s->set = inform::score_baseline(corpus->corpus, baseline_method(method), bc, resolver);
        *out = s.release();
    });
}

inform_status inform_score_lm(const inform_corpus* corpus, const inform_embeddings* embeddings,
                              const inform_analyzer* analyzer, inform_method method, const inform_lm_config* config,
                              inform_scores** out) {
    return guarded([&] {
        require(corpus, "corpus");
        require(embeddings, "embeddings");
        require(analyzer, "analyzer");
        require(config, "config");
        require(out, "out");
        if (method != INFORM_METHOD_MLM && method != INFORM_METHOD_GENERATIVE) {
            throw inform::InvalidArgument("not a language-model method");
        }
        if (!config->backend_url || !*config->backend_url) throw inform::InvalidArgument("backend_url is required");
        inform::ScorerConfig sc;
        sc.top_k = config->top_k;
        if (config->mask_placeholder) sc.mask_placeholder = config->mask_placeholder;
        if (config->hidden_placeholder) sc.hidden_placeholder = config->hidden_placeholder;
        sc.backend_url = config->backend_url;
        sc.request_timeout = std::chrono::milliseconds(config->timeout_ms);
        sc.max_parallel_requests = config->max_parallel;
        sc.max_tokens = config->max_tokens;
        sc.retry.attempts = config->retry_attempts;
        sc.retry.initial_backoff = std::chrono::milliseconds(config->retry_backoff_ms);
        sc.validate();
        inform::HttpBackend backend(sc.backend_url, sc.request_timeout, sc.retry);
        const inform::Resolver resolver(embeddings->table, analyzer->analyzer.lemmatizer(),
                                        {config->lemma_fallback != 0});
        auto s = std::make_unique<inform_scores>();
        s->set = inform::score_lm(corpus->corpus,
                                  method == INFORM_METHOD_MLM ? inform::LmMethod::masked : inform::LmMethod::generative,
                                  backend, resolver, sc);
        *out = s.release();
    });
}

void inform_scores_free(inform_scores* scores) { delete scores; }

size_t inform_scores_count(const inform_scores* scores) { return scores ? scores->set.scores.size() : 0; }

inform_status inform_scores_get(const inform_scores* scores, size_t i, inform_score_record* out) {
    return guarded([&] {
        require(scores, "scores");
        require(out, "out");
        if (i >= scores->set.scores.size()) throw inform::InvalidArgument("score index out of range");
        const auto& s = scores->set.scores[i];
        *out = {s.story_id.c_str(), s.target_index, s.target_word.c_str(), s.value,
                s.guess ? s.guess->c_str() : nullptr, s.n_contributing};
    });
}

size_t inform_scores_diagnostic_count(const inform_scores* scores) {
    return scores ? scores->set.diagnostics.entries().size() : 0;
}

size_t inform_scores_diagnostic_count_kind(const inform_scores* scores, inform_diagnostic_kind kind) {
    return scores ? scores->set.diagnostics.count(static_cast<inform::DiagnosticKind>(kind)) : 0;
}

inform_status inform_scores_diagnostic_get(const inform_scores* scores, size_t i, inform_diagnostic* out) {
    return guarded([&] {
        require(scores, "scores");
        require(out, "out");
        const auto& entries = scores->set.diagnostics.entries();
        if (i >= entries.size()) throw inform::InvalidArgument("diagnostic index out of range");
        const auto& d = entries[i];
        *out = {static_cast<inform_diagnostic_kind>(d.kind), d.story_id.c_str(), d.target_index, d.message.c_str()};
    });
}

inform_status inform_scores_write_csv(const inform_scores* scores, const char* path, inform_csv_layout layout) {
    return guarded([&] {
        require(scores, "scores");
        require(path, "path");
        const std::filesystem::path target(path);
        auto tmp = target;
        tmp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw inform::IoError("cannot write " + tmp.string());
            inform::write_scores_csv(out, scores->set.scores,
                                     layout == INFORM_CSV_GOLD ? inform::CsvLayout::gold : inform::CsvLayout::prediction);
            out.flush();
            if (!out) {
                std::error_code ec;
                std::filesystem::remove(tmp, ec);
                throw inform::IoError("write failed for " + tmp.string());
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, target, ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
            throw inform::IoError("cannot move output into place at " + target.string());
        }
    });
}

inform_status inform_scores_read_csv(const char* path, inform_scores** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        auto s = std::make_unique<inform_scores>();
        s->set.scores = inform::read_scores_csv(path);
        *out = s.release();
    });
}

inform_status inform_evaluate(const inform_scores* predicted, const inform_scores* gold, const char* method_name,
                              const char* config_digest, int count_valued, inform_report** out) {
    return guarded([&] {
        require(out, "out");
        const auto p = scores_of(predicted, "predicted");
        const auto g = scores_of(gold, "gold");
        auto r = std::make_unique<inform_report>();
        r->report = inform::evaluate(p, g, method_name ? method_name : "", config_digest ? config_digest : "",
                                     count_valued != 0);
        *out = r.release();
    });
}

void inform_report_free(inform_report* report) { delete report; }

inform_status inform_report_get(const inform_report* report, inform_metrics* out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        const auto& r = report->report;
        *out = {r.n,    r.spearman_rho,      r.spearman_p,   r.pearson_r,           r.pearson_p,
                r.rmse, r.dropped_predicted, r.dropped_gold, r.count_valued ? 1 : 0};
    });
}

inform_status inform_report_json(const inform_report* report, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = dup_string(inform::to_json(report->report));
    });
}

inform_status inform_report_text(const inform_report* report, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = dup_string(inform::to_text(report->report));
    });
}

inform_status inform_report_table_row(const inform_report* report, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = dup_string(inform::table_row(report->report));
    });
}

const char* inform_report_table_header(void) {
    static const std::string header = inform::table_header();
    return header.c_str();
}

inform_status inform_spearman(const double* x, const double* y, size_t n, double* rho, double* p) {
    return guarded([&] {
        require(x, "x");
        require(y, "y");
        require(rho, "rho");
        const auto c = inform::spearman({x, n}, {y, n});
        *rho = c.coefficient;
        if (p) *p = c.p_value;
    });
}

inform_status inform_pearson(const double* x, const double* y, size_t n, double* r, double* p) {
    return guarded([&] {
        require(x, "x");
        require(y, "y");
        require(r, "r");
        const auto c = inform::pearson({x, n}, {y, n});
        *r = c.coefficient;
        if (p) *p = c.p_value;
    });
}

inform_status inform_student_t_p(double t, int df, double* p) {
    return guarded([&] {
        require(p, "p");
        *p = inform::student_t_two_tailed_p(t, df);
    });
}

inform_status inform_bench_run(const inform_embeddings* embeddings, const inform_analyzer* analyzer,
                               const char* dataset_path, int lemma_fallback, inform_bench_result* out) {
    return guarded([&] {
        require(embeddings, "embeddings");
        require(analyzer, "analyzer");
        require(dataset_path, "dataset_path");
        require(out, "out");
        const auto pairs = inform::load_similarity_dataset(dataset_path);
        const inform::Resolver resolver(embeddings->table, analyzer->analyzer.lemmatizer(), {lemma_fallback != 0});
        const auto r = inform::run_benchmark(pairs, resolver, dataset_path);
        *out = {r.n, r.dropped, r.pearson.coefficient, r.pearson.p_value, r.spearman.coefficient, r.spearman.p_value};
    });
}

inform_status inform_backend_health(const char* backend_url, int timeout_ms, char** out_model) {
    return guarded([&] {
        require(backend_url, "backend_url");
        require(out_model, "out_model");
        if (timeout_ms <= 0) throw inform::InvalidArgument("timeout must be positive");
        inform::HttpBackend backend(backend_url, std::chrono::milliseconds(timeout_ms));
        const auto h = backend.health();
        if (h.status != "ok") throw inform::ProtocolError("backend reports status '" + h.status + "'");
        *out_model = dup_string(h.model);
    });
}

inform_status inform_mock_server_start(const inform_corpus* corpus, const char* fixtures_path, int echo,
                                       const char* host, int port, inform_mock_server** out) {
    return guarded([&] {
        require(corpus, "corpus");
        require(out, "out");
        if (!fixtures_path && !echo) throw inform::InvalidArgument("mock backend needs fixtures or echo mode");
        if (port < 0 || port > 65535) throw inform::InvalidArgument("port out of range");
        std::map<inform::TargetKey, inform::FixtureEntry> fixtures;
        if (fixtures_path) fixtures = inform::load_fixtures(fixtures_path, corpus->corpus);
        auto responder = std::make_shared<const inform::FixtureResponder>(corpus->corpus, std::move(fixtures), echo != 0);
        auto m = std::make_unique<inform_mock_server>();
        m->server = std::make_unique<inform::MockBackendServer>(std::move(responder));
        m->server->start(host ? host : "127.0.0.1", port);
        *out = m.release();
    });
}

int inform_mock_server_port(const inform_mock_server* server) { return server ? server->server->port() : -1; }

size_t inform_mock_server_request_count(const inform_mock_server* server) {
    return server ? server->server->received_texts().size() : 0;
}

inform_status inform_mock_server_request(const inform_mock_server* server, size_t i, char** out) {
    return guarded([&] {
        require(server, "server");
        require(out, "out");
        const auto texts = server->server->received_texts();
        if (i >= texts.size()) throw inform::InvalidArgument("request index out of range");
        *out = dup_string(texts[i]);
    });
}

void inform_mock_server_free(inform_mock_server* server) {
    if (!server) return;
    server->server->stop();
    delete server;
}

}  // extern "C"
