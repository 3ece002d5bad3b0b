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

// inform: command-line front end over the C API.
//
// Exit codes: 0 success, 1 data or runtime failure, 2 usage error.

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "inform/inform.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct Failure {
    int code;
    std::string message;
};

void check(inform_status status, const std::string& context) {
    if (status != INFORM_OK) throw Failure{kExitData, context + ": " + inform_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Analyzer = std::unique_ptr<inform_analyzer, Deleter<inform_analyzer, inform_analyzer_free>>;
using Embeddings = std::unique_ptr<inform_embeddings, Deleter<inform_embeddings, inform_embeddings_free>>;
using CorpusH = std::unique_ptr<inform_corpus, Deleter<inform_corpus, inform_corpus_free>>;
using Annotations = std::unique_ptr<inform_annotations, Deleter<inform_annotations, inform_annotations_free>>;
using Scores = std::unique_ptr<inform_scores, Deleter<inform_scores, inform_scores_free>>;
using Report = std::unique_ptr<inform_report, Deleter<inform_report, inform_report_free>>;
using MockServer = std::unique_ptr<inform_mock_server, Deleter<inform_mock_server, inform_mock_server_free>>;

std::string take(char* s) {
    std::string out = s ? s : "";
    inform_string_free(s);
    return out;
}

std::string sha256(const std::string& path) {
    char* hex = nullptr;
    check(inform_sha256_file(path.c_str(), &hex), "hashing " + path);
    return take(hex);
}

std::string sha256_text(const std::string& text) {
    char* hex = nullptr;
    check(inform_sha256_bytes(text.data(), text.size(), &hex), "hashing config");
    return take(hex);
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Options shared by every command that touches text and embeddings.
struct CommonOptions {
    std::string embeddings;
    std::optional<std::string> lemmas;
    std::optional<std::string> stopwords;
    long long embedding_limit = 0;
    bool no_strip_prefix = false;
    bool no_lemma_fallback = false;
    bool verbose = false;

    void add_text(CLI::App* cmd) {
        cmd->add_option("--lemmas", lemmas, "Lemma table (form<TAB>lemma); default: shipped table");
        cmd->add_option("--stopwords", stopwords, "Stopword list; default: shipped list");
        cmd->add_flag("-v,--verbose", verbose, "Also print info diagnostics");
    }
    void add_embeddings(CLI::App* cmd) {
        cmd->add_option("--embeddings", embeddings, "Word vector file (text format, optionally gzipped)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--embedding-limit", embedding_limit, "Load at most this many vectors")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--no-strip-prefix", no_strip_prefix, "Keep /c/en/ label prefixes");
        cmd->add_flag("--no-lemma-fallback", no_lemma_fallback, "Do not fall back to lemmas when resolving words");
    }

    Analyzer load_analyzer() const {
        inform_analyzer* a = nullptr;
        check(inform_analyzer_load(lemmas ? lemmas->c_str() : nullptr, stopwords ? stopwords->c_str() : nullptr, &a),
              "loading lemma table / stopword list");
        return Analyzer(a);
    }

    Embeddings load_embeddings() const {
        auto opts = inform_embedding_options_default();
        opts.limit = embedding_limit;
        opts.strip_prefix = no_strip_prefix ? 0 : 1;
        inform_embeddings* e = nullptr;
        check(inform_embeddings_load(embeddings.c_str(), &opts, &e), "loading embeddings");
        inform_load_report r{};
        check(inform_embeddings_load_report(e, &r), "embedding load report");
        const auto skipped = r.malformed_rows + r.wrong_dim_rows + r.zero_rows + r.duplicate_rows;
        if (skipped) {
            std::cerr << "warning: embeddings: skipped " << skipped << " rows (" << r.malformed_rows << " malformed, "
                      << r.wrong_dim_rows << " wrong dimension, " << r.zero_rows << " zero, " << r.duplicate_rows
                      << " duplicate)\n";
        }
        return Embeddings(e);
    }

    json embedding_config() const {
        return {{"embedding_limit", embedding_limit}, {"strip_prefix", !no_strip_prefix},
                {"lemma_fallback", !no_lemma_fallback}};
    }

    json text_inputs(const inform_analyzer* a) const {
        const std::string lf = inform_analyzer_lemma_file(a), sf = inform_analyzer_stopword_file(a);
        return {{"lemmas", {{"path", lf}, {"sha256", sha256(lf)}}},
                {"stopwords", {{"path", sf}, {"sha256", sha256(sf)}}}};
    }
};

void print_diagnostics(const inform_scores* s, bool verbose) {
    const auto n = inform_scores_diagnostic_count(s);
    for (size_t i = 0; i < n; ++i) {
        inform_diagnostic d{};
        check(inform_scores_diagnostic_get(s, i, &d), "reading diagnostics");
        if (d.kind == INFORM_DIAG_INFO && !verbose) continue;
        std::cerr << inform_diagnostic_kind_name(d.kind) << ": ";
        if (*d.story_id) std::cerr << "story " << d.story_id << " target " << d.target_index << ": ";
        std::cerr << d.message << '\n';
    }
}

std::string manifest_path(const std::string& out) { return out + ".manifest.json"; }

// Writes the manifest beside `out`; removes `out` again if that fails.
void write_manifest(const std::string& out, const std::vector<std::string>& argv, const json& config,
                    const json& inputs) {
    json m;
    m["tool"] = "inform";
    m["version"] = inform_version();
    m["command_line"] = argv;
    m["timestamp"] = utc_timestamp();
    m["config"] = config;
    m["config_digest"] = sha256_text(config.dump());
    m["inputs"] = inputs;
    const auto path = manifest_path(out);
    const auto tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << m.dump(2) << '\n';
        if (!f) {
            std::error_code ec;
            fs::remove(tmp, ec);
            fs::remove(out, ec);
            throw Failure{kExitData, "cannot write manifest " + path};
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        fs::remove(out, ec);
        throw Failure{kExitData, "cannot write manifest " + path};
    }
}

void ensure_parent(const std::string& out) {
    const auto parent = fs::path(out).parent_path();
    if (!parent.empty() && !fs::is_directory(parent)) {
        throw Failure{kExitData, "output directory does not exist: " + parent.string()};
    }
}

// ---- gold ----

struct GoldArgs {
    CommonOptions common;
    std::string corpus, annotations, out;
};

int run_gold(const GoldArgs& a, const std::vector<std::string>& argv) {
    ensure_parent(a.out);
    auto analyzer = a.common.load_analyzer();
    inform_corpus* c = nullptr;
    check(inform_corpus_load(a.corpus.c_str(), analyzer.get(), &c), "loading corpus");
    CorpusH corpus(c);
    inform_annotations* an = nullptr;
    check(inform_annotations_load(a.annotations.c_str(), corpus.get(), &an), "loading annotations");
    Annotations annotations(an);
    auto embeddings = a.common.load_embeddings();
    inform_scores* s = nullptr;
    check(inform_gold_build(corpus.get(), annotations.get(), embeddings.get(), analyzer.get(),
                            a.common.no_lemma_fallback ? 0 : 1, &s),
          "building gold standard");
    Scores scores(s);
    print_diagnostics(scores.get(), a.common.verbose);
    if (inform_scores_count(scores.get()) == 0) throw Failure{kExitData, "no target received a gold score"};

    check(inform_scores_write_csv(scores.get(), a.out.c_str(), INFORM_CSV_GOLD), "writing " + a.out);
    json config = {{"command", "gold"}};
    config.update(a.common.embedding_config());
    json inputs = {{"corpus", {{"path", a.corpus}, {"sha256", sha256(a.corpus)}}},
                   {"annotations", {{"path", a.annotations}, {"sha256", sha256(a.annotations)}}},
                   {"embeddings", {{"path", a.common.embeddings}, {"sha256", sha256(a.common.embeddings)}}}};
    inputs.update(a.common.text_inputs(analyzer.get()));
    write_manifest(a.out, argv, config, inputs);

    inform_gold_summary g{};
    check(inform_gold_summary_get(scores.get(), &g), "gold summary");
    std::printf("targets scored: %d\ntargets dropped: %d\nmean annotators per target: %.2f\n", g.targets_scored,
                g.targets_dropped, g.mean_annotators);
    std::printf("wrote %s\n", a.out.c_str());
    return 0;
}

// ---- score ----

struct ScoreArgs {
    CommonOptions common;
    std::string method_name, corpus, out;
    int window = 5;
    double threshold = 0.3;
    int top_k = 50;
    std::optional<std::string> backend_url;
    int max_parallel = 4;
    std::optional<int> timeout_ms;
    int max_tokens = 16;
    int retries = 3;
    int backoff_ms = 100;
    std::string mask_placeholder = "<mask>";
    std::optional<std::string> hidden_placeholder;
};

int run_score(const ScoreArgs& a, const std::vector<std::string>& argv) {
    inform_method method{};
    if (inform_method_parse(a.method_name.c_str(), &method) != INFORM_OK) {
        throw Failure{kExitUsage, "--method must be one of context-sim, window, related, mlm, generative"};
    }
    const bool lm = method == INFORM_METHOD_MLM || method == INFORM_METHOD_GENERATIVE;
    if (!(a.threshold > 0 && a.threshold < 1)) throw Failure{kExitUsage, "--threshold must lie strictly between 0 and 1"};
    std::string backend_url;
    int timeout_ms = 30000;
    if (lm) {
        if (a.backend_url) {
            backend_url = *a.backend_url;
        } else if (const char* env = std::getenv("INFORM_BACKEND_URL"); env && *env) {
            backend_url = env;
        } else {
            throw Failure{kExitUsage, "--backend-url (or INFORM_BACKEND_URL) is required for --method " + a.method_name};
        }
        if (a.timeout_ms) {
            timeout_ms = *a.timeout_ms;
        } else if (const char* env = std::getenv("INFORM_TIMEOUT_MS"); env && *env) {
            try {
                timeout_ms = std::stoi(env);
            } catch (const std::exception&) {
                throw Failure{kExitUsage, std::string("INFORM_TIMEOUT_MS is not an integer: ") + env};
            }
            if (timeout_ms <= 0) throw Failure{kExitUsage, "INFORM_TIMEOUT_MS must be positive"};
        }
    }
    ensure_parent(a.out);

    auto analyzer = a.common.load_analyzer();
    inform_corpus* c = nullptr;
    check(inform_corpus_load(a.corpus.c_str(), analyzer.get(), &c), "loading corpus");
    CorpusH corpus(c);
    auto embeddings = a.common.load_embeddings();

    json config = {{"command", "score"}, {"method", a.method_name}};
    config.update(a.common.embedding_config());
    inform_scores* s = nullptr;
    if (!lm) {
        auto bc = inform_baseline_config_default();
        bc.window_size = a.window;
        bc.related_threshold = a.threshold;
        bc.lemma_fallback = a.common.no_lemma_fallback ? 0 : 1;
        if (method == INFORM_METHOD_WINDOW) config["window_size"] = a.window;
        if (method == INFORM_METHOD_RELATED) config["related_threshold"] = a.threshold;
        check(inform_score_baseline(corpus.get(), embeddings.get(), analyzer.get(), method, &bc, &s), "scoring");
    } else {
        auto lc = inform_lm_config_default();
        lc.top_k = a.top_k;
        lc.mask_placeholder = a.mask_placeholder.c_str();
        lc.hidden_placeholder = a.hidden_placeholder ? a.hidden_placeholder->c_str() : nullptr;
        lc.backend_url = backend_url.c_str();
        lc.timeout_ms = timeout_ms;
        lc.max_parallel = a.max_parallel;
        lc.max_tokens = a.max_tokens;
        lc.retry_attempts = a.retries;
        lc.retry_backoff_ms = a.backoff_ms;
        lc.lemma_fallback = a.common.no_lemma_fallback ? 0 : 1;
        config["backend_url"] = backend_url;
        config["timeout_ms"] = timeout_ms;
        config["max_parallel_requests"] = a.max_parallel;
        config["retry_attempts"] = a.retries;
        if (method == INFORM_METHOD_MLM) {
            config["top_k"] = a.top_k;
            config["mask_placeholder"] = a.mask_placeholder;
            config["hidden_placeholder"] = a.hidden_placeholder.value_or("<unk>");
        } else {
            config["max_tokens"] = a.max_tokens;
        }
        check(inform_score_lm(corpus.get(), embeddings.get(), analyzer.get(), method, &lc, &s), "scoring");
    }
    Scores scores(s);
    print_diagnostics(scores.get(), a.common.verbose);

    const auto failed = inform_scores_diagnostic_count_kind(scores.get(), INFORM_DIAG_FAILED);
    if (failed) {
        std::error_code ec;
        fs::remove(a.out, ec);
        fs::remove(manifest_path(a.out), ec);
        throw Failure{kExitData, std::to_string(failed) + " target(s) failed against the backend; no output written"};
    }
    if (inform_scores_count(scores.get()) == 0) throw Failure{kExitData, "no target received a score"};

    check(inform_scores_write_csv(scores.get(), a.out.c_str(), INFORM_CSV_PREDICTION), "writing " + a.out);
    json inputs = {{"corpus", {{"path", a.corpus}, {"sha256", sha256(a.corpus)}}},
                   {"embeddings", {{"path", a.common.embeddings}, {"sha256", sha256(a.common.embeddings)}}}};
    inputs.update(a.common.text_inputs(analyzer.get()));
    write_manifest(a.out, argv, config, inputs);

    const auto total = inform_corpus_target_count(corpus.get());
    std::printf("method: %s\ntargets scored: %zu of %zu\nwrote %s\n", a.method_name.c_str(),
                inform_scores_count(scores.get()), total, a.out.c_str());
    return 0;
}

// ---- eval ----

struct EvalArgs {
    std::string pred, gold;
    std::optional<std::string> method_name;
    bool count_valued = false;
    bool table = false;
    bool as_json = false;
};

int run_eval(const EvalArgs& a) {
    std::string method = a.method_name.value_or(fs::path(a.pred).stem().string());
    std::string digest;
    bool count_valued = a.count_valued;
    const auto mpath = manifest_path(a.pred);
    if (fs::exists(mpath)) {
        std::ifstream f(mpath);
        try {
            const auto m = json::parse(f);
            const auto& cfg = m.at("config");
            const auto recorded = cfg.value("method", std::string());
            if (!a.method_name && !recorded.empty()) {
                method = recorded;
                if (cfg.contains("window_size")) method += "(" + std::to_string(cfg["window_size"].get<int>()) + ")";
                if (cfg.contains("related_threshold")) {
                    char buf[32];
                    std::snprintf(buf, sizeof buf, "(%g)", cfg["related_threshold"].get<double>());
                    method += buf;
                }
            }
            if (recorded == "related") count_valued = true;
            digest = m.value("config_digest", std::string());
        } catch (const json::exception& e) {
            throw Failure{kExitData, "unreadable manifest " + mpath + ": " + e.what()};
        }
    }

    inform_scores* p = nullptr;
    check(inform_scores_read_csv(a.pred.c_str(), &p), "reading predictions");
    Scores pred(p);
    inform_scores* g = nullptr;
    check(inform_scores_read_csv(a.gold.c_str(), &g), "reading gold");
    Scores gold(g);
    inform_report* r = nullptr;
    check(inform_evaluate(pred.get(), gold.get(), method.c_str(), digest.c_str(), count_valued ? 1 : 0, &r),
          "evaluating");
    Report report(r);

    inform_metrics m{};
    check(inform_report_get(report.get(), &m), "report");
    if (m.dropped_predicted || m.dropped_gold) {
        std::cerr << "warning: join dropped " << m.dropped_predicted << " prediction(s) without gold and "
                  << m.dropped_gold << " gold score(s) without prediction\n";
    }
    char* text = nullptr;
    if (a.table) {
        check(inform_report_table_row(report.get(), &text), "table");
        std::printf("%s\n%s\n", inform_report_table_header(), take(text).c_str());
    } else if (a.as_json) {
        check(inform_report_json(report.get(), &text), "report");
        std::printf("%s\n", take(text).c_str());
    } else {
        check(inform_report_text(report.get(), &text), "report");
        std::printf("%s", take(text).c_str());
    }
    return 0;
}

// ---- bench ----

struct BenchArgs {
    CommonOptions common;
    std::optional<std::string> simlex, wordsim;
    bool as_json = false;
};

int run_bench(const BenchArgs& a) {
    if (!a.simlex && !a.wordsim) throw Failure{kExitUsage, "bench needs --simlex and/or --wordsim"};
    auto analyzer = a.common.load_analyzer();
    auto embeddings = a.common.load_embeddings();
    json out = json::array();
    for (const auto& [name, path] : {std::pair{"SimLex-999", a.simlex}, std::pair{"WordSimilarity-353", a.wordsim}}) {
        if (!path) continue;
        inform_bench_result r{};
        check(inform_bench_run(embeddings.get(), analyzer.get(), path->c_str(), a.common.no_lemma_fallback ? 0 : 1, &r),
              std::string("benchmark ") + name);
        if (a.as_json) {
            out.push_back({{"dataset", name},     {"path", *path},        {"n", r.n},
                           {"dropped", r.dropped}, {"pearson_r", r.pearson_r}, {"pearson_p", r.pearson_p},
                           {"spearman_rho", r.spearman_rho}, {"spearman_p", r.spearman_p}});
        } else {
            std::printf("%-20s n=%zu dropped=%zu pearson_r=%.4f (p=%.2e) spearman_rho=%.4f (p=%.2e)\n", name, r.n,
                        r.dropped, r.pearson_r, r.pearson_p, r.spearman_rho, r.spearman_p);
        }
    }
    if (a.as_json) std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

// ---- mock-backend ----

struct MockArgs {
    CommonOptions common;
    std::string corpus;
    std::optional<std::string> fixtures;
    bool echo = false;
    std::string host = "127.0.0.1";
    int port = 0;
    std::optional<std::string> port_file;
};

int run_mock(const MockArgs& a) {
    if (!a.fixtures && !a.echo) throw Failure{kExitUsage, "mock-backend needs --fixtures and/or --echo"};
    // Block the stop signals before any server thread exists so only sigwait sees them.
    sigset_t set;
    sigemptyset(&set);
    sigaddset(&set, SIGINT);
    sigaddset(&set, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &set, nullptr);

    auto analyzer = a.common.load_analyzer();
    inform_corpus* c = nullptr;
    check(inform_corpus_load(a.corpus.c_str(), analyzer.get(), &c), "loading corpus");
    CorpusH corpus(c);
    inform_mock_server* m = nullptr;
    check(inform_mock_server_start(corpus.get(), a.fixtures ? a.fixtures->c_str() : nullptr, a.echo ? 1 : 0,
                                   a.host.c_str(), a.port, &m),
          "starting mock backend");
    MockServer server(m);
    const int port = inform_mock_server_port(server.get());
    if (a.port_file) {
        const auto tmp = *a.port_file + ".tmp";
        {
            std::ofstream f(tmp, std::ios::trunc);
            f << port << '\n';
        }
        fs::rename(tmp, *a.port_file);
    }
    std::printf("listening on http://%s:%d\n", a.host.c_str(), port);
    std::fflush(stdout);
    int sig = 0;
    sigwait(&set, &sig);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    CLI::App app{"Contextual informativeness scoring toolkit", "inform"};
    app.set_version_flag("--version", std::string(inform_version()));
    app.require_subcommand(1);

    GoldArgs gold;
    auto* gold_cmd = app.add_subcommand("gold", "Build gold scores from annotator guesses");
    gold_cmd->add_option("--corpus", gold.corpus, "Stories (JSON lines)")->required()->check(CLI::ExistingFile);
    gold_cmd->add_option("--annotations", gold.annotations, "Annotator guesses (JSON lines or CSV)")
        ->required()
        ->check(CLI::ExistingFile);
    gold_cmd->add_option("--out", gold.out, "Gold score CSV to write")->required();
    gold.common.add_embeddings(gold_cmd);
    gold.common.add_text(gold_cmd);

    ScoreArgs score;
    auto* score_cmd = app.add_subcommand("score", "Predict informativeness with one method");
    score_cmd->add_option("--method", score.method_name, "context-sim, window, related, mlm or generative")
        ->required();
    score_cmd->add_option("--corpus", score.corpus, "Stories (JSON lines)")->required()->check(CLI::ExistingFile);
    score_cmd->add_option("--out", score.out, "Score CSV to write")->required();
    score.common.add_embeddings(score_cmd);
    score.common.add_text(score_cmd);
    score_cmd->add_option("--window", score.window, "Context window size per side (window)")
        ->check(CLI::PositiveNumber);
    score_cmd->add_option("--threshold", score.threshold, "Similarity threshold in (0, 1) (related)")
        ->check(CLI::Range(0.0, 1.0));
    score_cmd->add_option("--top-k", score.top_k, "Candidates per mask (mlm)")->check(CLI::PositiveNumber);
    score_cmd->add_option("--backend-url", score.backend_url, "Prediction backend; default $INFORM_BACKEND_URL");
    score_cmd->add_option("--max-parallel", score.max_parallel, "Concurrent backend requests")
        ->check(CLI::PositiveNumber);
    score_cmd->add_option("--timeout-ms", score.timeout_ms, "Per-request timeout; default $INFORM_TIMEOUT_MS or 30000")
        ->check(CLI::PositiveNumber);
    score_cmd->add_option("--max-tokens", score.max_tokens, "Generation length (generative)")
        ->check(CLI::PositiveNumber);
    score_cmd->add_option("--retries", score.retries, "Attempts per request, including the first")
        ->check(CLI::PositiveNumber);
    score_cmd->add_option("--backoff-ms", score.backoff_ms, "Initial retry backoff")->check(CLI::NonNegativeNumber);
    score_cmd->add_option("--mask-placeholder", score.mask_placeholder, "Focal target placeholder (mlm)");
    score_cmd->add_option("--hidden-placeholder", score.hidden_placeholder, "Other-target placeholder (mlm)");

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Correlate predictions with gold scores");
    eval_cmd->add_option("--pred", eval.pred, "Prediction CSV")->required()->check(CLI::ExistingFile);
    eval_cmd->add_option("--gold", eval.gold, "Gold CSV")->required()->check(CLI::ExistingFile);
    eval_cmd->add_option("--method-name", eval.method_name, "Label for the report; default from the manifest");
    eval_cmd->add_flag("--count-valued", eval.count_valued, "Normalize predictions to [0, 1] before RMSE");
    auto* table_flag = eval_cmd->add_flag("--table", eval.table, "Print a results-table row");
    eval_cmd->add_flag("--json", eval.as_json, "Print the report as JSON")->excludes(table_flag);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Check embeddings against word-similarity datasets");
    bench.common.add_embeddings(bench_cmd);
    bench.common.add_text(bench_cmd);
    bench_cmd->add_option("--simlex", bench.simlex, "SimLex-999 file")->check(CLI::ExistingFile);
    bench_cmd->add_option("--wordsim", bench.wordsim, "WordSimilarity-353 file")->check(CLI::ExistingFile);
    bench_cmd->add_flag("--json", bench.as_json, "Print results as JSON");

    MockArgs mock;
    auto* mock_cmd = app.add_subcommand("mock-backend", "Serve the backend protocol from fixtures");
    mock_cmd->add_option("--corpus", mock.corpus, "Stories the requests are built from")
        ->required()
        ->check(CLI::ExistingFile);
    mock_cmd->add_option("--fixtures", mock.fixtures, "Canned responses (JSON lines)")->check(CLI::ExistingFile);
    mock_cmd->add_flag("--echo", mock.echo, "Answer uncovered targets with the target word");
    mock_cmd->add_option("--host", mock.host, "Bind address");
    mock_cmd->add_option("--port", mock.port, "Port; 0 picks a free one")->check(CLI::Range(0, 65535));
    mock_cmd->add_option("--port-file", mock.port_file, "Write the bound port here once listening");
    mock.common.add_text(mock_cmd);

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
        return kExitUsage;
    }

    try {
        if (*gold_cmd) return run_gold(gold, args);
        if (*score_cmd) return run_score(score, args);
        if (*eval_cmd) return run_eval(eval);
        if (*bench_cmd) return run_bench(bench);
        if (*mock_cmd) return run_mock(mock);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        if (f.code == kExitUsage) std::cerr << "run with --help for usage\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
