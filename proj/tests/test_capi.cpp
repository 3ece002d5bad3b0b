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

// Exercises the shared library purely through its C interface.
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "inform/inform.h"
#include "support.hpp"

namespace {

std::string fx(const char* name) { return inform::test::fixture(name).string(); }

std::string take(char* s) {
    std::string out = s ? s : "";
    inform_string_free(s);
    return out;
}

struct Fixture {
    inform_analyzer* analyzer = nullptr;
    inform_embeddings* embeddings = nullptr;
    inform_corpus* corpus = nullptr;

    Fixture() {
        REQUIRE(inform_analyzer_load(fx("lemmas.tsv").c_str(), fx("stopwords.txt").c_str(), &analyzer) == INFORM_OK);
        auto opts = inform_embedding_options_default();
        REQUIRE(inform_embeddings_load(fx("embeddings.vec").c_str(), &opts, &embeddings) == INFORM_OK);
        REQUIRE(inform_corpus_load(fx("corpus.jsonl").c_str(), analyzer, &corpus) == INFORM_OK);
    }
    ~Fixture() {
        inform_corpus_free(corpus);
        inform_embeddings_free(embeddings);
        inform_analyzer_free(analyzer);
    }
};

}  // namespace

TEST_CASE("general calls") {
    CHECK(std::strlen(inform_version()) > 0);
    CHECK(std::string(inform_status_string(INFORM_ERR_PARSE)).size() > 0);
    CHECK(std::string(inform_method_name(INFORM_METHOD_CONTEXT_SIM)) == "context-sim");
    CHECK(std::string(inform_method_name(INFORM_METHOD_MLM)) == "mlm");
    inform_method m;
    CHECK(inform_method_parse("window", &m) == INFORM_OK);
    CHECK(m == INFORM_METHOD_WINDOW);
    CHECK(inform_method_parse("generative", &m) == INFORM_OK);
    CHECK(m == INFORM_METHOD_GENERATIVE);
    CHECK(inform_method_parse("bogus", &m) == INFORM_ERR_INVALID_ARGUMENT);
    CHECK(std::string(inform_last_error()).find("bogus") != std::string::npos);
    CHECK(std::string(inform_diagnostic_kind_name(INFORM_DIAG_EXCLUDED)) == "excluded");

    char* hex = nullptr;
    REQUIRE(inform_sha256_bytes("abc", 3, &hex) == INFORM_OK);
    CHECK(take(hex) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("errors map to status codes") {
    inform_embeddings* e = nullptr;
    CHECK(inform_embeddings_load("/nonexistent/file.vec", nullptr, &e) == INFORM_ERR_IO);
    CHECK(e == nullptr);
    CHECK(std::string(inform_last_error()).find("nonexistent") != std::string::npos);
    CHECK(inform_embeddings_load(nullptr, nullptr, &e) == INFORM_ERR_INVALID_ARGUMENT);

    inform::test::TempDir dir;
    auto bad = dir.write("bad.jsonl", "{not json\n");
    inform_analyzer* a = nullptr;
    REQUIRE(inform_analyzer_load(nullptr, nullptr, &a) == INFORM_OK);
    CHECK(std::string(inform_analyzer_lemma_file(a)).find("lemmas_en.tsv") != std::string::npos);
    inform_corpus* c = nullptr;
    CHECK(inform_corpus_load(bad.c_str(), a, &c) == INFORM_ERR_PARSE);
    auto missing_target =
        dir.write("m.jsonl", "{\"story_id\":\"x\",\"text\":\"a horse\",\"targets\":[\"zebra\"]}\n");
    CHECK(inform_corpus_load(missing_target.c_str(), a, &c) == INFORM_ERR_DATA);

    double rho = 0, p = 0;
    const double x[] = {1, 2, 3}, flat[] = {2, 2, 2};
    CHECK(inform_spearman(x, flat, 3, &rho, &p) == INFORM_ERR_UNDEFINED_CORRELATION);
    CHECK(inform_spearman(x, x, 3, nullptr, &p) == INFORM_ERR_INVALID_ARGUMENT);
    inform_analyzer_free(a);
    inform_analyzer_free(nullptr);
}

TEST_CASE("lemmas, similarity and corpus access") {
    Fixture f;
    CHECK(take([&] {
              char* s = nullptr;
              REQUIRE(inform_lemmatize(f.analyzer, "Walking", &s) == INFORM_OK);
              return s;
          }()) == "walk");
    CHECK(inform_embeddings_dim(f.embeddings) == 5);
    inform_load_report rep;
    REQUIRE(inform_embeddings_load_report(f.embeddings, &rep) == INFORM_OK);
    CHECK(rep.had_header == 1);
    CHECK(rep.rows_kept == inform_embeddings_size(f.embeddings));

    double sim = 0;
    int found = 0;
    REQUIRE(inform_word_similarity(f.embeddings, f.analyzer, "pond", "puddle", 1, &sim, &found) == INFORM_OK);
    CHECK(found == 1);
    CHECK(sim == doctest::Approx(0.35).epsilon(1e-12));
    REQUIRE(inform_word_similarity(f.embeddings, f.analyzer, "running", "run", 0, &sim, &found) == INFORM_OK);
    CHECK(found == 0);

    CHECK(inform_corpus_story_count(f.corpus) == 5);
    CHECK(inform_corpus_target_count(f.corpus) == 10);
    CHECK(std::string(inform_corpus_story_id(f.corpus, 1)) == "s2");
    CHECK(inform_corpus_story_targets(f.corpus, 2) == 3);
    CHECK(std::string(inform_corpus_target_word(f.corpus, 1, 2)) == "pond");
    CHECK(inform_corpus_occurrence_count(f.corpus, 1, 2) == 2);
    CHECK(std::string(inform_corpus_occurrence(f.corpus, 4, 1, 0)) == "seeds");

    char* masked = nullptr;
    REQUIRE(inform_mask_story(f.corpus, "s2", 2, "<mask>", "____", &masked) == INFORM_OK);
    CHECK(take(masked) == "A curious ____ watched the moon rise over the quiet <mask>. Frogs sang near the <mask> "
                          "while the ____ hooted.");
    char* prompt = nullptr;
    REQUIRE(inform_cloze_prompt(f.corpus, "s5", 1, &prompt) == INFORM_OK);
    CHECK(take(prompt).rfind("In the following story, guess the word that is replaced by '<mask>'.", 0) == 0);
    CHECK(inform_cloze_prompt(f.corpus, "s9", 1, &prompt) == INFORM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("gold, baseline, csv round trip and evaluation") {
    Fixture f;
    inform_annotations* ann = nullptr;
    REQUIRE(inform_annotations_load(fx("annotations.csv").c_str(), f.corpus, &ann) == INFORM_OK);
    CHECK(inform_annotations_count(ann) == 13);
    CHECK(inform_annotations_warning_count(ann) > 0);

    inform_scores* gold = nullptr;
    REQUIRE(inform_gold_build(f.corpus, ann, f.embeddings, f.analyzer, 1, &gold) == INFORM_OK);
    inform_gold_summary summary;
    REQUIRE(inform_gold_summary_get(gold, &summary) == INFORM_OK);
    CHECK(summary.targets_scored == 9);
    CHECK(summary.targets_dropped == 1);
    const auto& want = inform::test::expected()["gold"];
    REQUIRE(inform_scores_count(gold) == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
        inform_score_record r;
        REQUIRE(inform_scores_get(gold, i, &r) == INFORM_OK);
        CHECK(r.value == doctest::Approx(want[i]["value"].get<double>()).epsilon(1e-12));
        CHECK(r.guess == nullptr);
    }

    auto config = inform_baseline_config_default();
    CHECK(config.window_size == 5);
    CHECK(config.related_threshold == 0.3);
    inform_scores* base = nullptr;
    REQUIRE(inform_score_baseline(f.corpus, f.embeddings, f.analyzer, INFORM_METHOD_CONTEXT_SIM, &config, &base) ==
            INFORM_OK);
    CHECK(inform_scores_diagnostic_count_kind(base, INFORM_DIAG_EXCLUDED) == 1);
    inform_diagnostic diag;
    bool saw_castle = false;
    for (size_t i = 0; i < inform_scores_diagnostic_count(base); ++i) {
        REQUIRE(inform_scores_diagnostic_get(base, i, &diag) == INFORM_OK);
        if (diag.kind == INFORM_DIAG_EXCLUDED) saw_castle = std::string(diag.story_id) == "s4" && diag.target_index == 2;
    }
    CHECK(saw_castle);

    inform::test::TempDir dir;
    const auto csv = (dir.path() / "ctx.csv").string();
    REQUIRE(inform_scores_write_csv(base, csv.c_str(), INFORM_CSV_PREDICTION) == INFORM_OK);
    inform_scores* back = nullptr;
    REQUIRE(inform_scores_read_csv(csv.c_str(), &back) == INFORM_OK);
    REQUIRE(inform_scores_count(back) == inform_scores_count(base));
    for (size_t i = 0; i < inform_scores_count(base); ++i) {
        inform_score_record a, b;
        inform_scores_get(base, i, &a);
        inform_scores_get(back, i, &b);
        CHECK(a.value == b.value);
        CHECK(a.n_contributing == b.n_contributing);
        CHECK(std::string(a.story_id) == b.story_id);
    }

    inform_report* report = nullptr;
    REQUIRE(inform_evaluate(back, gold, "context-sim", "digest", 0, &report) == INFORM_OK);
    inform_metrics m;
    REQUIRE(inform_report_get(report, &m) == INFORM_OK);
    CHECK(m.n == 9);
    CHECK(m.dropped_gold == 0);
    CHECK(std::abs(m.spearman_rho) <= 1.0);
    char* json = nullptr;
    REQUIRE(inform_report_json(report, &json) == INFORM_OK);
    CHECK(nlohmann::json::parse(take(json))["method_name"] == "context-sim");
    char* row = nullptr;
    REQUIRE(inform_report_table_row(report, &row) == INFORM_OK);
    CHECK(take(row).rfind("| context-sim |", 0) == 0);

    inform_report* self = nullptr;
    REQUIRE(inform_evaluate(gold, gold, "gold", "", 0, &self) == INFORM_OK);
    REQUIRE(inform_report_get(self, &m) == INFORM_OK);
    CHECK(m.spearman_rho == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m.rmse == 0.0);

    inform_report_free(self);
    inform_report_free(report);
    inform_scores_free(back);
    inform_scores_free(base);
    inform_scores_free(gold);
    inform_annotations_free(ann);
}

TEST_CASE("lm scoring against the in-library mock server") {
    Fixture f;
    inform_mock_server* server = nullptr;
    REQUIRE(inform_mock_server_start(f.corpus, fx("mock_fixtures.jsonl").c_str(), 1, "127.0.0.1", 0, &server) ==
            INFORM_OK);
    const int port = inform_mock_server_port(server);
    REQUIRE(port > 0);
    const std::string url = "http://127.0.0.1:" + std::to_string(port);

    char* model = nullptr;
    REQUIRE(inform_backend_health(url.c_str(), 2000, &model) == INFORM_OK);
    CHECK(take(model) == "inform-mock");

    auto config = inform_lm_config_default();
    config.backend_url = url.c_str();
    inform_scores* scores = nullptr;
    REQUIRE(inform_score_lm(f.corpus, f.embeddings, f.analyzer, INFORM_METHOD_GENERATIVE, &config, &scores) ==
            INFORM_OK);
    CHECK(inform_mock_server_request_count(server) == 10);
    bool saw_ship = false;
    for (size_t i = 0; i < inform_scores_count(scores); ++i) {
        inform_score_record r;
        inform_scores_get(scores, i, &r);
        REQUIRE(r.guess != nullptr);
        if (std::string(r.guess) == "ship") {
            saw_ship = true;
            CHECK(r.value == doctest::Approx(0.62).epsilon(1e-12));
        }
    }
    CHECK(saw_ship);
    char* text = nullptr;
    REQUIRE(inform_mock_server_request(server, 0, &text) == INFORM_OK);
    CHECK(take(text).find("<mask>") != std::string::npos);

    config.backend_url = nullptr;
    inform_scores* none = nullptr;
    CHECK(inform_score_lm(f.corpus, f.embeddings, f.analyzer, INFORM_METHOD_MLM, &config, &none) ==
          INFORM_ERR_INVALID_ARGUMENT);
    CHECK(inform_score_lm(f.corpus, f.embeddings, f.analyzer, INFORM_METHOD_WINDOW, &config, &none) ==
          INFORM_ERR_INVALID_ARGUMENT);

    inform_scores_free(scores);
    inform_mock_server_free(server);
    CHECK(inform_backend_health(url.c_str(), 500, &model) == INFORM_ERR_TRANSPORT);
}

TEST_CASE("statistics entry points") {
    const double x[] = {1, 2, 3, 4, 5}, y[] = {2, 1, 4, 3, 5};
    double rho = 0, p = 0;
    REQUIRE(inform_spearman(x, y, 5, &rho, &p) == INFORM_OK);
    CHECK(rho == doctest::Approx(0.8).epsilon(1e-15));
    double r = 0;
    const double a[] = {1, 2, 3}, b[] = {1, 2, 2};
    REQUIRE(inform_pearson(a, b, 3, &r, &p) == INFORM_OK);
    CHECK(r == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    REQUIRE(inform_student_t_p(1.0, 1, &p) == INFORM_OK);
    CHECK(std::abs(p - 0.5) <= 1e-10);
    CHECK(inform_student_t_p(1.0, 0, &p) == INFORM_ERR_INVALID_ARGUMENT);
}
