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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "inform/gold.hpp"
#include "support.hpp"

using namespace inform;

namespace {

const TextAnalyzer& shipped() {
    static const TextAnalyzer a = TextAnalyzer::load_default();
    return a;
}

// Guesses with cosines exactly 1/5, 2/5 and 3/5 against "target".
EmbeddingTable fifths_table() {
    return EmbeddingTable::from_entries(4, {{"target", {1, 0, 0, 0}},
                                            {"g20", {1, 2, 2, 4}},
                                            {"g40", {2, 4, 2, 1}},
                                            {"g60", {3, 4, 0, 0}},
                                            {"cat", {1, 1, 0, 0}}});
}

Annotation ann(std::string story, std::string id, std::map<int, std::string> guesses) {
    return {std::move(story), std::move(id), std::move(guesses)};
}

void check_against(const std::vector<InformativenessScore>& got, const nlohmann::json& want) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CAPTURE(got[i].target_word);
        CHECK(got[i].story_id == want[i]["story_id"].get<std::string>());
        CHECK(got[i].target_index == want[i]["target_index"].get<int>());
        CHECK(got[i].value == doctest::Approx(want[i]["value"].get<double>()).epsilon(1e-12));
        CHECK(got[i].n_contributing == want[i]["n_contributing"].get<int>());
        CHECK_FALSE(got[i].guess.has_value());
    }
}

}  // namespace

TEST_SUITE("gold") {

TEST_CASE("hand examples") {
    auto table = fifths_table();
    Resolver r(table, shipped().lemmatizer());
    auto story = make_story("s", "the target word", {"target"}, shipped());
    Diagnostics d;

    std::vector<Annotation> same{ann("s", "a", {{1, "target"}}), ann("s", "b", {{1, "target"}}),
                                 ann("s", "c", {{1, "Target"}})};
    auto one = gold_score(story, 1, same, r, d);
    REQUIRE(one);
    CHECK(one->value == 1.0);
    CHECK(one->n_contributing == 3);

    std::vector<Annotation> graded{ann("s", "a", {{1, "g20"}}), ann("s", "b", {{1, "g40"}}), ann("s", "c", {{1, "g60"}})};
    auto mid = gold_score(story, 1, graded, r, d);
    REQUIRE(mid);
    CHECK(mid->value == doctest::Approx(0.4).epsilon(1e-15));

    std::vector<Annotation> mixed{ann("s", "a", {{1, "cat"}}), ann("s", "b", {}), ann("s", "c", {{1, "xqzzy"}})};
    auto only_cat = gold_score(story, 1, mixed, r, d);
    REQUIRE(only_cat);
    CHECK(only_cat->value == *r.similarity("cat", "target"));
    CHECK(only_cat->n_contributing == 1);
    CHECK(d.count(DiagnosticKind::info) == 1);

    std::vector<Annotation> none{ann("s", "a", {{1, "xqzzy"}})};
    CHECK_FALSE(gold_score(story, 1, none, r, d));
    CHECK(d.count(DiagnosticKind::excluded) == 1);
}

TEST_CASE("hermetic gold matches the oracle") {
    const auto& h = test::hermetic();
    Diagnostics d;
    auto annotations = load_annotations(test::fixture("annotations.jsonl"), h.corpus, d);
    auto gold = build_gold_standard(h.corpus, annotations, h.resolver);
    check_against(gold.result.scores, test::expected()["gold"]);
    CHECK(gold.summary.targets_scored == 9);
    CHECK(gold.summary.targets_dropped == 1);

    auto perfect = load_annotations(test::fixture("perfect_annotations.jsonl"), h.corpus, d);
    check_against(build_gold_standard(h.corpus, perfect, h.resolver).result.scores, test::expected()["perfect_gold"]);
}

TEST_CASE("invariant to annotator order") {
    const auto& h = test::hermetic();
    Diagnostics d;
    auto annotations = load_annotations(test::fixture("annotations.jsonl"), h.corpus, d);
    const auto base = build_gold_standard(h.corpus, annotations, h.resolver).result.scores;
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(annotations.begin(), annotations.end(), rng);
        const auto again = build_gold_standard(h.corpus, annotations, h.resolver).result.scores;
        REQUIRE(again.size() == base.size());
        for (std::size_t i = 0; i < base.size(); ++i) CHECK(again[i].value == base[i].value);
    }
}

TEST_CASE("duplicating a guess moves the mean toward it") {
    auto table = fifths_table();
    Resolver r(table, shipped().lemmatizer());
    auto story = make_story("s", "the target word", {"target"}, shipped());
    Diagnostics d;
    std::vector<Annotation> base{ann("s", "a", {{1, "g20"}}), ann("s", "b", {{1, "g60"}})};
    const double before = gold_score(story, 1, base, r, d)->value;
    for (const char* g : {"g20", "g60", "g40"}) {
        auto more = base;
        more.push_back(ann("s", "c", {{1, g}}));
        const double after = gold_score(story, 1, more, r, d)->value;
        const double sim = *r.similarity(g, "target");
        CHECK(std::abs(after - sim) <= std::abs(before - sim) + 1e-15);
    }
}

TEST_CASE("single-target passages with two annotators") {
    std::vector<std::pair<std::string, std::vector<float>>> entries;
    for (int i = 0; i < 200; ++i) {
        entries.push_back({"word" + std::to_string(i), {1.0f, static_cast<float>(i % 13), 1.0f}});
        entries.push_back({"near" + std::to_string(i), {1.0f, static_cast<float>(i % 7), 2.0f}});
    }
    auto table = EmbeddingTable::from_entries(3, entries);
    Resolver r(table, shipped().lemmatizer());
    Corpus corpus;
    std::vector<Annotation> annotations;
    for (int i = 0; i < 200; ++i) {
        const auto id = "p" + std::to_string(i);
        const auto w = "word" + std::to_string(i);
        corpus.push_back(make_story(id, "A long adult passage that hides " + w + " somewhere.", {w}, shipped()));
        annotations.push_back(ann(id, "x", {{1, w}}));
        annotations.push_back(ann(id, "y", {{1, "near" + std::to_string(i)}}));
    }
    auto gold = build_gold_standard(corpus, annotations, r);
    REQUIRE(gold.result.scores.size() == 200);
    CHECK(gold.summary.targets_scored == 200);
    CHECK(gold.summary.mean_annotators == 2.0);
    for (const auto& s : gold.result.scores) {
        CHECK(s.n_contributing == 2);
        const auto k = s.target_word.substr(4);
        const double want = (*r.similarity("near" + k, s.target_word) + 1.0) / 2.0;
        CHECK(s.value == doctest::Approx(want).epsilon(1e-15));
    }
}

TEST_CASE("story without annotations drops its targets") {
    const auto& h = test::hermetic();
    std::vector<Annotation> only_s1{ann("s1", "a", {{1, "apple"}, {2, "walk"}})};
    auto gold = build_gold_standard(h.corpus, only_s1, h.resolver);
    CHECK(gold.result.scores.size() == 2);
    CHECK(gold.summary.targets_dropped == 8);
    CHECK(gold.result.diagnostics.count(DiagnosticKind::excluded) == 8);
}

}  // TEST_SUITE
