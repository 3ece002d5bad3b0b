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

#include <cmath>

#include "inform/bench.hpp"
#include "inform/errors.hpp"
#include "support.hpp"

using namespace inform;

namespace {

const TextAnalyzer& shipped() {
    static const TextAnalyzer a = TextAnalyzer::load_default();
    return a;
}

// Cosines against "target": g20 0.2, g40 0.4, g60 0.6.
const EmbeddingTable& fifths() {
    static const EmbeddingTable t = EmbeddingTable::from_entries(
        4, {{"target", {1, 0, 0, 0}}, {"g20", {1, 2, 2, 4}}, {"g40", {2, 4, 2, 1}}, {"g60", {3, 4, 0, 0}}});
    return t;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("three-pair dataset with hand-computed correlations") {
    Resolver r(fifths(), shipped().lemmatizer());
    std::vector<SimilarityPair> pairs{{"target", "g20", 1}, {"target", "g40", 4}, {"g60", "target", 2},
                                      {"target", "missing", 3}};
    auto result = run_benchmark(pairs, r, "toy");
    CHECK(result.dataset == "toy");
    CHECK(result.n == 3);
    CHECK(result.dropped == 1);
    CHECK(result.spearman.coefficient == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(result.pearson.coefficient == doctest::Approx(0.6 / std::sqrt(3.36)).epsilon(1e-12));

    std::vector<SimilarityPair> too_few{{"target", "g20", 1}, {"target", "g40", 2}, {"a", "b", 3}};
    CHECK_THROWS_AS(run_benchmark(too_few, r, "tiny"), DataError);
}

TEST_CASE("simlex layout") {
    test::TempDir dir;
    auto p = dir.write("simlex.txt",
                       "word1\tword2\tPOS\tSimLex999\tconc(w1)\tconc(w2)\n"
                       "old\tnew\tA\t1.58\t2.72\t2.81\n"
                       "smart\tintelligent\tA\t9.2\t1.75\t2.46\n");
    auto pairs = load_similarity_dataset(p);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].word1 == "old");
    CHECK(pairs[0].word2 == "new");
    CHECK(pairs[0].gold == 1.58);
    CHECK(pairs[1].gold == 9.2);
}

TEST_CASE("wordsim layouts") {
    test::TempDir dir;
    auto csv = load_similarity_dataset(dir.write("ws.csv", "Word 1,Word 2,Human (mean)\nlove,sex,6.77\ntiger,cat,7.35\n"));
    REQUIRE(csv.size() == 2);
    CHECK(csv[1].word1 == "tiger");
    CHECK(csv[1].gold == 7.35);
    auto tsv = load_similarity_dataset(dir.write("ws.tsv", "# comment\n\nlove\tsex\t6.77\n"));
    REQUIRE(tsv.size() == 1);
    CHECK(tsv[0].gold == 6.77);
}

TEST_CASE("dataset errors") {
    test::TempDir dir;
    try {
        load_similarity_dataset(dir.write("bad.tsv", "a\tb\t1\nc\td\tnot-a-number\n"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(load_similarity_dataset(dir.write("short.tsv", "a\tb\t1\nc\n")), ParseError);
    CHECK_THROWS_AS(load_similarity_dataset(dir.path() / "missing.tsv"), IoError);
}

}  // TEST_SUITE
