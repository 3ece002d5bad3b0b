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

#include <random>
#include <string>
#include <vector>

#include "inform/errors.hpp"
#include "inform/text.hpp"
#include "support.hpp"

using namespace inform;

namespace {

const TextAnalyzer& shipped() {
    static const TextAnalyzer a = TextAnalyzer::load_default();
    return a;
}

std::vector<std::string> surfaces(const std::vector<Token>& toks) {
    std::vector<std::string> out;
    for (const auto& t : toks) out.push_back(t.surface);
    return out;
}

}  // namespace

TEST_SUITE("text") {

TEST_CASE("tokenize marks stopwords") {
    auto toks = shipped().tokenize("The cat ran.");
    REQUIRE(toks.size() == 3);
    CHECK(surfaces(toks) == std::vector<std::string>{"The", "cat", "ran"});
    CHECK(toks[0].is_stopword);
    CHECK_FALSE(toks[1].is_stopword);
    CHECK_FALSE(toks[2].is_stopword);
    CHECK(toks[2].lemma == "run");
}

TEST_CASE("tokenize empty text") {
    CHECK(shipped().tokenize("").empty());
    CHECK(shipped().tokenize("  ... !? ").empty());
}

TEST_CASE("hyphens split words") {
    CHECK(surfaces(shipped().tokenize("well-known fact")) == std::vector<std::string>{"well", "known", "fact"});
}

TEST_CASE("apostrophes join word runs") {
    CHECK(surfaces(shipped().tokenize("don't touch the fox's tail")) ==
          std::vector<std::string>{"don't", "touch", "the", "fox's", "tail"});
    CHECK(surfaces(shipped().tokenize("'quoted' words")) == std::vector<std::string>{"quoted", "words"});
}

TEST_CASE("spans index the source text") {
    const std::string text = "Caf\xc3\xa9 owners\xe2\x80\x94" "and  cats, too.";
    auto toks = shipped().tokenize(text);
    CHECK(surfaces(toks) == std::vector<std::string>{"Caf\xc3\xa9", "owners", "and", "cats", "too"});
    for (const auto& t : toks) CHECK(text.substr(t.span.begin, t.span.size()) == t.surface);
}

TEST_CASE("spans strictly increase on random text") {
    std::mt19937 rng(7);
    const std::string alphabet = "abcXYZ019 '-.,\t\n";
    for (int trial = 0; trial < 300; ++trial) {
        std::string text;
        const int len = static_cast<int>(rng() % 60);
        for (int i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
        auto toks = shipped().tokenize(text);
        std::size_t prev_end = 0;
        for (const auto& t : toks) {
            CHECK(t.span.begin >= prev_end);
            CHECK(t.span.end > t.span.begin);
            CHECK(t.span.end <= text.size());
            prev_end = t.span.end;
        }
    }
}

TEST_CASE("shipped lemmatizer examples") {
    CHECK(shipped().lemmatize("running") == "run");
    CHECK(shipped().lemmatize("apples") == "apple");
    CHECK(shipped().lemmatize("data") == "data");
    CHECK(shipped().lemmatize("Walked") == "walk");
    CHECK(shipped().lemmatize("fox's") == "fox");
}

TEST_CASE("rule fallback only accepts known lemmas") {
    Lemmatizer lem({{"walked", "walk"}, {"hopped", "hop"}, {"made", "make"}, {"flies", "fly"}});
    CHECK(lem.lemmatize("walking") == "walk");
    CHECK(lem.lemmatize("walks") == "walk");
    CHECK(lem.lemmatize("hopping") == "hop");
    CHECK(lem.lemmatize("making") == "make");
    CHECK(lem.lemmatize("fly") == "fly");
    CHECK(lem.lemmatize("glass") == "glass");
    CHECK(lem.lemmatize("zorbing") == "zorbing");
    CHECK(lem.is_known_lemma("walk"));
    CHECK_FALSE(lem.is_known_lemma("walked"));
}

TEST_CASE("normalize and trim") {
    CHECK(normalize_word("Apple") == "apple");
    CHECK(normalize_word("Don\xe2\x80\x99t") == "don't");
    CHECK(normalize_word(" A ") == " a ");
    CHECK(trim(" \n x y \r") == "x y");
    CHECK(to_lower("\xc3\x89T\xc3\xa9") == "\xc3\x89t\xc3\xa9");
}

TEST_CASE("lemma table file errors") {
    test::TempDir dir;
    auto bad = dir.write("bad.tsv", "# comment\nwalked\twalk\nnotab\n");
    try {
        Lemmatizer::from_file(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(Lemmatizer::from_file(dir.path() / "missing.tsv"), IoError);
}

TEST_CASE("stopword file ignores comments") {
    test::TempDir dir;
    auto path = dir.write("stop.txt", "# list\nThe\n\nand\n");
    auto s = StopwordList::from_file(path);
    CHECK(s.size() == 2);
    CHECK(s.contains("the"));
    CHECK(s.contains("AND"));
    CHECK_FALSE(s.contains("fox"));
}

TEST_CASE("shipped data files") {
    CHECK(shipped().lemmatizer().size() > 30000);
    CHECK(shipped().stopwords().size() == 179);
    CHECK(shipped().lemma_file().filename() == "lemmas_en.tsv");
}

}  // TEST_SUITE
