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
#include <random>
#include <zlib.h>

#include "inform/errors.hpp"
#include "inform/embeddings.hpp"
#include "support.hpp"

using namespace inform;

namespace {

double cos_of(std::vector<float> a, std::vector<float> b) { return cosine(Vector(a), Vector(b)); }

}  // namespace

TEST_SUITE("embeddings") {

TEST_CASE("cosine hand examples") {
    CHECK(cos_of({1, 0}, {1, 0}) == 1.0);
    CHECK(cos_of({1, 0}, {0, 1}) == 0.0);
    CHECK(cos_of({1, 2, 2}, {2, 1, 2}) == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
    CHECK_THROWS_AS(cos_of({1, 0}, {1, 0, 0}), InvalidArgument);
    CHECK_THROWS_AS(cos_of({0, 0}, {1, 0}), InvalidArgument);
}

TEST_CASE("cosine properties on random pairs") {
    std::mt19937 rng(1234);
    std::normal_distribution<float> normal(0.0f, 1.0f);
    std::uniform_real_distribution<float> scale(0.01f, 100.0f);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 1 + rng() % 64;
        std::vector<float> a(dim), b(dim);
        for (auto& x : a) x = normal(rng);
        for (auto& x : b) x = normal(rng);
        if (std::all_of(a.begin(), a.end(), [](float x) { return x == 0; })) a[0] = 1;
        if (std::all_of(b.begin(), b.end(), [](float x) { return x == 0; })) b[0] = 1;
        const double ab = cos_of(a, b);
        CHECK(ab == cos_of(b, a));
        CHECK(std::abs(ab) <= 1.0 + 1e-9);

        const float k = scale(rng);
        std::vector<float> pos(a), neg(a);
        for (auto& x : pos) x *= k;
        for (auto& x : neg) x *= -k;
        CHECK(cos_of(a, pos) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(cos_of(a, neg) == doctest::Approx(-1.0).epsilon(1e-6));
    }
}

TEST_CASE("fixture cosines match the oracle") {
    const auto& h = test::hermetic();
    for (const auto& row : test::expected()["cosine"]) {
        const auto w1 = row["w1"].get<std::string>();
        const auto w2 = row["w2"].get<std::string>();
        CAPTURE(w1);
        CAPTURE(w2);
        auto s = h.resolver.similarity(w1, w2);
        REQUIRE(s.has_value());
        CHECK(*s == doctest::Approx(row["value"].get<double>()).epsilon(1e-12));
    }
}

TEST_CASE("resolution chain") {
    const auto& h = test::hermetic();
    const auto apple = *h.table.find("apple");
    CHECK(h.resolver.resolve("Apple")->data() == apple.data());
    CHECK(h.resolver.resolve("  apple ")->data() == apple.data());
    CHECK(h.resolver.resolve("Ice  Cream")->data() == h.table.find("ice_cream")->data());
    CHECK(h.resolver.resolve("running")->data() == h.table.find("run")->data());
    CHECK_FALSE(h.resolver.resolve("xqzzy"));
    CHECK_FALSE(h.resolver.resolve(""));
    CHECK(h.resolver.similarity("dog", "dog") == 1.0);
    CHECK_FALSE(h.resolver.similarity("xqzzy", "cat"));

    Resolver strict(h.table, h.analyzer.lemmatizer(), ResolveOptions{.lemma_fallback = false});
    CHECK_FALSE(strict.resolve("running"));
    CHECK(strict.resolve("Apple"));
}

TEST_CASE("resolve is deterministic") {
    const auto& h = test::hermetic();
    for (const char* w : {"apples", "Walking", "ice cream", "castle", "owl"}) {
        auto a = h.resolver.resolve(w);
        auto b = h.resolver.resolve(w);
        CHECK(a.has_value() == b.has_value());
        if (a) CHECK(a->data() == b->data());
    }
}

TEST_CASE("loader reads plain rows without header") {
    test::TempDir dir;
    auto p = dir.write("v.txt", "a 1 0 0 0\nb 0 1 0 0\nc 0 0 1 0.5\n");
    auto t = load_embeddings(p);
    CHECK(t.size() == 3);
    CHECK(t.dim() == 4);
    CHECK_FALSE(t.load_report().had_header);
    CHECK(t.load_report().warning_count() == 0);
    CHECK((*t.find("c"))[3] == 0.5f);
}

TEST_CASE("loader honours a word2vec header") {
    test::TempDir dir;
    std::string row1 = "x", row2 = "y";
    for (int i = 0; i < 300; ++i) {
        row1 += " " + std::to_string(i % 7);
        row2 += " 1";
    }
    auto p = dir.write("v.vec", "2 300\n" + row1 + "\n" + row2 + "\n");
    auto t = load_embeddings(p);
    CHECK(t.dim() == 300);
    CHECK(t.size() == 2);
    CHECK(t.load_report().had_header);
}

TEST_CASE("loader skips bad rows with warnings") {
    test::TempDir dir;
    auto p = dir.write("v.txt",
                       "a 1 0 0 0\n"
                       "short 1 0\n"
                       "b 0 1 0 0\n");
    auto t = load_embeddings(p);
    CHECK(t.size() == 2);
    CHECK(t.load_report().wrong_dim_rows == 1);
    CHECK(t.load_report().warning_count() == 1);

    auto q = dir.write("w.txt",
                       "a 1 0\n"
                       "a 0 1\n"
                       "z 0 0\n"
                       "n 1 nan\n"
                       "lonely\n"
                       "b 2 2\n");
    auto u = load_embeddings(q);
    CHECK(u.size() == 2);
    CHECK(u.load_report().duplicate_rows == 1);
    CHECK(u.load_report().zero_rows == 1);
    CHECK(u.load_report().malformed_rows == 2);
    CHECK(u.load_report().warning_count() == 4);
}

TEST_CASE("loader strips the conceptnet prefix and respects limit") {
    test::TempDir dir;
    auto p = dir.write("nb.txt", "3 2\n/c/en/cat 1 2\n/c/en/dog 2 1\n/c/en/ice_cream 1 1\n");
    auto t = load_embeddings(p);
    CHECK(t.contains("cat"));
    CHECK(t.contains("ice_cream"));
    LoadOptions keep;
    keep.strip_prefix = false;
    auto raw = load_embeddings(p, keep);
    CHECK(raw.contains("/c/en/cat"));
    CHECK_FALSE(raw.contains("cat"));
    auto limited = load_embeddings(p, LoadOptions{.limit = 2});
    CHECK(limited.size() == 2);
    CHECK_FALSE(limited.contains("ice_cream"));
    CHECK_THROWS_AS(load_embeddings(p, LoadOptions{.limit = 0}), InvalidArgument);
}

TEST_CASE("loader reads gzip input") {
    test::TempDir dir;
    const auto p = dir.path() / "v.txt.gz";
    gzFile gz = gzopen(p.c_str(), "wb");
    REQUIRE(gz != nullptr);
    const std::string body = "2 3\ncat 1 2 2\ndog 2 1 2\n";
    gzwrite(gz, body.data(), static_cast<unsigned>(body.size()));
    gzclose(gz);
    auto t = load_embeddings(p);
    CHECK(t.load_report().gzip);
    CHECK(t.size() == 2);
    CHECK(cosine(*t.find("cat"), *t.find("dog")) == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("loader errors") {
    test::TempDir dir;
    CHECK_THROWS_AS(load_embeddings(dir.path() / "missing.vec"), IoError);
    CHECK_THROWS_AS(load_embeddings(dir.write("empty.vec", "")), DataError);
    CHECK_THROWS_AS(load_embeddings(dir.write("junk.vec", "a b c\n")), DataError);
}

TEST_CASE("in-memory table validation") {
    auto t = EmbeddingTable::from_entries(2, {{"a", {1, 0}}, {"b", {0, 1}}});
    CHECK(t.size() == 2);
    CHECK_THROWS_AS(EmbeddingTable::from_entries(2, {{"a", {1, 0, 0}}}), InvalidArgument);
    CHECK_THROWS_AS(EmbeddingTable::from_entries(2, {{"a", {0, 0}}}), InvalidArgument);
    CHECK_THROWS_AS(EmbeddingTable::from_entries(2, {{"a", {1, 0}}, {"a", {0, 1}}}), InvalidArgument);
    CHECK_THROWS_AS(EmbeddingTable::from_entries(2, {}), InvalidArgument);
}

}  // TEST_SUITE
