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

// Shared helpers for the unit tests: hermetic fixture paths, loaders and a
// scratch directory that cleans up after itself.
#pragma once

#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <string>
#include <unistd.h>

#include "inform/corpus.hpp"
#include "inform/embeddings.hpp"
#include "inform/text.hpp"

namespace inform::test {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(INFORM_FIXTURE_DIR) / name;
}

inline const nlohmann::json& expected() {
    static const nlohmann::json doc = [] {
        std::ifstream in(fixture("expected.json"));
        return nlohmann::json::parse(in);
    }();
    return doc;
}

// Everything a scorer needs, loaded from the hermetic fixture set.
struct Hermetic {
    TextAnalyzer analyzer = TextAnalyzer::load(fixture("lemmas.tsv"), fixture("stopwords.txt"));
    EmbeddingTable table = load_embeddings(fixture("embeddings.vec"));
    Corpus corpus = load_corpus(fixture("corpus.jsonl"), analyzer);
    Resolver resolver{table, analyzer.lemmatizer()};

    const Story& story(const std::string& id) const {
        for (const auto& s : corpus) {
            if (s.story_id == id) return s;
        }
        FAIL("no story " << id);
        throw;
    }
};

inline const Hermetic& hermetic() {
    static const Hermetic h;
    return h;
}

class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("inform-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }

    std::filesystem::path write(const std::string& name, const std::string& content) const {
        auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace inform::test
