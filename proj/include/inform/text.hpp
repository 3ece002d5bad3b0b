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

#pragma once

// Tokenization, lemmatization and stopword filtering.
//
// Segmentation rule: a token is a maximal run of word characters, where word
// characters are ASCII letters, ASCII digits and every non-ASCII code point
// outside the General Punctuation block (U+2000..U+206F) and the Latin-1
// punctuation range (U+00A0..U+00BF, U+00D7, U+00F7). An apostrophe (' or
// U+2019) joins two word-character runs ("don't" is one token). Hyphens and
// all other ASCII punctuation split tokens ("well-known" -> "well", "known").
// Spans are byte offsets into the UTF-8 source.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace inform {

struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;  // one past the last byte
    std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
    std::string surface;
    Span span;
    bool is_stopword = false;
    std::string lemma;  // always lowercase
};

// ASCII lowercase; bytes >= 0x80 pass through untouched.
std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
// Lowercase, typographic apostrophe folded to ASCII.
std::string normalize_word(std::string_view s);

/// Lookup-table lemmatizer with validated suffix rules.
///
/// lemmatize(w) lowercases w, drops a possessive 's, then returns the first of:
/// the table entry for w; w itself if it is a known lemma; the first suffix
/// rule candidate (ies->y, es, s, ed, ed->e, doubled consonant + ed, ing,
/// ing->e, doubled consonant + ing) that is a known lemma; w unchanged.
/// Known lemmas are the values of the table.
class Lemmatizer {
public:
    Lemmatizer() = default;
    explicit Lemmatizer(std::unordered_map<std::string, std::string> table);

    // Tab-separated `form<TAB>lemma` lines; '#' starts a comment line.
    static Lemmatizer from_file(const std::filesystem::path& path);

    std::string lemmatize(std::string_view word) const;
    bool is_known_lemma(std::string_view word) const;
    std::size_t size() const noexcept { return table_.size(); }

private:
    std::unordered_map<std::string, std::string> table_;
    std::unordered_set<std::string> lemmas_;
};

class StopwordList {
public:
    StopwordList() = default;
    explicit StopwordList(std::unordered_set<std::string> words) : words_(std::move(words)) {}

    // One word per line; '#' starts a comment line.
    static StopwordList from_file(const std::filesystem::path& path);

    // Case-insensitive.
    bool contains(std::string_view word) const;
    std::size_t size() const noexcept { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

std::vector<Token> tokenize(std::string_view text, const StopwordList& stopwords,
                            const Lemmatizer& lemmatizer);

// Directory holding lemmas_en.tsv and stopwords_en.txt: $INFORM_DATA_DIR if
// set, otherwise the directory baked in at build time.
std::filesystem::path default_data_dir();

/// The shipped lemmatizer and stopword list, plus the files they came from.
class TextAnalyzer {
public:
    TextAnalyzer(Lemmatizer lemmatizer, StopwordList stopwords)
        : lemmatizer_(std::move(lemmatizer)), stopwords_(std::move(stopwords)) {}

    static TextAnalyzer load(const std::filesystem::path& lemma_file,
                             const std::filesystem::path& stopword_file);
    static TextAnalyzer load_default();

    std::vector<Token> tokenize(std::string_view text) const {
        return inform::tokenize(text, stopwords_, lemmatizer_);
    }
    std::string lemmatize(std::string_view word) const { return lemmatizer_.lemmatize(word); }

    const Lemmatizer& lemmatizer() const noexcept { return lemmatizer_; }
    const StopwordList& stopwords() const noexcept { return stopwords_; }
    const std::filesystem::path& lemma_file() const noexcept { return lemma_file_; }
    const std::filesystem::path& stopword_file() const noexcept { return stopword_file_; }

private:
    Lemmatizer lemmatizer_;
    StopwordList stopwords_;
    std::filesystem::path lemma_file_;
    std::filesystem::path stopword_file_;
};

}  // namespace inform
