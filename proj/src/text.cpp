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

#include "inform/text.hpp"

#include <cstdlib>
#include <fstream>

#include "inform/errors.hpp"

#ifndef INFORM_DEFAULT_DATA_DIR
#define INFORM_DEFAULT_DATA_DIR "data"
#endif

namespace inform {

namespace {

constexpr std::string_view kTypographicApostrophe = "\xE2\x80\x99";  // U+2019

struct CodePoint {
    char32_t value;
    std::size_t length;
};

// Malformed sequences decode as code point 0, one byte long; 0 is never a word character.
CodePoint decode_utf8(std::string_view s, std::size_t i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) return {b0, 1};
    std::size_t len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return {0, 1};
    }
    if (i + len > s.size()) return {0, 1};
    for (std::size_t k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) return {0, 1};
        cp = (cp << 6) | (b & 0x3F);
    }
    return {cp, len};
}

bool is_word_char(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9');
    }
    if (cp == 0) return false;
    if (cp >= 0x2000 && cp <= 0x206F) return false;
    if (cp >= 0xA0 && cp <= 0xBF) return false;
    if (cp == 0xD7 || cp == 0xF7) return false;
    return true;
}

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'’'; }

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// Candidates in rule order: ies->y, es, s, ed, ed->e, doubled+ed, ing, ing->e, doubled+ing.
std::vector<std::string> suffix_candidates(const std::string& w) {
    std::vector<std::string> out;
    auto stem = [&](std::size_t cut) { return w.substr(0, w.size() - cut); };
    auto undouble = [&](const std::string& s) {
        const std::size_t n = s.size();
        if (n >= 3 && s[n - 1] == s[n - 2] && !is_vowel(s[n - 1])) out.push_back(s.substr(0, n - 1));
    };
    if (ends_with(w, "ies") && w.size() > 4) out.push_back(stem(3) + "y");
    if (ends_with(w, "es") && w.size() > 3) out.push_back(stem(2));
    if (ends_with(w, "s") && !ends_with(w, "ss") && w.size() > 2) out.push_back(stem(1));
    if (ends_with(w, "ed") && w.size() > 3) {
        out.push_back(stem(2));
        out.push_back(stem(1));
        undouble(stem(2));
    }
    if (ends_with(w, "ing") && w.size() > 4) {
        out.push_back(stem(3));
        out.push_back(stem(3) + "e");
        undouble(stem(3));
    }
    return out;
}

std::ifstream open_text(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return in;
}

}  // namespace

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::string normalize_word(std::string_view s) {
    std::string out = to_lower(s);
    for (auto pos = out.find(kTypographicApostrophe); pos != std::string::npos;
         pos = out.find(kTypographicApostrophe, pos + 1)) {
        out.replace(pos, kTypographicApostrophe.size(), "'");
    }
    return out;
}

Lemmatizer::Lemmatizer(std::unordered_map<std::string, std::string> table) : table_(std::move(table)) {
    for (const auto& [form, lemma] : table_) lemmas_.insert(lemma);
}

Lemmatizer Lemmatizer::from_file(const std::filesystem::path& path) {
    auto in = open_text(path);
    std::unordered_map<std::string, std::string> table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto tab = body.find('\t');
        if (tab == std::string_view::npos) throw ParseError("lemma table " + path.string() + ": expected form<TAB>lemma", lineno);
        auto form = normalize_word(trim(body.substr(0, tab)));
        auto lemma = normalize_word(trim(body.substr(tab + 1)));
        if (form.empty() || lemma.empty()) throw ParseError("lemma table " + path.string() + ": empty field", lineno);
        table.emplace(std::move(form), std::move(lemma));
    }
    return Lemmatizer(std::move(table));
}

bool Lemmatizer::is_known_lemma(std::string_view word) const { return lemmas_.contains(std::string(word)); }

std::string Lemmatizer::lemmatize(std::string_view word) const {
    std::string w = normalize_word(trim(word));
    if (ends_with(w, "'s") && w.size() > 2) w.resize(w.size() - 2);
    while (!w.empty() && w.back() == '\'') w.pop_back();
    if (w.empty()) return w;

    if (auto it = table_.find(w); it != table_.end()) return it->second;
    if (lemmas_.contains(w)) return w;
    for (auto& candidate : suffix_candidates(w)) {
        if (lemmas_.contains(candidate)) return candidate;
    }
    return w;
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
    auto in = open_text(path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        words.insert(normalize_word(body));
    }
    return StopwordList(std::move(words));
}

bool StopwordList::contains(std::string_view word) const { return words_.contains(normalize_word(word)); }

std::vector<Token> tokenize(std::string_view text, const StopwordList& stopwords, const Lemmatizer& lemmatizer) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        auto cp = decode_utf8(text, i);
        if (!is_word_char(cp.value)) {
            i += cp.length;
            continue;
        }
        const std::size_t begin = i;
        std::size_t end = i;
        while (end < text.size()) {
            auto cur = decode_utf8(text, end);
            if (is_word_char(cur.value)) {
                end += cur.length;
                continue;
            }
            if (is_apostrophe(cur.value) && end + cur.length < text.size() &&
                is_word_char(decode_utf8(text, end + cur.length).value)) {
                end += cur.length;
                continue;
            }
            break;
        }
        Token tok;
        tok.surface = std::string(text.substr(begin, end - begin));
        tok.span = {begin, end};
        tok.is_stopword = stopwords.contains(tok.surface);
        tok.lemma = lemmatizer.lemmatize(tok.surface);
        tokens.push_back(std::move(tok));
        i = end;
    }
    return tokens;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("INFORM_DATA_DIR"); env && *env) return env;
    return INFORM_DEFAULT_DATA_DIR;
}

TextAnalyzer TextAnalyzer::load(const std::filesystem::path& lemma_file, const std::filesystem::path& stopword_file) {
    TextAnalyzer a(Lemmatizer::from_file(lemma_file), StopwordList::from_file(stopword_file));
    a.lemma_file_ = lemma_file;
    a.stopword_file_ = stopword_file;
    return a;
}

TextAnalyzer TextAnalyzer::load_default() {
    const auto dir = default_data_dir();
    return load(dir / "lemmas_en.tsv", dir / "stopwords_en.txt");
}

}  // namespace inform
