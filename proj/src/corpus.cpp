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

#include "inform/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "csv.hpp"
#include "inform/errors.hpp"

namespace inform {

using nlohmann::json;

const TargetWord& Story::target(int index) const {
    if (index < 1 || index > target_count()) {
        throw InvalidArgument("story " + story_id + " has no target " + std::to_string(index));
    }
    return targets[static_cast<std::size_t>(index - 1)];
}

Story locate_targets(Story story, const TextAnalyzer& analyzer) {
    story.tokens = analyzer.tokenize(story.text);
    std::unordered_map<std::string, std::string> lemma_owner;
    for (std::size_t t = 0; t < story.targets.size(); ++t) {
        auto& target = story.targets[t];
        target.index = static_cast<int>(t + 1);
        target.occurrences.clear();
        target.token_indices.clear();
        const auto lemma = analyzer.lemmatize(target.word);
        if (lemma.empty()) throw DataError("story " + story.story_id + ": target " + std::to_string(t + 1) + " is empty");
        if (auto [it, inserted] = lemma_owner.emplace(lemma, target.word); !inserted) {
            throw DataError("story " + story.story_id + ": ambiguous target set, '" + it->second + "' and '" +
                            target.word + "' share lemma '" + lemma + "'");
        }
        for (std::size_t k = 0; k < story.tokens.size(); ++k) {
            if (story.tokens[k].lemma == lemma) {
                target.occurrences.push_back(story.tokens[k].span);
                target.token_indices.push_back(k);
            }
        }
        if (target.occurrences.empty()) {
            throw DataError("story " + story.story_id + ": target '" + target.word + "' does not occur in the text");
        }
    }
    return story;
}

Story make_story(std::string story_id, std::string text, const std::vector<std::string>& targets,
                 const TextAnalyzer& analyzer) {
    Story s;
    s.story_id = std::move(story_id);
    s.text = std::move(text);
    for (const auto& w : targets) s.targets.push_back(TargetWord{0, w, {}, {}});
    if (s.targets.empty()) throw DataError("story " + s.story_id + " has no targets");
    return locate_targets(std::move(s), analyzer);
}

namespace {

std::ifstream open_input(const std::filesystem::path& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + what + " file " + path.string());
    return in;
}

std::string require_string(const json& obj, const char* key, std::size_t lineno) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
        throw ParseError(std::string("field '") + key + "' missing or not a string", lineno);
    }
    return it->get<std::string>();
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& path, const TextAnalyzer& analyzer) {
    auto in = open_input(path, "corpus");
    Corpus corpus;
    std::unordered_set<std::string> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(path.string() + ": " + e.what(), lineno);
        }
        if (!obj.is_object()) throw ParseError(path.string() + ": record is not an object", lineno);
        auto id = require_string(obj, "story_id", lineno);
        auto text = require_string(obj, "text", lineno);
        auto targets_it = obj.find("targets");
        if (targets_it == obj.end() || !targets_it->is_array() || targets_it->empty()) {
            throw ParseError("field 'targets' missing or not a non-empty array", lineno);
        }
        std::vector<std::string> targets;
        for (const auto& t : *targets_it) {
            if (!t.is_string()) throw ParseError("targets must be strings", lineno);
            targets.push_back(t.get<std::string>());
        }
        if (id.empty()) throw ParseError("empty story_id", lineno);
        if (!ids.insert(id).second) throw DataError(path.string() + ": duplicate story_id '" + id + "' (line " + std::to_string(lineno) + ")");
        corpus.push_back(make_story(std::move(id), std::move(text), targets, analyzer));
    }
    return corpus;
}

MaskedText mask_story(const Story& story, int target_index, std::string_view mask_placeholder,
                      std::string_view hidden_placeholder) {
    story.target(target_index);  // validates the index

    struct Hit {
        Span span;
        bool focal;
    };
    std::vector<Hit> hits;
    for (const auto& t : story.targets) {
        for (const auto& s : t.occurrences) hits.push_back({s, t.index == target_index});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.span.begin < b.span.begin; });

    MaskedText out;
    std::size_t cursor = 0;
    for (const auto& h : hits) {
        out.text.append(story.text, cursor, h.span.begin - cursor);
        const auto placeholder = h.focal ? mask_placeholder : hidden_placeholder;
        const std::size_t at = out.text.size();
        out.text.append(placeholder);
        out.substitutions.push_back({h.span, {at, out.text.size()}, h.focal});
        (h.focal ? out.mask_count : out.hidden_count) += 1;
        cursor = h.span.end;
    }
    out.text.append(story.text, cursor, std::string::npos);
    return out;
}

namespace {

const Story& find_story(const std::unordered_map<std::string, const Story*>& by_id, const std::string& id,
                        const std::filesystem::path& path, std::size_t lineno) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
        throw DataError(path.string() + " row at line " + std::to_string(lineno) + ": unknown story_id '" + id + "'");
    }
    return *it->second;
}

void add_guess(Annotation& a, const Story& story, int index, std::string guess, const std::filesystem::path& path,
               std::size_t lineno, Diagnostics& diagnostics) {
    if (index < 1 || index > story.target_count()) {
        throw DataError(path.string() + " row at line " + std::to_string(lineno) + ": blank index " +
                        std::to_string(index) + " out of range for story '" + story.story_id + "'");
    }
    auto trimmed = std::string(trim(guess));
    if (trimmed.empty()) {
        diagnostics.add(DiagnosticKind::warning, story.story_id, index,
                        "annotator '" + a.annotator_id + "' left blank " + std::to_string(index) + " empty");
        return;
    }
    a.guesses[index] = std::move(trimmed);
}

std::vector<Annotation> load_annotations_jsonl(std::istream& in, const std::filesystem::path& path,
                                               const std::unordered_map<std::string, const Story*>& by_id,
                                               Diagnostics& diagnostics) {
    std::vector<Annotation> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(path.string() + ": " + e.what(), lineno);
        }
        if (!obj.is_object()) throw ParseError(path.string() + ": record is not an object", lineno);
        Annotation a;
        a.story_id = require_string(obj, "story_id", lineno);
        a.annotator_id = require_string(obj, "annotator_id", lineno);
        const Story& story = find_story(by_id, a.story_id, path, lineno);
        auto g = obj.find("guesses");
        if (g == obj.end() || !g->is_object()) throw ParseError("field 'guesses' missing or not an object", lineno);
        for (const auto& [key, value] : g->items()) {
            int index = 0;
            if (!detail::parse_int(key, index)) throw ParseError("guess key '" + key + "' is not an integer", lineno);
            if (!value.is_string() && !value.is_null()) throw ParseError("guess for blank " + key + " is not a string", lineno);
            add_guess(a, story, index, value.is_null() ? std::string() : value.get<std::string>(), path, lineno,
                      diagnostics);
        }
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<Annotation> load_annotations_csv(std::istream& in, const std::filesystem::path& path,
                                             const std::unordered_map<std::string, const Story*>& by_id,
                                             Diagnostics& diagnostics) {
    const auto records = detail::read_delimited(in, ',');
    if (records.empty()) return {};
    const auto& header = records.front().fields;
    int story_col = -1, annot_col = -1;
    std::vector<std::pair<int, int>> guess_cols;  // column, blank index
    for (std::size_t c = 0; c < header.size(); ++c) {
        const auto name = to_lower(trim(header[c]));
        if (name == "story_id") story_col = static_cast<int>(c);
        else if (name == "annotator_id") annot_col = static_cast<int>(c);
        else if (name.starts_with("guess_")) {
            int index = 0;
            if (!detail::parse_int(std::string_view(name).substr(6), index)) {
                throw ParseError("bad guess column '" + header[c] + "'", records.front().line);
            }
            guess_cols.emplace_back(static_cast<int>(c), index);
        }
    }
    if (story_col < 0 || annot_col < 0 || guess_cols.empty()) {
        throw ParseError(path.string() + ": header needs story_id, annotator_id and guess_1..guess_n",
                         records.front().line);
    }

    std::vector<Annotation> out;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != header.size()) {
            throw ParseError(path.string() + ": expected " + std::to_string(header.size()) + " columns, got " +
                                 std::to_string(rec.fields.size()),
                             rec.line);
        }
        Annotation a;
        a.story_id = std::string(trim(rec.fields[static_cast<std::size_t>(story_col)]));
        a.annotator_id = std::string(trim(rec.fields[static_cast<std::size_t>(annot_col)]));
        const Story& story = find_story(by_id, a.story_id, path, rec.line);
        for (auto [col, index] : guess_cols) {
            const auto& value = rec.fields[static_cast<std::size_t>(col)];
            // Survey exports always carry five guess columns; a shorter story leaves the tail empty.
            if (index > story.target_count() && trim(value).empty()) continue;
            add_guess(a, story, index, value, path, rec.line, diagnostics);
        }
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace

std::vector<Annotation> load_annotations(const std::filesystem::path& path, const Corpus& corpus,
                                         Diagnostics& diagnostics) {
    std::unordered_map<std::string, const Story*> by_id;
    for (const auto& s : corpus) by_id.emplace(s.story_id, &s);

    auto in = open_input(path, "annotations");
    const bool is_csv = to_lower(path.extension().string()) == ".csv";
    auto out = is_csv ? load_annotations_csv(in, path, by_id, diagnostics)
                      : load_annotations_jsonl(in, path, by_id, diagnostics);

    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& a : out) {
        if (a.annotator_id.empty()) throw ParseError(path.string() + ": empty annotator_id for story '" + a.story_id + "'");
        if (!seen.emplace(a.story_id, a.annotator_id).second) {
            throw DataError(path.string() + ": annotator '" + a.annotator_id + "' appears twice for story '" +
                            a.story_id + "'");
        }
    }
    for (const auto& [story, n] : annotator_counts(out)) {
        diagnostics.add(DiagnosticKind::info, story, 0, std::to_string(n) + " annotator(s)");
    }
    return out;
}

std::map<std::string, int> annotator_counts(const std::vector<Annotation>& annotations) {
    std::map<std::string, int> counts;
    for (const auto& a : annotations) ++counts[a.story_id];
    return counts;
}

}  // namespace inform
