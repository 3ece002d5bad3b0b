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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "inform/diagnostics.hpp"
#include "inform/text.hpp"

namespace inform {

struct TargetWord {
    int index = 0;  // 1-based, the blank label shown to annotators
    std::string word;
    std::vector<Span> occurrences;
    std::vector<std::size_t> token_indices;  // parallel to occurrences, into Story::tokens
};

struct Story {
    std::string story_id;
    std::string text;
    std::vector<TargetWord> targets;
    std::vector<Token> tokens;  // filled by locate_targets

    const TargetWord& target(int index) const;
    int target_count() const noexcept { return static_cast<int>(targets.size()); }
};

using Corpus = std::vector<Story>;

struct Annotation {
    std::string story_id;
    std::string annotator_id;
    std::map<int, std::string> guesses;  // blank index -> guess; skipped blanks absent
};

// Tokenizes the story and fills every target's occurrences with the spans of
// tokens whose lemma equals the target's lemma. Throws DataError when a
// target has no occurrence or two targets share a lemma.
Story locate_targets(Story story, const TextAnalyzer& analyzer);

Story make_story(std::string story_id, std::string text, const std::vector<std::string>& targets,
                 const TextAnalyzer& analyzer);

// One JSON object per line: {"story_id", "text", "targets": [...]}.
Corpus load_corpus(const std::filesystem::path& path, const TextAnalyzer& analyzer);

struct MaskedText {
    struct Substitution {
        Span source;        // span in the story text
        Span output;        // span of the placeholder in `text`
        bool focal = false;
    };
    std::string text;
    int mask_count = 0;
    int hidden_count = 0;
    std::vector<Substitution> substitutions;  // in document order
};

// Every occurrence of the focal target becomes `mask_placeholder`, every
// occurrence of any other target becomes `hidden_placeholder`; all other
// bytes are copied unchanged.
MaskedText mask_story(const Story& story, int target_index, std::string_view mask_placeholder,
                      std::string_view hidden_placeholder);

// JSON lines ({"story_id", "annotator_id", "guesses": {"1": "...", ...}}) or,
// for a .csv path, columns story_id, annotator_id, guess_1..guess_n. Empty
// guesses are dropped with a warning. Throws DataError naming the row for an
// unknown story or an out-of-range blank index, ParseError for malformed rows.
std::vector<Annotation> load_annotations(const std::filesystem::path& path, const Corpus& corpus,
                                         Diagnostics& diagnostics);

std::map<std::string, int> annotator_counts(const std::vector<Annotation>& annotations);

}  // namespace inform
