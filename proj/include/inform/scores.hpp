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
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "inform/diagnostics.hpp"

namespace inform {

// One gold or predicted informativeness value for (story_id, target_index).
// n_contributing counts what entered the value: annotator guesses for gold,
// context tokens for the baselines, mask infills for the masked-LM scorer
// and 1 for the generative scorer.
struct InformativenessScore {
    std::string story_id;
    int target_index = 0;
    std::string target_word;
    double value = 0;
    std::optional<std::string> guess;
    int n_contributing = 0;
};

struct ScoreSet {
    std::vector<InformativenessScore> scores;
    Diagnostics diagnostics;
};

// Orders by (story_id, target_index).
void sort_scores(std::vector<InformativenessScore>& scores);

enum class CsvLayout {
    gold,        // story_id,target_index,target_word,value,n_contributing
    prediction,  // story_id,target_index,target_word,value,guess,n_contributing
};

void write_scores_csv(std::ostream& out, std::span<const InformativenessScore> scores, CsvLayout layout);

// Accepts either layout; columns are located by header name. Throws ParseError.
std::vector<InformativenessScore> read_scores_csv(const std::filesystem::path& path);

}  // namespace inform
