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

// Embedding-similarity baselines. A context token is eligible when it is not
// a stopword, not an occurrence of any of the story's targets, and resolves
// in the embedding table. None of these read annotations.

#include <optional>
#include <string_view>
#include <vector>

#include "inform/corpus.hpp"
#include "inform/embeddings.hpp"
#include "inform/scores.hpp"

namespace inform {

struct BaselineConfig {
    int window_size = 5;
    double related_threshold = 0.3;
    bool normalize_counts = true;  // only affects RMSE of the count baseline

    void validate() const;  // throws InvalidArgument
};

enum class BaselineMethod { context_similarity, context_window, related_words };

std::string_view to_string(BaselineMethod method);

// Mean cosine between every eligible token and the target.
std::optional<InformativenessScore> context_similarity(const Story& story, int target_index, const Resolver& resolver,
                                                       Diagnostics& diagnostics);

// Around each occurrence, walk outward collecting up to `window_size`
// eligible tokens per side (ineligible tokens are skipped, not counted),
// stopping at the passage edges. The score is the mean cosine over the union
// of collected tokens, each token counted once.
std::optional<InformativenessScore> context_window(const Story& story, int target_index, const Resolver& resolver,
                                                   int window_size, Diagnostics& diagnostics);

// Number of eligible tokens whose cosine with the target is strictly above `threshold`.
std::optional<InformativenessScore> num_related_words(const Story& story, int target_index, const Resolver& resolver,
                                                      double threshold, Diagnostics& diagnostics);

// Min-max onto [0, 1]. All-equal input maps to 0.5 with a warning.
std::vector<InformativenessScore> normalize_counts(std::vector<InformativenessScore> scores, Diagnostics& diagnostics);

// Every (story, target) of the corpus, sorted by (story_id, target_index).
ScoreSet score_baseline(const Corpus& corpus, BaselineMethod method, const BaselineConfig& config,
                        const Resolver& resolver);

}  // namespace inform
