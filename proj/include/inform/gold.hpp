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

// Gold informativeness: the mean cosine similarity between each annotator's
// cloze guess and the true target. Empty and unresolvable guesses are left
// out of the mean (not scored 0); negative similarities are kept.

#include <optional>
#include <span>
#include <vector>

#include "inform/corpus.hpp"
#include "inform/embeddings.hpp"
#include "inform/scores.hpp"

namespace inform {

// `annotations` may include other stories' rows; only rows for `story` count.
// Returns nullopt (with an `excluded` diagnostic) when no guess contributes.
std::optional<InformativenessScore> gold_score(const Story& story, int target_index,
                                               std::span<const Annotation> annotations, const Resolver& resolver,
                                               Diagnostics& diagnostics);

struct GoldSummary {
    int targets_scored = 0;
    int targets_dropped = 0;
    double mean_annotators = 0;  // mean n_contributing over scored targets
};

struct GoldStandard {
    ScoreSet result;
    GoldSummary summary;
};

GoldStandard build_gold_standard(const Corpus& corpus, std::span<const Annotation> annotations,
                                 const Resolver& resolver);

}  // namespace inform
