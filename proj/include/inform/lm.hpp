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

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "inform/backend.hpp"
#include "inform/corpus.hpp"
#include "inform/embeddings.hpp"
#include "inform/scores.hpp"

namespace inform {

enum class LmMethod { masked, generative };

std::string_view to_string(LmMethod method);  // "mlm", "generative"

struct CombinedGuess {
    std::string lemma;
    double cumulative_score = 0;
    std::string best_surface;  // highest-probability cleaned candidate with this lemma
};

// Lowercases and trims punctuation from every candidate, drops the ones that
// are then empty or not purely alphabetic, and sums probabilities per lemma
// across all masks. Highest sum wins; sums within 1e-12 relative of each
// other tie and fall to the higher single probability, then to the
// lexicographically smaller lemma. Throws EmptyPredictions when no candidate
// survives cleaning, InvalidArgument on a non-positive or non-finite prob.
CombinedGuess combine_mask_predictions(const MaskPredictions& predictions, const Lemmatizer& lemmatizer);

// Returns the cleaned form of a candidate, or empty if it is not a word.
std::string clean_candidate(std::string_view word);

struct ScorerConfig {
    int top_k = 50;
    std::string mask_placeholder = "<mask>";
    std::optional<std::string> hidden_placeholder;  // unset: "<unk>" for mlm, "____" for generative
    std::string backend_url;
    std::chrono::milliseconds request_timeout{30000};
    int max_parallel_requests = 4;
    int max_tokens = 16;
    RetryPolicy retry;

    void validate() const;  // throws InvalidArgument
    std::string hidden_for(LmMethod method) const;
};

extern const std::string_view kClozeInstruction;

// The instruction, a blank line, then the story with the focal target as
// "<mask>" and every other target as "____".
std::string build_cloze_prompt(const Story& story, int target_index);

// First alphabetic word of a model response after markdown and quote marks
// are removed, lowercased. Leading "the", "word", "is", "answer" are skipped
// unless nothing else is left. Throws EmptyPredictions when the response has
// no alphabetic word.
std::string parse_generated_guess(std::string_view response);

// Per-target scorers. One backend request each. Backend failures become a
// `failed` diagnostic and unusable or out-of-vocabulary output an `excluded`
// one; both return nullopt.
std::optional<InformativenessScore> mlm_score(const Story& story, int target_index, PredictionBackend& backend,
                                              const Resolver& resolver, const ScorerConfig& config,
                                              Diagnostics& diagnostics);
std::optional<InformativenessScore> generative_score(const Story& story, int target_index, PredictionBackend& backend,
                                                     const Resolver& resolver, const ScorerConfig& config,
                                                     Diagnostics& diagnostics);

// Scores every target of the corpus with up to config.max_parallel_requests
// requests in flight. Scores are sorted; diagnostics come in corpus order.
ScoreSet score_lm(const Corpus& corpus, LmMethod method, PredictionBackend& backend, const Resolver& resolver,
                  const ScorerConfig& config);

}  // namespace inform
