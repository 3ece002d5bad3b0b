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

#include "inform/lm.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cmath>
#include <map>
#include <thread>

#include "inform/errors.hpp"
#include "inform/text.hpp"

namespace inform {

namespace {

bool is_ascii_alpha(unsigned char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// Non-ASCII bytes count as letters so accented candidates survive.
bool is_word_byte(unsigned char c) { return is_ascii_alpha(c) || c >= 0x80; }

struct LemmaTally {
    std::vector<double> probs;
    double max_prob = 0;
    std::string best_surface;
};

bool close(double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(std::fabs(a), std::fabs(b)); }

}  // namespace

std::string_view to_string(LmMethod method) {
    switch (method) {
        case LmMethod::masked: return "mlm";
        case LmMethod::generative: return "generative";
    }
    return "unknown";
}

std::string clean_candidate(std::string_view word) {
    std::string w = normalize_word(trim(word));
    std::size_t b = 0, e = w.size();
    auto strip = [](unsigned char c) { return c < 0x80 && !std::isalnum(c); };
    while (b < e && strip(static_cast<unsigned char>(w[b]))) ++b;
    while (e > b && strip(static_cast<unsigned char>(w[e - 1]))) --e;
    w = w.substr(b, e - b);
    if (w.empty()) return {};
    for (unsigned char c : w) {
        if (!is_word_byte(c)) return {};
    }
    return w;
}

CombinedGuess combine_mask_predictions(const MaskPredictions& predictions, const Lemmatizer& lemmatizer) {
    std::map<std::string, LemmaTally> tally;
    for (const auto& list : predictions.per_mask) {
        for (const auto& cand : list) {
            if (!std::isfinite(cand.prob) || cand.prob <= 0) {
                throw InvalidArgument("candidate '" + cand.word + "' has a non-positive or non-finite probability");
            }
            const auto surface = clean_candidate(cand.word);
            if (surface.empty()) continue;
            auto& t = tally[lemmatizer.lemmatize(surface)];
            t.probs.push_back(cand.prob);
            if (cand.prob > t.max_prob || (cand.prob == t.max_prob && surface < t.best_surface)) {
                t.max_prob = cand.prob;
                t.best_surface = surface;
            }
        }
    }
    if (tally.empty()) throw EmptyPredictions("no usable candidates in backend predictions");

    CombinedGuess best;
    double best_max = 0;
    for (auto& [lemma, t] : tally) {
        // Summed in sorted order so the total does not depend on mask order.
        std::sort(t.probs.begin(), t.probs.end());
        double sum = 0;
        for (double p : t.probs) sum += p;
        bool better;
        if (best.lemma.empty()) {
            better = true;
        } else if (!close(sum, best.cumulative_score)) {
            better = sum > best.cumulative_score;
        } else {
            better = t.max_prob > best_max;  // map order already makes the lemma tie-break lexicographic
        }
        if (better) {
            best = {lemma, sum, t.best_surface};
            best_max = t.max_prob;
        }
    }
    return best;
}

void ScorerConfig::validate() const {
    if (top_k < 1) throw InvalidArgument("top_k must be >= 1");
    if (max_parallel_requests < 1) throw InvalidArgument("max_parallel_requests must be >= 1");
    if (max_tokens < 1) throw InvalidArgument("max_tokens must be >= 1");
    if (mask_placeholder.empty()) throw InvalidArgument("mask placeholder must not be empty");
    if (hidden_placeholder && hidden_placeholder->empty()) throw InvalidArgument("hidden placeholder must not be empty");
    if (hidden_placeholder && *hidden_placeholder == mask_placeholder) {
        throw InvalidArgument("mask and hidden placeholders must differ");
    }
    if (request_timeout.count() <= 0) throw InvalidArgument("request timeout must be positive");
    if (retry.attempts < 1) throw InvalidArgument("retry attempts must be >= 1");
}

std::string ScorerConfig::hidden_for(LmMethod method) const {
    if (hidden_placeholder) return *hidden_placeholder;
    return method == LmMethod::masked ? "<unk>" : "____";
}

const std::string_view kClozeInstruction =
    "In the following story, guess the word that is replaced by '<mask>'. Ignore any other blanks (____) and ONLY "
    "try to guess the word replaced by '<mask>'.";

std::string build_cloze_prompt(const Story& story, int target_index) {
    std::string prompt(kClozeInstruction);
    prompt += "\n\n";
    prompt += mask_story(story, target_index, "<mask>", "____").text;
    return prompt;
}

std::string parse_generated_guess(std::string_view response) {
    static constexpr std::array<std::string_view, 4> kLeadIns = {"the", "word", "is", "answer"};
    std::vector<std::string> words;
    std::string cur;
    for (unsigned char c : response) {
        if (is_ascii_alpha(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            words.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    if (words.empty()) throw EmptyPredictions("response contains no word: '" + std::string(response) + "'");
    for (const auto& w : words) {
        if (std::find(kLeadIns.begin(), kLeadIns.end(), w) == kLeadIns.end()) return w;
    }
    return words.back();
}

namespace {

InformativenessScore make_score(const Story& story, const TargetWord& target, double value, std::string guess, int n) {
    return {story.story_id, target.index, target.word, value, std::move(guess), n};
}

}  // namespace

std::optional<InformativenessScore> mlm_score(const Story& story, int target_index, PredictionBackend& backend,
                                              const Resolver& resolver, const ScorerConfig& config,
                                              Diagnostics& diagnostics) {
    const auto& target = story.target(target_index);
    const auto masked = mask_story(story, target_index, config.mask_placeholder, config.hidden_for(LmMethod::masked));
    CombinedGuess guess;
    try {
        const auto preds =
            backend.infill({masked.text, config.mask_placeholder, config.hidden_for(LmMethod::masked), config.top_k});
        if (static_cast<int>(preds.per_mask.size()) != masked.mask_count) {
            throw ProtocolError("backend returned " + std::to_string(preds.per_mask.size()) + " candidate lists for " +
                                std::to_string(masked.mask_count) + " masks");
        }
        guess = combine_mask_predictions(preds, resolver.lemmatizer());
    } catch (const TransportError& e) {
        diagnostics.add(DiagnosticKind::failed, story.story_id, target_index, e.what());
        return std::nullopt;
    } catch (const ProtocolError& e) {
        diagnostics.add(DiagnosticKind::failed, story.story_id, target_index, e.what());
        return std::nullopt;
    } catch (const EmptyPredictions& e) {
        diagnostics.add(DiagnosticKind::excluded, story.story_id, target_index, e.what());
        return std::nullopt;
    } catch (const InvalidArgument& e) {
        diagnostics.add(DiagnosticKind::failed, story.story_id, target_index, e.what());
        return std::nullopt;
    }

    if (!resolver.resolve(target.word)) {
        diagnostics.add(DiagnosticKind::excluded, story.story_id, target_index,
                        "target '" + target.word + "' not in embedding table");
        return std::nullopt;
    }
    if (auto sim = resolver.similarity(guess.lemma, target.word)) {
        return make_score(story, target, *sim, guess.lemma, masked.mask_count);
    }
    if (guess.best_surface != guess.lemma) {
        if (auto sim = resolver.similarity(guess.best_surface, target.word)) {
            diagnostics.add(DiagnosticKind::info, story.story_id, target_index,
                            "lemma '" + guess.lemma + "' not in embedding table; used surface form '" +
                                guess.best_surface + "'");
            return make_score(story, target, *sim, guess.best_surface, masked.mask_count);
        }
    }
    diagnostics.add(DiagnosticKind::excluded, story.story_id, target_index,
                    "combined guess '" + guess.lemma + "' not in embedding table");
    return std::nullopt;
}

std::optional<InformativenessScore> generative_score(const Story& story, int target_index, PredictionBackend& backend,
                                                     const Resolver& resolver, const ScorerConfig& config,
                                                     Diagnostics& diagnostics) {
    const auto& target = story.target(target_index);
    std::string guess;
    try {
        const auto text = backend.generate({build_cloze_prompt(story, target_index), config.max_tokens});
        guess = parse_generated_guess(text);
    } catch (const TransportError& e) {
        diagnostics.add(DiagnosticKind::failed, story.story_id, target_index, e.what());
        return std::nullopt;
    } catch (const ProtocolError& e) {
        diagnostics.add(DiagnosticKind::failed, story.story_id, target_index, e.what());
        return std::nullopt;
    } catch (const EmptyPredictions& e) {
        diagnostics.add(DiagnosticKind::excluded, story.story_id, target_index, e.what());
        return std::nullopt;
    }
    if (!resolver.resolve(target.word)) {
        diagnostics.add(DiagnosticKind::excluded, story.story_id, target_index,
                        "target '" + target.word + "' not in embedding table");
        return std::nullopt;
    }
    if (auto sim = resolver.similarity(guess, target.word)) return make_score(story, target, *sim, guess, 1);
    diagnostics.add(DiagnosticKind::excluded, story.story_id, target_index,
                    "generated guess '" + guess + "' not in embedding table");
    return std::nullopt;
}

ScoreSet score_lm(const Corpus& corpus, LmMethod method, PredictionBackend& backend, const Resolver& resolver,
                  const ScorerConfig& config) {
    config.validate();
    struct Task {
        const Story* story;
        int target_index;
        std::optional<InformativenessScore> score;
        Diagnostics diagnostics;
    };
    std::vector<Task> tasks;
    for (const auto& story : corpus) {
        for (const auto& t : story.targets) tasks.push_back({&story, t.index, std::nullopt, {}});
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            auto& task = tasks[i];
            try {
                task.score = method == LmMethod::masked
                                 ? mlm_score(*task.story, task.target_index, backend, resolver, config, task.diagnostics)
                                 : generative_score(*task.story, task.target_index, backend, resolver, config,
                                                    task.diagnostics);
            } catch (const std::exception& e) {
                task.diagnostics.add(DiagnosticKind::failed, task.story->story_id, task.target_index, e.what());
            }
        }
    };
    const auto n_workers = std::min<std::size_t>(static_cast<std::size_t>(config.max_parallel_requests), tasks.size());
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
        worker();
    }

    ScoreSet out;
    for (auto& task : tasks) {
        if (task.score) out.scores.push_back(std::move(*task.score));
        out.diagnostics.append(task.diagnostics);
    }
    sort_scores(out.scores);
    return out;
}

}  // namespace inform
