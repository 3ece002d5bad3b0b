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

#include "inform/baselines.hpp"

#include <algorithm>
#include <set>

#include "inform/errors.hpp"

namespace inform {

namespace {

// Per-token cosine with the target; nullopt marks an ineligible token.
struct Context {
    const TargetWord* target = nullptr;
    std::vector<std::optional<double>> sim;
    std::size_t eligible = 0;
};

std::optional<Context> build_context(const Story& story, int target_index, const Resolver& resolver,
                                     Diagnostics& diagnostics) {
    Context ctx;
    ctx.target = &story.target(target_index);
    auto target_vec = resolver.resolve(ctx.target->word);
    if (!target_vec) {
        diagnostics.add(DiagnosticKind::excluded, story.story_id, target_index,
                        "target '" + ctx.target->word + "' not in embedding table");
        return std::nullopt;
    }
    std::vector<bool> is_target(story.tokens.size(), false);
    for (const auto& t : story.targets) {
        for (auto k : t.token_indices) is_target[k] = true;
    }
    ctx.sim.resize(story.tokens.size());
    for (std::size_t k = 0; k < story.tokens.size(); ++k) {
        const auto& tok = story.tokens[k];
        if (tok.is_stopword || is_target[k]) continue;
        if (auto v = resolver.resolve(tok.surface)) {
            ctx.sim[k] = cosine(*v, *target_vec);
            ++ctx.eligible;
        }
    }
    return ctx;
}

InformativenessScore make_score(const Story& story, const TargetWord& target, double value, std::size_t n) {
    return {story.story_id, target.index, target.word, value, std::nullopt, static_cast<int>(n)};
}

}  // namespace

void BaselineConfig::validate() const {
    if (window_size < 1) throw InvalidArgument("window size must be a positive integer");
    if (!(related_threshold > 0 && related_threshold < 1)) throw InvalidArgument("related-word threshold must lie in (0, 1)");
}

std::string_view to_string(BaselineMethod method) {
    switch (method) {
        case BaselineMethod::context_similarity: return "context-sim";
        case BaselineMethod::context_window: return "window";
        case BaselineMethod::related_words: return "related";
    }
    return "unknown";
}

std::optional<InformativenessScore> context_similarity(const Story& story, int target_index, const Resolver& resolver,
                                                       Diagnostics& diagnostics) {
    auto ctx = build_context(story, target_index, resolver, diagnostics);
    if (!ctx) return std::nullopt;
    if (ctx->eligible == 0) {
        diagnostics.add(DiagnosticKind::excluded, story.story_id, target_index, "no eligible context tokens");
        return std::nullopt;
    }
    double sum = 0;
    for (const auto& s : ctx->sim) {
        if (s) sum += *s;
    }
    return make_score(story, *ctx->target, sum / static_cast<double>(ctx->eligible), ctx->eligible);
}

std::optional<InformativenessScore> context_window(const Story& story, int target_index, const Resolver& resolver,
                                                   int window_size, Diagnostics& diagnostics) {
    if (window_size < 1) throw InvalidArgument("window size must be a positive integer");
    auto ctx = build_context(story, target_index, resolver, diagnostics);
    if (!ctx) return std::nullopt;

    const auto n = static_cast<long>(ctx->sim.size());
    std::set<long> window;
    for (auto occ : ctx->target->token_indices) {
        const auto center = static_cast<long>(occ);
        for (int dir : {-1, 1}) {
            int taken = 0;
            for (long k = center + dir; k >= 0 && k < n && taken < window_size; k += dir) {
                if (!ctx->sim[static_cast<std::size_t>(k)]) continue;
                window.insert(k);
                ++taken;
            }
        }
    }
    if (window.empty()) {
        diagnostics.add(DiagnosticKind::excluded, story.story_id, target_index, "empty context window");
        return std::nullopt;
    }
    double sum = 0;
    for (long k : window) sum += *ctx->sim[static_cast<std::size_t>(k)];
    return make_score(story, *ctx->target, sum / static_cast<double>(window.size()), window.size());
}

std::optional<InformativenessScore> num_related_words(const Story& story, int target_index, const Resolver& resolver,
                                                      double threshold, Diagnostics& diagnostics) {
    auto ctx = build_context(story, target_index, resolver, diagnostics);
    if (!ctx) return std::nullopt;
    std::size_t count = 0;
    for (const auto& s : ctx->sim) {
        if (s && *s > threshold) ++count;
    }
    return make_score(story, *ctx->target, static_cast<double>(count), ctx->eligible);
}

std::vector<InformativenessScore> normalize_counts(std::vector<InformativenessScore> scores, Diagnostics& diagnostics) {
    if (scores.empty()) return scores;
    auto [lo_it, hi_it] = std::minmax_element(scores.begin(), scores.end(),
                                              [](const auto& a, const auto& b) { return a.value < b.value; });
    const double lo = lo_it->value, hi = hi_it->value;
    if (hi == lo) {
        diagnostics.warn("all counts equal (" + std::to_string(lo) + "); normalized to 0.5");
        for (auto& s : scores) s.value = 0.5;
        return scores;
    }
    for (auto& s : scores) s.value = (s.value - lo) / (hi - lo);
    return scores;
}

ScoreSet score_baseline(const Corpus& corpus, BaselineMethod method, const BaselineConfig& config,
                        const Resolver& resolver) {
    config.validate();
    ScoreSet out;
    for (const auto& story : corpus) {
        for (const auto& t : story.targets) {
            std::optional<InformativenessScore> s;
            switch (method) {
                case BaselineMethod::context_similarity:
                    s = context_similarity(story, t.index, resolver, out.diagnostics);
                    break;
                case BaselineMethod::context_window:
                    s = context_window(story, t.index, resolver, config.window_size, out.diagnostics);
                    break;
                case BaselineMethod::related_words:
                    s = num_related_words(story, t.index, resolver, config.related_threshold, out.diagnostics);
                    break;
            }
            if (s) out.scores.push_back(std::move(*s));
        }
    }
    sort_scores(out.scores);
    return out;
}

}  // namespace inform
