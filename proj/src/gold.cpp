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

#include "inform/gold.hpp"

#include <algorithm>
#include <map>

#include "inform/errors.hpp"

namespace inform {

std::optional<InformativenessScore> gold_score(const Story& story, int target_index,
                                               std::span<const Annotation> annotations, const Resolver& resolver,
                                               Diagnostics& diagnostics) {
    const auto& target = story.target(target_index);
    std::vector<double> sims;
    int missing = 0, oov = 0;
    for (const auto& a : annotations) {
        if (a.story_id != story.story_id) continue;
        auto it = a.guesses.find(target_index);
        if (it == a.guesses.end()) {
            ++missing;
            continue;
        }
        auto sim = resolver.similarity(it->second, target.word);
        if (!sim) {
            ++oov;
            continue;
        }
        sims.push_back(*sim);
    }
    if (sims.empty()) {
        diagnostics.add(DiagnosticKind::excluded, story.story_id, target_index,
                        "no contributing guess for '" + target.word + "' (" + std::to_string(missing) + " missing, " +
                            std::to_string(oov) + " unresolvable)");
        return std::nullopt;
    }
    if (oov > 0) {
        diagnostics.add(DiagnosticKind::info, story.story_id, target_index,
                        std::to_string(oov) + " unresolvable guess(es) left out of the mean");
    }
    // Summing in sorted order makes the mean independent of annotator order, bit for bit.
    std::sort(sims.begin(), sims.end());
    double sum = 0;
    for (double v : sims) sum += v;
    const int used = static_cast<int>(sims.size());
    return InformativenessScore{story.story_id, target_index, target.word, sum / used, std::nullopt, used};
}

GoldStandard build_gold_standard(const Corpus& corpus, std::span<const Annotation> annotations,
                                 const Resolver& resolver) {
    std::map<std::string, std::vector<Annotation>> by_story;
    for (const auto& a : annotations) by_story[a.story_id].push_back(a);

    GoldStandard gold;
    long contributing = 0;
    for (const auto& story : corpus) {
        auto it = by_story.find(story.story_id);
        if (it == by_story.end()) {
            for (const auto& t : story.targets) {
                gold.result.diagnostics.add(DiagnosticKind::excluded, story.story_id, t.index, "story has no annotations");
                ++gold.summary.targets_dropped;
            }
            continue;
        }
        for (const auto& t : story.targets) {
            if (auto s = gold_score(story, t.index, it->second, resolver, gold.result.diagnostics)) {
                contributing += s->n_contributing;
                gold.result.scores.push_back(std::move(*s));
                ++gold.summary.targets_scored;
            } else {
                ++gold.summary.targets_dropped;
            }
        }
    }
    if (gold.summary.targets_scored > 0) {
        gold.summary.mean_annotators = static_cast<double>(contributing) / gold.summary.targets_scored;
    }
    sort_scores(gold.result.scores);
    return gold;
}

}  // namespace inform
