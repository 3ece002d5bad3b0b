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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace inform {

enum class DiagnosticKind {
    info,      // which fallback path fired, summary counts
    warning,   // input oddity that was tolerated
    excluded,  // a (story, target) produced no score
    failed,    // a (story, target) could not be scored because the backend failed
};

std::string_view to_string(DiagnosticKind kind);

struct Diagnostic {
    DiagnosticKind kind = DiagnosticKind::info;
    std::string story_id;  // empty when not tied to a story
    int target_index = 0;  // 0 when not tied to a target
    std::string message;
};

class Diagnostics {
public:
    void add(DiagnosticKind kind, std::string story_id, int target_index, std::string message) {
        entries_.push_back({kind, std::move(story_id), target_index, std::move(message)});
    }
    void warn(std::string message) { add(DiagnosticKind::warning, {}, 0, std::move(message)); }
    void append(const Diagnostics& other) {
        entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    }

    const std::vector<Diagnostic>& entries() const noexcept { return entries_; }
    std::size_t count(DiagnosticKind kind) const;
    bool empty() const noexcept { return entries_.empty(); }

private:
    std::vector<Diagnostic> entries_;
};

}  // namespace inform
