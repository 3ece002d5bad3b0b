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

#include "inform/diagnostics.hpp"

#include <algorithm>

namespace inform {

std::string_view to_string(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::info: return "info";
        case DiagnosticKind::warning: return "warning";
        case DiagnosticKind::excluded: return "excluded";
        case DiagnosticKind::failed: return "failed";
    }
    return "unknown";
}

std::size_t Diagnostics::count(DiagnosticKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [kind](const Diagnostic& d) { return d.kind == kind; }));
}

}  // namespace inform
