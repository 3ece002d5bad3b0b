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

#include "inform/scores.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "csv.hpp"
#include "inform/errors.hpp"
#include "inform/text.hpp"

namespace inform {

void sort_scores(std::vector<InformativenessScore>& scores) {
    std::sort(scores.begin(), scores.end(), [](const auto& a, const auto& b) {
        if (a.story_id != b.story_id) return a.story_id < b.story_id;
        return a.target_index < b.target_index;
    });
}

void write_scores_csv(std::ostream& out, std::span<const InformativenessScore> scores, CsvLayout layout) {
    using detail::csv_escape;
    const bool pred = layout == CsvLayout::prediction;
    out << (pred ? "story_id,target_index,target_word,value,guess,n_contributing\n"
                 : "story_id,target_index,target_word,value,n_contributing\n");
    for (const auto& s : scores) {
        out << csv_escape(s.story_id) << ',' << s.target_index << ',' << csv_escape(s.target_word) << ','
            << detail::format_number(s.value) << ',';
        if (pred) out << csv_escape(s.guess.value_or("")) << ',';
        out << s.n_contributing << '\n';
    }
}

std::vector<InformativenessScore> read_scores_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open score file " + path.string());
    const auto records = detail::read_delimited(in, ',');
    if (records.empty()) throw ParseError(path.string() + ": empty score file");

    std::map<std::string, std::size_t> col;
    const auto& header = records.front().fields;
    for (std::size_t c = 0; c < header.size(); ++c) col[to_lower(trim(header[c]))] = c;
    for (const char* required : {"story_id", "target_index", "value"}) {
        if (!col.contains(required)) throw ParseError(path.string() + ": missing column '" + required + "'", 1);
    }
    auto field = [&](const detail::CsvRecord& r, const char* name) -> const std::string* {
        auto it = col.find(name);
        if (it == col.end() || it->second >= r.fields.size()) return nullptr;
        return &r.fields[it->second];
    };

    std::vector<InformativenessScore> out;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.fields.size() != header.size()) {
            throw ParseError(path.string() + ": expected " + std::to_string(header.size()) + " columns", r.line);
        }
        InformativenessScore s;
        s.story_id = *field(r, "story_id");
        if (!detail::parse_int(*field(r, "target_index"), s.target_index)) {
            throw ParseError(path.string() + ": bad target_index", r.line);
        }
        if (!detail::parse_double(*field(r, "value"), s.value)) throw ParseError(path.string() + ": bad value", r.line);
        if (auto* w = field(r, "target_word")) s.target_word = *w;
        if (auto* g = field(r, "guess"); g && !g->empty()) s.guess = *g;
        if (auto* n = field(r, "n_contributing"); n && !n->empty()) {
            if (!detail::parse_int(*n, s.n_contributing)) throw ParseError(path.string() + ": bad n_contributing", r.line);
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace inform
