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

#include "inform/bench.hpp"

#include <fstream>

#include "csv.hpp"
#include "inform/errors.hpp"
#include "inform/text.hpp"

namespace inform {

namespace {

std::vector<std::string> split(std::string_view line, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = line.find(delim, start);
        out.emplace_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::vector<SimilarityPair> load_similarity_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open similarity dataset " + path.string());
    std::vector<SimilarityPair> pairs;
    char delim = 0;
    std::size_t score_col = 2;
    bool first = true;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (!delim) delim = line.find('\t') != std::string::npos ? '\t' : ',';
        const auto fields = split(line, delim);
        if (fields.size() < 3) throw ParseError(path.string() + ": expected at least 3 columns", lineno);
        double score = 0;
        if (first) {
            first = false;
            if (!detail::parse_double(fields[score_col], score)) {
                for (std::size_t c = 0; c < fields.size(); ++c) {
                    if (to_lower(fields[c]) == "simlex999") score_col = c;
                }
                continue;  // header
            }
        }
        if (fields.size() <= score_col) throw ParseError(path.string() + ": missing score column", lineno);
        if (!detail::parse_double(fields[score_col], score)) {
            throw ParseError(path.string() + ": score '" + fields[score_col] + "' is not a number", lineno);
        }
        if (fields[0].empty() || fields[1].empty()) throw ParseError(path.string() + ": empty word", lineno);
        pairs.push_back({fields[0], fields[1], score});
    }
    if (pairs.empty()) throw ParseError(path.string() + ": no word pairs");
    return pairs;
}

BenchResult run_benchmark(std::span<const SimilarityPair> pairs, const Resolver& resolver, std::string dataset_name) {
    BenchResult out;
    out.dataset = std::move(dataset_name);
    std::vector<double> model, human;
    for (const auto& p : pairs) {
        auto sim = resolver.similarity(p.word1, p.word2);
        if (!sim) {
            ++out.dropped;
            continue;
        }
        model.push_back(*sim);
        human.push_back(p.gold);
    }
    out.n = model.size();
    if (out.n < 3) {
        throw DataError(out.dataset + ": only " + std::to_string(out.n) + " in-vocabulary pairs; need at least 3");
    }
    out.pearson = pearson(model, human);
    out.spearman = spearman(model, human);
    return out;
}

}  // namespace inform
