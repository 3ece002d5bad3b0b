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

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "inform/embeddings.hpp"
#include "inform/metrics.hpp"

namespace inform {

struct SimilarityPair {
    std::string word1;
    std::string word2;
    double gold = 0;
};

// Word-pair similarity datasets in their published layouts: tab or comma
// separated (picked from the first data line), '#' comment lines, an
// optional header row. The score is the "SimLex999" column when the header
// has one and the third column otherwise. Throws ParseError with the line.
std::vector<SimilarityPair> load_similarity_dataset(const std::filesystem::path& path);

struct BenchResult {
    std::string dataset;
    std::size_t n = 0;        // pairs with both words in the table
    std::size_t dropped = 0;  // pairs with an out-of-vocabulary word
    Correlation pearson;
    Correlation spearman;
};

// Correlates embedding cosine with the human scores. Throws DataError when
// fewer than 3 pairs survive.
BenchResult run_benchmark(std::span<const SimilarityPair> pairs, const Resolver& resolver, std::string dataset_name);

}  // namespace inform
