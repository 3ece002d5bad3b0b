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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace inform {

class Lemmatizer;

using Vector = std::span<const float>;

struct LoadOptions {
    std::optional<std::size_t> limit;  // keep at most this many entries
    bool strip_prefix = true;
    std::string prefix = "/c/en/";
};

// What the loader skipped, and why.
struct LoadReport {
    bool gzip = false;
    bool had_header = false;
    std::size_t rows_kept = 0;
    std::size_t malformed_rows = 0;
    std::size_t wrong_dim_rows = 0;
    std::size_t zero_rows = 0;
    std::size_t duplicate_rows = 0;
    std::vector<std::string> warnings;  // first few messages only

    std::size_t warning_count() const noexcept {
        return malformed_rows + wrong_dim_rows + zero_rows + duplicate_rows;
    }
};

/// Immutable word-vector table. Vectors are kept as loaded; labels are
/// case-sensitive. Safe for concurrent reads.
class EmbeddingTable {
public:
    EmbeddingTable() = default;

    // Throws InvalidArgument on an empty entry list, a dimension mismatch or a zero vector.
    static EmbeddingTable from_entries(std::size_t dim,
                                       const std::vector<std::pair<std::string, std::vector<float>>>& entries,
                                       std::string source_name = "in-memory");

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return index_.size(); }
    const std::string& source_name() const noexcept { return source_name_; }
    const LoadReport& load_report() const noexcept { return report_; }

    std::optional<Vector> find(std::string_view label) const;
    bool contains(std::string_view label) const { return find(label).has_value(); }

private:
    friend EmbeddingTable load_embeddings(const std::filesystem::path&, const LoadOptions&);

    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
    };

    std::size_t dim_ = 0;
    std::vector<float> data_;
    std::unordered_map<std::string, std::uint32_t, Hash, std::equal_to<>> index_;
    std::string source_name_;
    LoadReport report_;
};

// Text vector format, optional "<count> <dim>" header, optional gzip container.
// Throws IoError when unreadable, DataError when no row survives.
EmbeddingTable load_embeddings(const std::filesystem::path& path, const LoadOptions& options = {});

// dot(a,b) / sqrt(|a|^2 |b|^2), clamped to [-1, 1]. Identical inputs give exactly 1.
// Throws InvalidArgument on a dimension mismatch or a zero-norm input.
double cosine(Vector a, Vector b);

struct ResolveOptions {
    bool lemma_fallback = true;
};

// Exact label, then lowercased with whitespace runs joined by '_', then the
// lemma of each lowercased part. Empty words never resolve.
std::optional<Vector> resolve(const EmbeddingTable& table, std::string_view word, const Lemmatizer& lemmatizer,
                              const ResolveOptions& options = {});

std::optional<double> word_similarity(const EmbeddingTable& table, std::string_view w1, std::string_view w2,
                                      const Lemmatizer& lemmatizer, const ResolveOptions& options = {});

/// A table, a lemmatizer and the resolution policy bundled together; what the
/// scorers use to turn words into vectors.
class Resolver {
public:
    Resolver(const EmbeddingTable& table, const Lemmatizer& lemmatizer, ResolveOptions options = {})
        : table_(&table), lemmatizer_(&lemmatizer), options_(options) {}

    std::optional<Vector> resolve(std::string_view word) const {
        return inform::resolve(*table_, word, *lemmatizer_, options_);
    }
    std::optional<double> similarity(std::string_view w1, std::string_view w2) const {
        return word_similarity(*table_, w1, w2, *lemmatizer_, options_);
    }

    const EmbeddingTable& table() const noexcept { return *table_; }
    const Lemmatizer& lemmatizer() const noexcept { return *lemmatizer_; }
    const ResolveOptions& options() const noexcept { return options_; }

private:
    const EmbeddingTable* table_;
    const Lemmatizer* lemmatizer_;
    ResolveOptions options_;
};

}  // namespace inform
