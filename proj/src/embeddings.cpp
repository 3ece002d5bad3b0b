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

#include "inform/embeddings.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>

#include "inform/errors.hpp"
#include "inform/text.hpp"

namespace inform {

namespace {

constexpr std::size_t kMaxWarnings = 20;

struct GzCloser {
    void operator()(gzFile f) const noexcept { gzclose(f); }
};
using GzHandle = std::unique_ptr<std::remove_pointer_t<gzFile>, GzCloser>;

// Reads whole lines of any length from a possibly compressed file.
class LineReader {
public:
    explicit LineReader(const std::filesystem::path& path) : file_(gzopen(path.c_str(), "rb")) {
        if (!file_) throw IoError("cannot open embeddings file " + path.string());
        gzbuffer(file_.get(), 1 << 20);
    }

    bool next(std::string& line) {
        line.clear();
        char buf[1 << 14];
        while (gzgets(file_.get(), buf, sizeof buf)) {
            line.append(buf);
            if (!line.empty() && line.back() == '\n') {
                line.pop_back();
                if (!line.empty() && line.back() == '\r') line.pop_back();
                return true;
            }
        }
        int err = Z_OK;
        gzerror(file_.get(), &err);
        if (err != Z_OK && err != Z_STREAM_END) throw IoError("read error in embeddings file");
        return !line.empty();
    }

private:
    GzHandle file_;
};

bool has_gzip_magic(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    unsigned char magic[2] = {0, 0};
    in.read(reinterpret_cast<char*>(magic), 2);
    return in.gcount() == 2 && magic[0] == 0x1f && magic[1] == 0x8b;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t b = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > b) out.push_back(line.substr(b, i - b));
    }
    return out;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

bool is_zero(std::span<const float> v) {
    return std::all_of(v.begin(), v.end(), [](float x) { return x == 0.0f; });
}

void warn(LoadReport& report, std::string msg) {
    if (report.warnings.size() < kMaxWarnings) report.warnings.push_back(std::move(msg));
}

}  // namespace

EmbeddingTable EmbeddingTable::from_entries(std::size_t dim,
                                            const std::vector<std::pair<std::string, std::vector<float>>>& entries,
                                            std::string source_name) {
    if (dim == 0) throw InvalidArgument("embedding dimension must be positive");
    if (entries.empty()) throw InvalidArgument("embedding table is empty");
    EmbeddingTable t;
    t.dim_ = dim;
    t.source_name_ = std::move(source_name);
    t.data_.reserve(dim * entries.size());
    for (const auto& [label, vec] : entries) {
        if (vec.size() != dim) throw InvalidArgument("vector for '" + label + "' has wrong dimension");
        if (is_zero(vec)) throw InvalidArgument("vector for '" + label + "' is all zeros");
        if (t.index_.contains(label)) throw InvalidArgument("duplicate label '" + label + "'");
        t.index_.emplace(label, static_cast<std::uint32_t>(t.index_.size()));
        t.data_.insert(t.data_.end(), vec.begin(), vec.end());
    }
    t.report_.rows_kept = entries.size();
    return t;
}

std::optional<Vector> EmbeddingTable::find(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return Vector(data_.data() + static_cast<std::size_t>(it->second) * dim_, dim_);
}

EmbeddingTable load_embeddings(const std::filesystem::path& path, const LoadOptions& options) {
    if (options.limit && *options.limit == 0) throw InvalidArgument("embedding limit must be positive");
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) throw IoError("cannot open embeddings file " + path.string());

    EmbeddingTable t;
    t.source_name_ = path.filename().string();
    LoadReport& report = t.report_;
    report.gzip = has_gzip_magic(path);

    LineReader reader(path);
    std::string line;
    std::vector<float> row;
    std::size_t lineno = 0;
    while (reader.next(line)) {
        ++lineno;
        const auto fields = split_spaces(line);
        if (fields.empty()) continue;

        if (lineno == 1 && fields.size() == 2) {
            std::size_t count = 0, dim = 0;
            if (parse_number(fields[0], count) && parse_number(fields[1], dim) && dim > 0) {
                report.had_header = true;
                t.dim_ = dim;
                if (count > 0) {
                    const std::size_t expect = options.limit ? std::min(count, *options.limit) : count;
                    t.data_.reserve(expect * dim);
                    t.index_.reserve(expect);
                }
                continue;
            }
        }

        if (fields.size() < 2) {
            ++report.malformed_rows;
            warn(report, "line " + std::to_string(lineno) + ": no vector components");
            continue;
        }
        row.clear();
        bool ok = true;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            float v = 0;
            if (!parse_number(fields[i], v) || !std::isfinite(v)) {
                ok = false;
                break;
            }
            row.push_back(v);
        }
        if (!ok) {
            ++report.malformed_rows;
            warn(report, "line " + std::to_string(lineno) + ": unparseable component");
            continue;
        }
        if (t.dim_ == 0) t.dim_ = row.size();
        if (row.size() != t.dim_) {
            ++report.wrong_dim_rows;
            warn(report, "line " + std::to_string(lineno) + ": " + std::to_string(row.size()) +
                             " components, expected " + std::to_string(t.dim_));
            continue;
        }
        if (is_zero(row)) {
            ++report.zero_rows;
            warn(report, "line " + std::to_string(lineno) + ": zero vector");
            continue;
        }

        std::string_view label = fields[0];
        if (options.strip_prefix && !options.prefix.empty() && label.starts_with(options.prefix)) {
            label.remove_prefix(options.prefix.size());
        }
        if (label.empty() || t.index_.contains(label)) {
            ++report.duplicate_rows;
            warn(report, "line " + std::to_string(lineno) + ": duplicate or empty label");
            continue;
        }
        t.index_.emplace(std::string(label), static_cast<std::uint32_t>(t.index_.size()));
        t.data_.insert(t.data_.end(), row.begin(), row.end());
        if (options.limit && t.index_.size() >= *options.limit) break;
    }

    if (t.index_.empty()) throw DataError("embeddings file " + path.string() + " contains no usable rows");
    report.rows_kept = t.index_.size();
    t.data_.shrink_to_fit();
    return t;
}

double cosine(Vector a, Vector b) {
    if (a.size() != b.size()) {
        throw InvalidArgument("cosine: dimension mismatch (" + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()) + ")");
    }
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double x = a[i], y = b[i];
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    if (na == 0 || nb == 0) throw InvalidArgument("cosine: zero-norm vector");
    return std::clamp(dot / std::sqrt(na * nb), -1.0, 1.0);
}

std::optional<Vector> resolve(const EmbeddingTable& table, std::string_view word, const Lemmatizer& lemmatizer,
                              const ResolveOptions& options) {
    const auto trimmed = trim(word);
    if (trimmed.empty()) return std::nullopt;
    if (auto v = table.find(trimmed)) return v;

    std::vector<std::string> parts;
    for (std::size_t i = 0; i < trimmed.size();) {
        while (i < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[i]))) ++i;
        const std::size_t b = i;
        while (i < trimmed.size() && !std::isspace(static_cast<unsigned char>(trimmed[i]))) ++i;
        if (i > b) parts.push_back(to_lower(trimmed.substr(b, i - b)));
    }
    auto join = [](const std::vector<std::string>& p) {
        std::string out;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += '_';
            out += p[i];
        }
        return out;
    };
    if (auto v = table.find(join(parts))) return v;
    if (!options.lemma_fallback) return std::nullopt;

    for (auto& p : parts) p = lemmatizer.lemmatize(p);
    return table.find(join(parts));
}

std::optional<double> word_similarity(const EmbeddingTable& table, std::string_view w1, std::string_view w2,
                                      const Lemmatizer& lemmatizer, const ResolveOptions& options) {
    auto a = resolve(table, w1, lemmatizer, options);
    if (!a) return std::nullopt;
    auto b = resolve(table, w2, lemmatizer, options);
    if (!b) return std::nullopt;
    return cosine(*a, *b);
}

}  // namespace inform
