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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inform/backend.hpp"
#include "inform/corpus.hpp"

namespace inform {

using TargetKey = std::pair<std::string, int>;  // (story_id, target_index)

struct FixtureEntry {
    // One list per mask; a single list is reused for every mask.
    std::optional<std::vector<std::vector<Candidate>>> infill;
    std::optional<std::string> generate;
};

// One JSON object per line:
//   {"story_id": "s1", "target_index": 2,
//    "infill": [[{"word": "cat", "prob": 0.6}, ...], ...], "generate": "cat"}
// Either response field may be omitted. Throws ParseError / DataError.
std::map<TargetKey, FixtureEntry> load_fixtures(const std::filesystem::path& path, const Corpus& corpus);

/// Maps wire requests back to the (story, target) they were built from by
/// rebuilding every masked text and prompt from the corpus, then answers
/// from the fixtures. In echo mode, pairs without a fixture answer with the
/// target word itself (probability 1 for every mask).
class FixtureResponder {
public:
    FixtureResponder(Corpus corpus, std::map<TargetKey, FixtureEntry> fixtures, bool echo,
                     std::string model_name = "inform-mock");

    // Throws ProtocolError for a request that matches no fixture and
    // DataError when a fixture does not fit the request's mask count.
    MaskPredictions infill(const InfillRequest& request) const;
    std::string generate(const GenerateRequest& request) const;
    HealthStatus health() const { return {"ok", model_name_}; }

    std::optional<TargetKey> match_infill(const InfillRequest& request) const;
    std::optional<TargetKey> match_prompt(const std::string& prompt) const;

    const Corpus& corpus() const noexcept { return corpus_; }

private:
    const std::map<std::string, TargetKey>& infill_index(const std::string& mask, const std::string& hidden) const;

    Corpus corpus_;
    std::map<TargetKey, FixtureEntry> fixtures_;
    bool echo_;
    std::string model_name_;
    std::map<std::string, TargetKey> prompt_index_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::string, std::string>, std::map<std::string, TargetKey>> infill_indexes_;
};

/// In-process backend over a FixtureResponder. Responses go through the wire
/// codec so they get the same validation as HTTP responses. Records every
/// outgoing text.
class MockBackend final : public PredictionBackend {
public:
    explicit MockBackend(std::shared_ptr<const FixtureResponder> responder) : responder_(std::move(responder)) {}

    MaskPredictions infill(const InfillRequest& request) override;
    std::string generate(const GenerateRequest& request) override;
    HealthStatus health() override { return responder_->health(); }

    std::vector<std::string> sent_texts() const;
    std::size_t request_count() const;

private:
    std::shared_ptr<const FixtureResponder> responder_;
    mutable std::mutex mutex_;
    std::vector<std::string> sent_;
};

/// HTTP server for the wire protocol. Unknown requests get 400 with an error
/// body; fixture mismatches get 500.
class MockBackendServer {
public:
    explicit MockBackendServer(std::shared_ptr<const FixtureResponder> responder);
    ~MockBackendServer();
    MockBackendServer(const MockBackendServer&) = delete;
    MockBackendServer& operator=(const MockBackendServer&) = delete;

    // Binds (port 0 picks a free port) and serves on a background thread.
    // Throws IoError when the port cannot be bound.
    void start(const std::string& host = "127.0.0.1", int port = 0);
    void stop();
    int port() const noexcept { return port_; }

    std::vector<std::string> received_texts() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    int port_ = 0;
};

}  // namespace inform
