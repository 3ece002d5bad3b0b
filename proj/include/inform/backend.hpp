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

// Prediction backend contract and its HTTP wire protocol.
//
//   POST /v1/infill    {"text", "mask_placeholder", "hidden_placeholder", "top_k"}
//                   -> {"masks": [[{"word", "prob"}, ...], ...]}   (document order)
//   POST /v1/generate  {"prompt", "max_tokens"} -> {"text"}
//   GET  /v1/health    -> {"status": "ok", "model"}
//   errors: 4xx/5xx with {"error": message}

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace inform {

struct Candidate {
    std::string word;
    double prob = 0;
};

// One candidate list per mask placeholder, in document order, each sorted by
// descending probability. Probabilities are raw model outputs and need not
// sum to one.
struct MaskPredictions {
    std::vector<std::vector<Candidate>> per_mask;
};

struct InfillRequest {
    std::string text;
    std::string mask_placeholder;
    std::string hidden_placeholder;
    int top_k = 50;
};

struct GenerateRequest {
    std::string prompt;
    int max_tokens = 16;
};

struct HealthStatus {
    std::string status;
    std::string model;
};

/// Implementations must tolerate concurrent calls.
class PredictionBackend {
public:
    virtual ~PredictionBackend() = default;
    virtual MaskPredictions infill(const InfillRequest& request) = 0;
    virtual std::string generate(const GenerateRequest& request) = 0;
    virtual HealthStatus health() = 0;
};

// Wire codec. Decoders throw ProtocolError on anything off-contract; the
// infill response decoder also enforces probabilities in (0, 1] and
// descending order within each list.
std::string encode_infill_request(const InfillRequest& request);
InfillRequest decode_infill_request(std::string_view body);
std::string encode_infill_response(const MaskPredictions& predictions);
MaskPredictions decode_infill_response(std::string_view body);
std::string encode_generate_request(const GenerateRequest& request);
GenerateRequest decode_generate_request(std::string_view body);
std::string encode_generate_response(std::string_view text);
std::string decode_generate_response(std::string_view body);
std::string encode_health(const HealthStatus& health);
HealthStatus decode_health(std::string_view body);
std::string encode_error(std::string_view message);

struct RetryPolicy {
    int attempts = 3;  // total tries, including the first
    std::chrono::milliseconds initial_backoff{100};  // doubled after each failure
};

/// Client for the wire protocol. Transport failures and 5xx answers are
/// retried per the policy; 4xx answers and malformed payloads raise
/// ProtocolError immediately.
class HttpBackend final : public PredictionBackend {
public:
    // `base_url` like "http://127.0.0.1:8765", optionally with a path prefix.
    HttpBackend(std::string base_url, std::chrono::milliseconds timeout, RetryPolicy retry = {});

    MaskPredictions infill(const InfillRequest& request) override;
    std::string generate(const GenerateRequest& request) override;
    HealthStatus health() override;

private:
    std::string post(const std::string& path, const std::string& body);
    std::string get(const std::string& path);

    std::string host_;
    std::string prefix_;
    std::chrono::milliseconds timeout_;
    RetryPolicy retry_;
};

}  // namespace inform
