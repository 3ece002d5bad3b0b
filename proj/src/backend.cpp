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

#include "inform/backend.hpp"

#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "inform/errors.hpp"

namespace inform {

using nlohmann::json;

namespace {

json parse_body(std::string_view body, const char* what) {
    try {
        auto j = json::parse(body);
        if (!j.is_object()) throw ProtocolError(std::string(what) + ": body is not a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw ProtocolError(std::string(what) + ": malformed JSON: " + e.what());
    }
}

template <class T>
T field(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) throw ProtocolError(std::string(what) + ": missing field '" + key + "'");
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw ProtocolError(std::string(what) + ": field '" + key + "' has the wrong type");
    }
}

}  // namespace

std::string encode_infill_request(const InfillRequest& r) {
    return json{{"text", r.text},
                {"mask_placeholder", r.mask_placeholder},
                {"hidden_placeholder", r.hidden_placeholder},
                {"top_k", r.top_k}}
        .dump();
}

InfillRequest decode_infill_request(std::string_view body) {
    const auto j = parse_body(body, "infill request");
    InfillRequest r;
    r.text = field<std::string>(j, "text", "infill request");
    r.mask_placeholder = field<std::string>(j, "mask_placeholder", "infill request");
    r.hidden_placeholder = field<std::string>(j, "hidden_placeholder", "infill request");
    r.top_k = field<int>(j, "top_k", "infill request");
    if (r.mask_placeholder.empty()) throw ProtocolError("infill request: empty mask_placeholder");
    if (r.top_k < 1) throw ProtocolError("infill request: top_k must be >= 1");
    return r;
}

std::string encode_infill_response(const MaskPredictions& p) {
    json masks = json::array();
    for (const auto& list : p.per_mask) {
        json l = json::array();
        for (const auto& c : list) l.push_back({{"word", c.word}, {"prob", c.prob}});
        masks.push_back(std::move(l));
    }
    return json{{"masks", std::move(masks)}}.dump();
}

MaskPredictions decode_infill_response(std::string_view body) {
    const auto j = parse_body(body, "infill response");
    auto it = j.find("masks");
    if (it == j.end() || !it->is_array()) throw ProtocolError("infill response: 'masks' missing or not an array");
    MaskPredictions p;
    for (const auto& list : *it) {
        if (!list.is_array()) throw ProtocolError("infill response: mask entry is not an array");
        auto& out = p.per_mask.emplace_back();
        for (const auto& c : list) {
            if (!c.is_object()) throw ProtocolError("infill response: candidate is not an object");
            Candidate cand{field<std::string>(c, "word", "infill response"), field<double>(c, "prob", "infill response")};
            if (!(cand.prob > 0 && cand.prob <= 1)) {
                throw ProtocolError("infill response: probability outside (0, 1] for '" + cand.word + "'");
            }
            if (!out.empty() && cand.prob > out.back().prob) {
                throw ProtocolError("infill response: candidates not sorted by descending probability");
            }
            out.push_back(std::move(cand));
        }
    }
    return p;
}

std::string encode_generate_request(const GenerateRequest& r) {
    return json{{"prompt", r.prompt}, {"max_tokens", r.max_tokens}}.dump();
}

GenerateRequest decode_generate_request(std::string_view body) {
    const auto j = parse_body(body, "generate request");
    GenerateRequest r;
    r.prompt = field<std::string>(j, "prompt", "generate request");
    r.max_tokens = field<int>(j, "max_tokens", "generate request");
    return r;
}

std::string encode_generate_response(std::string_view text) { return json{{"text", text}}.dump(); }

std::string decode_generate_response(std::string_view body) {
    return field<std::string>(parse_body(body, "generate response"), "text", "generate response");
}

std::string encode_health(const HealthStatus& h) { return json{{"status", h.status}, {"model", h.model}}.dump(); }

HealthStatus decode_health(std::string_view body) {
    const auto j = parse_body(body, "health response");
    return {field<std::string>(j, "status", "health response"), field<std::string>(j, "model", "health response")};
}

std::string encode_error(std::string_view message) { return json{{"error", message}}.dump(); }

HttpBackend::HttpBackend(std::string base_url, std::chrono::milliseconds timeout, RetryPolicy retry)
    : timeout_(timeout), retry_(retry) {
    if (base_url.empty()) throw InvalidArgument("backend URL is empty");
    if (retry_.attempts < 1) throw InvalidArgument("retry attempts must be >= 1");
    const auto scheme = base_url.find("://");
    if (scheme == std::string::npos) base_url = "http://" + base_url;
    const auto host_begin = base_url.find("://") + 3;
    const auto slash = base_url.find('/', host_begin);
    host_ = base_url.substr(0, slash);
    if (slash != std::string::npos) {
        prefix_ = base_url.substr(slash);
        while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
    }
    if (!host_.starts_with("http://")) throw InvalidArgument("only http:// backends are supported: " + base_url);
}

namespace {

std::string error_message(const httplib::Result& res) {
    try {
        auto j = json::parse(res->body);
        if (j.is_object() && j.contains("error") && j["error"].is_string()) return j["error"].get<std::string>();
    } catch (const json::exception&) {
    }
    return res->body;
}

void configure(httplib::Client& cli, std::chrono::milliseconds timeout) {
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout - secs);
    cli.set_connection_timeout(secs.count(), usecs.count());
    cli.set_read_timeout(secs.count(), usecs.count());
    cli.set_write_timeout(secs.count(), usecs.count());
}

}  // namespace

std::string HttpBackend::post(const std::string& path, const std::string& body) {
    auto delay = retry_.initial_backoff;
    for (int attempt = 1;; ++attempt) {
        httplib::Client cli(host_);
        configure(cli, timeout_);
        auto res = cli.Post(prefix_ + path, body, "application/json");
        std::string failure;
        if (!res) {
            failure = "transport error: " + httplib::to_string(res.error());
        } else if (res->status >= 500) {
            failure = "server error " + std::to_string(res->status) + ": " + error_message(res);
        } else if (res->status != 200) {
            throw ProtocolError("backend rejected " + path + " with " + std::to_string(res->status) + ": " +
                                error_message(res));
        } else {
            return res->body;
        }
        if (attempt >= retry_.attempts) {
            throw TransportError(host_ + prefix_ + path + ": " + failure + " (after " + std::to_string(attempt) +
                                 " attempt(s))");
        }
        std::this_thread::sleep_for(delay);
        delay *= 2;
    }
}

std::string HttpBackend::get(const std::string& path) {
    httplib::Client cli(host_);
    configure(cli, timeout_);
    auto res = cli.Get(prefix_ + path);
    if (!res) throw TransportError(host_ + prefix_ + path + ": transport error: " + httplib::to_string(res.error()));
    if (res->status != 200) {
        throw ProtocolError(path + " answered " + std::to_string(res->status) + ": " + error_message(res));
    }
    return res->body;
}

MaskPredictions HttpBackend::infill(const InfillRequest& request) {
    return decode_infill_response(post("/v1/infill", encode_infill_request(request)));
}

std::string HttpBackend::generate(const GenerateRequest& request) {
    return decode_generate_response(post("/v1/generate", encode_generate_request(request)));
}

HealthStatus HttpBackend::health() { return decode_health(get("/v1/health")); }

}  // namespace inform
