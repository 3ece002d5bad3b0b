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

#include "inform/mock_backend.hpp"

#include <algorithm>
#include <fstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "inform/errors.hpp"
#include "inform/lm.hpp"
#include "inform/text.hpp"

namespace inform {

using nlohmann::json;

std::map<TargetKey, FixtureEntry> load_fixtures(const std::filesystem::path& path, const Corpus& corpus) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open fixture file " + path.string());
    std::map<TargetKey, FixtureEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(path.string() + ": " + e.what(), lineno);
        }
        if (!obj.is_object()) throw ParseError(path.string() + ": record is not an object", lineno);
        TargetKey key;
        FixtureEntry entry;
        try {
            key.first = obj.at("story_id").get<std::string>();
            key.second = obj.at("target_index").get<int>();
            if (auto it = obj.find("infill"); it != obj.end()) {
                auto& lists = entry.infill.emplace();
                for (const auto& l : *it) {
                    auto& cands = lists.emplace_back();
                    for (const auto& c : l) cands.push_back({c.at("word").get<std::string>(), c.at("prob").get<double>()});
                }
                if (lists.empty()) throw ParseError(path.string() + ": 'infill' has no candidate lists", lineno);
            }
            if (auto it = obj.find("generate"); it != obj.end()) entry.generate = it->get<std::string>();
        } catch (const json::exception& e) {
            throw ParseError(path.string() + ": " + e.what(), lineno);
        }
        auto story = std::find_if(corpus.begin(), corpus.end(), [&](const Story& s) { return s.story_id == key.first; });
        if (story == corpus.end()) {
            throw DataError(path.string() + " line " + std::to_string(lineno) + ": unknown story_id '" + key.first + "'");
        }
        if (key.second < 1 || key.second > story->target_count()) {
            throw DataError(path.string() + " line " + std::to_string(lineno) + ": target_index " +
                            std::to_string(key.second) + " out of range for story '" + key.first + "'");
        }
        if (!out.emplace(key, std::move(entry)).second) {
            throw DataError(path.string() + " line " + std::to_string(lineno) + ": duplicate fixture for (" + key.first +
                            ", " + std::to_string(key.second) + ")");
        }
    }
    return out;
}

FixtureResponder::FixtureResponder(Corpus corpus, std::map<TargetKey, FixtureEntry> fixtures, bool echo,
                                   std::string model_name)
    : corpus_(std::move(corpus)), fixtures_(std::move(fixtures)), echo_(echo), model_name_(std::move(model_name)) {
    for (const auto& s : corpus_) {
        for (const auto& t : s.targets) prompt_index_.emplace(build_cloze_prompt(s, t.index), TargetKey{s.story_id, t.index});
    }
}

const std::map<std::string, TargetKey>& FixtureResponder::infill_index(const std::string& mask,
                                                                       const std::string& hidden) const {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = infill_indexes_.try_emplace({mask, hidden});
    if (inserted) {
        for (const auto& s : corpus_) {
            for (const auto& t : s.targets) {
                it->second.emplace(mask_story(s, t.index, mask, hidden).text, TargetKey{s.story_id, t.index});
            }
        }
    }
    return it->second;
}

std::optional<TargetKey> FixtureResponder::match_infill(const InfillRequest& request) const {
    const auto& index = infill_index(request.mask_placeholder, request.hidden_placeholder);
    auto it = index.find(request.text);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::optional<TargetKey> FixtureResponder::match_prompt(const std::string& prompt) const {
    auto it = prompt_index_.find(prompt);
    if (it == prompt_index_.end()) return std::nullopt;
    return it->second;
}

namespace {

const Story& find_story(const Corpus& corpus, const std::string& id) {
    for (const auto& s : corpus) {
        if (s.story_id == id) return s;
    }
    throw DataError("unknown story '" + id + "'");
}

}  // namespace

MaskPredictions FixtureResponder::infill(const InfillRequest& request) const {
    const auto key = match_infill(request);
    if (!key) throw ProtocolError("no fixture matches this infill request");
    const auto& story = find_story(corpus_, key->first);
    const int masks = mask_story(story, key->second, request.mask_placeholder, request.hidden_placeholder).mask_count;

    MaskPredictions out;
    auto fx = fixtures_.find(*key);
    if (fx != fixtures_.end() && fx->second.infill) {
        const auto& lists = *fx->second.infill;
        if (lists.size() != 1 && static_cast<int>(lists.size()) != masks) {
            throw DataError("fixture for (" + key->first + ", " + std::to_string(key->second) + ") has " +
                            std::to_string(lists.size()) + " candidate lists but the request has " +
                            std::to_string(masks) + " masks");
        }
        for (int m = 0; m < masks; ++m) out.per_mask.push_back(lists.size() == 1 ? lists[0] : lists[m]);
    } else if (echo_) {
        const auto& word = story.target(key->second).word;
        out.per_mask.assign(masks, {Candidate{word, 1.0}});
    } else {
        throw ProtocolError("no infill fixture for (" + key->first + ", " + std::to_string(key->second) + ")");
    }
    for (auto& list : out.per_mask) {
        if (static_cast<int>(list.size()) > request.top_k) list.resize(request.top_k);
    }
    return out;
}

std::string FixtureResponder::generate(const GenerateRequest& request) const {
    const auto key = match_prompt(request.prompt);
    if (!key) throw ProtocolError("no fixture matches this prompt");
    auto fx = fixtures_.find(*key);
    if (fx != fixtures_.end() && fx->second.generate) return *fx->second.generate;
    if (echo_) return find_story(corpus_, key->first).target(key->second).word;
    throw ProtocolError("no generate fixture for (" + key->first + ", " + std::to_string(key->second) + ")");
}

MaskPredictions MockBackend::infill(const InfillRequest& request) {
    {
        std::lock_guard lock(mutex_);
        sent_.push_back(request.text);
    }
    return decode_infill_response(encode_infill_response(responder_->infill(request)));
}

std::string MockBackend::generate(const GenerateRequest& request) {
    {
        std::lock_guard lock(mutex_);
        sent_.push_back(request.prompt);
    }
    return decode_generate_response(encode_generate_response(responder_->generate(request)));
}

std::vector<std::string> MockBackend::sent_texts() const {
    std::lock_guard lock(mutex_);
    return sent_;
}

std::size_t MockBackend::request_count() const {
    std::lock_guard lock(mutex_);
    return sent_.size();
}

struct MockBackendServer::Impl {
    std::shared_ptr<const FixtureResponder> responder;
    httplib::Server server;
    std::thread thread;
    mutable std::mutex mutex;
    std::vector<std::string> received;

    void record(std::string text) {
        std::lock_guard lock(mutex);
        received.push_back(std::move(text));
    }
};

namespace {

template <class F>
void answer(httplib::Response& res, F&& body) {
    try {
        res.set_content(body(), "application/json");
        res.status = 200;
    } catch (const ProtocolError& e) {
        res.status = 400;
        res.set_content(encode_error(e.what()), "application/json");
    } catch (const std::exception& e) {
        res.status = 500;
        res.set_content(encode_error(e.what()), "application/json");
    }
}

}  // namespace

MockBackendServer::MockBackendServer(std::shared_ptr<const FixtureResponder> responder)
    : impl_(std::make_unique<Impl>()) {
    impl_->responder = std::move(responder);
    auto* impl = impl_.get();
    impl->server.Get("/v1/health", [impl](const httplib::Request&, httplib::Response& res) {
        answer(res, [&] { return encode_health(impl->responder->health()); });
    });
    impl->server.Post("/v1/infill", [impl](const httplib::Request& req, httplib::Response& res) {
        answer(res, [&] {
            const auto request = decode_infill_request(req.body);
            impl->record(request.text);
            return encode_infill_response(impl->responder->infill(request));
        });
    });
    impl->server.Post("/v1/generate", [impl](const httplib::Request& req, httplib::Response& res) {
        answer(res, [&] {
            const auto request = decode_generate_request(req.body);
            impl->record(request.prompt);
            return encode_generate_response(impl->responder->generate(request));
        });
    });
    impl->server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty()) res.set_content(encode_error("no such endpoint"), "application/json");
    });
}

MockBackendServer::~MockBackendServer() { stop(); }

void MockBackendServer::start(const std::string& host, int port) {
    if (impl_->thread.joinable()) throw InvalidArgument("mock backend already started");
    if (port == 0) {
        port_ = impl_->server.bind_to_any_port(host);
        if (port_ < 0) throw IoError("cannot bind mock backend on " + host);
    } else {
        if (!impl_->server.bind_to_port(host, port)) {
            throw IoError("cannot bind mock backend on " + host + ":" + std::to_string(port) + " (port in use?)");
        }
        port_ = port;
    }
    impl_->thread = std::thread([impl = impl_.get()] { impl->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
}

void MockBackendServer::stop() {
    impl_->server.stop();
    if (impl_->thread.joinable()) impl_->thread.join();
}

std::vector<std::string> MockBackendServer::received_texts() const {
    std::lock_guard lock(impl_->mutex);
    return impl_->received;
}

}  // namespace inform
