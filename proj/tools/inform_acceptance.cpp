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

// Acceptance checks. Prints one PASS / FAIL / SKIP / NOT-REPRODUCIBLE line per
// criterion and exits nonzero if any line is FAIL. Checks that need external
// data run only when the corresponding environment variables are set.

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "inform/backend.hpp"
#include "inform/baselines.hpp"
#include "inform/bench.hpp"
#include "inform/corpus.hpp"
#include "inform/errors.hpp"
#include "inform/gold.hpp"
#include "inform/lm.hpp"
#include "inform/metrics.hpp"
#include "inform/mock_backend.hpp"

extern char** environ;

namespace {

namespace fs = std::filesystem;
using namespace inform;
using namespace std::chrono_literals;

// Pinned tolerances.
constexpr double kBenchTolerance = 0.01;
constexpr double kBaselineTolerance = 0.05;
constexpr double kOracleTolerance = 1e-12;
constexpr double kCauchyTolerance = 1e-10;
constexpr double kBenchSeconds = 120.0;

enum class Verdict { pass, fail, skip, not_reproducible };

struct Outcome {
    Verdict verdict;
    std::string detail;
};

int failures = 0;

void report(const std::string& id, const Outcome& o) {
    const char* tag = "PASS";
    switch (o.verdict) {
        case Verdict::pass: tag = "PASS"; break;
        case Verdict::fail: tag = "FAIL"; ++failures; break;
        case Verdict::skip: tag = "SKIP"; break;
        case Verdict::not_reproducible: tag = "NOT-REPRODUCIBLE"; break;
    }
    std::printf("%s %s: %s\n", tag, id.c_str(), o.detail.c_str());
    std::fflush(stdout);
}

void run_check(const std::string& id, const std::function<Outcome()>& check) {
    try {
        report(id, check());
    } catch (const std::exception& e) {
        report(id, {Verdict::fail, std::string("unexpected error: ") + e.what()});
    }
}

const char* env(const char* name) {
    const char* v = std::getenv(name);
    return v && *v ? v : nullptr;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

bool within(double got, double want, double tol) { return std::abs(got - want) <= tol; }

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    return out + "'";
}

struct Run {
    int code = -1;
    std::string output;  // stdout only
};

Run run_cli(const std::string& cli, const std::vector<std::string>& args) {
    std::string cmd = quote(cli);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) throw IoError("cannot run " + cli);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// A `mock-backend` subprocess, terminated on destruction.
class MockProcess {
public:
    MockProcess(const std::string& cli, const std::vector<std::string>& args, const fs::path& port_file) {
        std::vector<std::string> argv{cli, "mock-backend"};
        argv.insert(argv.end(), args.begin(), args.end());
        argv.push_back("--port-file");
        argv.push_back(port_file.string());
        std::vector<char*> raw;
        for (auto& a : argv) raw.push_back(a.data());
        raw.push_back(nullptr);
        posix_spawn_file_actions_t actions;
        posix_spawn_file_actions_init(&actions);
        posix_spawn_file_actions_addopen(&actions, STDOUT_FILENO, "/dev/null", O_WRONLY, 0);
        const int rc = posix_spawn(&pid_, cli.c_str(), &actions, nullptr, raw.data(), environ);
        posix_spawn_file_actions_destroy(&actions);
        if (rc != 0) throw IoError("cannot start mock backend");
        for (auto deadline = std::chrono::steady_clock::now() + 10s; std::chrono::steady_clock::now() < deadline;) {
            std::error_code ec;
            if (fs::exists(port_file, ec)) {
                std::ifstream(port_file) >> port_;
                if (port_ > 0) return;
            }
            std::this_thread::sleep_for(20ms);
        }
        throw TransportError("mock backend did not report a port");
    }
    ~MockProcess() {
        if (pid_ > 0) {
            ::kill(pid_, SIGTERM);
            int status = 0;
            ::waitpid(pid_, &status, 0);
        }
    }
    MockProcess(const MockProcess&) = delete;
    MockProcess& operator=(const MockProcess&) = delete;

    std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

private:
    pid_t pid_ = -1;
    int port_ = 0;
};

struct Hermetic {
    fs::path dir;
    TextAnalyzer analyzer;
    EmbeddingTable table;
    Corpus corpus;
    Resolver resolver;

    explicit Hermetic(fs::path d)
        : dir(std::move(d)),
          analyzer(TextAnalyzer::load(dir / "lemmas.tsv", dir / "stopwords.txt")),
          table(load_embeddings(dir / "embeddings.vec")),
          corpus(load_corpus(dir / "corpus.jsonl", analyzer)),
          resolver(table, analyzer.lemmatizer()) {}

    std::vector<std::string> text_options() const {
        return {"--embeddings", (dir / "embeddings.vec").string(), "--lemmas", (dir / "lemmas.tsv").string(),
                "--stopwords", (dir / "stopwords.txt").string()};
    }
};

// ---- embedding benchmark ----

Outcome embedding_benchmark() {
    const char* nb = env("INFORM_NUMBERBATCH");
    const char* simlex = env("INFORM_SIMLEX");
    const char* wordsim = env("INFORM_WORDSIM");
    if (!nb || !simlex || !wordsim) {
        return {Verdict::skip, "set INFORM_NUMBERBATCH, INFORM_SIMLEX and INFORM_WORDSIM to run (data not bundled)"};
    }
    const auto analyzer = TextAnalyzer::load_default();
    const auto table = load_embeddings(nb);
    const Resolver resolver(table, analyzer.lemmatizer());
    const auto start = std::chrono::steady_clock::now();
    const auto sl_pairs = load_similarity_dataset(simlex);
    const auto ws_pairs = load_similarity_dataset(wordsim);
    const auto sl = run_benchmark(sl_pairs, resolver, "simlex999");
    const auto ws = run_benchmark(ws_pairs, resolver, "wordsim353");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = within(sl.pearson.coefficient, 0.6458, kBenchTolerance) &&
                    within(sl.spearman.coefficient, 0.6268, kBenchTolerance) &&
                    within(ws.pearson.coefficient, 0.7534, kBenchTolerance) &&
                    within(ws.spearman.coefficient, 0.8149, kBenchTolerance) && seconds < kBenchSeconds;
    return {ok ? Verdict::pass : Verdict::fail,
            "SimLex r=" + fmt(sl.pearson.coefficient) + " rho=" + fmt(sl.spearman.coefficient) +
                " (want 0.6458/0.6268), WordSim r=" + fmt(ws.pearson.coefficient) +
                " rho=" + fmt(ws.spearman.coefficient) + " (want 0.7534/0.8149), tolerance " + fmt(kBenchTolerance) +
                ", " + fmt(seconds) + " s after load"};
}

// ---- correlation oracle ----

std::vector<long double> brute_ranks(const std::vector<double>& v) {
    std::vector<long double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        long double below = 0, equal = 0;
        for (double w : v) {
            below += w < v[i];
            equal += w == v[i];
        }
        r[i] = below + (equal + 1) / 2;
    }
    return r;
}

long double covariance_r(const std::vector<long double>& x, const std::vector<long double>& y) {
    const auto n = static_cast<long double>(x.size());
    long double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    long double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

Outcome correlation_oracle() {
    std::mt19937 rng(20261014);
    long double worst_rho = 0, worst_r = 0;
    int vectors = 0;
    while (vectors < 500) {
        const std::size_t n = 3 + rng() % 6;
        std::uniform_int_distribution<int> value(0, static_cast<int>(rng() % 5 + 1));
        std::vector<double> x(n), y(n);
        for (auto& v : x) v = value(rng);
        for (auto& v : y) v = value(rng);
        auto flat = [](const std::vector<double>& v) { return std::all_of(v.begin(), v.end(), [&](double a) { return a == v[0]; }); };
        if (flat(x) || flat(y)) continue;
        worst_rho = std::max(worst_rho, std::abs(spearman(x, y).coefficient - covariance_r(brute_ranks(x), brute_ranks(y))));
        worst_r = std::max(worst_r, std::abs(pearson(x, y).coefficient -
                                             covariance_r({x.begin(), x.end()}, {y.begin(), y.end()})));
        ++vectors;
    }
    double worst_t = 0;
    for (double t = 0; t <= 100; t += 0.125) {
        const double closed = 1 - 2 * std::atan(t) / std::numbers::pi;
        worst_t = std::max(worst_t, std::abs(student_t_two_tailed_p(t, 1) - closed));
    }
    const bool ok = worst_rho <= kOracleTolerance && worst_r <= kOracleTolerance && worst_t <= kCauchyTolerance;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%d vectors (n<=8, ties): max |rho - oracle| = %.3Le, max |r - oracle| = %.3Le; "
                  "max |p - Cauchy| = %.3e",
                  vectors, worst_rho, worst_r, worst_t);
    return {ok ? Verdict::pass : Verdict::fail, buf};
}

// ---- combiner ----

Outcome combiner_properties() {
    const auto analyzer = TextAnalyzer::load_default();
    const auto& lem = analyzer.lemmatizer();
    auto run = combine_mask_predictions({{{{"ran", 0.5}, {"running", 0.3}, {"dog", 0.2}}}}, lem);
    auto dog = combine_mask_predictions({{{{"cat", 0.6}, {"dog", 0.4}}, {{"dog", 0.7}, {"cat", 0.3}}}}, lem);
    const bool hand = run.lemma == "run" && run.cumulative_score == 0.8 && dog.lemma == "dog" &&
                      dog.cumulative_score == 1.1;

    static const std::vector<std::string> vocab{"run", "ran", "running", "runs", "dog", "dogs", "cat", "cats",
                                                "walk", "walked", "walking", "apple", "apples", "tree", "owl"};
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> prob(0.001, 1.0), factor(0.01, 1.0);
    int fixtures = 0, violations = 0;
    while (fixtures < 1000) {
        std::vector<std::vector<Candidate>> lists(1 + rng() % 4);
        for (auto& list : lists) {
            for (std::size_t i = 0, k = 1 + rng() % 8; i < k; ++i) list.push_back({vocab[rng() % vocab.size()], prob(rng)});
            std::sort(list.begin(), list.end(), [](const Candidate& a, const Candidate& b) { return a.prob > b.prob; });
        }
        const auto base = combine_mask_predictions({lists}, lem).lemma;
        auto shuffled = lists;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto scaled = lists;
        const double f = factor(rng);
        for (auto& list : scaled) {
            for (auto& c : list) c.prob *= f;
        }
        if (combine_mask_predictions({shuffled}, lem).lemma != base) ++violations;
        if (combine_mask_predictions({scaled}, lem).lemma != base) ++violations;
        ++fixtures;
    }
    return {hand && violations == 0 ? Verdict::pass : Verdict::fail,
            "run=" + run.lemma + " " + fmt(run.cumulative_score) + ", dog=" + dog.lemma + " " +
                fmt(dog.cumulative_score) + "; " + std::to_string(fixtures) + " random fixtures, " +
                std::to_string(violations) + " argmax changes under permutation or scaling"};
}

// ---- end to end ----

Outcome end_to_end(const Hermetic& h, const std::string& cli, const fs::path& work) {
    MockProcess mock(cli, {"--corpus", (h.dir / "corpus.jsonl").string(), "--echo"}, work / "mock.port");
    const auto corpus = (h.dir / "corpus.jsonl").string();
    std::vector<std::string> outputs;
    for (const char* name : {"mlm_a.csv", "mlm_b.csv"}) {
        const auto out = (work / name).string();
        auto args = std::vector<std::string>{"score", "--method", "mlm", "--corpus", corpus, "--out", out,
                                             "--backend-url", mock.url()};
        const auto t = h.text_options();
        args.insert(args.end(), t.begin(), t.end());
        if (const auto r = run_cli(cli, args); r.code != 0) {
            return {Verdict::fail, "score --method mlm exited " + std::to_string(r.code)};
        }
        outputs.push_back(out);
    }
    const bool identical = read_file(outputs[0]) == read_file(outputs[1]);

    const auto gold = (work / "gold.csv").string();
    auto gargs = std::vector<std::string>{"gold", "--corpus", corpus, "--annotations",
                                          (h.dir / "perfect_annotations.jsonl").string(), "--out", gold};
    const auto t = h.text_options();
    gargs.insert(gargs.end(), t.begin(), t.end());
    if (const auto r = run_cli(cli, gargs); r.code != 0) return {Verdict::fail, "gold exited " + std::to_string(r.code)};

    const auto ev = run_cli(cli, {"eval", "--pred", outputs[0], "--gold", gold, "--json"});
    if (ev.code != 0) return {Verdict::fail, "eval exited " + std::to_string(ev.code)};
    const auto j = nlohmann::json::parse(ev.output);

    std::size_t in_vocab = 0;
    for (const auto& s : h.corpus) {
        for (const auto& target : s.targets) in_vocab += h.resolver.resolve(target.word).has_value();
    }
    const double rho = j["spearman_rho"].get<double>();
    const double rmse_v = j["rmse"].get<double>();
    const auto n = j["n"].get<std::size_t>();
    const bool ok = identical && rho == 1.0 && rmse_v == 0.0 && n == in_vocab;
    return {ok ? Verdict::pass : Verdict::fail,
            "rho=" + fmt(rho) + " rmse=" + fmt(rmse_v) + " n=" + std::to_string(n) + " (in-vocab targets " +
                std::to_string(in_vocab) + "), CSVs " + (identical ? "byte-identical" : "DIFFER") + " across runs"};
}

// ---- masking safety ----

bool has_word(const std::string& text, const std::string& word) {
    std::string escaped;
    for (char c : word) {
        if (std::string_view("\\^$.|?*+()[]{}").find(c) != std::string_view::npos) escaped += '\\';
        escaped += c;
    }
    return std::regex_search(text, std::regex("(^|[^A-Za-z0-9])" + escaped + "($|[^A-Za-z0-9])", std::regex::icase));
}

Outcome masking_safety(const Hermetic& h) {
    std::size_t requests = 0, leaks = 0, unmatched = 0;
    for (auto method : {LmMethod::masked, LmMethod::generative}) {
        auto responder = std::make_shared<FixtureResponder>(h.corpus, std::map<TargetKey, FixtureEntry>{}, true);
        MockBackendServer server(responder);
        server.start();
        HttpBackend backend("http://127.0.0.1:" + std::to_string(server.port()), 5000ms);
        ScorerConfig config;
        score_lm(h.corpus, method, backend, h.resolver, config);
        server.stop();
        const auto texts = server.received_texts();
        requests += texts.size();
        for (const auto& text : texts) {
            std::optional<TargetKey> key = method == LmMethod::masked
                                               ? responder->match_infill({text, config.mask_placeholder,
                                                                          config.hidden_for(method), config.top_k})
                                               : responder->match_prompt(text);
            if (!key) {
                ++unmatched;
                continue;
            }
            for (const auto& story : h.corpus) {
                if (story.story_id != key->first) continue;
                for (const auto& other : story.targets) {
                    if (other.index == key->second) continue;
                    for (const auto& span : other.occurrences) {
                        leaks += has_word(text, story.text.substr(span.begin, span.size()));
                    }
                }
            }
        }
    }
    std::size_t targets = 0;
    for (const auto& s : h.corpus) targets += s.targets.size();
    const bool ok = leaks == 0 && unmatched == 0 && requests == 2 * targets;
    return {ok ? Verdict::pass : Verdict::fail,
            std::to_string(requests) + " requests scanned (" + std::to_string(targets) +
                " targets x 2 methods), " + std::to_string(leaks) + " non-focal surface forms found, " +
                std::to_string(unmatched) + " unattributed"};
}

// ---- baseline reproduction ----

Outcome baseline_reproduction() {
    const char* nb = env("INFORM_NUMBERBATCH");
    const char* corpus_path = env("INFORM_CHILD_CORPUS");
    const char* ann_path = env("INFORM_CHILD_ANNOTATIONS");
    if (!nb || !corpus_path || !ann_path) {
        return {Verdict::skip,
                "set INFORM_NUMBERBATCH, INFORM_CHILD_CORPUS and INFORM_CHILD_ANNOTATIONS to run (data not bundled)"};
    }
    const auto analyzer = TextAnalyzer::load_default();
    const auto table = load_embeddings(nb);
    const Resolver resolver(table, analyzer.lemmatizer());
    const auto corpus = load_corpus(corpus_path, analyzer);
    Diagnostics d;
    const auto annotations = load_annotations(ann_path, corpus, d);
    const auto gold = build_gold_standard(corpus, annotations, resolver).result.scores;
    auto rho = [&](BaselineMethod m, BaselineConfig c) {
        const auto set = score_baseline(corpus, m, c, resolver);
        return evaluate(set.scores, gold, std::string(to_string(m)), "", m == BaselineMethod::related_words).spearman_rho;
    };
    const double ctx = rho(BaselineMethod::context_similarity, {});
    const double win = rho(BaselineMethod::context_window, {.window_size = 5});
    const double r3 = rho(BaselineMethod::related_words, {.related_threshold = 0.3});
    const double r4 = rho(BaselineMethod::related_words, {.related_threshold = 0.4});
    const double r5 = rho(BaselineMethod::related_words, {.related_threshold = 0.5});
    const bool ok = within(ctx, 0.2890, kBaselineTolerance) && within(win, 0.3134, kBaselineTolerance) &&
                    within(r3, 0.3534, kBaselineTolerance) && r3 >= r4 && r4 >= r5;
    return {ok ? Verdict::pass : Verdict::fail,
            "context-sim " + fmt(ctx) + " (0.2890), window(5) " + fmt(win) + " (0.3134), related(0.3) " + fmt(r3) +
                " (0.3534), tolerance " + fmt(kBaselineTolerance) + "; related 0.3/0.4/0.5 = " + fmt(r3) + "/" +
                fmt(r4) + "/" + fmt(r5)};
}

// ---- live backend ----

Outcome live_smoke(const Hermetic& h) {
    const char* url = env("INFORM_LIVE_BACKEND_URL");
    if (!url) return {Verdict::skip, "set INFORM_LIVE_BACKEND_URL to run against a live backend"};
    HttpBackend backend(url, 60000ms);
    const auto health = backend.health();
    const auto& story = h.corpus.front();
    const auto masked = mask_story(story, 1, "<mask>", "<unk>");
    const auto preds = backend.infill({masked.text, "<mask>", "<unk>", 10});
    const auto text = backend.generate({build_cloze_prompt(story, 1), 16});
    const bool ok = health.status == "ok" && static_cast<int>(preds.per_mask.size()) == masked.mask_count;
    return {ok ? Verdict::pass : Verdict::fail,
            "model " + health.model + ", " + std::to_string(preds.per_mask.size()) + " mask list(s), generated '" +
                text + "'"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance checks"};
    std::string fixtures, cli;
    app.add_option("--fixtures", fixtures, "Hermetic fixture directory")->required()->check(CLI::ExistingDirectory);
    app.add_option("--cli", cli, "Path to the inform executable")->required()->check(CLI::ExistingFile);
    CLI11_PARSE(app, argc, argv);

    const auto work = fs::temp_directory_path() / ("inform-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(work);
    const Hermetic h(fixtures);

    run_check("embedding-benchmark", embedding_benchmark);
    run_check("correlation-oracle", correlation_oracle);
    run_check("combiner-properties", combiner_properties);
    run_check("end-to-end-hermetic", [&] { return end_to_end(h, cli, work); });
    run_check("masking-safety", [&] { return masking_safety(h); });
    run_check("baseline-reproduction", baseline_reproduction);
    report("generative-lm-reproduction", {Verdict::not_reproducible,
                             "dataset-level rho 0.4983 depends on a hosted model and API nondeterminism"});
    report("masked-lm-reproduction", {Verdict::not_reproducible,
                                   "dataset-level rho 0.4601 depends on external model weights and their runtime"});
    run_check("live-backend-smoke", [&] { return live_smoke(h); });

    std::error_code ec;
    fs::remove_all(work, ec);
    std::printf("%s\n", failures ? "acceptance: FAILED" : "acceptance: OK");
    return failures ? 1 : 0;
}
