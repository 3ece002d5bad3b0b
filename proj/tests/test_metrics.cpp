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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "inform/errors.hpp"
#include "inform/metrics.hpp"
#include "support.hpp"

using namespace inform;

namespace {

// Reference implementations written from the textbook definitions, in long double.
std::vector<long double> brute_ranks(const std::vector<double>& v) {
    std::vector<long double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        long double below = 0, equal = 0;
        for (double w : v) {
            if (w < v[i]) below += 1;
            if (w == v[i]) equal += 1;
        }
        r[i] = below + (equal + 1) / 2;  // mean of positions below+1 .. below+equal
    }
    return r;
}

long double covariance_pearson(const std::vector<long double>& x, const std::vector<long double>& y) {
    const auto n = static_cast<long double>(x.size());
    long double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    long double cxy = 0, cxx = 0, cyy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        cxy += (x[i] - mx) * (y[i] - my);
        cxx += (x[i] - mx) * (x[i] - mx);
        cyy += (y[i] - my) * (y[i] - my);
    }
    return cxy / std::sqrt(cxx * cyy);
}

std::vector<long double> widen(const std::vector<double>& v) { return {v.begin(), v.end()}; }

bool constant(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; });
}

std::vector<InformativenessScore> records(const std::vector<double>& values) {
    std::vector<InformativenessScore> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.push_back({"s" + std::to_string(i / 3), static_cast<int>(i % 3 + 1), "w", values[i], {}, 1});
    }
    return out;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("spearman hand examples") {
    const std::vector<double> x{1, 2, 3, 4, 5};
    CHECK(spearman(x, x).coefficient == 1.0);
    CHECK(spearman(x, std::vector<double>{2, 1, 4, 3, 5}).coefficient == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(spearman(std::vector<double>{1, 2, 3}, std::vector<double>{3, 2, 1}).coefficient == -1.0);
    CHECK(fractional_ranks(std::vector<double>{10, 20, 20, 5}) == std::vector<double>{2, 3.5, 3.5, 1});
}

TEST_CASE("pearson hand examples") {
    const std::vector<double> x{1, 2, 3};
    CHECK(pearson(x, std::vector<double>{2, 4, 6}).coefficient == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pearson(x, std::vector<double>{1, 2, 2}).coefficient == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    CHECK(pearson(x, std::vector<double>{-1, -2, -3}).coefficient == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("rmse hand examples") {
    const std::vector<double> x{0.3, 0.9};
    CHECK(rmse(x, x) == 0.0);
    CHECK(rmse(std::vector<double>{0, 0}, std::vector<double>{1, 1}) == 1.0);
    CHECK(rmse(std::vector<double>{0.2, 0.4}, std::vector<double>{0.5, 0.8}) ==
          doctest::Approx(std::sqrt(0.125)).epsilon(1e-15));
}

TEST_CASE("contract errors") {
    const std::vector<double> a{1, 2, 3}, b{1, 2};
    CHECK_THROWS_AS(spearman(a, b), InvalidArgument);
    CHECK_THROWS_AS(pearson(a, b), InvalidArgument);
    CHECK_THROWS_AS(rmse(a, b), InvalidArgument);
    CHECK_THROWS_AS(spearman(a, std::vector<double>{4, 4, 4}), UndefinedCorrelation);
    CHECK_THROWS_AS(pearson(std::vector<double>{1, 1, 1}, a), UndefinedCorrelation);
    CHECK_THROWS_AS(student_t_two_tailed_p(1.0, 0), InvalidArgument);
}

TEST_CASE("spearman matches the brute-force rank oracle") {
    std::mt19937 rng(20261014);
    int compared = 0;
    while (compared < 500) {
        const std::size_t n = 3 + rng() % 6;  // 3..8
        std::uniform_int_distribution<int> value(0, static_cast<int>(rng() % 5 + 1));
        std::vector<double> x(n), y(n);
        for (auto& v : x) v = value(rng);
        for (auto& v : y) v = value(rng);
        if (constant(x) || constant(y)) continue;
        const long double want = covariance_pearson(brute_ranks(x), brute_ranks(y));
        CHECK(std::abs(static_cast<long double>(spearman(x, y).coefficient) - want) <= 1e-12L);
        ++compared;
    }
}

TEST_CASE("pearson matches the covariance definition") {
    std::mt19937 rng(11);
    std::normal_distribution<double> normal(0, 3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 3 + rng() % 40;
        std::vector<double> x(n), y(n);
        for (auto& v : x) v = normal(rng);
        for (std::size_t i = 0; i < n; ++i) y[i] = normal(rng) + (trial % 2 ? 0.3 * x[i] : 0.0);
        const long double want = covariance_pearson(widen(x), widen(y));
        CHECK(std::abs(static_cast<long double>(pearson(x, y).coefficient) - want) <= 1e-12L);
    }
}

TEST_CASE("student t matches closed forms") {
    CHECK(student_t_two_tailed_p(1.0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(student_t_two_tailed_p(1.0, 1) - 2 * (1 - (0.5 + std::atan(1.0) / std::numbers::pi))) <= 1e-10);
    for (double t = 0; t <= 50; t += 0.25) {
        const double cauchy = 1 - 2 * std::atan(t) / std::numbers::pi;
        CHECK(std::abs(student_t_two_tailed_p(t, 1) - cauchy) <= 1e-10);
        const double two = 1 - t / std::sqrt(2 + t * t);
        CHECK(std::abs(student_t_two_tailed_p(t, 2) - two) <= 1e-10);
    }
    for (int df : {1, 2, 7, 30, 1000}) CHECK(student_t_two_tailed_p(0.0, df) == 1.0);
    CHECK(student_t_two_tailed_p(100.0, 10) < 1e-8);
    CHECK(student_t_two_tailed_p(-2.5, 6) == student_t_two_tailed_p(2.5, 6));
}

TEST_CASE("student t matches frozen high-precision values") {
    for (const auto& row : test::expected()["student_t"]) {
        const double t = row["t"].get<double>();
        const int df = row["df"].get<int>();
        const double want = row["p"].get<double>();
        CAPTURE(t);
        CAPTURE(df);
        const double got = student_t_two_tailed_p(t, df);
        CHECK(std::abs(got - want) <= 1e-10 + 1e-9 * want);
    }
}

TEST_CASE("p values are in range") {
    std::mt19937 rng(2);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x(10), y(10);
        for (auto& v : x) v = normal(rng);
        for (auto& v : y) v = normal(rng);
        for (auto c : {pearson(x, y), spearman(x, y)}) {
            CHECK(c.p_value >= 0.0);
            CHECK(c.p_value <= 1.0);
            CHECK(std::abs(c.coefficient) <= 1.0);
        }
    }
}

TEST_CASE("monotone and affine invariance, symmetry") {
    std::mt19937 rng(8);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> positive(0.1, 10);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> x(12), y(12);
        for (auto& v : x) v = normal(rng);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = normal(rng) + 0.5 * x[i];
        const double a = positive(rng), b = normal(rng);
        std::vector<double> fx, ax;
        for (double v : x) {
            fx.push_back(std::exp(v) + v * v * v);  // strictly increasing
            ax.push_back(a * v + b);
        }
        CHECK(spearman(fx, y).coefficient == doctest::Approx(spearman(x, y).coefficient).epsilon(1e-12));
        CHECK(pearson(ax, y).coefficient == doctest::Approx(pearson(x, y).coefficient).epsilon(1e-12));
        CHECK(spearman(x, y).coefficient == spearman(y, x).coefficient);
        CHECK(pearson(x, y).coefficient == doctest::Approx(pearson(y, x).coefficient).epsilon(1e-15));
    }
}

TEST_CASE("evaluate joins on story and target") {
    const std::vector<double> v{0.1, 0.5, 0.3, 0.9, 0.2, 0.7, 0.4, 0.8, 0.6, 0.05};
    auto gold = records(v);
    auto same = evaluate(gold, gold, "m", "d");
    CHECK(same.n == 10);
    CHECK(same.spearman_rho == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(same.pearson_r == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(same.rmse == 0.0);
    CHECK(same.method_name == "m");
    CHECK(same.config_digest == "d");

    auto partial = std::vector<InformativenessScore>(gold.begin() + 2, gold.end());
    auto dropped = evaluate(partial, gold, "m", "d");
    CHECK(dropped.n == 8);
    CHECK(dropped.dropped_gold == 2);
    CHECK(dropped.dropped_predicted == 0);

    auto extra = gold;
    extra.push_back({"zz", 1, "w", 0.5, {}, 1});
    CHECK(evaluate(extra, gold, "m", "d").dropped_predicted == 1);
}

TEST_CASE("evaluate reproduces the five-pair rank example") {
    auto gold = records({1, 2, 3, 4, 5, 1, 2, 3, 4, 5});
    auto pred = records({2, 1, 4, 3, 5, 2, 1, 4, 3, 5});
    auto report = evaluate(pred, gold, "m", "d");
    CHECK(report.n == 10);
    CHECK(report.spearman_rho == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("evaluate errors") {
    auto gold = records({0.1, 0.2, 0.3});
    std::vector<InformativenessScore> disjoint{{"x", 1, "w", 0.1, {}, 1}, {"y", 1, "w", 0.2, {}, 1}};
    CHECK_THROWS_AS(evaluate(disjoint, gold, "m", "d"), DataError);
    auto dup = gold;
    dup.push_back(gold[0]);
    CHECK_THROWS_AS(evaluate(dup, gold, "m", "d"), DataError);
    CHECK_THROWS_AS(evaluate(gold, dup, "m", "d"), DataError);
    CHECK_THROWS_AS(evaluate(std::vector<InformativenessScore>(gold.begin(), gold.begin() + 2), gold, "m", "d"),
                    DataError);
}

TEST_CASE("count-valued rmse uses normalized predictions") {
    auto gold = records({0.0, 0.5, 1.0});
    auto counts = records({0, 5, 10});
    auto report = evaluate(counts, gold, "related (0.3)", "d", true);
    CHECK(report.count_valued);
    CHECK(report.rmse == 0.0);
    CHECK(report.spearman_rho == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(evaluate(counts, gold, "related (0.3)", "d", false).rmse > 1.0);
}

TEST_CASE("report serialisation") {
    auto gold = records({0.1, 0.5, 0.3, 0.9});
    auto report = evaluate(gold, gold, "context-sim", "abc");
    auto j = nlohmann::json::parse(to_json(report));
    for (const char* key : {"n", "spearman_rho", "spearman_p", "pearson_r", "pearson_p", "rmse", "method_name",
                            "config_digest", "dropped_predicted", "dropped_gold", "count_valued"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["n"] == 4);
    CHECK(to_text(report).find("context-sim") != std::string::npos);
    CHECK(table_header().find("Spearman") != std::string::npos);
    CHECK(table_row(report).find("| context-sim | 1.0000 |") == 0);
}

}  // TEST_SUITE
