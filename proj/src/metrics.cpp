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

#include "inform/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "inform/baselines.hpp"
#include "inform/errors.hpp"

namespace inform {

namespace {

void check_pair(std::span<const double> x, std::span<const double> y, std::size_t min_n, const char* what) {
    if (x.size() != y.size()) {
        throw InvalidArgument(std::string(what) + ": length mismatch (" + std::to_string(x.size()) + " vs " +
                              std::to_string(y.size()) + ")");
    }
    if (x.size() < min_n) {
        throw InvalidArgument(std::string(what) + ": need at least " + std::to_string(min_n) + " pairs");
    }
}

// Lentz's method for the continued fraction of I_x(a, b).
double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIter = 1000;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;
    const double qab = a + b, qap = a + 1, qam = a - 1;
    double c = 1;
    double d = 1 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1) < kEps) break;
    }
    return h;
}

double correlation_p(double r, std::size_t n) {
    if (std::fabs(r) >= 1) return 0;
    const double df = static_cast<double>(n - 2);
    const double t = r * std::sqrt(df / (1 - r * r));
    return student_t_two_tailed_p(t, static_cast<int>(n - 2));
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::vector<double> fractional_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

Correlation pearson(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y, 3, "pearson");
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) throw UndefinedCorrelation("correlation undefined: constant input");
    const double r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    return {r, correlation_p(r, x.size())};
}

Correlation spearman(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y, 3, "spearman");
    const auto rx = fractional_ranks(x);
    const auto ry = fractional_ranks(y);
    return pearson(rx, ry);
}

double rmse(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y, 1, "rmse");
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) ss += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(ss / static_cast<double>(x.size()));
}

double regularized_incomplete_beta(double a, double b, double x, double one_minus_x) {
    if (x <= 0) return 0;
    if (one_minus_x <= 0) return 1;
    const double log_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log(one_minus_x);
    const double front = std::exp(log_front);
    if (x < (a + 1) / (a + b + 2)) return front * beta_continued_fraction(a, b, x) / a;
    return 1 - front * beta_continued_fraction(b, a, one_minus_x) / b;
}

double student_t_two_tailed_p(double t, int df) {
    if (df < 1) throw InvalidArgument("student t: degrees of freedom must be >= 1");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(t)) return 0;
    const double nu = df;
    const double t2 = t * t;
    const double x = nu / (nu + t2);
    const double one_minus_x = t2 / (nu + t2);
    return std::clamp(regularized_incomplete_beta(nu / 2, 0.5, x, one_minus_x), 0.0, 1.0);
}

MetricsReport evaluate(std::span<const InformativenessScore> predicted, std::span<const InformativenessScore> gold,
                       std::string method_name, std::string config_digest, bool count_valued) {
    using Key = std::pair<std::string, int>;
    std::map<Key, const InformativenessScore*> gold_by_key;
    for (const auto& g : gold) {
        if (!gold_by_key.emplace(Key{g.story_id, g.target_index}, &g).second) {
            throw DataError("gold scores contain duplicate key (" + g.story_id + ", " + std::to_string(g.target_index) + ")");
        }
    }
    std::map<Key, const InformativenessScore*> pred_by_key;
    for (const auto& p : predicted) {
        if (!pred_by_key.emplace(Key{p.story_id, p.target_index}, &p).second) {
            throw DataError("predictions contain duplicate key (" + p.story_id + ", " + std::to_string(p.target_index) + ")");
        }
    }

    MetricsReport report;
    report.method_name = std::move(method_name);
    report.config_digest = std::move(config_digest);
    report.count_valued = count_valued;

    std::vector<InformativenessScore> joined_pred;
    std::vector<double> pv, gv;
    for (const auto& [key, p] : pred_by_key) {
        auto it = gold_by_key.find(key);
        if (it == gold_by_key.end()) {
            ++report.dropped_predicted;
            continue;
        }
        joined_pred.push_back(*p);
        pv.push_back(p->value);
        gv.push_back(it->second->value);
    }
    report.n = pv.size();
    report.dropped_gold = gold.size() - report.n;
    if (report.n == 0) throw DataError("no (story_id, target_index) pair in common between predictions and gold");
    if (report.n < 3) throw DataError("only " + std::to_string(report.n) + " joined pairs; need at least 3");

    const auto rho = spearman(pv, gv);
    const auto r = pearson(pv, gv);
    report.spearman_rho = rho.coefficient;
    report.spearman_p = rho.p_value;
    report.pearson_r = r.coefficient;
    report.pearson_p = r.p_value;
    if (count_valued) {
        Diagnostics ignored;
        const auto normalized = normalize_counts(std::move(joined_pred), ignored);
        std::vector<double> nv;
        for (const auto& s : normalized) nv.push_back(s.value);
        report.rmse = rmse(nv, gv);
    } else {
        report.rmse = rmse(pv, gv);
    }
    return report;
}

std::string to_json(const MetricsReport& report, int indent) {
    nlohmann::ordered_json j;
    j["method_name"] = report.method_name;
    j["config_digest"] = report.config_digest;
    j["n"] = report.n;
    j["spearman_rho"] = report.spearman_rho;
    j["spearman_p"] = report.spearman_p;
    j["pearson_r"] = report.pearson_r;
    j["pearson_p"] = report.pearson_p;
    j["rmse"] = report.rmse;
    j["count_valued"] = report.count_valued;
    j["dropped_predicted"] = report.dropped_predicted;
    j["dropped_gold"] = report.dropped_gold;
    return j.dump(indent);
}

std::string to_text(const MetricsReport& report) {
    std::ostringstream out;
    out << "method:            " << report.method_name << '\n'
        << "config digest:     " << report.config_digest << '\n'
        << "n:                 " << report.n << '\n'
        << "spearman rho:      " << detail::format_number(report.spearman_rho) << '\n'
        << "spearman p:        " << detail::format_number(report.spearman_p) << '\n'
        << "pearson r:         " << detail::format_number(report.pearson_r) << '\n'
        << "pearson p:         " << detail::format_number(report.pearson_p) << '\n'
        << "rmse:              " << detail::format_number(report.rmse) << (report.count_valued ? " (normalized counts)" : "")
        << '\n'
        << "dropped predicted: " << report.dropped_predicted << '\n'
        << "dropped gold:      " << report.dropped_gold << '\n';
    return out.str();
}

std::string table_header() {
    return "| Method | Spearman's rho | rho-significance | Pearson's r | r-significance | RMSE |\n"
           "|---|---|---|---|---|---|";
}

std::string table_row(const MetricsReport& report) {
    return "| " + report.method_name + " | " + fixed4(report.spearman_rho) + " | " + sci(report.spearman_p) + " | " +
           fixed4(report.pearson_r) + " | " + sci(report.pearson_p) + " | " + fixed4(report.rmse) + " |";
}

}  // namespace inform
