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
#include <span>
#include <string>
#include <vector>

#include "inform/scores.hpp"

namespace inform {

struct Correlation {
    double coefficient = 0;
    double p_value = 1;  // two-tailed, Student-t approximation with n - 2 degrees of freedom
};

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> fractional_ranks(std::span<const double> values);

// Both throw InvalidArgument on a length mismatch or n < 3 and
// UndefinedCorrelation when either side is constant. |coefficient| = 1 gives p = 0.
Correlation pearson(std::span<const double> x, std::span<const double> y);
Correlation spearman(std::span<const double> x, std::span<const double> y);

// Throws InvalidArgument on a length mismatch or empty input.
double rmse(std::span<const double> x, std::span<const double> y);

// I_x(a, b) by continued fraction. `one_minus_x` is passed separately so
// callers can supply it without cancellation.
double regularized_incomplete_beta(double a, double b, double x, double one_minus_x);

// 2 * (1 - CDF_t(|t|; df)). Throws InvalidArgument for df < 1.
double student_t_two_tailed_p(double t, int df);

struct MetricsReport {
    std::size_t n = 0;
    double spearman_rho = 0;
    double spearman_p = 1;
    double pearson_r = 0;
    double pearson_p = 1;
    double rmse = 0;
    std::string method_name;
    std::string config_digest;
    std::size_t dropped_predicted = 0;  // predictions with no gold partner
    std::size_t dropped_gold = 0;       // gold scores with no prediction
    bool count_valued = false;          // RMSE computed on min-max normalized predictions
};

// Inner join on (story_id, target_index). Throws DataError on an empty join,
// a join smaller than 3, or duplicate keys on either side.
MetricsReport evaluate(std::span<const InformativenessScore> predicted, std::span<const InformativenessScore> gold,
                       std::string method_name, std::string config_digest, bool count_valued = false);

std::string to_json(const MetricsReport& report, int indent = 2);
std::string to_text(const MetricsReport& report);
// Spearman | rho-significance | Pearson | r-significance | RMSE.
std::string table_header();
std::string table_row(const MetricsReport& report);

}  // namespace inform
