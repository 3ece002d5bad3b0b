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

// Internal helpers for the delimited-text formats.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace inform::detail {

struct CsvRecord {
    std::size_t line = 0;  // line on which the record starts
    std::vector<std::string> fields;
};

// RFC 4180 records: quoted fields may contain delimiters, doubled quotes and
// newlines. Blank lines are skipped.
std::vector<CsvRecord> read_delimited(std::istream& in, char delimiter = ',');

std::string csv_escape(std::string_view field);

// Shortest decimal form that round-trips.
std::string format_number(double value);

bool parse_double(std::string_view s, double& out);
bool parse_int(std::string_view s, int& out);

}  // namespace inform::detail
