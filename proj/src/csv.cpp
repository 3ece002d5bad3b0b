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

#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <iterator>

#include "inform/errors.hpp"
#include "inform/text.hpp"

namespace inform::detail {

std::vector<CsvRecord> read_delimited(std::istream& in, char delimiter) {
    const std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::vector<CsvRecord> records;
    CsvRecord rec;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    std::size_t line = 1;
    rec.line = 1;

    auto end_record = [&] {
        if (field_started || !field.empty() || !rec.fields.empty()) {
            rec.fields.push_back(std::move(field));
            bool blank = rec.fields.size() == 1 && trim(rec.fields[0]).empty();
            if (!blank) records.push_back(std::move(rec));
        }
        rec = CsvRecord{};
        field.clear();
        field_started = false;
    };

    for (std::size_t i = 0; i < data.size(); ++i) {
        const char c = data[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < data.size() && data[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        if (c == '"' && field.empty()) {
            in_quotes = true;
            field_started = true;
        } else if (c == delimiter) {
            rec.fields.push_back(std::move(field));
            field.clear();
            field_started = true;
        } else if (c == '\n') {
            end_record();
            ++line;
            rec.line = line;
        } else if (c == '\r' && i + 1 < data.size() && data[i + 1] == '\n') {
            // CRLF: the '\n' ends the record
        } else {
            field += c;
        }
    }
    if (in_quotes) throw ParseError("unterminated quoted field", rec.line);
    end_record();
    return records;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_number(double value) {
    if (value == 0) return "0";  // also folds -0
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

bool parse_double(std::string_view s, double& out) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

bool parse_int(std::string_view s, int& out) {
    s = trim(s);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace inform::detail
