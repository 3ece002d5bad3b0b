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

#include <stdexcept>
#include <string>

namespace inform {

// Every exception thrown by the library derives from Error. The C API maps
// each subclass onto one inform_status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Malformed input file; `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Input parsed fine but violates a data invariant (duplicate id, unmatched target, ...).
class DataError : public Error {
public:
    using Error::Error;
};

// Correlation over a constant vector.
class UndefinedCorrelation : public Error {
public:
    using Error::Error;
};

// Network failure talking to a prediction backend; eligible for retry.
class TransportError : public Error {
public:
    using Error::Error;
};

// The backend answered, but not according to the wire protocol. Never retried.
class ProtocolError : public Error {
public:
    using Error::Error;
};

// The backend answered but left nothing usable to score.
class EmptyPredictions : public Error {
public:
    using Error::Error;
};

}  // namespace inform
