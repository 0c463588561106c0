// Copyright 2026 The vspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace vspin {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value is out of its documented domain (NaN, wrong sign, ...).
struct invalid_parameter_error : error {
    using error::error;
};

/// An internal or documented precondition does not hold (non-Hermitian input,
/// basis-tag mismatch, non-unitary propagator, ...).
struct contract_error : error {
    using error::error;
};

/// A pulse carrier matches no allowed transition (or matches more than one).
struct no_matching_line_error : error {
    using error::error;
};

/// Simultaneous tones collide (shared level, mismatched durations, duplicate carrier).
struct conflict_error : error {
    using error::error;
};

/// A configured resource cap (integration step budget) would be exceeded.
struct resource_limit_error : error {
    using error::error;
};

/// Bad parameter file. `key` names the offending or missing key when known.
struct config_error : error {
    config_error(const std::string &what, std::string key_name = {})
        : error(what), key(std::move(key_name)) {}
    std::string key;
};

/// Bad circuit file. `line` is the 1-based offending line, 0 if not line-specific.
struct circuit_parse_error : error {
    circuit_parse_error(const std::string &what, int line_number = 0)
        : error(what), line(line_number) {}
    int line;
};

}  // namespace vspin
