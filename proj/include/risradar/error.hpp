// SPDX-License-Identifier: Apache-2.0
//
// risradar: RIS-assisted OFDM radar interference mitigation toolkit
// Copyright (C) 2026 The risradar authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISRADAR_ERROR_HPP
#define RISRADAR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace risradar {

enum class ErrorCode {
    InputDomain,     // argument outside its mathematical domain
    Shape,           // dimension mismatch between operands
    DegenerateInput, // e.g. an all-zero pattern that cannot be normalized
    TrainingFailure, // loss became non-finite
    Parse,           // malformed text input
    Io,              // file could not be opened or written
    InvalidScenario, // scenario file failed validation
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class TrainingError : public Error {
public:
    TrainingError(std::size_t iteration, const std::string& what)
        : Error(ErrorCode::TrainingFailure, what), iteration_(iteration) {}

    std::size_t iteration() const noexcept { return iteration_; }

private:
    std::size_t iteration_;
};

} // namespace risradar

#endif
