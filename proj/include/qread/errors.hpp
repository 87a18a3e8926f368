// Copyright 2026 The qread Authors
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

namespace qread {

/// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid value: non-finite input, out-of-range parameter, degenerate state.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Mode count, cutoff or matrix dimension mismatch between operands.
struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Numerical validity violated (negative radicand, non-PSD density, ...).
struct NumericError : Error {
  explicit NumericError(const std::string& what) : Error(what) {}
};

/// Analytic and Fock backends disagree beyond the configured tolerance.
struct CrossCheckError : Error {
  explicit CrossCheckError(const std::string& what) : Error(what) {}
};

/// Destination not writable / input not readable or malformed.
struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace qread
