// Copyright 2026 The liecx Authors
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

#ifndef LIECX_ERRORS_HPP
#define LIECX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liecx {

/// Base class for all liecx-specific failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A continued-fraction digit stream ran out before the computation could
/// be decided (finite head, no periodic tail).
class CfExhaustedError : public Error {
 public:
  explicit CfExhaustedError(const std::string& msg) : Error(msg) {}
};

/// A factor-set saturation protocol hit its prefix cap before certifying.
class SaturationError : public Error {
 public:
  explicit SaturationError(const std::string& msg) : Error(msg) {}
};

/// Two computation routes that must agree produced different values.
class DisagreementError : public Error {
 public:
  explicit DisagreementError(const std::string& msg) : Error(msg) {}
};

}  // namespace liecx

#endif  // LIECX_ERRORS_HPP
