// Copyright 2026 The Rebit Authors
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

namespace rebit {

/// Base class for every error raised by the library.
class RebitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A matrix or vector that does not describe a rebit state.
class InvalidStateError : public RebitError {
  public:
    using RebitError::RebitError;
};

/// Malformed arguments: non-finite entries, wrong structure, out-of-range parameters.
class InvalidArgumentError : public RebitError {
  public:
    using RebitError::RebitError;
};

/// A channel pushed a state outside the Bloch disk.
class NotPositiveError : public RebitError {
  public:
    explicit NotPositiveError(double norm)
        : RebitError("output Bloch vector has norm " + std::to_string(norm) + " > 1"), norm_(norm) {}

    double norm() const { return norm_; }

  private:
    double norm_;
};

/// Operation only defined for completely positive channels.
class NotCompletelyPositiveError : public RebitError {
  public:
    using RebitError::RebitError;
};

}  // namespace rebit
