// Copyright 2026 The Chordal Transversals Authors
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

#ifndef CHORDAL_ERROR_HPP_
#define CHORDAL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace chordal {

enum class ErrorCode {
  kInvalidGraph,
  kInsufficientConnectivity,
  kNotChordal,
  kNotConnected,
  kNot2Connected,
  kNotATree,
  kPreconditionViolated,
  kCaptureViolation,
  kSpanDeficit,
  kTooSmall,
  kTooLarge,
  kNotPairwiseIntersecting,
  kHostTooSmall,
  kEmptyBag,
  kGenerationFailed,
  kInvariantViolation,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception. Codes map one-to-one onto
// the error names used in reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// True for errors caused by the caller's input rather than by a broken
// internal invariant.
bool IsInputError(ErrorCode code);

}  // namespace chordal

#endif  // CHORDAL_ERROR_HPP_
