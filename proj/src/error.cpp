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

#include "chordal/error.hpp"

namespace chordal {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kInsufficientConnectivity: return "InsufficientConnectivity";
    case ErrorCode::kNotChordal: return "NotChordal";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNot2Connected: return "Not2Connected";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kCaptureViolation: return "CaptureViolation";
    case ErrorCode::kSpanDeficit: return "SpanDeficit";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotPairwiseIntersecting: return "NotPairwiseIntersecting";
    case ErrorCode::kHostTooSmall: return "HostTooSmall";
    case ErrorCode::kEmptyBag: return "EmptyBag";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

bool IsInputError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph:
    case ErrorCode::kNotChordal:
    case ErrorCode::kNotConnected:
    case ErrorCode::kNot2Connected:
    case ErrorCode::kNotATree:
    case ErrorCode::kTooLarge:
    case ErrorCode::kTooSmall:
    case ErrorCode::kHostTooSmall:
    case ErrorCode::kParseError:
    case ErrorCode::kInsufficientConnectivity:
      return true;
    default:
      return false;
  }
}

}  // namespace chordal
