// Copyright 2026 The mcgraph Authors.
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

#include "mcgraph/error.hpp"

namespace mcg {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kEdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorCode::kEmptyShore: return "EmptyShore";
    case ErrorCode::kMalformedGraph6: return "MalformedGraph6";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kNotMatchingCovered: return "NotMatchingCovered";
    case ErrorCode::kNotABarrier: return "NotABarrier";
    case ErrorCode::kNotAComponent: return "NotAComponent";
    case ErrorCode::kNotA2Separation: return "NotA2Separation";
    case ErrorCode::kNotBipartiteMC: return "NotBipartiteMC";
    case ErrorCode::kBarrierTrivial: return "BarrierTrivial";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kBadSpec: return "BadSpec";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kNotABijection: return "NotABijection";
    case ErrorCode::kNotABrick: return "NotABrick";
    case ErrorCode::kNotOddWheels: return "NotOddWheels";
    case ErrorCode::kSpliceInvalid: return "SpliceInvalid";
    case ErrorCode::kConditionViolated: return "ConditionViolated";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownCampaign: return "UnknownCampaign";
  }
  return "Unknown";
}

}  // namespace mcg
