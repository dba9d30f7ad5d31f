// Copyright 2026 The weaklab Authors
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

#include "weaklab/error.hpp"

namespace weaklab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidConfig:
        return "InvalidConfig";
    case ErrorCode::BasisMismatch:
        return "BasisMismatch";
    case ErrorCode::NotHermitian:
        return "NotHermitian";
    case ErrorCode::IncompleteBasis:
        return "IncompleteBasis";
    case ErrorCode::OrthogonalSelection:
        return "OrthogonalSelection";
    case ErrorCode::ArityMismatch:
        return "ArityMismatch";
    case ErrorCode::GridResolutionError:
        return "GridResolutionError";
    case ErrorCode::SelectionAnnihilated:
        return "SelectionAnnihilated";
    case ErrorCode::NoAcceptedTrials:
        return "NoAcceptedTrials";
    case ErrorCode::AlphaOutOfRange:
        return "AlphaOutOfRange";
    case ErrorCode::TruncationUnsafe:
        return "TruncationUnsafe";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void raise(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

} // namespace weaklab
