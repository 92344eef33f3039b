// Copyright 2026 The swapchain Authors
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

#include "swapchain/error.h"

namespace swapchain {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput:
            return "EmptyInput";
        case ErrorCode::NegativeWeight:
            return "NegativeWeight";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::InvalidTolerances:
            return "InvalidTolerances";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::EmptyChain:
            return "EmptyChain";
        case ErrorCode::TooLarge:
            return "TooLarge";
        case ErrorCode::InvalidPermutation:
            return "InvalidPermutation";
        case ErrorCode::InadmissibleProfile:
            return "InadmissibleProfile";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::InvalidPair:
            return "InvalidPair";
        case ErrorCode::ZeroMatrix:
            return "ZeroMatrix";
        case ErrorCode::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::UnsupportedFormat:
            return "UnsupportedFormat";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::InternalMismatch:
            return "InternalMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace swapchain
