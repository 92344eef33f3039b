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

#ifndef SWAPCHAIN_ERROR_H
#define SWAPCHAIN_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace swapchain {

enum class ErrorCode {
    EmptyInput,
    NegativeWeight,
    NotNormalized,
    InvalidTolerances,
    DimensionMismatch,
    EmptyChain,
    TooLarge,
    InvalidPermutation,
    InadmissibleProfile,
    InvalidArgument,
    InvalidPair,
    ZeroMatrix,
    ShapeMismatch,
    UnsupportedFormat,
    ParseError,
    /// Two independently computed routes to the same quantity disagreed.
    InternalMismatch,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace swapchain

#endif
