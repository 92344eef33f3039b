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

#ifndef SWAPCHAIN_VERIFY_H
#define SWAPCHAIN_VERIFY_H

#include <string>
#include <vector>

#include "swapchain/chain.h"
#include "swapchain/schmidt.h"

namespace swapchain {

struct VerifyCheck {
    std::string name;
    double max_abs_diff = 0;
    double tolerance = 0;
    bool passed = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool passed() const;
    double worst_diff() const;
};

/// Tolerance for quantities the oracle must reproduce exactly up to
/// rounding (beta sweeps, GHZ amplitudes).
inline constexpr double kExactTolerance = 1e-12;

/// Runs every analytic module on the chain and compares it with the
/// brute-force simulator. Gamma outcomes, averages and distributions are
/// held to tol.eq; beta sweeps and GHZ branches to kExactTolerance.
/// Pair-swap checks run for N = 2, GHZ checks for m = 2, N = 2, and the
/// measurement-order check for N >= 3.
VerifyReport verify_chain(const Chain &chain, const Tolerances &tol = {}, const Limits &limits = {});

}  // namespace swapchain

#endif
