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

#ifndef SWAPCHAIN_GHZ_H
#define SWAPCHAIN_GHZ_H

#include <array>

#include "swapchain/schmidt.h"

namespace swapchain {

// Alice holds particle 1 of link 1 and particle 3 of link 2 and measures
// the degenerate projectors F1 = |00><00| + |11><11| and
// F2 = |01><01| + |10><10| on (1, 3). Either outcome leaves a
// two-term three-party state that local filtering turns into GHZ.

enum class GhzOutcome { F1, F2 };

struct GhzBranch {
    GhzOutcome which = GhzOutcome::F1;
    double probability = 0;
    /// Squared amplitudes of the two surviving terms, descending.
    std::array<double, 2> coeffs{};
    /// Filtering success probability: 2 * min(coeffs) / sum(coeffs),
    /// zero for an impossible branch.
    double ghz_prob_given_branch = 0;
};

/// Both measurement branches. Throws DimensionMismatch unless both links
/// are two-dimensional.
std::array<GhzBranch, 2> ghz_branches(const SchmidtVector &s1, const SchmidtVector &s2);

/// Overall GHZ probability, 2 * min(lambda_1 of s1, lambda_1 of s2).
/// Cross-checked against the branch sum (InternalMismatch beyond tol.eq).
double ghz_probability(const SchmidtVector &s1, const SchmidtVector &s2, const Tolerances &tol = {});

}  // namespace swapchain

#endif
