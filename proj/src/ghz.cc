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

#include "swapchain/ghz.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "swapchain/error.h"

namespace swapchain {

namespace {

GhzBranch make_branch(GhzOutcome which, double a, double b) {
    GhzBranch br;
    br.which = which;
    br.coeffs = {std::max(a, b), std::min(a, b)};
    br.probability = a + b;
    br.ghz_prob_given_branch = br.probability > 0 ? 2 * br.coeffs[1] / br.probability : 0.0;
    return br;
}

}  // namespace

std::array<GhzBranch, 2> ghz_branches(const SchmidtVector &s1, const SchmidtVector &s2) {
    if (s1.dim() != 2 || s2.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "GHZ construction needs two qubit links");
    }
    return {
        make_branch(GhzOutcome::F1, s1[0] * s2[0], s1[1] * s2[1]),
        make_branch(GhzOutcome::F2, s1[0] * s2[1], s1[1] * s2[0]),
    };
}

double ghz_probability(const SchmidtVector &s1, const SchmidtVector &s2, const Tolerances &tol) {
    // The weaker link (larger lambda_0) plays the role of link 1.
    const SchmidtVector &weak = s1[0] >= s2[0] ? s1 : s2;
    const SchmidtVector &strong = s1[0] >= s2[0] ? s2 : s1;
    auto branches = ghz_branches(weak, strong);
    double from_branches = 0;
    for (const auto &br : branches) {
        from_branches += br.probability * br.ghz_prob_given_branch;
    }
    const double closed_form = 2 * std::min(s1[1], s2[1]);
    if (std::abs(closed_form - from_branches) > tol.eq) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "GHZ probability routes disagree: %.17g vs %.17g", closed_form,
                      from_branches);
        throw Error(ErrorCode::InternalMismatch, buf);
    }
    return closed_form;
}

}  // namespace swapchain
