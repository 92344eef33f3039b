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

#include <cmath>

#include "swapchain/oracle.h"
#include "swapchain/random.h"
#include "test_util.h"

using namespace swapchain;
using swapchain::testing::expect_error;

TEST(ghz, maximal_links) {
    auto h = maximally_entangled(2);
    auto br = ghz_branches(h, h);
    for (const auto &b : br) {
        EXPECT_NEAR(b.probability, 0.5, 1e-15);
        EXPECT_NEAR(b.ghz_prob_given_branch, 1.0, 1e-15);
    }
    EXPECT_NEAR(ghz_probability(h, h), 1.0, 1e-15);
}

TEST(ghz, branch_fixture) {
    auto br = ghz_branches(make_schmidt({0.7, 0.3}), make_schmidt({0.6, 0.4}));
    EXPECT_EQ(br[0].which, GhzOutcome::F1);
    EXPECT_NEAR(br[0].probability, 0.54, 1e-15);
    EXPECT_NEAR(br[0].coeffs[0], 0.42, 1e-15);
    EXPECT_NEAR(br[0].coeffs[1], 0.12, 1e-15);
    EXPECT_EQ(br[1].which, GhzOutcome::F2);
    EXPECT_NEAR(br[1].probability, 0.46, 1e-15);
    EXPECT_NEAR(br[1].coeffs[0], 0.28, 1e-15);
    EXPECT_NEAR(br[1].coeffs[1], 0.18, 1e-15);
    EXPECT_NEAR(ghz_probability(make_schmidt({0.7, 0.3}), make_schmidt({0.6, 0.4})), 0.6, 1e-12);
}

TEST(ghz, product_state_input) {
    auto br = ghz_branches(make_schmidt({1.0, 0.0}), make_schmidt({0.6, 0.4}));
    EXPECT_NEAR(br[0].probability, 0.6, 1e-15);
    EXPECT_EQ(br[0].ghz_prob_given_branch, 0.0);
    EXPECT_EQ(ghz_probability(make_schmidt({1.0, 0.0}), make_schmidt({0.6, 0.4})), 0.0);
}

TEST(ghz, teleport_like_fixture) {
    EXPECT_NEAR(ghz_probability(make_schmidt({0.9, 0.1}), maximally_entangled(2)), 0.2, 1e-12);
}

TEST(ghz, needs_qubits) {
    expect_error(ErrorCode::DimensionMismatch, [] { ghz_branches(maximally_entangled(3), maximally_entangled(3)); });
    expect_error(ErrorCode::DimensionMismatch, [] { ghz_probability(maximally_entangled(2), maximally_entangled(3)); });
}

TEST(ghz, random_pairs) {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        auto rng = substream(111, trial);
        auto s1 = random_schmidt(2, rng);
        auto s2 = random_schmidt(2, rng);
        const double p = ghz_probability(s1, s2);
        EXPECT_NEAR(p, ghz_probability(s2, s1), 1e-10);
        EXPECT_NEAR(p, 2 * std::min(s1[1], s2[1]), 1e-10);
        EXPECT_LE(p, std::min(e_max(s1), e_max(s2)) + 1e-10);

        auto br = ghz_branches(s1, s2);
        EXPECT_NEAR(br[0].probability + br[1].probability, 1.0, 1e-10);
        auto ob = oracle::oracle_ghz_branches(s1, s2);
        for (std::size_t k = 0; k < 2; ++k) {
            EXPECT_NEAR(br[k].probability, ob[k].probability, 1e-12);
            EXPECT_NEAR(br[k].coeffs[0], ob[k].coeffs[0], 1e-12);
            EXPECT_NEAR(br[k].coeffs[1], ob[k].coeffs[1], 1e-12);
        }
    }
}
