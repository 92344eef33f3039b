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

#include "swapchain/chain.h"

#include <cmath>

#include "swapchain/bellswap.h"
#include "swapchain/random.h"
#include "test_util.h"

using namespace swapchain;
using swapchain::testing::chain_of;
using swapchain::testing::expect_error;
using swapchain::testing::expect_weights_near;

TEST(chain, construction_errors) {
    expect_error(ErrorCode::EmptyChain, [] { Chain(std::vector<SchmidtVector>{}); });
    expect_error(ErrorCode::DimensionMismatch,
                 [] { Chain({maximally_entangled(2), maximally_entangled(3)}); });
}

TEST(chain, permuted) {
    Chain c = chain_of({{0.8, 0.2}, {0.7, 0.3}, {0.6, 0.4}});
    Chain p = c.permuted({2, 0, 1});
    EXPECT_EQ(p.link(0), c.link(2));
    EXPECT_EQ(p.link(1), c.link(0));
    EXPECT_EQ(p.link(2), c.link(1));
    expect_error(ErrorCode::InvalidPermutation, [&] { c.permuted({0, 1}); });
    expect_error(ErrorCode::InvalidPermutation, [&] { c.permuted({0, 0, 1}); });
    expect_error(ErrorCode::InvalidPermutation, [&] { c.permuted({0, 1, 3}); });
}

TEST(chain, checked_power) {
    EXPECT_EQ(checked_power(2, 10, 1024), 1024u);
    EXPECT_FALSE(checked_power(2, 11, 1024).has_value());
    EXPECT_EQ(checked_power(7, 0, 1), 1u);
    EXPECT_FALSE(checked_power(1u << 20, 4, ~std::uint64_t{0}).has_value());
}

TEST(chain, single_link_is_itself) {
    Chain c = chain_of({{0.8, 0.2}});
    auto out = swap_chain(c);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_TRUE(out[0].gamma.empty());
    EXPECT_EQ(out[0].probability, 1.0);
    EXPECT_EQ(*out[0].state, c.link(0));
    EXPECT_NEAR(average_emax_chain(c), 0.4, 1e-15);
}

TEST(chain, maximal_qubit_pair) {
    auto out = swap_chain(Chain({maximally_entangled(2), maximally_entangled(2)}));
    ASSERT_EQ(out.size(), 2u);
    for (const auto &o : out) {
        EXPECT_NEAR(o.probability, 0.5, 1e-15);
        expect_weights_near(o.state->weights(), {0.5, 0.5}, 1e-15);
        EXPECT_EQ(o.multiplicity, 2u);
    }
}

TEST(chain, qubit_fixture) {
    Chain c = chain_of({{0.8, 0.2}, {0.7, 0.3}});
    auto out = swap_chain(c);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0].gamma, std::vector<std::size_t>{0});
    EXPECT_EQ(out[1].gamma, std::vector<std::size_t>{1});
    EXPECT_NEAR(out[0].probability, 0.62, 1e-15);
    EXPECT_NEAR(out[1].probability, 0.38, 1e-15);
    expect_weights_near(out[0].state->weights(), {0.903225806452, 0.0967741935484}, 1e-12);
    expect_weights_near(out[1].state->weights(), {0.631578947368, 0.368421052632}, 1e-12);
    EXPECT_NEAR(average_emax_chain(c), 0.4, 1e-12);
}

TEST(chain, three_weak_qubits_fixture) {
    Chain c = chain_of({{0.9, 0.1}, {0.9, 0.1}, {0.9, 0.1}});
    auto out = swap_chain(c);
    ASSERT_EQ(out.size(), 4u);
    const std::vector<std::vector<std::size_t>> gammas = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const std::vector<std::vector<double>> products = {
        {0.729, 0.001}, {0.081, 0.009}, {0.081, 0.009}, {0.081, 0.009}};
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(out[k].gamma, gammas[k]);
        EXPECT_EQ(out[k].multiplicity, 4u);
        expect_weights_near(out[k].products, products[k], 1e-15);
    }
    EXPECT_NEAR(average_emax_chain(c), 0.056, 1e-12);
    expect_weights_near(chain_distribution(c).p, {0.944, 0.056}, 1e-12);
}

TEST(chain, maximal_links_reach_log2_m) {
    for (std::size_t m = 2; m <= 4; ++m) {
        for (std::size_t n = 1; n <= 4; ++n) {
            Chain c(std::vector<SchmidtVector>(n, maximally_entangled(m)));
            EXPECT_NEAR(average_emax_chain(c), std::log2(static_cast<double>(m)), 1e-12) << m << " " << n;
        }
    }
}

TEST(chain, distribution_fixtures) {
    expect_weights_near(chain_distribution(Chain({maximally_entangled(2), maximally_entangled(2)})).p, {0, 1},
                        1e-12);
    expect_weights_near(chain_distribution(chain_of({{0.8, 0.2}, {0.5, 0.5}})).p, {0.6, 0.4}, 1e-12);
}

TEST(chain, order_invariance_fixtures) {
    auto two = order_invariance_report(chain_of({{0.8, 0.2}, {0.7, 0.3}}), all_orders(2));
    ASSERT_EQ(two.size(), 2u);
    for (const auto &r : two) {
        EXPECT_NEAR(r.average_emax, 0.4, 1e-12);
    }
    auto three = order_invariance_report(chain_of({{0.9, 0.1}, {0.9, 0.1}, {0.9, 0.1}}), all_orders(3));
    ASSERT_EQ(three.size(), 6u);
    for (const auto &r : three) {
        EXPECT_NEAR(r.average_emax, 0.056, 1e-12);
    }
    auto mixed = order_invariance_report(chain_of({{0.8, 0.2}, {0.7, 0.3}, {0.6, 0.4}}), all_orders(3));
    for (const auto &r : mixed) {
        EXPECT_NEAR(r.average_emax, mixed[0].average_emax, 1e-10);
    }
}

TEST(chain, all_orders) {
    EXPECT_EQ(all_orders(1).size(), 1u);
    auto o = all_orders(3);
    ASSERT_EQ(o.size(), 6u);
    EXPECT_EQ(o.front(), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(o.back(), (std::vector<std::size_t>{2, 1, 0}));
}

TEST(chain, outcome_limit) {
    Chain c(std::vector<SchmidtVector>(5, maximally_entangled(3)));
    Limits tight;
    tight.max_outcomes = 80;
    expect_error(ErrorCode::TooLarge, [&] { swap_chain(c, tight); });
    tight.max_outcomes = 81;
    EXPECT_EQ(swap_chain(c, tight).size(), 81u);
}

TEST(chain, two_links_reproduce_pair_swap) {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        auto rng = substream(31, trial);
        const std::size_t m = 2 + trial % 3;
        Chain c = random_chain(m, 2, rng);
        auto per_alpha = collapse_beta(swap_pair(c.link(0), c.link(1)), m);
        auto out = swap_chain(c);
        ASSERT_EQ(out.size(), m);
        for (std::size_t a = 0; a < m; ++a) {
            EXPECT_NEAR(out[a].probability, per_alpha[a].probability, 1e-15);
            EXPECT_EQ(out[a].state, per_alpha[a].state);
        }
        EXPECT_NEAR(average_emax_chain(c), average_emax_pair(c.link(0), c.link(1)), 1e-12);
    }
}

TEST(chain, random_chain_properties) {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        auto rng = substream(41, trial);
        const std::size_t m = 2 + trial % 3;
        const std::size_t n = 1 + (trial / 3) % 4;
        Chain c = random_chain(m, n, rng);
        auto out = swap_chain(c);
        double total = 0;
        for (const auto &o : out) {
            total += o.probability;
        }
        EXPECT_NEAR(total, 1.0, 1e-10);

        const double avg = average_emax_chain(c);
        EXPECT_GE(avg, -1e-15);
        EXPECT_NEAR(chain_distribution(c).avg_e, avg, 1e-10);
        if (n <= 3) {
            for (const auto &r : order_invariance_report(c, all_orders(n))) {
                EXPECT_NEAR(r.average_emax, avg, 1e-10);
            }
        }
        if (m == 2 && n == 2) {
            EXPECT_NEAR(avg, 2 * std::min(c.link(0)[1], c.link(1)[1]), 1e-10);
        }
    }
}
