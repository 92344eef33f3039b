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

#ifndef SWAPCHAIN_CHAIN_H
#define SWAPCHAIN_CHAIN_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "swapchain/schmidt.h"

namespace swapchain {

/// Size guards for the exhaustive enumerations. Every enumeration in the
/// library refuses to start (TooLarge) rather than run past these.
struct Limits {
    /// m^(N-1) gamma outcomes in swap_chain.
    std::uint64_t max_outcomes = 1'000'000;
    /// m^N index tuples in check_condition.
    std::uint64_t max_condition_tuples = 1'000'000;
    /// m^(2N) amplitudes in the oracle state vector.
    std::uint64_t max_amplitudes = std::uint64_t{1} << 24;
    /// Link orderings tried when searching for a permuted condition.
    std::uint64_t max_permutations = 40'320;
};

/// m^k, or nullopt if it exceeds `cap`.
std::optional<std::uint64_t> checked_power(std::uint64_t m, std::uint64_t k, std::uint64_t cap);

/// N entangled pairs shared pairwise along a line; link n connects
/// particles 2n and 2n+1 (0-based). All links share one dimension m.
class Chain {
   public:
    /// Throws EmptyChain for no links, DimensionMismatch for mixed m.
    explicit Chain(std::vector<SchmidtVector> links);

    std::size_t dim() const {
        return links_.front().dim();
    }
    std::size_t size() const {
        return links_.size();
    }
    const SchmidtVector &link(std::size_t n) const {
        return links_[n];
    }
    const std::vector<SchmidtVector> &links() const {
        return links_;
    }

    /// Chain whose link k is this chain's link order[k].
    /// Throws InvalidPermutation unless order is a permutation of 0..N-1.
    Chain permuted(const std::vector<std::size_t> &order) const;

   private:
    std::vector<SchmidtVector> links_;
};

/// One end-pair outcome of the swapping chain, keyed by the cumulative
/// shifts gamma_n = (alpha_1 + ... + alpha_n) mod m.
struct ChainOutcome {
    std::vector<std::size_t> gamma;
    /// Raw (alpha, beta) measurement records folded into this entry.
    std::uint64_t multiplicity = 1;
    /// Total over all folded records.
    double probability = 0;
    /// Unnormalized end-pair weights sorted descending; they sum to
    /// `probability`.
    std::vector<double> products;
    /// Normalized end-pair state; absent when probability is zero.
    std::optional<SchmidtVector> state;
};

/// Enumerates the m^(N-1) gamma outcomes in lexicographic order
/// (gamma_1 most significant). For each, the end pair carries
///   c_l = prod_n lambda^(n)_{(l + gamma_{n-1}) mod m},  gamma_0 = 0,
/// and the m^(N-1) phase records per gamma sum to probability sum_l c_l.
/// A one-link chain yields the link itself with probability 1.
std::vector<ChainOutcome> swap_chain(const Chain &chain, const Limits &limits = {});

/// Average concentratable entanglement between the chain ends, computed
/// from the unnormalized products and cross-checked against the
/// probability-weighted per-outcome e_max (InternalMismatch on
/// disagreement beyond tol.eq).
double average_emax_chain(const Chain &chain, const Tolerances &tol = {}, const Limits &limits = {});

ConcentrationDistribution chain_distribution(const Chain &chain, const Tolerances &tol = {},
                                             const Limits &limits = {});

struct OrderedAverage {
    std::vector<std::size_t> order;
    double average_emax = 0;
};

/// average_emax_chain for each reordering of the links. The caller
/// compares the values; the report only computes them.
std::vector<OrderedAverage> order_invariance_report(const Chain &chain,
                                                    const std::vector<std::vector<std::size_t>> &orders,
                                                    const Tolerances &tol = {}, const Limits &limits = {});

/// All N! orders of 0..N-1 in lexicographic order.
std::vector<std::vector<std::size_t>> all_orders(std::size_t n);

}  // namespace swapchain

#endif
