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

#ifndef SWAPCHAIN_BELLSWAP_H
#define SWAPCHAIN_BELLSWAP_H

#include <cstddef>
#include <optional>
#include <vector>

#include "swapchain/schmidt.h"

namespace swapchain {

/// Index of a generalized Bell state: alpha is the shift between the two
/// measured systems, beta the phase index. Both lie in [0, m).
struct BellLabel {
    std::size_t alpha = 0;
    std::size_t beta = 0;

    bool operator==(const BellLabel &) const = default;
};

/// One record of a Bell measurement on the inner particles of two links.
struct PairOutcome {
    BellLabel label;
    double probability = 0;
    /// Unnormalized Schmidt weights of the outer pair, sorted descending.
    /// They sum to m * probability.
    std::vector<double> products;
    /// Normalized outer-pair state; absent when probability is zero.
    std::optional<SchmidtVector> state;
};

/// Swaps entanglement between two m x m links by a generalized Bell
/// measurement on the inner pair. Returns all m^2 records in
/// lexicographic (alpha, beta) order.
///
/// For shift alpha the outer pair carries unnormalized weights
/// s1[l] * s2[(l + alpha) mod m]; beta only contributes a phase, so every
/// beta at fixed alpha yields the same record.
std::vector<PairOutcome> swap_pair(const SchmidtVector &s1, const SchmidtVector &s2);

/// Per-alpha view of swap_pair: one entry per alpha with beta folded in
/// (probability summed over beta, label.beta = 0).
std::vector<PairOutcome> collapse_beta(const std::vector<PairOutcome> &outcomes, std::size_t m);

/// Average concentratable entanglement after the swap.
///
/// Evaluated twice: as the box-weighted sum over the unnormalized sorted
/// products (probabilities cancel), and as the probability-weighted mean
/// of e_max over the records. Throws InternalMismatch if they disagree by
/// more than tol.eq; returns the first.
double average_emax_pair(const SchmidtVector &s1, const SchmidtVector &s2, const Tolerances &tol = {});

/// Probability-weighted mixture of the per-record concentration
/// distributions. avg_e is checked against average_emax_pair.
ConcentrationDistribution pair_distribution(const SchmidtVector &s1, const SchmidtVector &s2,
                                            const Tolerances &tol = {});

}  // namespace swapchain

#endif
