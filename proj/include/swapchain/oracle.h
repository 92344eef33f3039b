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

#ifndef SWAPCHAIN_ORACLE_H
#define SWAPCHAIN_ORACLE_H

// Brute-force reference simulator. Nothing here shares code with the
// analytic modules beyond the SchmidtVector/Chain value types: states are
// dense amplitude arrays, Bell projections are literal inner products
// with phases, and end-pair Schmidt weights come from an SVD.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swapchain/bellswap.h"
#include "swapchain/chain.h"
#include "swapchain/schmidt.h"

namespace swapchain::oracle {

using Amplitude = std::complex<double>;

/// Pure state of `num_systems` m-level systems. Basis index is the
/// base-m digit string with system 0 most significant.
struct StateVector {
    std::size_t num_systems = 0;
    std::size_t dim = 0;
    std::vector<Amplitude> amplitudes;

    double norm_squared() const;
    /// Digit of `system` in basis index `index`.
    std::size_t digit(std::uint64_t index, std::size_t system) const;
};

/// Square matrix of end-pair amplitudes: entries[a * dim + b] is the
/// coefficient of |a>|b>.
struct BipartiteMatrix {
    std::size_t dim = 0;
    std::vector<Amplitude> entries;
};

/// Tensor product of the chain's links, each sum_i sqrt(lambda_i)|ii>.
/// System 2n and 2n+1 belong to link n. Throws TooLarge beyond
/// Limits::max_amplitudes.
StateVector build_chain_state(const Chain &chain, const Limits &limits = {});

/// Generalized Bell state on two m-level systems as an m*m array indexed
/// [x * m + y]: (1/sqrt m) sum_l exp(2 pi i ((l beta) mod m) / m) |l, l+alpha>.
std::vector<Amplitude> bell_state(std::size_t m, BellLabel label);

struct Projection {
    /// Probability of this outcome given the input state.
    double probability = 0;
    /// Renormalized state of the remaining systems (order preserved);
    /// absent when the probability is zero.
    std::optional<StateVector> state;
};

/// Projects systems `first` and `second` onto a generalized Bell state and
/// traces them out. Throws InvalidPair for equal or out-of-range systems.
Projection project_bell(const StateVector &sv, std::size_t first, std::size_t second, BellLabel label);

/// Squared singular values of M, sorted and normalized.
/// Throws ZeroMatrix for an all-zero input.
SchmidtVector schmidt_of_bipartite(const BipartiteMatrix &matrix);

/// End-pair matrix of a two-system state.
BipartiteMatrix end_pair_matrix(const StateVector &sv);

/// One full measurement record of the chain: (alpha, beta) at every
/// intermediate site (site k measures systems 2k+1 and 2k+2).
struct Record {
    std::vector<BellLabel> labels;
    double probability = 0;
    std::optional<SchmidtVector> state;
};

/// All m^(2(N-1)) records, with sites measured in `site_order` (defaults
/// to 0, 1, ..., N-2). Records are listed with site 0's alpha most
/// significant, then its beta, then site 1, and so on.
std::vector<Record> measurement_records(const Chain &chain, const std::vector<std::size_t> &site_order = {},
                                        const Limits &limits = {});

/// Records aggregated by gamma (cumulative alpha mod m), in the same
/// layout as swap_chain. Each entry's state is taken from its most
/// probable record; `max_state_spread` reports the largest coefficient
/// difference between records folded into the same gamma.
struct OracleChainResult {
    std::vector<ChainOutcome> outcomes;
    double max_state_spread = 0;
    double max_beta_probability_spread = 0;
};

OracleChainResult oracle_swap_chain(const Chain &chain, const std::vector<std::size_t> &site_order = {},
                                    const Limits &limits = {});

/// Result of a projector onto a span of computational basis states.
struct SubspaceProjection {
    double probability = 0;
    /// Unnormalized projected state, same systems as the input.
    StateVector state;
};

/// Keeps amplitudes whose digits satisfy `accept` (called with the full
/// digit string of the basis index).
SubspaceProjection project_subspace(const StateVector &sv,
                                    const std::function<bool(const std::vector<std::size_t> &)> &accept);

/// Two-qubit-link GHZ setup: link 1 on particles (1,2), link 2 on (3,4),
/// Alice measures F1 = span{|00>,|11>} or F2 = span{|01>,|10>} on (1,3).
struct GhzOracleBranch {
    double probability = 0;
    /// Nonzero unnormalized amplitudes keyed by the basis label written
    /// in particle order 1,3,2,4 (e.g. "0000", "0101").
    std::vector<std::pair<std::string, Amplitude>> terms;
    /// The two largest squared amplitudes, descending.
    std::array<double, 2> coeffs{};
};

std::array<GhzOracleBranch, 2> oracle_ghz_branches(const SchmidtVector &s1, const SchmidtVector &s2);

}  // namespace swapchain::oracle

#endif
