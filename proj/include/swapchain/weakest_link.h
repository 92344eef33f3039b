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

#ifndef SWAPCHAIN_WEAKEST_LINK_H
#define SWAPCHAIN_WEAKEST_LINK_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "swapchain/chain.h"
#include "swapchain/schmidt.h"

namespace swapchain {

/// Two index tuples adjacent in base-m order whose link products go up
/// instead of down. Tuples list i_1..i_N, i_1 most significant.
struct OrderingWitness {
    std::vector<std::size_t> earlier;
    std::vector<std::size_t> later;
    std::uint64_t earlier_value = 0;
    std::uint64_t later_value = 0;
    double earlier_product = 0;
    double later_product = 0;
};

struct ConditionReport {
    /// Products prod_n lambda^(n)_{i_n} are non-increasing (within
    /// tol.ord) as the tuple runs through base-m order.
    bool holds = false;
    /// First adjacent inversion; set exactly when holds is false.
    std::optional<OrderingWitness> witness;
    /// When holds is false: the first link order (0-based, new position k
    /// holds old link order[k]) whose reordered chain passes.
    std::optional<std::vector<std::size_t>> permutation_variant;
    /// Reorderings examined; the search stops at Limits::max_permutations.
    std::uint64_t permutations_tried = 0;
};

/// Returns the first inversion of the base-m ordering, or nullopt if the
/// product sequence is non-increasing. Throws TooLarge above
/// Limits::max_condition_tuples.
std::optional<OrderingWitness> find_ordering_violation(const Chain &chain, const Tolerances &tol = {},
                                                       const Limits &limits = {});

/// Full condition check. When the given order fails, link orders are
/// tried weakest-link-first: links are ranked by ascending e_max and the
/// rank permutations are walked in lexicographic order.
ConditionReport check_condition(const Chain &chain, const Tolerances &tol = {}, const Limits &limits = {});

struct WeakestLink {
    std::size_t index = 0;
    double e_max = 0;
};

/// Link with the smallest e_max; ties go to the smallest index.
WeakestLink weakest_link_of(const Chain &chain, const Tolerances &tol = {});

/// Exponents eta_1..eta_N and base b for the family
/// Lambda^(n)_i = b^((m-1-i) * eta_n), normalized per link.
struct EtaProfile {
    std::vector<double> eta;
    double base = 2.0;
};

/// eta_n = m^(N-n): each link decays m times faster than the next.
EtaProfile geometric_profile(std::size_t m, std::size_t n_links, double base);

/// eta_n >= (m-1) * eta_{n+1} for every n. Necessary but not sufficient
/// for the family to satisfy the ordering condition once N >= 3.
bool satisfies_adjacent_eta_bound(const EtaProfile &profile, std::size_t m);

/// eta_n >= (m-1) * sum_{j>n} eta_j for every n. Necessary and sufficient
/// for the family to satisfy the ordering condition.
bool satisfies_tail_eta_bound(const EtaProfile &profile, std::size_t m);

/// Builds the family chain without any admissibility check. Throws
/// InadmissibleProfile for negative or non-finite eta, or base <= 1.
Chain family_chain(std::size_t m, const EtaProfile &profile);

/// family_chain guarded by the tail bound and by a post-check with
/// check_condition; either failing throws InadmissibleProfile.
Chain generate_family(std::size_t m, std::size_t n_links, const EtaProfile &profile, const Tolerances &tol = {},
                      const Limits &limits = {});

struct Counterexample {
    Chain chain;
    std::uint64_t trial = 0;
    double average_emax = 0;
    WeakestLink weakest;
    /// weakest.e_max - average_emax, > 10 * tol.eq.
    double gap = 0;
};

/// Samples `trials` random chains (trial t drawn from substream(seed, t))
/// and returns the first that fails the ordering condition and
/// concentrates measurably less than its weakest link.
/// Throws InvalidArgument when trials == 0.
std::optional<Counterexample> find_counterexample(std::size_t m, std::size_t n_links, std::uint64_t trials,
                                                  std::uint64_t seed, const Tolerances &tol = {},
                                                  const Limits &limits = {});

}  // namespace swapchain

#endif
