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

#include "swapchain/weakest_link.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "swapchain/error.h"
#include "swapchain/random.h"

namespace swapchain {

std::optional<OrderingWitness> find_ordering_violation(const Chain &chain, const Tolerances &tol,
                                                       const Limits &limits) {
    const std::size_t m = chain.dim();
    const std::size_t n_links = chain.size();
    auto count = checked_power(m, n_links, limits.max_condition_tuples);
    if (!count) {
        throw Error(ErrorCode::TooLarge, "m^N index tuples exceed the condition-check limit");
    }

    std::vector<std::size_t> digits(n_links, 0);
    std::vector<std::size_t> prev_digits;
    double prev_product = 0;
    for (std::uint64_t v = 0; v < *count; ++v) {
        double product = 1;
        for (std::size_t n = 0; n < n_links; ++n) {
            product *= chain.link(n)[digits[n]];
        }
        if (v > 0 && prev_product < product - tol.ord) {
            return OrderingWitness{prev_digits, digits, v - 1, v, prev_product, product};
        }
        prev_digits = digits;
        prev_product = product;

        for (std::size_t k = n_links; k-- > 0;) {
            if (++digits[k] < m) {
                break;
            }
            digits[k] = 0;
        }
    }
    return std::nullopt;
}

ConditionReport check_condition(const Chain &chain, const Tolerances &tol, const Limits &limits) {
    ConditionReport report;
    report.witness = find_ordering_violation(chain, tol, limits);
    report.holds = !report.witness.has_value();
    if (report.holds) {
        return report;
    }

    const std::size_t n_links = chain.size();
    std::vector<std::size_t> by_strength(n_links);
    std::iota(by_strength.begin(), by_strength.end(), 0);
    std::vector<double> strengths(n_links);
    for (std::size_t n = 0; n < n_links; ++n) {
        strengths[n] = e_max(chain.link(n));
    }
    std::stable_sort(by_strength.begin(), by_strength.end(),
                     [&](std::size_t a, std::size_t b) { return strengths[a] < strengths[b]; });

    std::vector<std::size_t> ranks(n_links);
    std::iota(ranks.begin(), ranks.end(), 0);
    std::vector<std::size_t> order(n_links);
    do {
        if (report.permutations_tried >= limits.max_permutations) {
            break;
        }
        for (std::size_t k = 0; k < n_links; ++k) {
            order[k] = by_strength[ranks[k]];
        }
        if (std::is_sorted(order.begin(), order.end())) {
            continue;  // the given order, already known to fail
        }
        ++report.permutations_tried;
        if (!find_ordering_violation(chain.permuted(order), tol, limits)) {
            report.permutation_variant = order;
            break;
        }
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return report;
}

WeakestLink weakest_link_of(const Chain &chain, const Tolerances &tol) {
    WeakestLink best{0, e_max(chain.link(0))};
    for (std::size_t n = 1; n < chain.size(); ++n) {
        double e = e_max(chain.link(n));
        if (e < best.e_max - tol.ord) {
            best = {n, e};
        }
    }
    return best;
}

EtaProfile geometric_profile(std::size_t m, std::size_t n_links, double base) {
    EtaProfile p;
    p.base = base;
    p.eta.resize(n_links);
    double w = 1;
    for (std::size_t k = n_links; k-- > 0;) {
        p.eta[k] = w;
        w *= static_cast<double>(m);
    }
    return p;
}

bool satisfies_adjacent_eta_bound(const EtaProfile &profile, std::size_t m) {
    const double factor = static_cast<double>(m) - 1;
    for (std::size_t n = 0; n + 1 < profile.eta.size(); ++n) {
        if (profile.eta[n] < factor * profile.eta[n + 1]) {
            return false;
        }
    }
    return true;
}

bool satisfies_tail_eta_bound(const EtaProfile &profile, std::size_t m) {
    const double factor = static_cast<double>(m) - 1;
    double tail = 0;
    for (std::size_t n = profile.eta.size(); n-- > 0;) {
        if (profile.eta[n] < factor * tail) {
            return false;
        }
        tail += profile.eta[n];
    }
    return true;
}

Chain family_chain(std::size_t m, const EtaProfile &profile) {
    if (m == 0) {
        throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
    }
    if (profile.eta.empty()) {
        throw Error(ErrorCode::EmptyChain, "eta profile is empty");
    }
    if (!std::isfinite(profile.base) || profile.base <= 1) {
        throw Error(ErrorCode::InadmissibleProfile, "base must be finite and greater than 1");
    }
    const double log_base = std::log(profile.base);
    std::vector<SchmidtVector> links;
    links.reserve(profile.eta.size());
    for (double eta : profile.eta) {
        if (!std::isfinite(eta) || eta < 0) {
            throw Error(ErrorCode::InadmissibleProfile, "eta values must be finite and non-negative");
        }
        // Lambda_i / Lambda_0 = b^(-i * eta); computed relative to the
        // largest weight so large exponents cannot overflow.
        std::vector<double> w(m);
        for (std::size_t i = 0; i < m; ++i) {
            w[i] = std::exp(-static_cast<double>(i) * eta * log_base);
        }
        links.push_back(make_schmidt(w, true));
    }
    return Chain(std::move(links));
}

Chain generate_family(std::size_t m, std::size_t n_links, const EtaProfile &profile, const Tolerances &tol,
                      const Limits &limits) {
    if (profile.eta.size() != n_links) {
        throw Error(ErrorCode::InvalidArgument, "eta profile length must equal the number of links");
    }
    if (!satisfies_tail_eta_bound(profile, m)) {
        throw Error(ErrorCode::InadmissibleProfile, "eta_n must be at least (m-1) times the sum of later eta");
    }
    Chain chain = family_chain(m, profile);
    if (auto w = find_ordering_violation(chain, tol, limits)) {
        throw Error(ErrorCode::InadmissibleProfile, "generated chain violates the base-m ordering condition");
    }
    return chain;
}

std::optional<Counterexample> find_counterexample(std::size_t m, std::size_t n_links, std::uint64_t trials,
                                                  std::uint64_t seed, const Tolerances &tol,
                                                  const Limits &limits) {
    if (trials == 0) {
        throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
    }
    if (m == 0 || n_links == 0) {
        throw Error(ErrorCode::InvalidArgument, "m and N must be at least 1");
    }
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto rng = substream(seed, t);
        Chain chain = random_chain(m, n_links, rng);
        if (!find_ordering_violation(chain, tol, limits)) {
            continue;
        }
        double avg = average_emax_chain(chain, tol, limits);
        WeakestLink weakest = weakest_link_of(chain, tol);
        if (avg < weakest.e_max - 10 * tol.eq) {
            return Counterexample{std::move(chain), t, avg, weakest, weakest.e_max - avg};
        }
    }
    return std::nullopt;
}

}  // namespace swapchain
