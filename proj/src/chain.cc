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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "swapchain/error.h"

namespace swapchain {

std::optional<std::uint64_t> checked_power(std::uint64_t m, std::uint64_t k, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (m != 0 && r > cap / m) {
            return std::nullopt;
        }
        r *= m;
    }
    if (r > cap) {
        return std::nullopt;
    }
    return r;
}

Chain::Chain(std::vector<SchmidtVector> links) : links_(std::move(links)) {
    if (links_.empty()) {
        throw Error(ErrorCode::EmptyChain, "a chain needs at least one link");
    }
    for (const auto &l : links_) {
        if (l.dim() != links_.front().dim()) {
            throw Error(ErrorCode::DimensionMismatch, "all links in a chain must share one Schmidt dimension");
        }
    }
}

Chain Chain::permuted(const std::vector<std::size_t> &order) const {
    std::vector<bool> seen(links_.size(), false);
    if (order.size() != links_.size()) {
        throw Error(ErrorCode::InvalidPermutation, "permutation length differs from chain length");
    }
    std::vector<SchmidtVector> out;
    out.reserve(order.size());
    for (std::size_t k : order) {
        if (k >= links_.size() || seen[k]) {
            throw Error(ErrorCode::InvalidPermutation, "not a permutation of the link indices");
        }
        seen[k] = true;
        out.push_back(links_[k]);
    }
    return Chain(std::move(out));
}

std::vector<ChainOutcome> swap_chain(const Chain &chain, const Limits &limits) {
    const std::size_t m = chain.dim();
    const std::size_t n_links = chain.size();
    if (n_links == 1) {
        const SchmidtVector &only = chain.link(0);
        return {ChainOutcome{{}, 1, 1.0, std::vector<double>(only.weights().begin(), only.weights().end()), only}};
    }
    auto count = checked_power(m, n_links - 1, limits.max_outcomes);
    if (!count) {
        throw Error(ErrorCode::TooLarge, "m^(N-1) gamma outcomes exceed the enumeration limit");
    }
    // One alpha vector per gamma, times m^(N-1) phase combinations.
    const std::uint64_t records_per_gamma = *count;

    std::vector<ChainOutcome> out;
    out.reserve(*count);
    std::vector<std::size_t> gamma(n_links - 1, 0);
    std::vector<double> c(m);
    for (std::uint64_t g = 0; g < *count; ++g) {
        double total = 0;
        for (std::size_t l = 0; l < m; ++l) {
            double v = chain.link(0)[l];
            for (std::size_t n = 1; n < n_links; ++n) {
                v *= chain.link(n)[(l + gamma[n - 1]) % m];
            }
            c[l] = v;
            total += v;
        }
        ChainOutcome o;
        o.gamma = gamma;
        o.multiplicity = records_per_gamma;
        o.probability = total;
        if (total > 0) {
            o.state = make_schmidt(c, true);
        }
        o.products = c;
        std::stable_sort(o.products.begin(), o.products.end(), std::greater<>());
        out.push_back(std::move(o));

        // Lexicographic increment, last gamma fastest.
        for (std::size_t k = gamma.size(); k-- > 0;) {
            if (++gamma[k] < m) {
                break;
            }
            gamma[k] = 0;
        }
    }
    return out;
}

namespace {

void check_agree(double a, double b, double tol, const char *what) {
    if (std::abs(a - b) > tol) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s: %.17g vs %.17g", what, a, b);
        throw Error(ErrorCode::InternalMismatch, buf);
    }
}

double average_from_outcomes(const std::vector<ChainOutcome> &outcomes, const Tolerances &tol) {
    double from_products = 0;
    double from_states = 0;
    for (const auto &o : outcomes) {
        from_products += box_weighted_sum(o.products);
        if (o.state) {
            from_states += o.probability * e_max(*o.state);
        }
    }
    check_agree(from_products, from_states, tol.eq, "average E^max routes disagree");
    return from_products;
}

}  // namespace

double average_emax_chain(const Chain &chain, const Tolerances &tol, const Limits &limits) {
    return average_from_outcomes(swap_chain(chain, limits), tol);
}

ConcentrationDistribution chain_distribution(const Chain &chain, const Tolerances &tol, const Limits &limits) {
    auto outcomes = swap_chain(chain, limits);
    std::vector<double> p(chain.dim(), 0.0);
    for (const auto &o : outcomes) {
        if (!o.state) {
            continue;
        }
        ConcentrationDistribution d = concentration_distribution(*o.state);
        for (std::size_t i = 0; i < p.size(); ++i) {
            p[i] += o.probability * d.p[i];
        }
    }
    ConcentrationDistribution mix = make_distribution(std::move(p));
    check_agree(mix.avg_e, average_from_outcomes(outcomes, tol), tol.eq,
                "distribution mean disagrees with average E^max");
    return mix;
}

std::vector<OrderedAverage> order_invariance_report(const Chain &chain,
                                                    const std::vector<std::vector<std::size_t>> &orders,
                                                    const Tolerances &tol, const Limits &limits) {
    std::vector<OrderedAverage> out;
    out.reserve(orders.size());
    for (const auto &order : orders) {
        out.push_back({order, average_emax_chain(chain.permuted(order), tol, limits)});
    }
    return out;
}

std::vector<std::vector<std::size_t>> all_orders(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

}  // namespace swapchain
