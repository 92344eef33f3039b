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

#include "swapchain/bellswap.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "swapchain/error.h"

namespace swapchain {

namespace {

void require_same_dim(const SchmidtVector &s1, const SchmidtVector &s2) {
    if (s1.dim() != s2.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "both links must have the same Schmidt dimension");
    }
}

// Unnormalized outer-pair weights for shift alpha, in l order.
std::vector<double> shifted_products(const SchmidtVector &s1, const SchmidtVector &s2, std::size_t alpha) {
    const std::size_t m = s1.dim();
    std::vector<double> c(m);
    for (std::size_t l = 0; l < m; ++l) {
        c[l] = s1[l] * s2[(l + alpha) % m];
    }
    return c;
}

void check_agree(double a, double b, double tol, const char *what) {
    if (std::abs(a - b) > tol) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s: %.17g vs %.17g", what, a, b);
        throw Error(ErrorCode::InternalMismatch, buf);
    }
}

}  // namespace

std::vector<PairOutcome> swap_pair(const SchmidtVector &s1, const SchmidtVector &s2) {
    require_same_dim(s1, s2);
    const std::size_t m = s1.dim();
    const double md = static_cast<double>(m);
    std::vector<PairOutcome> out;
    out.reserve(m * m);
    for (std::size_t alpha = 0; alpha < m; ++alpha) {
        std::vector<double> c = shifted_products(s1, s2, alpha);
        double total = 0;
        for (double x : c) {
            total += x;
        }
        std::optional<SchmidtVector> state;
        if (total > 0) {
            state = make_schmidt(c, true);
        }
        std::stable_sort(c.begin(), c.end(), std::greater<>());
        for (std::size_t beta = 0; beta < m; ++beta) {
            out.push_back(PairOutcome{{alpha, beta}, total / md, c, state});
        }
    }
    return out;
}

std::vector<PairOutcome> collapse_beta(const std::vector<PairOutcome> &outcomes, std::size_t m) {
    std::vector<PairOutcome> out;
    for (const auto &o : outcomes) {
        if (out.empty() || out.back().label.alpha != o.label.alpha) {
            PairOutcome first = o;
            first.label.beta = 0;
            first.probability = 0;
            out.push_back(std::move(first));
        }
        out.back().probability += o.probability;
    }
    if (out.size() != m) {
        throw Error(ErrorCode::ShapeMismatch, "outcome list does not cover every alpha exactly once");
    }
    return out;
}

double average_emax_pair(const SchmidtVector &s1, const SchmidtVector &s2, const Tolerances &tol) {
    require_same_dim(s1, s2);
    const std::size_t m = s1.dim();

    double from_products = 0;
    for (std::size_t alpha = 0; alpha < m; ++alpha) {
        std::vector<double> z = shifted_products(s1, s2, alpha);
        std::stable_sort(z.begin(), z.end(), std::greater<>());
        from_products += box_weighted_sum(z);
    }

    double from_records = 0;
    for (const auto &o : swap_pair(s1, s2)) {
        if (o.state) {
            from_records += o.probability * e_max(*o.state);
        }
    }

    check_agree(from_products, from_records, tol.eq, "average E^max routes disagree");
    return from_products;
}

ConcentrationDistribution pair_distribution(const SchmidtVector &s1, const SchmidtVector &s2,
                                            const Tolerances &tol) {
    require_same_dim(s1, s2);
    std::vector<double> p(s1.dim(), 0.0);
    for (const auto &o : swap_pair(s1, s2)) {
        if (!o.state) {
            continue;
        }
        ConcentrationDistribution d = concentration_distribution(*o.state);
        for (std::size_t i = 0; i < p.size(); ++i) {
            p[i] += o.probability * d.p[i];
        }
    }
    ConcentrationDistribution mix = make_distribution(std::move(p));
    check_agree(mix.avg_e, average_emax_pair(s1, s2, tol), tol.eq, "distribution mean disagrees with average E^max");
    return mix;
}

}  // namespace swapchain
