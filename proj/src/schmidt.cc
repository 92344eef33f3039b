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

#include "swapchain/schmidt.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "swapchain/error.h"

namespace swapchain {

void Tolerances::validate() const {
    if (!(norm > 0) || !(eq > 0) || !(ord > 0)) {
        throw Error(ErrorCode::InvalidTolerances, "tolerances must be strictly positive");
    }
    if (eq > norm) {
        throw Error(ErrorCode::InvalidTolerances, "equality tolerance must not exceed normalization tolerance");
    }
}

std::string SchmidtVector::str() const {
    std::string out = "(";
    char buf[32];
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.12g", weights_[i]);
        if (i) {
            out += ", ";
        }
        out += buf;
    }
    out += ")";
    return out;
}

SchmidtVector make_schmidt(std::span<const double> weights, bool normalize, const Tolerances &tol) {
    if (weights.empty()) {
        throw Error(ErrorCode::EmptyInput, "Schmidt weights must be non-empty");
    }
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0) {
            throw Error(ErrorCode::NegativeWeight, "weights must be finite and non-negative");
        }
    }
    std::vector<double> w(weights.begin(), weights.end());
    double sum = 0;
    for (double x : w) {
        sum += x;
    }
    if (normalize) {
        if (sum <= 0) {
            throw Error(ErrorCode::NotNormalized, "cannot normalize weights that sum to zero");
        }
        for (double &x : w) {
            x /= sum;
        }
    } else if (std::abs(sum - 1.0) > tol.norm) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "weights sum to %.12g", sum);
        throw Error(ErrorCode::NotNormalized, buf);
    }
    std::stable_sort(w.begin(), w.end(), std::greater<>());
    return SchmidtVector(std::move(w));
}

SchmidtVector make_schmidt(std::initializer_list<double> weights, bool normalize, const Tolerances &tol) {
    return make_schmidt(std::span<const double>(weights.begin(), weights.size()), normalize, tol);
}

SchmidtVector maximally_entangled(std::size_t m) {
    if (m == 0) {
        throw Error(ErrorCode::EmptyInput, "dimension must be at least 1");
    }
    std::vector<double> w(m, 1.0 / static_cast<double>(m));
    return make_schmidt(w, false);
}

double box_weighted_sum(std::span<const double> heights) {
    double total = 0;
    const std::size_t m = heights.size();
    for (std::size_t i = 2; i <= m; ++i) {
        double next = i < m ? heights[i] : 0.0;
        double width = static_cast<double>(i);
        total += (heights[i - 1] - next) * width * std::log2(width);
    }
    return total;
}

double e_max(const SchmidtVector &s) {
    return box_weighted_sum(s.weights());
}

ConcentrationDistribution make_distribution(std::vector<double> p) {
    ConcentrationDistribution d;
    d.p = std::move(p);
    for (std::size_t i = 1; i < d.p.size(); ++i) {
        d.avg_e += d.p[i] * std::log2(static_cast<double>(i + 1));
    }
    return d;
}

ConcentrationDistribution concentration_distribution(const SchmidtVector &s) {
    const std::size_t m = s.dim();
    std::vector<double> p(m);
    for (std::size_t i = 1; i <= m; ++i) {
        double next = i < m ? s[i] : 0.0;
        p[i - 1] = static_cast<double>(i) * (s[i - 1] - next);
    }
    return make_distribution(std::move(p));
}

}  // namespace swapchain
