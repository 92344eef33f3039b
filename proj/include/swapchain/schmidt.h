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

#ifndef SWAPCHAIN_SCHMIDT_H
#define SWAPCHAIN_SCHMIDT_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace swapchain {

/// Numerical slack used throughout the library.
///
/// `norm` bounds how far a set of weights may be from summing to one,
/// `eq` bounds disagreement between two routes to the same derived
/// quantity, and `ord` is the tie slack for ordering checks.
struct Tolerances {
    double norm = 1e-9;
    double eq = 1e-10;
    double ord = 1e-12;

    /// Throws InvalidTolerances unless all are positive and eq <= norm.
    void validate() const;
};

/// Schmidt weights of one pure bipartite state, sorted non-increasing.
///
/// Zero weights are allowed, so a state of Schmidt rank r < m can be
/// carried at dimension m. Instances are only produced by make_schmidt
/// (or the helpers below) and are immutable afterwards.
class SchmidtVector {
   public:
    std::size_t dim() const {
        return weights_.size();
    }
    std::span<const double> weights() const {
        return weights_;
    }
    double operator[](std::size_t i) const {
        return weights_[i];
    }
    /// The smallest weight (lambda_{m-1}).
    double smallest() const {
        return weights_.back();
    }

    bool operator==(const SchmidtVector &other) const = default;

    std::string str() const;

   private:
    friend SchmidtVector make_schmidt(std::span<const double> weights, bool normalize, const Tolerances &tol);
    explicit SchmidtVector(std::vector<double> weights) : weights_(std::move(weights)) {
    }

    std::vector<double> weights_;
};

/// Canonicalizes raw weights: optionally divides by their sum, then sorts
/// them non-increasing with a stable sort (ties keep their input order).
///
/// Throws EmptyInput, NegativeWeight (also for non-finite values), or
/// NotNormalized when `normalize` is false and the sum is off by more
/// than tol.norm, or when `normalize` is true and the sum is zero.
SchmidtVector make_schmidt(std::span<const double> weights, bool normalize = false, const Tolerances &tol = {});
SchmidtVector make_schmidt(std::initializer_list<double> weights, bool normalize = false, const Tolerances &tol = {});

/// The m-dimensional maximally entangled state, all weights 1/m.
SchmidtVector maximally_entangled(std::size_t m);

/// Box-weighted sum over a non-increasing height profile h:
/// sum_{i=1..m} (h_{i-1} - h_i) * i * log2(i) with h_m = 0.
///
/// This is the concentration formula evaluated on raw heights; it is
/// linear in h, which is what lets unnormalized outcome weights be summed
/// without dividing by outcome probabilities.
double box_weighted_sum(std::span<const double> heights);

/// Maximum average entanglement (e-bits) concentratable from one copy.
double e_max(const SchmidtVector &s);

/// Probabilities of ending up with an i-dimensional maximally entangled
/// state, i = 1..m, under the optimal single-copy concentration protocol.
struct ConcentrationDistribution {
    /// p[i] is the probability of the (i+1)-dimensional maximal state.
    std::vector<double> p;
    /// sum_i p[i] * log2(i+1), in e-bits.
    double avg_e = 0.0;
};

/// Builds a distribution from p and fills avg_e from it.
ConcentrationDistribution make_distribution(std::vector<double> p);

ConcentrationDistribution concentration_distribution(const SchmidtVector &s);

}  // namespace swapchain

#endif
