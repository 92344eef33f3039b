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

#ifndef SWAPCHAIN_RANDOM_H
#define SWAPCHAIN_RANDOM_H

#include <cstddef>
#include <cstdint>
#include <random>

#include "swapchain/chain.h"
#include "swapchain/schmidt.h"

namespace swapchain {

/// Independent generator for (seed, index). std::seed_seq and
/// std::mt19937_64 are fully specified, so streams match across
/// platforms and standard libraries.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits. Used instead of
/// std::uniform_real_distribution, whose output is implementation-defined.
double uniform01(std::mt19937_64 &rng);

/// Uniform point on the probability simplex (sorted spacings of m - 1
/// uniforms), returned as a canonical SchmidtVector.
SchmidtVector random_schmidt(std::size_t m, std::mt19937_64 &rng);

Chain random_chain(std::size_t m, std::size_t n_links, std::mt19937_64 &rng);

}  // namespace swapchain

#endif
