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

#include "swapchain/random.h"

#include <algorithm>
#include <vector>

#include "swapchain/error.h"

namespace swapchain {

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32),
    };
    return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

SchmidtVector random_schmidt(std::size_t m, std::mt19937_64 &rng) {
    if (m == 0) {
        throw Error(ErrorCode::EmptyInput, "dimension must be at least 1");
    }
    std::vector<double> cuts(m - 1);
    for (double &c : cuts) {
        c = uniform01(rng);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> w(m);
    double prev = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        w[i] = cuts[i] - prev;
        prev = cuts[i];
    }
    w[m - 1] = 1.0 - prev;
    return make_schmidt(w, true);
}

Chain random_chain(std::size_t m, std::size_t n_links, std::mt19937_64 &rng) {
    std::vector<SchmidtVector> links;
    links.reserve(n_links);
    for (std::size_t n = 0; n < n_links; ++n) {
        links.push_back(random_schmidt(m, rng));
    }
    return Chain(std::move(links));
}

}  // namespace swapchain
