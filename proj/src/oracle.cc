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

#include "swapchain/oracle.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "swapchain/error.h"

namespace swapchain::oracle {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

}  // namespace

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes) {
        total += std::norm(a);
    }
    return total;
}

std::size_t StateVector::digit(std::uint64_t index, std::size_t system) const {
    return static_cast<std::size_t>((index / ipow(dim, num_systems - 1 - system)) % dim);
}

StateVector build_chain_state(const Chain &chain, const Limits &limits) {
    const std::size_t m = chain.dim();
    const std::size_t n_links = chain.size();
    auto size = checked_power(m, 2 * n_links, limits.max_amplitudes);
    if (!size) {
        throw Error(ErrorCode::TooLarge, "m^(2N) amplitudes exceed the oracle limit");
    }
    StateVector sv{2 * n_links, m, std::vector<Amplitude>(*size, 0.0)};

    const std::uint64_t tuples = ipow(m, n_links);
    std::vector<std::size_t> digits(n_links, 0);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        std::uint64_t index = 0;
        double amp = 1;
        for (std::size_t n = 0; n < n_links; ++n) {
            index = (index * m + digits[n]) * m + digits[n];
            amp *= std::sqrt(chain.link(n)[digits[n]]);
        }
        sv.amplitudes[index] = amp;
        for (std::size_t k = n_links; k-- > 0;) {
            if (++digits[k] < m) {
                break;
            }
            digits[k] = 0;
        }
    }
    return sv;
}

std::vector<Amplitude> bell_state(std::size_t m, BellLabel label) {
    std::vector<Amplitude> psi(m * m, 0.0);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::size_t l = 0; l < m; ++l) {
        const std::size_t phase_index = (l * label.beta) % m;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase_index) / static_cast<double>(m);
        psi[l * m + (l + label.alpha) % m] = scale * std::polar(1.0, angle);
    }
    return psi;
}

Projection project_bell(const StateVector &sv, std::size_t first, std::size_t second, BellLabel label) {
    if (first == second || first >= sv.num_systems || second >= sv.num_systems) {
        throw Error(ErrorCode::InvalidPair, "Bell projection needs two distinct existing systems");
    }
    const std::size_t m = sv.dim;
    if (label.alpha >= m || label.beta >= m) {
        throw Error(ErrorCode::InvalidArgument, "Bell label out of range");
    }
    const std::size_t n = sv.num_systems;
    const std::vector<Amplitude> psi = bell_state(m, label);

    std::vector<std::uint64_t> strides(n);
    for (std::size_t k = 0; k < n; ++k) {
        strides[k] = ipow(m, n - 1 - k);
    }
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < n; ++k) {
        if (k != first && k != second) {
            rest.push_back(k);
        }
    }

    StateVector out{n - 2, m, std::vector<Amplitude>(ipow(m, n - 2), 0.0)};
    for (std::uint64_t r = 0; r < out.amplitudes.size(); ++r) {
        std::uint64_t base = 0;
        std::uint64_t rem = r;
        for (std::size_t j = rest.size(); j-- > 0;) {
            base += (rem % m) * strides[rest[j]];
            rem /= m;
        }
        // <psi| on (first, second), identity elsewhere.
        Amplitude acc = 0;
        for (std::size_t x = 0; x < m; ++x) {
            for (std::size_t y = 0; y < m; ++y) {
                acc += std::conj(psi[x * m + y]) * sv.amplitudes[base + x * strides[first] + y * strides[second]];
            }
        }
        out.amplitudes[r] = acc;
    }

    const double in_norm = sv.norm_squared();
    const double out_norm = out.norm_squared();
    Projection result;
    result.probability = in_norm > 0 ? out_norm / in_norm : 0.0;
    if (out_norm > 0) {
        const double scale = 1.0 / std::sqrt(out_norm);
        for (auto &a : out.amplitudes) {
            a *= scale;
        }
        result.state = std::move(out);
    }
    return result;
}

SchmidtVector schmidt_of_bipartite(const BipartiteMatrix &matrix) {
    const std::size_t m = matrix.dim;
    if (m == 0 || matrix.entries.size() != m * m) {
        throw Error(ErrorCode::ShapeMismatch, "bipartite matrix must be square and non-empty");
    }
    Eigen::MatrixXcd M(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            M(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = matrix.entries[a * m + b];
        }
    }
    if (M.norm() == 0) {
        throw Error(ErrorCode::ZeroMatrix, "cannot extract Schmidt weights of a zero matrix");
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const Eigen::VectorXd sigma = svd.singularValues();
    std::vector<double> w(m);
    for (std::size_t i = 0; i < m; ++i) {
        double s = sigma(static_cast<Eigen::Index>(i));
        w[i] = s * s;
    }
    return make_schmidt(w, true);
}

BipartiteMatrix end_pair_matrix(const StateVector &sv) {
    if (sv.num_systems != 2) {
        throw Error(ErrorCode::ShapeMismatch, "end-pair matrix needs exactly two systems");
    }
    return BipartiteMatrix{sv.dim, sv.amplitudes};
}

namespace {

struct RecordWalk {
    const Chain &chain;
    const std::vector<std::size_t> &site_order;
    std::size_t m;
    std::size_t sites;
    std::vector<Record> *out;
    std::vector<BellLabel> labels;

    std::uint64_t slot() const {
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k < sites; ++k) {
            idx = idx * m * m + labels[k].alpha * m + labels[k].beta;
        }
        return idx;
    }

    void visit(std::size_t depth, const std::optional<StateVector> &state, const std::vector<std::size_t> &alive,
               double probability) {
        if (depth == sites) {
            Record &rec = (*out)[slot()];
            rec.labels = labels;
            rec.probability = state ? probability : 0.0;
            if (state && probability > 0) {
                rec.state = schmidt_of_bipartite(end_pair_matrix(*state));
            }
            return;
        }
        const std::size_t site = site_order[depth];
        const std::size_t sys_a = 2 * site + 1;
        const std::size_t sys_b = 2 * site + 2;
        const auto pos_a = static_cast<std::size_t>(std::find(alive.begin(), alive.end(), sys_a) - alive.begin());
        const auto pos_b = static_cast<std::size_t>(std::find(alive.begin(), alive.end(), sys_b) - alive.begin());
        std::vector<std::size_t> next_alive;
        for (std::size_t s : alive) {
            if (s != sys_a && s != sys_b) {
                next_alive.push_back(s);
            }
        }
        for (std::size_t alpha = 0; alpha < m; ++alpha) {
            for (std::size_t beta = 0; beta < m; ++beta) {
                labels[site] = {alpha, beta};
                if (!state) {
                    visit(depth + 1, std::nullopt, next_alive, 0.0);
                    continue;
                }
                Projection p = project_bell(*state, pos_a, pos_b, labels[site]);
                visit(depth + 1, p.state, next_alive, probability * p.probability);
            }
        }
    }
};

}  // namespace

std::vector<Record> measurement_records(const Chain &chain, const std::vector<std::size_t> &site_order,
                                        const Limits &limits) {
    const std::size_t m = chain.dim();
    const std::size_t sites = chain.size() - 1;
    std::vector<std::size_t> order = site_order;
    if (order.empty()) {
        order.resize(sites);
        std::iota(order.begin(), order.end(), 0);
    }
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted.size() != sites || sorted[k] != k) {
            throw Error(ErrorCode::InvalidPermutation, "site order must be a permutation of 0..N-2");
        }
    }

    StateVector initial = build_chain_state(chain, limits);
    std::vector<Record> out(ipow(m * m, sites));
    std::vector<std::size_t> alive(initial.num_systems);
    std::iota(alive.begin(), alive.end(), 0);
    RecordWalk walk{chain, order, m, sites, &out, std::vector<BellLabel>(sites)};
    walk.visit(0, initial, alive, 1.0);
    return out;
}

OracleChainResult oracle_swap_chain(const Chain &chain, const std::vector<std::size_t> &site_order,
                                    const Limits &limits) {
    const std::size_t m = chain.dim();
    const std::size_t sites = chain.size() - 1;
    std::vector<Record> records = measurement_records(chain, site_order, limits);

    OracleChainResult result;
    result.outcomes.resize(ipow(m, sites));
    std::vector<const Record *> representative(result.outcomes.size(), nullptr);
    std::vector<std::optional<double>> first_probability(result.outcomes.size());

    auto gamma_of = [&](const Record &rec) {
        std::vector<std::size_t> gamma(sites);
        std::size_t acc = 0;
        for (std::size_t k = 0; k < sites; ++k) {
            acc = (acc + rec.labels[k].alpha) % m;
            gamma[k] = acc;
        }
        return gamma;
    };

    for (const Record &rec : records) {
        std::vector<std::size_t> gamma = gamma_of(rec);
        std::uint64_t g = 0;
        for (std::size_t v : gamma) {
            g = g * m + v;
        }
        ChainOutcome &o = result.outcomes[g];
        o.gamma = gamma;
        if (!first_probability[g]) {
            o.multiplicity = 0;
            first_probability[g] = rec.probability;
        }
        ++o.multiplicity;
        o.probability += rec.probability;
        result.max_beta_probability_spread =
            std::max(result.max_beta_probability_spread, std::abs(rec.probability - *first_probability[g]));
        if (rec.state && (!representative[g] || rec.probability > representative[g]->probability)) {
            representative[g] = &rec;
        }
    }

    for (std::size_t g = 0; g < result.outcomes.size(); ++g) {
        ChainOutcome &o = result.outcomes[g];
        if (!representative[g]) {
            o.products.assign(m, 0.0);
            continue;
        }
        o.state = representative[g]->state;
        for (double w : o.state->weights()) {
            o.products.push_back(w * o.probability);
        }
    }
    for (const Record &rec : records) {
        if (!rec.state) {
            continue;
        }
        std::uint64_t g = 0;
        for (std::size_t v : gamma_of(rec)) {
            g = g * m + v;
        }
        const SchmidtVector &ref = *result.outcomes[g].state;
        for (std::size_t i = 0; i < m; ++i) {
            result.max_state_spread = std::max(result.max_state_spread, std::abs((*rec.state)[i] - ref[i]));
        }
    }
    return result;
}

SubspaceProjection project_subspace(const StateVector &sv,
                                    const std::function<bool(const std::vector<std::size_t> &)> &accept) {
    SubspaceProjection out{0.0, StateVector{sv.num_systems, sv.dim, std::vector<Amplitude>(sv.amplitudes.size())}};
    std::vector<std::size_t> digits(sv.num_systems);
    for (std::uint64_t idx = 0; idx < sv.amplitudes.size(); ++idx) {
        for (std::size_t k = 0; k < sv.num_systems; ++k) {
            digits[k] = sv.digit(idx, k);
        }
        if (accept(digits)) {
            out.state.amplitudes[idx] = sv.amplitudes[idx];
        }
    }
    const double in_norm = sv.norm_squared();
    out.probability = in_norm > 0 ? out.state.norm_squared() / in_norm : 0.0;
    return out;
}

std::array<GhzOracleBranch, 2> oracle_ghz_branches(const SchmidtVector &s1, const SchmidtVector &s2) {
    if (s1.dim() != 2 || s2.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "GHZ construction needs two qubit links");
    }
    // Systems 0..3 are particles 1..4; Alice holds particles 1 and 3.
    StateVector sv = build_chain_state(Chain({s1, s2}));
    std::array<GhzOracleBranch, 2> out;
    for (int which = 0; which < 2; ++which) {
        SubspaceProjection proj = project_subspace(sv, [which](const std::vector<std::size_t> &d) {
            return (d[0] == d[2]) == (which == 0);
        });
        GhzOracleBranch &branch = out[which];
        branch.probability = proj.probability;
        std::vector<double> squared;
        for (std::uint64_t idx = 0; idx < proj.state.amplitudes.size(); ++idx) {
            const Amplitude a = proj.state.amplitudes[idx];
            squared.push_back(std::norm(a));
            if (a == Amplitude(0.0)) {
                continue;
            }
            std::string label;
            for (std::size_t system : {0, 2, 1, 3}) {
                label += static_cast<char>('0' + proj.state.digit(idx, system));
            }
            branch.terms.emplace_back(std::move(label), a);
        }
        std::sort(squared.begin(), squared.end(), std::greater<>());
        branch.coeffs = {squared[0], squared[1]};
    }
    return out;
}

}  // namespace swapchain::oracle
