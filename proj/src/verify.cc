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

#include "swapchain/verify.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "swapchain/bellswap.h"
#include "swapchain/diagrams.h"
#include "swapchain/ghz.h"
#include "swapchain/oracle.h"
#include "swapchain/weakest_link.h"

namespace swapchain {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck &c) { return c.passed; });
}

double VerifyReport::worst_diff() const {
    double w = 0;
    for (const auto &c : checks) {
        w = std::max(w, c.max_abs_diff);
    }
    return w;
}

namespace {

// Accumulates a max |a - b| and turns it into a check.
struct Diff {
    double worst = 0;

    void see(double a, double b) {
        double d = std::abs(a - b);
        // NaN compares false; force a failure instead of hiding it.
        worst = std::isnan(d) ? INFINITY : std::max(worst, d);
    }
    void see_states(const std::optional<SchmidtVector> &a, const std::optional<SchmidtVector> &b) {
        if (a.has_value() != b.has_value()) {
            worst = INFINITY;
            return;
        }
        if (!a) {
            return;
        }
        if (a->dim() != b->dim()) {
            worst = INFINITY;
            return;
        }
        for (std::size_t i = 0; i < a->dim(); ++i) {
            see((*a)[i], (*b)[i]);
        }
    }
    VerifyCheck check(std::string name, double tol) const {
        return {std::move(name), worst, tol, worst <= tol};
    }
};

ConcentrationDistribution mixture(const std::vector<ChainOutcome> &outcomes, std::size_t m) {
    std::vector<double> p(m, 0.0);
    for (const auto &o : outcomes) {
        if (!o.state) {
            continue;
        }
        auto d = concentration_distribution(*o.state);
        for (std::size_t i = 0; i < m; ++i) {
            p[i] += o.probability * d.p[i];
        }
    }
    return make_distribution(std::move(p));
}

}  // namespace

VerifyReport verify_chain(const Chain &chain, const Tolerances &tol, const Limits &limits) {
    const std::size_t m = chain.dim();
    const std::size_t n_links = chain.size();
    VerifyReport report;

    const auto analytic = swap_chain(chain, limits);
    const auto records = oracle::measurement_records(chain, {}, limits);
    const auto simulated = oracle::oracle_swap_chain(chain, {}, limits);

    {
        Diff total;
        double sum = 0;
        for (const auto &r : records) {
            sum += r.probability;
        }
        total.see(sum, 1.0);
        report.checks.push_back(total.check("record probabilities sum to 1", tol.eq));
    }
    {
        Diff prob;
        Diff coef;
        Diff mult;
        for (std::size_t g = 0; g < analytic.size(); ++g) {
            prob.see(analytic[g].probability, simulated.outcomes[g].probability);
            coef.see_states(analytic[g].state, simulated.outcomes[g].state);
            mult.see(static_cast<double>(analytic[g].multiplicity),
                     static_cast<double>(simulated.outcomes[g].multiplicity));
            if (analytic[g].gamma != simulated.outcomes[g].gamma) {
                mult.worst = INFINITY;
            }
        }
        report.checks.push_back(prob.check("gamma outcome probabilities", tol.eq));
        report.checks.push_back(coef.check("gamma outcome Schmidt weights", tol.eq));
        report.checks.push_back(mult.check("gamma labels and multiplicities", 0.0));
    }
    report.checks.push_back(
        {"beta sweep probabilities", simulated.max_beta_probability_spread, kExactTolerance,
         simulated.max_beta_probability_spread <= kExactTolerance});
    report.checks.push_back({"beta sweep Schmidt weights", simulated.max_state_spread, kExactTolerance,
                             simulated.max_state_spread <= kExactTolerance});

    const double average = average_emax_chain(chain, tol, limits);
    {
        double oracle_average = 0;
        for (const auto &o : simulated.outcomes) {
            if (o.state) {
                oracle_average += o.probability * e_max(*o.state);
            }
        }
        Diff d;
        d.see(average, oracle_average);
        report.checks.push_back(d.check("average E^max", tol.eq));
    }
    {
        auto analytic_dist = chain_distribution(chain, tol, limits);
        auto oracle_dist = mixture(simulated.outcomes, m);
        Diff d;
        for (std::size_t i = 0; i < m; ++i) {
            d.see(analytic_dist.p[i], oracle_dist.p[i]);
        }
        d.see(analytic_dist.avg_e, oracle_dist.avg_e);
        report.checks.push_back(d.check("concentration distribution", tol.eq));
    }
    {
        auto diagrams = outcome_diagrams(chain, limits);
        Diff d;
        d.see(emax_of_diagram(add(diagrams)), average);
        report.checks.push_back(d.check("summed area diagram E^max", tol.eq));
    }

    if (n_links >= 3) {
        std::vector<std::size_t> reversed(n_links - 1);
        std::iota(reversed.rbegin(), reversed.rend(), 0);
        const auto other = oracle::oracle_swap_chain(chain, reversed, limits);
        Diff d;
        for (std::size_t g = 0; g < other.outcomes.size(); ++g) {
            d.see(other.outcomes[g].probability, simulated.outcomes[g].probability);
            d.see_states(other.outcomes[g].state, simulated.outcomes[g].state);
        }
        report.checks.push_back(d.check("measurement order (reversed sites)", tol.eq));
    }
    // All N! orders; kept to short chains.
    if (n_links >= 3 && n_links <= 6) {
        Diff perm;
        for (const auto &r : order_invariance_report(chain, all_orders(n_links), tol, limits)) {
            perm.see(r.average_emax, average);
        }
        report.checks.push_back(perm.check("link order invariance", tol.eq));
    }

    if (n_links == 2) {
        const auto pair = swap_pair(chain.link(0), chain.link(1));
        const auto state = oracle::build_chain_state(chain, limits);
        Diff prob;
        Diff coef;
        for (const auto &o : pair) {
            auto p = oracle::project_bell(state, 1, 2, o.label);
            prob.see(o.probability, p.probability);
            std::optional<SchmidtVector> oracle_state;
            if (p.state) {
                oracle_state = oracle::schmidt_of_bipartite(oracle::end_pair_matrix(*p.state));
            }
            coef.see_states(o.state, oracle_state);
        }
        report.checks.push_back(prob.check("pair swap probabilities", tol.eq));
        report.checks.push_back(coef.check("pair swap Schmidt weights", tol.eq));

        Diff avg;
        avg.see(average_emax_pair(chain.link(0), chain.link(1), tol), average);
        report.checks.push_back(avg.check("pair average E^max vs chain", tol.eq));

        if (m == 2) {
            const auto branches = ghz_branches(chain.link(0), chain.link(1));
            const auto oracle_branches = oracle::oracle_ghz_branches(chain.link(0), chain.link(1));
            Diff g;
            for (std::size_t b = 0; b < 2; ++b) {
                g.see(branches[b].probability, oracle_branches[b].probability);
                g.see(branches[b].coeffs[0], oracle_branches[b].coeffs[0]);
                g.see(branches[b].coeffs[1], oracle_branches[b].coeffs[1]);
            }
            report.checks.push_back(g.check("GHZ branches", kExactTolerance));
        }
    }

    const auto condition = check_condition(chain, tol, limits);
    if (condition.holds || condition.permutation_variant) {
        // The leftmost link of the passing order is the weakest one.
        const std::size_t lead = condition.holds ? 0 : condition.permutation_variant->front();
        Diff d;
        d.see(average, weakest_link_of(chain, tol).e_max);
        d.see(average, e_max(chain.link(lead)));
        auto dist = chain_distribution(chain, tol, limits);
        auto link_dist = concentration_distribution(chain.link(lead));
        for (std::size_t i = 0; i < m; ++i) {
            d.see(dist.p[i], link_dist.p[i]);
        }
        report.checks.push_back(d.check("weakest-link equality (condition holds)", tol.eq));
    }
    return report;
}

}  // namespace swapchain
