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

#include "swapchain/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "swapchain/bellswap.h"
#include "swapchain/chain.h"
#include "swapchain/chain_spec.h"
#include "swapchain/diagrams.h"
#include "swapchain/error.h"
#include "swapchain/ghz.h"
#include "swapchain/verify.h"
#include "swapchain/weakest_link.h"

namespace swapchain::cli {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

template <typename Seq>
std::string tuple_str(const Seq &values, std::size_t offset = 0) {
    std::string s = "(";
    bool first = true;
    for (auto v : values) {
        s += (first ? "" : ",") + std::to_string(v + offset);
        first = false;
    }
    return s + ")";
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

class Table {
   public:
    explicit Table(std::vector<std::string> headers) : headers_(std::move(headers)) {
    }

    void add(std::vector<std::string> row) {
        rows_.push_back(std::move(row));
    }

    std::string render(bool csv) const {
        std::string out;
        if (csv) {
            auto line = [&](const std::vector<std::string> &cells) {
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    out += (i ? "," : "") + csv_field(cells[i]);
                }
                out += "\r\n";
            };
            line(headers_);
            for (const auto &r : rows_) {
                line(r);
            }
            return out;
        }
        std::vector<std::size_t> width(headers_.size());
        for (std::size_t i = 0; i < headers_.size(); ++i) {
            width[i] = headers_[i].size();
            for (const auto &r : rows_) {
                width[i] = std::max(width[i], r[i].size());
            }
        }
        auto line = [&](const std::vector<std::string> &cells) {
            std::string l;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                std::string c = cells[i];
                if (i + 1 < cells.size()) {
                    c.resize(width[i], ' ');
                    c += "  ";
                }
                l += c;
            }
            out += l + "\n";
        };
        line(headers_);
        std::vector<std::string> rule;
        for (std::size_t w : width) {
            rule.emplace_back(w, '-');
        }
        line(rule);
        for (const auto &r : rows_) {
            line(r);
        }
        return out;
    }

   private:
    std::vector<std::string> headers_;
    std::vector<std::vector<std::string>> rows_;
};

// Key/value lines: "key = value" as text, a two-column table as CSV.
class Summary {
   public:
    void add(std::string key, std::string value) {
        items_.emplace_back(std::move(key), std::move(value));
    }
    std::string render(bool csv) const {
        if (csv) {
            Table t({"quantity", "value"});
            for (const auto &[k, v] : items_) {
                t.add({k, v});
            }
            return t.render(true);
        }
        std::string out;
        for (const auto &[k, v] : items_) {
            out += k + " = " + v + "\n";
        }
        return out;
    }

   private:
    std::vector<std::pair<std::string, std::string>> items_;
};

std::vector<std::string> coefficient_headers(std::size_t m) {
    std::vector<std::string> h;
    for (std::size_t i = 0; i < m; ++i) {
        h.push_back("lambda_" + std::to_string(i));
    }
    return h;
}

void append_coefficients(std::vector<std::string> &row, const std::optional<SchmidtVector> &state, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) {
        row.push_back(state ? num((*state)[i]) : "-");
    }
}

std::string distribution_table(const ConcentrationDistribution &d, bool csv) {
    Table t({"i", "p_i"});
    for (std::size_t i = 0; i < d.p.size(); ++i) {
        t.add({std::to_string(i + 1), num(d.p[i])});
    }
    return t.render(csv);
}

std::string section_break(bool csv) {
    return csv ? "\r\n" : "\n";
}

struct Context {
    bool csv = false;
    std::string out;
    int code = kExitOk;
};

void cmd_emax(Context &ctx, const std::string &file) {
    const ChainSpec spec = read_chain_spec(file);
    const Chain chain = spec.to_chain();
    const std::size_t m = chain.dim();
    std::vector<std::string> headers{"link", "E_max"};
    for (std::size_t i = 1; i <= m; ++i) {
        headers.push_back("p_" + std::to_string(i));
    }
    Table t(headers);
    for (std::size_t n = 0; n < chain.size(); ++n) {
        std::vector<std::string> row{std::to_string(n + 1), num(e_max(chain.link(n)))};
        for (double p : concentration_distribution(chain.link(n)).p) {
            row.push_back(num(p));
        }
        t.add(std::move(row));
    }
    ctx.out += t.render(ctx.csv);
}

void cmd_swap(Context &ctx, const std::string &file) {
    const ChainSpec spec = read_chain_spec(file);
    const Chain chain = spec.to_chain();
    if (chain.size() != 2) {
        throw Error(ErrorCode::InvalidArgument, "swap needs a file with exactly two links");
    }
    const std::size_t m = chain.dim();
    std::vector<std::string> headers{"alpha", "beta", "probability"};
    for (auto &h : coefficient_headers(m)) {
        headers.push_back(h);
    }
    Table t(headers);
    for (const auto &o : swap_pair(chain.link(0), chain.link(1))) {
        std::vector<std::string> row{std::to_string(o.label.alpha), std::to_string(o.label.beta), num(o.probability)};
        append_coefficients(row, o.state, m);
        t.add(std::move(row));
    }
    ctx.out += t.render(ctx.csv);
    ctx.out += section_break(ctx.csv);
    Summary s;
    s.add("average E^max", num(average_emax_pair(chain.link(0), chain.link(1), spec.tol)));
    ctx.out += s.render(ctx.csv);
    ctx.out += section_break(ctx.csv);
    ctx.out += distribution_table(pair_distribution(chain.link(0), chain.link(1), spec.tol), ctx.csv);
}

void cmd_chain(Context &ctx, const std::string &file) {
    const ChainSpec spec = read_chain_spec(file);
    const Chain chain = spec.to_chain();
    const std::size_t m = chain.dim();
    std::vector<std::string> headers{"gamma", "records", "probability"};
    for (auto &h : coefficient_headers(m)) {
        headers.push_back(h);
    }
    Table t(headers);
    for (const auto &o : swap_chain(chain)) {
        std::vector<std::string> row{tuple_str(o.gamma), std::to_string(o.multiplicity), num(o.probability)};
        append_coefficients(row, o.state, m);
        t.add(std::move(row));
    }
    ctx.out += t.render(ctx.csv);
    ctx.out += section_break(ctx.csv);
    const auto weakest = weakest_link_of(chain, spec.tol);
    Summary s;
    s.add("average E^max", num(average_emax_chain(chain, spec.tol)));
    s.add("weakest link", std::to_string(weakest.index + 1));
    s.add("weakest link E^max", num(weakest.e_max));
    ctx.out += s.render(ctx.csv);
    ctx.out += section_break(ctx.csv);
    ctx.out += distribution_table(chain_distribution(chain, spec.tol), ctx.csv);
}

void cmd_verify(Context &ctx, const std::string &file) {
    const ChainSpec spec = read_chain_spec(file);
    const Chain chain = spec.to_chain();
    const VerifyReport report = verify_chain(chain, spec.tol);
    Table t({"check", "max_abs_diff", "tolerance", "status"});
    for (const auto &c : report.checks) {
        t.add({c.name, num(c.max_abs_diff), num(c.tolerance), c.passed ? "ok" : "MISMATCH"});
    }
    ctx.out += t.render(ctx.csv);
    ctx.out += section_break(ctx.csv);
    Summary s;
    s.add("max |analytic - oracle|", num(report.worst_diff()));
    s.add("result", report.passed() ? "PASS" : "FAIL");
    ctx.out += s.render(ctx.csv);
    if (!report.passed()) {
        ctx.code = kExitMismatch;
    }
}

void cmd_condition(Context &ctx, const std::string &file) {
    const ChainSpec spec = read_chain_spec(file);
    const Chain chain = spec.to_chain();
    const ConditionReport report = check_condition(chain, spec.tol);
    const auto weakest = weakest_link_of(chain, spec.tol);
    std::string variant = "none";
    if (report.permutation_variant) {
        variant = tuple_str(*report.permutation_variant, 1);
    }
    if (ctx.csv) {
        Summary s;
        s.add("holds", report.holds ? "true" : "false");
        if (report.witness) {
            s.add("witness_earlier", tuple_str(report.witness->earlier));
            s.add("witness_later", tuple_str(report.witness->later));
            s.add("witness_earlier_value", std::to_string(report.witness->earlier_value));
            s.add("witness_later_value", std::to_string(report.witness->later_value));
            s.add("witness_earlier_product", num(report.witness->earlier_product));
            s.add("witness_later_product", num(report.witness->later_product));
            s.add("permutation_variant", variant);
        }
        s.add("weakest_link", std::to_string(weakest.index + 1));
        s.add("weakest_link_emax", num(weakest.e_max));
        ctx.out += s.render(true);
        return;
    }
    if (report.holds) {
        ctx.out += "holds: true\n";
    } else {
        const auto &w = *report.witness;
        ctx.out += "holds: false, witness " + tuple_str(w.earlier) + " vs " + tuple_str(w.later) + "\n";
        ctx.out += "witness base-" + std::to_string(chain.dim()) + " values: " + std::to_string(w.earlier_value) +
                   " vs " + std::to_string(w.later_value) + "\n";
        ctx.out += "witness products: " + num(w.earlier_product) + " < " + num(w.later_product) + "\n";
        ctx.out += "permutation variant: " + variant + " (" + std::to_string(report.permutations_tried) +
                   " orders tried)\n";
    }
    ctx.out += "weakest link: " + std::to_string(weakest.index + 1) + " (E^max = " + num(weakest.e_max) + ")\n";
}

double parse_base(const std::string &text) {
    if (text == "e") {
        return std::numbers::e;
    }
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || used == 0) {
        throw Error(ErrorCode::InvalidArgument, "base must be a number or 'e'");
    }
    return v;
}

void write_or_append(Context &ctx, const std::string &path, const std::string &content) {
    if (path.empty()) {
        ctx.out += content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    }
    f << content;
}

struct FamilyArgs {
    std::size_t m = 2;
    std::size_t n = 2;
    std::string base = "2";
    std::vector<double> eta;
    std::string output;
    bool unchecked = false;
};

void cmd_family(Context &ctx, const FamilyArgs &a) {
    EtaProfile profile{a.eta, parse_base(a.base)};
    if (profile.eta.empty()) {
        profile = geometric_profile(a.m, a.n, profile.base);
    }
    Chain chain = a.unchecked ? family_chain(a.m, profile) : generate_family(a.m, a.n, profile);
    if (chain.size() != a.n) {
        throw Error(ErrorCode::InvalidArgument, "eta profile length must equal the number of links");
    }
    write_or_append(ctx, a.output, format_chain_spec(spec_of(chain)));
}

void cmd_ghz(Context &ctx, const std::string &file) {
    const ChainSpec spec = read_chain_spec(file);
    const Chain chain = spec.to_chain();
    if (chain.size() != 2) {
        throw Error(ErrorCode::InvalidArgument, "ghz needs a file with exactly two links");
    }
    Table t({"branch", "probability", "coeff_0", "coeff_1", "ghz_prob_given_branch"});
    for (const auto &br : ghz_branches(chain.link(0), chain.link(1))) {
        t.add({br.which == GhzOutcome::F1 ? "F1" : "F2", num(br.probability), num(br.coeffs[0]), num(br.coeffs[1]),
               num(br.ghz_prob_given_branch)});
    }
    ctx.out += t.render(ctx.csv);
    ctx.out += section_break(ctx.csv);
    Summary s;
    s.add("GHZ probability", num(ghz_probability(chain.link(0), chain.link(1), spec.tol)));
    ctx.out += s.render(ctx.csv);
}

void cmd_diagram(Context &ctx, const std::string &file, const std::string &format, const std::string &output) {
    const DiagramFormat fmt = parse_diagram_format(format);
    const ChainSpec spec = read_chain_spec(file);
    const Chain chain = spec.to_chain();
    std::vector<AreaDiagram> diagrams = outcome_diagrams(chain);
    if (diagrams.size() > 1) {
        diagrams.push_back(add(diagrams, "sum"));
    }
    write_or_append(ctx, output, render(diagrams, fmt));
}

struct SearchArgs {
    std::size_t m = 2;
    std::size_t n = 3;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
};

void cmd_counterexample(Context &ctx, const SearchArgs &a) {
    auto found = find_counterexample(a.m, a.n, a.trials, a.seed);
    Summary s;
    if (!found) {
        s.add("found", "false");
        s.add("trials", std::to_string(a.trials));
        ctx.out += s.render(ctx.csv);
        return;
    }
    s.add("found", "true");
    s.add("trial", std::to_string(found->trial));
    s.add("average E^max", num(found->average_emax));
    s.add("weakest link", std::to_string(found->weakest.index + 1));
    s.add("weakest link E^max", num(found->weakest.e_max));
    s.add("gap", num(found->gap));
    ctx.out += s.render(ctx.csv);
    ctx.out += section_break(ctx.csv);
    Table t([&] {
        std::vector<std::string> h{"link"};
        for (auto &c : coefficient_headers(a.m)) {
            h.push_back(c);
        }
        return h;
    }());
    for (std::size_t n = 0; n < found->chain.size(); ++n) {
        std::vector<std::string> row{std::to_string(n + 1)};
        append_coefficients(row, found->chain.link(n), a.m);
        t.add(std::move(row));
    }
    ctx.out += t.render(ctx.csv);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement swapping chains: concentration, conditions, oracle checks", "swapchain"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx;
    app.add_flag("--csv", ctx.csv, "Machine-readable CSV tables");

    std::string file;
    auto add_file_command = [&](const char *name, const char *help) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Chain description file")->required();
        return sub;
    };
    auto *emax = add_file_command("emax", "Per-link E^max and concentration distribution");
    auto *swap = add_file_command("swap", "Two-link Bell swap outcome table");
    auto *chain = add_file_command("chain", "Gamma-outcome table, average E^max and distribution");
    auto *verify = add_file_command("verify", "Compare analytic results with the state-vector oracle");
    auto *condition = add_file_command("condition", "Check the base-m ordering condition");
    auto *ghz = add_file_command("ghz", "Two qubit links to GHZ: branches and total probability");

    auto *diagram = add_file_command("diagram", "Area diagrams of the gamma outcomes and their sum");
    std::string format = "ascii";
    std::string diagram_out;
    diagram->add_option("--format", format, "ascii or svg");
    diagram->add_option("-o,--output", diagram_out, "Write to a file instead of stdout");

    FamilyArgs fam;
    auto *family = app.add_subcommand("family", "Write a chain from the exponential eta family");
    family->add_option("-m", fam.m, "Schmidt dimension")->required()->check(CLI::PositiveNumber);
    family->add_option("-n", fam.n, "Number of links")->required()->check(CLI::PositiveNumber);
    family->add_option("-b,--base", fam.base, "Base b > 1, or 'e'");
    family->add_option("--eta", fam.eta, "eta_1,...,eta_N (default: geometric m^(N-n))")->delimiter(',');
    family->add_option("-o,--output", fam.output, "Write to a file instead of stdout");
    family->add_flag("--unchecked", fam.unchecked, "Skip the admissibility checks");

    SearchArgs search;
    auto *counter = app.add_subcommand("counterexample", "Random search for chains below their weakest link");
    counter->add_option("-m", search.m, "Schmidt dimension")->required()->check(CLI::PositiveNumber);
    counter->add_option("-n", search.n, "Number of links")->required()->check(CLI::PositiveNumber);
    counter->add_option("--trials", search.trials, "Chains to sample")->required();
    counter->add_option("--seed", search.seed, "Generator seed")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (emax->parsed()) {
            cmd_emax(ctx, file);
        } else if (swap->parsed()) {
            cmd_swap(ctx, file);
        } else if (chain->parsed()) {
            cmd_chain(ctx, file);
        } else if (verify->parsed()) {
            cmd_verify(ctx, file);
        } else if (condition->parsed()) {
            cmd_condition(ctx, file);
        } else if (ghz->parsed()) {
            cmd_ghz(ctx, file);
        } else if (diagram->parsed()) {
            cmd_diagram(ctx, file, format, diagram_out);
        } else if (family->parsed()) {
            if (!fam.eta.empty() && fam.eta.size() != fam.n) {
                throw Error(ErrorCode::InvalidArgument, "--eta needs exactly N values");
            }
            cmd_family(ctx, fam);
        } else if (counter->parsed()) {
            cmd_counterexample(ctx, search);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::TooLarge:
                return kExitTooLarge;
            case ErrorCode::InternalMismatch:
                return kExitMismatch;
            default:
                return kExitInvalid;
        }
    }
    out << ctx.out;
    out.flush();
    return ctx.code;
}

}  // namespace swapchain::cli
