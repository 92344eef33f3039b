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

#include "swapchain/chain_spec.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "swapchain/error.h"

namespace swapchain {

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string &what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

double parse_number(std::string_view token, std::size_t line) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        parse_fail(line, "not a number: '" + std::string(token) + "'");
    }
    return v;
}

bool parse_bool(std::string_view token, std::size_t line) {
    if (token == "true" || token == "yes" || token == "1") {
        return true;
    }
    if (token == "false" || token == "no" || token == "0") {
        return false;
    }
    parse_fail(line, "expected true or false, got '" + std::string(token) + "'");
}

void check_shape(const ChainSpec &spec) {
    if (spec.m == 0) {
        throw Error(ErrorCode::ParseError, "missing or zero 'm'");
    }
    if (spec.links.empty()) {
        throw Error(ErrorCode::ParseError, "no links given");
    }
    for (std::size_t n = 0; n < spec.links.size(); ++n) {
        if (spec.links[n].size() != spec.m) {
            throw Error(ErrorCode::ParseError, "link " + std::to_string(n + 1) + " has " +
                                                   std::to_string(spec.links[n].size()) + " weights, expected m = " +
                                                   std::to_string(spec.m));
        }
    }
    spec.tol.validate();
}

ChainSpec parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    ChainSpec spec;
    try {
        for (const auto &[key, value] : doc.items()) {
            if (key == "m") {
                spec.m = value.get<std::size_t>();
            } else if (key == "normalize") {
                spec.normalize = value.get<bool>();
            } else if (key == "links") {
                spec.links = value.get<std::vector<std::vector<double>>>();
            } else if (key == "tolerances") {
                for (const auto &[tk, tv] : value.items()) {
                    if (tk == "norm") {
                        spec.tol.norm = tv.get<double>();
                    } else if (tk == "eq") {
                        spec.tol.eq = tv.get<double>();
                    } else if (tk == "ord") {
                        spec.tol.ord = tv.get<double>();
                    } else {
                        throw Error(ErrorCode::ParseError, "unknown tolerance '" + tk + "'");
                    }
                }
            } else {
                throw Error(ErrorCode::ParseError, "unknown key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    check_shape(spec);
    return spec;
}

ChainSpec parse_text(std::string_view text) {
    ChainSpec spec;
    bool in_links = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }

        if (auto colon = line.find(':'); colon != std::string_view::npos && !in_links) {
            std::string_view key = trim(line.substr(0, colon));
            std::string_view value = trim(line.substr(colon + 1));
            if (key == "links") {
                if (!value.empty()) {
                    parse_fail(line_no, "link weights go on the lines after 'links:'");
                }
                in_links = true;
            } else if (key == "m") {
                double v = parse_number(value, line_no);
                if (v < 1 || v != static_cast<double>(static_cast<std::size_t>(v))) {
                    parse_fail(line_no, "m must be a positive integer");
                }
                spec.m = static_cast<std::size_t>(v);
            } else if (key == "normalize") {
                spec.normalize = parse_bool(value, line_no);
            } else if (key == "tol_norm") {
                spec.tol.norm = parse_number(value, line_no);
            } else if (key == "tol_eq") {
                spec.tol.eq = parse_number(value, line_no);
            } else if (key == "tol_ord") {
                spec.tol.ord = parse_number(value, line_no);
            } else {
                parse_fail(line_no, "unknown key '" + std::string(key) + "'");
            }
            continue;
        }
        if (!in_links) {
            parse_fail(line_no, "expected 'key: value' or 'links:'");
        }
        std::vector<double> weights;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',')) {
                ++i;
            }
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',') {
                ++j;
            }
            if (j > i) {
                weights.push_back(parse_number(line.substr(i, j - i), line_no));
            }
            i = j;
        }
        spec.links.push_back(std::move(weights));
    }
    check_shape(spec);
    return spec;
}

}  // namespace

Chain ChainSpec::to_chain() const {
    std::vector<SchmidtVector> out;
    out.reserve(links.size());
    for (const auto &w : links) {
        out.push_back(make_schmidt(w, normalize, tol));
    }
    return Chain(std::move(out));
}

ChainSpec parse_chain_spec(std::string_view text) {
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{') {
        return parse_json(body);
    }
    return parse_text(text);
}

ChainSpec read_chain_spec(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_chain_spec(buf.str());
}

std::string format_chain_spec(const ChainSpec &spec) {
    std::string out;
    char buf[64];
    out += "m: " + std::to_string(spec.m) + "\n";
    out += std::string("normalize: ") + (spec.normalize ? "true" : "false") + "\n";
    const Tolerances defaults;
    if (spec.tol.norm != defaults.norm) {
        std::snprintf(buf, sizeof(buf), "tol_norm: %.17g\n", spec.tol.norm);
        out += buf;
    }
    if (spec.tol.eq != defaults.eq) {
        std::snprintf(buf, sizeof(buf), "tol_eq: %.17g\n", spec.tol.eq);
        out += buf;
    }
    if (spec.tol.ord != defaults.ord) {
        std::snprintf(buf, sizeof(buf), "tol_ord: %.17g\n", spec.tol.ord);
        out += buf;
    }
    out += "links:\n";
    for (const auto &link : spec.links) {
        for (std::size_t i = 0; i < link.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%s%.17g", i ? " " : "", link[i]);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

ChainSpec spec_of(const Chain &chain, const Tolerances &tol) {
    ChainSpec spec;
    spec.m = chain.dim();
    spec.tol = tol;
    for (const auto &l : chain.links()) {
        spec.links.emplace_back(l.weights().begin(), l.weights().end());
    }
    return spec;
}

}  // namespace swapchain
