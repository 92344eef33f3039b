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

#include "swapchain/diagrams.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "swapchain/error.h"

namespace swapchain {

namespace {

constexpr int kAsciiRows = 60;
constexpr int kAsciiColumnWidth = 10;
constexpr double kSvgUnitWidth = 40.0;
constexpr double kSvgUnitHeight = 200.0;
constexpr double kSvgGap = 40.0;
constexpr double kSvgMargin = 30.0;

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

double tallest(std::span<const AreaDiagram> diagrams) {
    double h = 0;
    for (const auto &d : diagrams) {
        for (double c : d.columns) {
            h = std::max(h, c);
        }
    }
    return h;
}

void rstrip(std::string &line) {
    while (!line.empty() && line.back() == ' ') {
        line.pop_back();
    }
}

std::string render_ascii(std::span<const AreaDiagram> diagrams) {
    const double top = tallest(diagrams);
    const double scale = top > 0 ? top : 1.0;
    std::string out;
    for (std::size_t k = 0; k < diagrams.size(); ++k) {
        const AreaDiagram &d = diagrams[k];
        if (k) {
            out += '\n';
        }
        out += d.label.empty() ? "diagram " + std::to_string(k + 1) : d.label;
        out += '\n';
        std::vector<int> rows;
        for (double c : d.columns) {
            rows.push_back(static_cast<int>(std::lround(c / scale * kAsciiRows)));
        }
        for (int r = kAsciiRows; r >= 1; --r) {
            std::string line;
            for (int h : rows) {
                line += h >= r ? "|" + std::string(kAsciiColumnWidth - 2, '#') + " " : std::string(kAsciiColumnWidth, ' ');
            }
            rstrip(line);
            out += line;
            out += '\n';
        }
        std::string base;
        std::string labels;
        for (double c : d.columns) {
            base += "+" + std::string(kAsciiColumnWidth - 1, '-');
            std::string l = fixed6(c);
            l.resize(kAsciiColumnWidth, ' ');
            labels += l;
        }
        base += "+";
        rstrip(labels);
        out += base + '\n' + labels + '\n';
    }
    return out;
}

std::string render_svg(std::span<const AreaDiagram> diagrams) {
    const double plot_height = tallest(diagrams) * kSvgUnitHeight;
    double width = kSvgGap;
    for (const auto &d : diagrams) {
        width += static_cast<double>(d.columns.size()) * kSvgUnitWidth + kSvgGap;
    }
    const double height = plot_height + 2 * kSvgMargin;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed6(width) + "\" height=\"" +
           fixed6(height) + "\">\n";
    double x0 = kSvgGap;
    for (std::size_t k = 0; k < diagrams.size(); ++k) {
        const AreaDiagram &d = diagrams[k];
        out += "  <g id=\"diagram-" + std::to_string(k + 1) + "\" transform=\"translate(" + fixed6(x0) + "," +
               fixed6(kSvgMargin) + ")\">\n";
        for (std::size_t i = 0; i < d.columns.size(); ++i) {
            const double h = d.columns[i] * kSvgUnitHeight;
            const double x = static_cast<double>(i) * kSvgUnitWidth;
            out += "    <rect x=\"" + fixed6(x) + "\" y=\"" + fixed6(plot_height - h) + "\" width=\"" +
                   fixed6(kSvgUnitWidth) + "\" height=\"" + fixed6(h) +
                   "\" fill=\"#9ecae1\" stroke=\"#08306b\" stroke-width=\"1.000000\"/>\n";
            out += "    <text x=\"" + fixed6(x + kSvgUnitWidth / 2) + "\" y=\"" + fixed6(plot_height - h - 4) +
                   "\" font-size=\"8.000000\" text-anchor=\"middle\">" + fixed6(d.columns[i]) + "</text>\n";
        }
        const double span = static_cast<double>(d.columns.size()) * kSvgUnitWidth;
        out += "    <text x=\"" + fixed6(span / 2) + "\" y=\"" + fixed6(plot_height + 16) +
               "\" font-size=\"10.000000\" text-anchor=\"middle\">" + xml_escape(d.label) + "</text>\n";
        out += "  </g>\n";
        x0 += span + kSvgGap;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace

AreaDiagram diagram_of(std::span<const double> weights, std::string label) {
    if (weights.empty()) {
        throw Error(ErrorCode::EmptyInput, "diagram needs at least one column");
    }
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0) {
            throw Error(ErrorCode::NegativeWeight, "diagram heights must be finite and non-negative");
        }
    }
    AreaDiagram d{std::vector<double>(weights.begin(), weights.end()), std::move(label)};
    std::stable_sort(d.columns.begin(), d.columns.end(), std::greater<>());
    return d;
}

AreaDiagram diagram_of(std::initializer_list<double> weights, std::string label) {
    return diagram_of(std::span<const double>(weights.begin(), weights.size()), std::move(label));
}

AreaDiagram add(std::span<const AreaDiagram> diagrams, std::string label) {
    if (diagrams.empty()) {
        throw Error(ErrorCode::EmptyInput, "nothing to add");
    }
    const std::size_t m = diagrams.front().columns.size();
    AreaDiagram sum{std::vector<double>(m, 0.0), std::move(label)};
    for (const auto &d : diagrams) {
        if (d.columns.size() != m) {
            throw Error(ErrorCode::ShapeMismatch, "diagrams must have the same number of columns");
        }
        for (std::size_t i = 0; i < m; ++i) {
            sum.columns[i] += d.columns[i];
        }
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (sum.columns[i] < sum.columns[i + 1]) {
            throw Error(ErrorCode::InternalMismatch, "sum of sorted diagrams is not sorted");
        }
    }
    return sum;
}

double emax_of_diagram(const AreaDiagram &d) {
    return box_weighted_sum(d.columns);
}

std::vector<AreaDiagram> outcome_diagrams(const Chain &chain, const Limits &limits) {
    std::vector<AreaDiagram> out;
    for (const auto &o : swap_chain(chain, limits)) {
        std::string label = "gamma=(";
        for (std::size_t k = 0; k < o.gamma.size(); ++k) {
            label += (k ? "," : "") + std::to_string(o.gamma[k]);
        }
        label += ")";
        out.push_back(diagram_of(o.products, std::move(label)));
    }
    return out;
}

DiagramFormat parse_diagram_format(std::string_view name) {
    if (name == "ascii") {
        return DiagramFormat::Ascii;
    }
    if (name == "svg") {
        return DiagramFormat::Svg;
    }
    throw Error(ErrorCode::UnsupportedFormat, "unknown diagram format '" + std::string(name) + "'");
}

std::string render(std::span<const AreaDiagram> diagrams, DiagramFormat format) {
    if (diagrams.empty()) {
        throw Error(ErrorCode::EmptyInput, "nothing to render");
    }
    return format == DiagramFormat::Svg ? render_svg(diagrams) : render_ascii(diagrams);
}

}  // namespace swapchain
